// Bound-state tables for the four oscillators: Bohr–Sommerfeld level,
// first-order phase-integral level and a brute-force reference.
//
// ```bash
// cargo run --release --example energy_tables
// ```

use std::error::Error;

use phaseint::oracle::OracleConfig;
use phaseint::quantization::level_table;
use phaseint::Family;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let oracle = OracleConfig::default();
    for family in [Family::Weber, Family::Quartic, Family::Sextic, Family::PtCubic] {
        let table = level_table(family, 4, Some(&oracle))?;
        println!("{family}");
        println!("  n   E_exact        E_wkb          E_PI           E_PI error");
        for row in &table.rows {
            let exact = row.e_exact.ok_or("oracle column missing")?;
            println!(
                "  {}   {:<13.9}  {:<13.9}  {:<13.9}  {:+.2e}",
                row.n,
                exact,
                row.e_wkb,
                row.e_pi,
                row.e_pi - exact
            );
        }
        // The correction helps most where the levels are lowest.
        let ground = &table.rows[0];
        let exact = ground.e_exact.unwrap();
        assert!((ground.e_pi - exact).abs() <= (ground.e_wkb - exact).abs());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
