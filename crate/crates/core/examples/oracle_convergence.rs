// How the brute-force reference levels converge: finite differences on a
// box for the Hermitian oscillators, complex shooting for the PT cubic.
//
// ```bash
// cargo run --release --example oracle_convergence
// ```

use std::error::Error;

use phaseint::oracle::{convergence_report, levels, OracleConfig};
use phaseint::Family;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = OracleConfig::default();
    for family in [Family::Quartic, Family::Sextic, Family::PtCubic] {
        let best = levels(family, 2, &cfg)?;
        println!("{family}: {:?}", best.iter().map(|l| format!("{:.10}", l.value)).collect::<Vec<_>>());
        for r in convergence_report(family, 2, &cfg)? {
            println!("    refinement {:<10} E_2 = {:.10}", r.refinement, r.value);
        }
    }
    // A smaller box moves the sextic levels very little; the quartic
    // wavefunctions have decayed long before x = 5.
    let small = OracleConfig { box_half_width: 5.0, grid_points: 4000, shooting_step: 1e-3, ..cfg };
    let a = levels(Family::Quartic, 0, &small)?[0].value;
    let b = levels(Family::Quartic, 0, &cfg)?[0].value;
    println!("quartic ground level, L = 5 vs L = 10: {a:.12} vs {b:.12}");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
