// Real-axis potentials `V(x) - E` at the ground energies, the four panels
// of a standard bound-state figure, shown as coarse ASCII bars.
//
// ```bash
// cargo run --release --example potential_profiles
// ```

use std::error::Error;

use phaseint::oracle::{levels, OracleConfig};
use phaseint::potentials::potential_profile;
use phaseint::stokes_exact::linspace;
use phaseint::Family;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let xs = linspace(-2.0, 2.0, 9);
    for family in [Family::Weber, Family::Quartic, Family::Sextic, Family::PtCubic] {
        let e = levels(family, 0, &OracleConfig::default())?[0].value;
        println!("{family} (E0 = {e:.6})");
        for (x, v) in potential_profile(family, e, &xs)? {
            let bar = "#".repeat(((v + e).min(20.0) * 2.0).round() as usize);
            println!("  x = {x:+.1}  V = {v:+9.4}  {bar}");
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
