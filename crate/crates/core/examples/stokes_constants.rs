// Exact Stokes constants of the parabolic-cylinder (Weber) and Coulomb
// (Budden) problems, and how fast they approach `i`.
//
// ```bash
// cargo run --example stokes_constants
// ```

use std::error::Error;

use phaseint::stokes_exact::{budden_stokes, gap_sweep, linspace, weber_stokes};
use phaseint::Family;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // Odd E is a removable point of the closed form.
    for e in [0.5, 1.0, 2.0, 3.0, 7.5] {
        let s = weber_stokes(e)?;
        println!("weber  E = {e:<4}  S = {:.10} {:+.10}i", s.re, s.im);
    }
    for c in [0.1, 1.0, 5.0] {
        let s = budden_stokes(c)?;
        println!("budden c = {c:<4}  S = {:.10} {:+.10}i  |S| = {:.10}", s.re, s.im, s.norm());
    }

    let grid = linspace(0.2, 20.0, 12);
    for family in [Family::Weber, Family::Budden] {
        let gaps: Vec<String> = gap_sweep(family, &grid)?.iter().map(|p| format!("{:.1e}", p.gap)).collect();
        println!("{family} |S - i| over [0.2, 20]: {}", gaps.join(" "));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
