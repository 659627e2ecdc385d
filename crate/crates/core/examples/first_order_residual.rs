// The quartic quantization residual left over at the first-order solution
// shrinks like e^{-3W_n}: the next term in the expansion.
//
// ```bash
// cargo run --example first_order_residual
// ```

use std::error::Error;

use phaseint::connection::stable_dominant_residual;
use phaseint::quantization::{bohr_sommerfeld_action, pi_shift, stokes_estimate};
use phaseint::Family;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("n   |R|          |R| e^(3 W_n)");
    for n in 0..6 {
        let est = stokes_estimate(Family::Quartic, n)?;
        let delta = pi_shift(Family::Quartic, n)?;
        let r = stable_dominant_residual(Family::Quartic, n, delta, est.excess)?.abs();
        println!("{n}   {r:.4e}   {:.4}", r * (3.0 * bohr_sommerfeld_action(n)).exp());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
