// Walk a WKB solution around the turning points with the continuation
// rules and read off the quantization residuals.
//
// ```bash
// cargo run --example continuation
// ```

use std::error::Error;

use phaseint::connection::{
    builtin_itinerary, builtin_text, itinerary_residuals, quantization_residuals, run_itinerary, Itinerary,
};
use phaseint::quantization::{bohr_sommerfeld_action, pi_shift, stokes_estimate};
use phaseint::{Complex, Family};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("quartic itinerary:\n{}", builtin_text(Family::Quartic));

    // Residuals at the first-order solution for the ground state.
    let w = bohr_sommerfeld_action(0) + pi_shift(Family::Quartic, 0)?;
    let s = stokes_estimate(Family::Quartic, 0)?.s;
    let out = run_itinerary(w, s, &builtin_itinerary(Family::Quartic))?;
    println!("terminal expression at W = {w:.6}, S = {:.6}i:\n  {out}", s.im);
    let (dominant, symmetry) = itinerary_residuals(Family::Quartic, w, s)?;
    let (closed_d, closed_s) = quantization_residuals(Family::Quartic, w, s)?;
    println!("dominant residual {dominant:.3e} (closed form {closed_d:.3e})");
    println!("symmetry residual {symmetry:.6} (closed form {closed_s:.6})");

    // A hand-written walk: once around the Weber turning points.
    let text = "start 1 s\nanti\nstokes 1\nreconnect 1 2\nstokes 2\nanti\ncut 2\nstokes 2\nanti\nstokes 2\nreconnect 2 1\nstokes 1\nanti\ncut 1\n";
    let loop_walk = Itinerary::parse(Family::Weber, text)?;
    for w in [1.0, std::f64::consts::FRAC_PI_2] {
        let out = run_itinerary(w, Complex::new(0.3, 0.8), &loop_walk)?;
        println!("weber loop at W = {w:.4}: {out}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
