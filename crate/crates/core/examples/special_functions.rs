// The numerical kernels underneath: action constants by adaptive
// quadrature, the complex Gamma function and bracketed root finding.
//
// ```bash
// cargo run --example special_functions
// ```

use std::error::Error;

use phaseint::numerics::{find_root_bracketed, gamma_complex, symmetric_root_integral, ROOT_TOL};
use phaseint::potentials::{action, action_constants, action_inverse};
use phaseint::{Complex, Family};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let k = action_constants();
    println!("action constants: {k:?}");
    println!("∫√(1-u⁴) du over [-1, 1] = {:.12}", symmetric_root_integral(4.0));

    let e = 3.0;
    let w = action(Family::Quartic, e)?;
    println!("quartic W({e}) = {w:.12}, back again: {:.12}", action_inverse(Family::Quartic, w)?);

    for z in [Complex::new(0.5, 0.0), Complex::new(0.5, 2.0), Complex::new(-2.5, 0.3)] {
        println!("Γ({z}) = {:.12}", gamma_complex(z)?);
    }

    // The level where the WKB action equals 5π/2, found by bracketing.
    let target = 2.5 * std::f64::consts::PI;
    let root = find_root_bracketed(|e| action(Family::Sextic, e).unwrap() - target, 1.0, 20.0, ROOT_TOL)?;
    println!("sextic E with W = 5π/2: {root:.12}");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
