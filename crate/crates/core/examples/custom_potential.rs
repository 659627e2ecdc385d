// Stokes geometry of a potential that is not built in: the symmetric
// double well `Q = E - (z² - 1)²`, given as polynomial coefficients.
//
// ```bash
// cargo run --release --example custom_potential
// ```

use std::error::Error;

use phaseint::geometry::{diagram_of, phase_purity, LineKind, Polynomial, QFunction, RationalQ, TraceConfig};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for e in [0.5, 1.0, 2.0] {
        // E - (z^4 - 2z^2 + 1)
        let q = RationalQ::polynomial(Polynomial::from_real(&[e - 1.0, 0.0, 2.0, 0.0, -1.0]));
        let d = diagram_of(&q, "double well", e, &TraceConfig::default())?;
        let points = q.singular_points()?;
        let worst = d
            .lines
            .iter()
            .map(|l| {
                let origin = points.iter().find(|p| p.id == l.origin).expect("origin vertex");
                phase_purity(&q, origin, l.kind, &l.points).worst
            })
            .fold(0.0, f64::max);
        let orders: Vec<i32> = points.iter().map(|p| p.order).collect();
        let stokes = d.lines.iter().filter(|l| l.kind == LineKind::Stokes).count();
        println!("E = {e}: singular orders {orders:?}, {stokes} Stokes lines, purity {worst:.1e}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
