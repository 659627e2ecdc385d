use super::{Eigenvalue, OracleConfig, ACCEPT_RELATIVE};
use crate::error::{Error, Result};
use crate::numerics::{find_root_bracketed, Complex};

const RESCALE_ABOVE: f64 = 1e100;

fn q(x: f64, e: f64) -> Complex {
    Complex::new(e, -x * x * x)
}

/// `(ψ(0), ψ'(0))` of the solution decaying as `x → +∞`, up to a scale.
fn shoot(e: f64, half_width: f64, step: f64) -> (Complex, Complex) {
    let x0 = half_width;
    let q0 = q(x0, e);
    let dq0 = Complex::new(0.0, -3.0 * x0 * x0);
    let mut root = Complex::new(0.0, 1.0) * q0.sqrt();
    if root.re > 0.0 {
        root = -root;
    }
    let mut psi = Complex::new(1.0, 0.0);
    let mut dpsi = root - dq0 / (4.0 * q0);

    let steps = (half_width / step).round().max(1.0) as usize;
    let h = -half_width / steps as f64;
    // ψ'' = -Q ψ
    let rhs = |x: f64, y: Complex| -q(x, e) * y;
    for k in 0..steps {
        let x = x0 + k as f64 * h;
        let k1y = dpsi;
        let k1v = rhs(x, psi);
        let k2y = dpsi + k1v * (0.5 * h);
        let k2v = rhs(x + 0.5 * h, psi + k1y * (0.5 * h));
        let k3y = dpsi + k2v * (0.5 * h);
        let k3v = rhs(x + 0.5 * h, psi + k2y * (0.5 * h));
        let k4y = dpsi + k3v * h;
        let k4v = rhs(x + h, psi + k3y * h);
        psi += (k1y + 2.0 * k2y + 2.0 * k3y + k4y) * (h / 6.0);
        dpsi += (k1v + 2.0 * k2v + 2.0 * k3v + k4v) * (h / 6.0);
        let size = psi.norm().max(dpsi.norm());
        if size > RESCALE_ABOVE {
            psi /= size;
            dpsi /= size;
        }
    }
    (psi, dpsi)
}

/// Wronskian at the origin of the decaying solution with its PT mirror
/// `ψ*(-x)`. Its imaginary part vanishes identically.
pub fn pt_wronskian(e: f64, config: &OracleConfig) -> (Complex, Complex, Complex) {
    let (psi, dpsi) = shoot(e, config.box_half_width, config.shooting_step);
    let wronskian = psi.conj() * dpsi + dpsi.conj() * psi;
    (wronskian, psi, dpsi)
}

fn residual_with_step(e: f64, half_width: f64, step: f64) -> f64 {
    let (psi, dpsi) = shoot(e, half_width, step);
    2.0 * (psi.conj() * dpsi).re / (psi.norm_sqr() + dpsi.norm_sqr())
}

/// Normalized real residual `2 Re(ψ*ψ')/(|ψ|² + |ψ'|²)` at `x = 0`.
pub fn pt_residual(e: f64, config: &OracleConfig) -> f64 {
    residual_with_step(e, config.box_half_width, config.shooting_step)
}

/// Re-solves near `guess` with a different RK4 step.
pub(super) fn refine_level(guess: f64, step: f64, config: &OracleConfig) -> Result<f64> {
    let f = |e: f64| residual_with_step(e, config.box_half_width, step);
    let mut width = 1e-3 * guess.max(1.0);
    for _ in 0..10 {
        if let Ok(root) = find_root_bracketed(f, guess - width, guess + width, 1e-11) {
            return Ok(root);
        }
        width *= 2.0;
    }
    Err(Error::NoBracket { found: 0, wanted: 1, scan_max: guess + width })
}

/// Lowest `n_max + 1` levels of `ψ'' + (E - i x³) ψ = 0` by shooting from
/// `x = L` to the origin, scanning `E` for sign changes and refining.
///
/// The convergence estimate compares steps `h` and `2h`.
pub fn pt_cubic_levels(n_max: usize, config: &OracleConfig) -> Result<Vec<Eigenvalue>> {
    config.validate()?;
    let wanted = n_max + 1;
    let f = |e: f64| pt_residual(e, config);
    let mut out = Vec::with_capacity(wanted);
    let mut e_prev = config.scan_step;
    let mut r_prev = f(e_prev);
    while out.len() < wanted {
        let e = e_prev + config.scan_step;
        if e > config.energy_scan_max {
            return Err(Error::NoBracket { found: out.len(), wanted, scan_max: config.energy_scan_max });
        }
        let r = f(e);
        if r_prev.signum() != r.signum() {
            let root = find_root_bracketed(f, e_prev, e, 1e-11)?;
            let coarse = refine_level(root, 2.0 * config.shooting_step, config)?;
            let estimate = (root - coarse).abs();
            let n = out.len();
            let threshold = ACCEPT_RELATIVE * root;
            if estimate > threshold {
                return Err(Error::NotConverged { n, estimate, threshold });
            }
            out.push(Eigenvalue { n, value: root, convergence_estimate: estimate });
        }
        e_prev = e;
        r_prev = r;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_levels() {
        let levels = pt_cubic_levels(4, &OracleConfig::default()).unwrap();
        let want = [1.1562670720, 4.1092287528, 7.5622738550, 11.3144218202, 15.2915537504];
        for (l, w) in levels.iter().zip(want) {
            assert!((l.value - w).abs() < 1e-6, "{l:?} vs {w}");
            assert!(l.convergence_estimate < 1e-6);
        }
    }

    #[test]
    fn wronskian_is_real() {
        let cfg = OracleConfig::default();
        for k in 0..40 {
            let e = 0.3 + 0.4 * k as f64;
            let (w, psi, dpsi) = pt_wronskian(e, &cfg);
            assert!(w.im.abs() <= 1e-10 * psi.norm() * dpsi.norm(), "E = {e}: {w}");
        }
    }

    #[test]
    fn scan_limit_reports_missing_levels() {
        let cfg = OracleConfig { energy_scan_max: 5.0, ..OracleConfig::default() };
        match pt_cubic_levels(3, &cfg) {
            Err(Error::NoBracket { found, wanted, .. }) => assert_eq!((found, wanted), (2, 4)),
            other => panic!("{other:?}"),
        }
    }
}
