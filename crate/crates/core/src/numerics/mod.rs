//! Numerical kernels shared by every other module.
//!
//! All functions here are pure; none of them keep state between calls.

mod gamma;
mod quadrature;
mod roots;

pub use gamma::{cos_pi, gamma_complex, ln_gamma_right, reciprocal_gamma, sin_pi, sin_pi_complex};
pub use quadrature::{gauss_legendre_segment, quad_adaptive, quad_adaptive_real, QuadratureResult};
pub use roots::find_root_bracketed;

/// Complex number used for `z`, Stokes constants and WKB coefficients.
pub type Complex = num_complex::Complex64;

/// Default absolute tolerance for action-type integrals.
pub const QUAD_TOL: f64 = 1e-10;
/// Default tolerance for scalar root finding.
pub const ROOT_TOL: f64 = 1e-12;

pub const I: Complex = Complex::new(0.0, 1.0);

/// `∫_{-1}^{1} √(1 - |u|^p) du`.
///
/// The integrand has an inverse-square-root derivative at `u = ±1`; the
/// substitution `u = 1 - t²` on `[0, 1]` removes it, leaving an analytic
/// integrand that Gauss–Kronrod handles to full precision.
pub fn symmetric_root_integral(p: f64) -> f64 {
    let half = quad_adaptive_real(
        |t| {
            let u = 1.0 - t * t;
            2.0 * t * (1.0 - u.powf(p)).max(0.0).sqrt()
        },
        0.0,
        1.0,
        1e-14,
    )
    .expect("smooth integrand on [0, 1]");
    2.0 * half.value.re
}
