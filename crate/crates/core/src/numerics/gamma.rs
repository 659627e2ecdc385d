use std::f64::consts::PI;

use super::Complex;
use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `sin(πx)`, exactly zero at every integer.
pub fn sin_pi(x: f64) -> f64 {
    let mut r = x % 2.0;
    if r > 1.0 {
        r -= 2.0;
    } else if r < -1.0 {
        r += 2.0;
    }
    if r > 0.5 {
        (PI * (1.0 - r)).sin()
    } else if r < -0.5 {
        -(PI * (1.0 + r)).sin()
    } else {
        (PI * r).sin()
    }
}

/// `cos(πx)`, exactly zero at every half-integer.
pub fn cos_pi(x: f64) -> f64 {
    let mut r = x.abs() % 2.0;
    if r > 1.0 {
        r = 2.0 - r;
    }
    if r < 0.25 {
        (PI * r).cos()
    } else if r < 0.75 {
        (PI * (0.5 - r)).sin()
    } else {
        -(PI * (1.0 - r)).cos()
    }
}

/// `sin(πz)` for complex `z`.
pub fn sin_pi_complex(z: Complex) -> Complex {
    let y = PI * z.im;
    Complex::new(sin_pi(z.re) * y.cosh(), cos_pi(z.re) * y.sinh())
}

/// `ln Γ(z)` for `Re z ≥ 1/2` (Lanczos, g = 7).
///
/// The imaginary part is not continued across branches; use it only through
/// `exp`.
pub fn ln_gamma_right(z: Complex) -> Complex {
    let x = z - 1.0;
    let mut a = Complex::new(LANCZOS[0], 0.0);
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        a += *c / (x + k as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

fn is_nonpositive_integer(z: Complex) -> Option<i64> {
    (z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0).then_some(z.re as i64)
}

/// Γ(z) for complex `z`; errors at the poles `0, -1, -2, …`.
pub fn gamma_complex(z: Complex) -> Result<Complex> {
    if let Some(n) = is_nonpositive_integer(z) {
        return Err(Error::PoleAtNonpositiveInteger(n));
    }
    if z.re >= 0.5 {
        Ok(ln_gamma_right(z).exp())
    } else {
        Ok(PI / (sin_pi_complex(z) * ln_gamma_right(1.0 - z).exp()))
    }
}

/// 1/Γ(z), entire; exactly zero at nonpositive integers.
pub fn reciprocal_gamma(z: Complex) -> Complex {
    if z.re >= 0.5 {
        (-ln_gamma_right(z)).exp()
    } else {
        sin_pi_complex(z) * ln_gamma_right(1.0 - z).exp() / PI
    }
}
