//! Closed-form Stokes constants of the Weber (`Q = E - z²`) and Budden
//! (`Q = 1 + c/z`) equations.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{cos_pi, ln_gamma_right, sin_pi, Complex, I};
use crate::potentials::Family;

/// Distance from an odd integer inside which the Weber quotient is evaluated
/// through its vanishing factors.
const REMOVABLE_WINDOW: f64 = 1e-3;
const LHOPITAL_STEP: f64 = 1e-6;

/// `Γ((1+E)/2)·(2e/E)^{E/2}`, combined in log form so large `E` neither
/// overflows nor underflows.
fn weber_magnitude_part(e: f64) -> f64 {
    let z = Complex::new((1.0 + e) / 2.0, 0.0);
    (ln_gamma_right(z).re + 0.5 * e * ((2.0 / e).ln() + 1.0)).exp()
}

/// `1/Γ((1-E)/2)` split as `sin(π(1-E)/2)·Γ((1+E)/2)/π`; this returns the
/// vanishing factor `sin(π(1-E)/2)`.
fn vanishing_numerator(e: f64) -> f64 {
    sin_pi((1.0 - e) / 2.0)
}

/// `(1 + e^{iπE}) e^{-iπE/2} = 2cos(πE/2)`.
fn vanishing_denominator(e: f64) -> f64 {
    2.0 * cos_pi(e / 2.0)
}

/// Weber Stokes constant
/// `S = i√(2π) e^{iπE/2} / Γ((1-E)/2) · (2e/E)^{E/2} / (1 + e^{iπE})`.
///
/// At odd `E` both `1/Γ((1-E)/2)` and `1 + e^{iπE}` vanish; there the
/// quotient of the vanishing factors is replaced by the quotient of their
/// centered differences, so `S(E)` is continuous.
pub fn weber_stokes(e: f64) -> Result<Complex> {
    if !(e > 0.0) || !e.is_finite() {
        return Err(Error::InvalidArgument(format!("weber_stokes needs E > 0, got {e}")));
    }
    let nearest_odd = 2.0 * ((e - 1.0) / 2.0).round() + 1.0;
    let prefactor = I * (2.0 * PI).sqrt() * weber_magnitude_part(e) / PI;
    if (e - nearest_odd).abs() > REMOVABLE_WINDOW {
        let phase = Complex::from_polar(1.0, PI * e / 2.0);
        let denominator = 1.0 + Complex::from_polar(1.0, PI * e);
        return Ok(prefactor * phase * vanishing_numerator(e) / denominator);
    }
    let ratio = if e == nearest_odd {
        let h = LHOPITAL_STEP;
        (vanishing_numerator(e + h) - vanishing_numerator(e - h))
            / (vanishing_denominator(e + h) - vanishing_denominator(e - h))
    } else {
        vanishing_numerator(e) / vanishing_denominator(e)
    };
    Ok(prefactor * ratio)
}

/// Budden Stokes constant
/// `S = Γ(1 + ic/2)/Γ(1 - ic/2) · (2e/c)^{ic} · (1 - e^{-πc})`.
///
/// For real `c` the Gamma ratio is `e^{2i arg Γ(1 + ic/2)}` and `(2e/c)^{ic}`
/// is a pure phase, so only the last factor changes the modulus.
pub fn budden_stokes(c: f64) -> Result<Complex> {
    if !(c > 0.0) || !c.is_finite() {
        return Err(Error::InvalidArgument(format!("budden_stokes needs c > 0, got {c}")));
    }
    let gamma_phase = 2.0 * ln_gamma_right(Complex::new(1.0, c / 2.0)).im;
    let power_phase = c * ((2.0 / c).ln() + 1.0);
    let modulus = -(-PI * c).exp_m1();
    Ok(Complex::from_polar(modulus, gamma_phase + power_phase))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StokesConstantSample {
    pub parameter: f64,
    pub s: Complex,
    /// `|S - i|`
    pub gap: f64,
}

impl StokesConstantSample {
    pub fn new(parameter: f64, s: Complex) -> Self {
        Self { parameter, s, gap: (s - I).norm() }
    }
}

/// Exact Stokes constant of a weber (parameter `E`) or budden (parameter `c`)
/// problem.
pub fn exact_stokes(family: Family, param: f64) -> Result<Complex> {
    match family {
        Family::Weber => weber_stokes(param),
        Family::Budden => budden_stokes(param),
        other => Err(Error::not_applicable(other, "exact Stokes constant")),
    }
}

/// Samples in input order.
pub fn gap_sweep(family: Family, params: &[f64]) -> Result<Vec<StokesConstantSample>> {
    if !matches!(family, Family::Weber | Family::Budden) {
        return Err(Error::not_applicable(family, "exact Stokes constant"));
    }
    params
        .par_iter()
        .map(|&p| exact_stokes(family, p).map(|s| StokesConstantSample::new(p, s)))
        .collect()
}

/// `points` evenly spaced values on `[from, to]` (both ends included).
pub fn linspace(from: f64, to: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![from],
        _ => (0..points).map(|k| from + (to - from) * k as f64 / (points - 1) as f64).collect(),
    }
}
