use serde::Serialize;

use super::{run_itinerary, Itinerary, Orientation};
use crate::error::{Error, Result};
use crate::numerics::{Complex, I};
use crate::potentials::{Family, VertexId};

const WEBER: &str = "\
# Full loop around both turning points, starting just above +√E.
start 1 s
anti
stokes 1
reconnect 1 2
stokes 2
anti
cut 2
stokes 2
anti
stokes 2
reconnect 2 1
stokes 1
anti
cut 1
";

const BUDDEN: &str = "\
# From the pole out to the turning point -c and back.
start 0 d
reconnect 0 1
stokes 1
anti
reconnect 1 0
anti
";

const QUARTIC: &str = "\
# Upper half-plane, from the right turning point to the left one.
start 1 s
anti
stokes 1
reconnect 1 2
stokes 2
anti
cut 2
stokes 2
reconnect 2 3
stokes 3
anti
";

const SEXTIC: &str = "\
# Upper half-plane, Z1 -> Z2 -> Z3 -> Z4.
start 1 s
anti
stokes 1
reconnect 1 2
stokes 2
anti
cut 2
stokes 2
reconnect 2 3
stokes 3
anti
cut 3
stokes 3
reconnect 3 4
stokes 4
anti
";

const PT_CUBIC: &str = "\
# From the right turning point over the upper one to the left one.
start 3 s
anti
stokes 3
reconnect 3 2
stokes 2
anti
cut 2
stokes 2
reconnect 2 1
stokes 1
anti
";

/// Built-in itinerary text of a family.
pub fn builtin_text(family: Family) -> &'static str {
    match family {
        Family::Weber => WEBER,
        Family::Budden => BUDDEN,
        Family::Quartic => QUARTIC,
        Family::Sextic => SEXTIC,
        Family::PtCubic => PT_CUBIC,
    }
}

pub fn builtin_itinerary(family: Family) -> Itinerary {
    Itinerary::parse(family, builtin_text(family)).expect("built-in itineraries parse")
}

/// Where the built-in itinerary ends: the anchor of the terminal terms and
/// the orientation of the dominant one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TerminalReadout {
    pub anchor: VertexId,
    pub dominant: Orientation,
}

impl TerminalReadout {
    pub fn of(family: Family) -> Self {
        let (anchor, dominant) = match family {
            Family::Weber => (1, Orientation::ToAnchor),
            Family::Budden => (0, Orientation::FromAnchor),
            Family::Quartic => (3, Orientation::ToAnchor),
            Family::Sextic => (4, Orientation::ToAnchor),
            Family::PtCubic => (1, Orientation::ToAnchor),
        };
        Self { anchor: VertexId(anchor), dominant }
    }
}

/// Factors relating the built-in terminal coefficients to the closed-form
/// residuals: `dominant = k_d · R`, `subdominant = k_s · M`.
pub fn terminal_normalisation(family: Family, s: Complex) -> Result<(Complex, Complex)> {
    let minus_i = -I;
    match family {
        Family::Quartic | Family::PtCubic => Ok((minus_i, minus_i)),
        Family::Sextic => Ok((-2.0 * s, Complex::new(-1.0, 0.0))),
        other => Err(Error::not_applicable(other, "quantization_residuals")),
    }
}

/// Value the symmetry residual takes at level `n`.
pub fn symmetry_target(family: Family, n: usize) -> Result<Complex> {
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    match family {
        Family::Quartic | Family::PtCubic => Ok(Complex::new(-sign, 0.0)),
        // With S = i and W = W_n the sextic residual is -i sin W_n.
        Family::Sextic => Ok(Complex::new(0.0, -sign)),
        other => Err(Error::not_applicable(other, "symmetry_target")),
    }
}

/// Closed-form `(dominant, symmetry)` residuals.
///
/// - quartic: `e^W(1+S²) + 2S²cos W + e^{-W}S²` and `Se^{-W} + Se^{iW}`
/// - sextic: `1 + e^{√3W/2}c + S²(e^{√3W/2} + 2c + e^{-√3W/2})c` with
///   `c = cos(W/2)`, and `1 + S²[1 + cos W + i sin W + 2e^{-√3W/2}cos(W/2)]`
/// - pt_cubic: the quartic pair with `e^{±W}` replaced by `e^{±√3W}`
pub fn quantization_residuals(family: Family, w: f64, s: Complex) -> Result<(Complex, Complex)> {
    let s2 = s * s;
    let s3 = 3f64.sqrt();
    match family {
        Family::Quartic | Family::PtCubic => {
            let x = if family == Family::Quartic { w } else { s3 * w };
            let dominant = x.exp() * (1.0 + s2) + 2.0 * s2 * w.cos() + (-x).exp() * s2;
            let symmetry = s * (-x).exp() + s * Complex::from_polar(1.0, w);
            Ok((dominant, symmetry))
        }
        Family::Sextic => {
            let c = (w / 2.0).cos();
            let up = (s3 * w / 2.0).exp();
            let down = (-s3 * w / 2.0).exp();
            let dominant = 1.0 + up * c + s2 * (up + 2.0 * c + down) * c;
            let symmetry = 1.0 + s2 * (1.0 + Complex::from_polar(1.0, w) + 2.0 * down * c);
            Ok((dominant, symmetry))
        }
        other => Err(Error::not_applicable(other, "quantization_residuals")),
    }
}

/// The same residuals read off the built-in itinerary's terminal
/// coefficients.
pub fn itinerary_residuals(family: Family, w: f64, s: Complex) -> Result<(Complex, Complex)> {
    let (kd, ks) = terminal_normalisation(family, s)?;
    let readout = TerminalReadout::of(family);
    let out = run_itinerary(w, s, &builtin_itinerary(family))?;
    let dominant = out.coeff(readout.anchor, readout.dominant);
    let subdominant = out.coeff(readout.anchor, readout.dominant.flipped());
    Ok((dominant / kd, subdominant / ks))
}

/// Dominant residual at `W = (n + ½)π + δ`, `S = i(1 + ε)`, rewritten so the
/// large exponentials multiply only `ε` and the `O(1)` parts cancel
/// analytically (`cos W = -(-1)ⁿ sin δ`). Direct evaluation loses all digits
/// once `e^{W}` exceeds the inverse of the residual.
pub fn stable_dominant_residual(family: Family, n: usize, delta: f64, eps: f64) -> Result<f64> {
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let w = (n as f64 + 0.5) * std::f64::consts::PI + delta;
    let s3 = 3f64.sqrt();
    let excess = eps * (2.0 + eps);
    match family {
        Family::Quartic | Family::PtCubic => {
            let x = if family == Family::Quartic { w } else { s3 * w };
            Ok(-x.exp() * excess - (1.0 + eps).powi(2) * ((-x).exp() - 2.0 * sign * delta.sin()))
        }
        Family::Sextic => {
            let c = (w / 2.0).cos();
            let up = (s3 * w / 2.0).exp();
            let down = (-s3 * w / 2.0).exp();
            Ok(sign * delta.sin() - down * c - excess * (up + 2.0 * c + down) * c)
        }
        other => Err(Error::not_applicable(other, "stable_dominant_residual")),
    }
}
