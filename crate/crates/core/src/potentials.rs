//! The five built-in problem families.
//!
//! Vertex numbering (fixed, connection factors are quoted against it):
//!
//! - weber: `1 = +√E`, `2 = -√E`
//! - budden: `0` = the pole at the origin, `1` = the turning point `-c`
//! - quartic: `Z_k = E^{1/4} i^{k-1}`, `k = 1..4`
//! - sextic: `Z_k = E^{1/6} e^{i(k-1)π/3}`, `k = 1..6`
//! - pt_cubic: `1 = E^{1/3}e^{-5iπ/6}` (left), `2 = E^{1/3}e^{iπ/2}` (upper),
//!   `3 = E^{1/3}e^{-iπ/6}` (right)

use std::collections::VecDeque;
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{symmetric_root_integral, Complex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Weber,
    Budden,
    Quartic,
    Sextic,
    PtCubic,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::Weber, Family::Budden, Family::Quartic, Family::Sextic, Family::PtCubic];

    pub fn name(self) -> &'static str {
        match self {
            Family::Weber => "weber",
            Family::Budden => "budden",
            Family::Quartic => "quartic",
            Family::Sextic => "sextic",
            Family::PtCubic => "pt_cubic",
        }
    }

    pub fn has_bound_states(self) -> bool {
        self != Family::Budden
    }

    /// Families whose levels carry an off-axis phase-integral correction.
    pub fn has_correction(self) -> bool {
        matches!(self, Family::Quartic | Family::Sextic | Family::PtCubic)
    }

    /// Power of `x` in the real-axis potential (Hermitian families and PT).
    pub fn power(self) -> Option<u32> {
        match self {
            Family::Weber => Some(2),
            Family::Quartic => Some(4),
            Family::Sextic => Some(6),
            Family::PtCubic => Some(3),
            Family::Budden => None,
        }
    }

    /// Registry entry for this family.
    pub fn spec(self) -> PotentialFamily {
        let constants = action_constants();
        let (action_constant, action_exponent) = match self {
            Family::Weber => (Some(FRAC_PI_2), Some(1.0)),
            Family::Budden => (None, None),
            Family::Quartic => (Some(constants.quartic), Some(0.75)),
            Family::Sextic => (Some(constants.sextic), Some(2.0 / 3.0)),
            Family::PtCubic => (Some(constants.pt_cubic()), Some(5.0 / 6.0)),
        };
        PotentialFamily {
            kind: self,
            action_constant,
            action_exponent,
            turning_point_layout: unit_layout(self),
            has_bound_states: self.has_bound_states(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "weber" => Ok(Family::Weber),
            "budden" => Ok(Family::Budden),
            "quartic" => Ok(Family::Quartic),
            "sextic" => Ok(Family::Sextic),
            "pt_cubic" | "ptcubic" | "pt" => Ok(Family::PtCubic),
            other => Err(Error::InvalidArgument(format!(
                "unknown family `{other}` (expected weber, budden, quartic, sextic or pt_cubic)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u8);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PotentialFamily {
    pub kind: Family,
    /// `∫√(1-u^p)du`-type constant in `W = c·E^α` (`None` for budden).
    pub action_constant: Option<f64>,
    pub action_exponent: Option<f64>,
    /// Singular points at unit scale, in vertex order.
    pub turning_point_layout: Vec<(VertexId, Complex)>,
    pub has_bound_states: bool,
}

impl PotentialFamily {
    pub fn q(&self, z: Complex, param: f64) -> Result<Complex> {
        q_eval(self.kind, z, param)
    }
}

/// A singular point of `Q`: `order` is 1 for a simple zero, -1 for a simple pole.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Vertex {
    pub id: VertexId,
    pub z: Complex,
    pub order: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ActionConstants {
    pub quartic: f64,
    pub sextic: f64,
    /// `∫_{-1}^{1} √(1 - |u|³) du`; the cubic action carries an extra `cos(π/6)`.
    pub cubic: f64,
}

impl ActionConstants {
    pub fn pt_cubic(&self) -> f64 {
        (PI / 6.0).cos() * self.cubic
    }
}

/// Short reference values with the number of decimals they carry.
pub const REFERENCE_QUARTIC: (f64, usize) = (1.74804, 5);
pub const REFERENCE_SEXTIC: (f64, usize) = (1.821488, 6);
pub const REFERENCE_CUBIC: (f64, usize) = (1.68262, 5);

fn rounds_to(value: f64, reference: (f64, usize)) -> bool {
    let scale = 10f64.powi(reference.1 as i32);
    ((value * scale).round() - reference.0 * scale).abs() < 0.5
}

/// Action constants recomputed by quadrature on first use.
///
/// Panics if a recomputed constant does not round to its reference value;
/// that would mean the quadrature kernel is broken.
pub fn action_constants() -> &'static ActionConstants {
    static CONSTANTS: OnceLock<ActionConstants> = OnceLock::new();
    CONSTANTS.get_or_init(|| {
        let c = ActionConstants {
            quartic: symmetric_root_integral(4.0),
            sextic: symmetric_root_integral(6.0),
            cubic: symmetric_root_integral(3.0),
        };
        assert!(rounds_to(c.quartic, REFERENCE_QUARTIC), "quartic constant {}", c.quartic);
        assert!(rounds_to(c.sextic, REFERENCE_SEXTIC), "sextic constant {}", c.sextic);
        assert!(rounds_to(c.cubic, REFERENCE_CUBIC), "cubic constant {}", c.cubic);
        c
    })
}

fn cis(theta: f64) -> Complex {
    Complex::from_polar(1.0, theta)
}

fn unit_layout(family: Family) -> Vec<(VertexId, Complex)> {
    match family {
        Family::Weber => vec![(VertexId(1), Complex::new(1.0, 0.0)), (VertexId(2), Complex::new(-1.0, 0.0))],
        Family::Budden => vec![(VertexId(0), Complex::new(0.0, 0.0)), (VertexId(1), Complex::new(-1.0, 0.0))],
        Family::Quartic => (0..4).map(|k| (VertexId(k + 1), cis(k as f64 * FRAC_PI_2))).collect(),
        Family::Sextic => (0..6).map(|k| (VertexId(k + 1), cis(k as f64 * PI / 3.0))).collect(),
        Family::PtCubic => vec![
            (VertexId(1), cis(-5.0 * PI / 6.0)),
            (VertexId(2), cis(FRAC_PI_2)),
            (VertexId(3), cis(-PI / 6.0)),
        ],
    }
}

/// `Q(z, param)`; `param` is `E`, or `c` for budden.
pub fn q_eval(family: Family, z: Complex, param: f64) -> Result<Complex> {
    Ok(match family {
        Family::Weber => param - z * z,
        Family::Budden => {
            if z == Complex::new(0.0, 0.0) {
                return Err(Error::PoleAtOrigin);
            }
            1.0 + param / z
        }
        Family::Quartic => param - z.powu(4),
        Family::Sextic => param - z.powu(6),
        Family::PtCubic => {
            let iz = Complex::new(-z.im, z.re);
            param + iz * iz * iz
        }
    })
}

/// `dQ/dz`.
pub fn q_derivative(family: Family, z: Complex, param: f64) -> Result<Complex> {
    Ok(match family {
        Family::Weber => -2.0 * z,
        Family::Budden => {
            if z == Complex::new(0.0, 0.0) {
                return Err(Error::PoleAtOrigin);
            }
            -param / (z * z)
        }
        Family::Quartic => -4.0 * z.powu(3),
        Family::Sextic => -6.0 * z.powu(5),
        // d/dz (iz)³ = 3i(iz)² = -3i z²
        Family::PtCubic => Complex::new(0.0, -3.0) * z * z,
    })
}

/// Length scale of the singular-point layout: `E^{1/p}`, or `c` for budden.
pub fn scale(family: Family, param: f64) -> f64 {
    match family {
        Family::Weber => param.sqrt(),
        Family::Budden => param,
        Family::Quartic => param.powf(0.25),
        Family::Sextic => param.powf(1.0 / 6.0),
        Family::PtCubic => param.cbrt(),
    }
}

/// All singular points (zeros and, for budden, the pole) in vertex order.
pub fn vertices(family: Family, param: f64) -> Vec<Vertex> {
    let r = scale(family, param);
    unit_layout(family)
        .into_iter()
        .map(|(id, u)| {
            let order = if family == Family::Budden && id == VertexId(0) { -1 } else { 1 };
            Vertex { id, z: u * r, order }
        })
        .collect()
}

/// Zeros of `Q` in vertex order.
pub fn turning_points(family: Family, param: f64) -> Vec<(VertexId, Complex)> {
    vertices(family, param).into_iter().filter(|v| v.order > 0).map(|v| (v.id, v.z)).collect()
}

pub fn vertex(family: Family, param: f64, id: VertexId) -> Result<Vertex> {
    vertices(family, param).into_iter().find(|v| v.id == id).ok_or(Error::UnknownVertex(id))
}

fn action_law(family: Family) -> Result<(f64, f64)> {
    let spec = family.spec();
    match (spec.action_constant, spec.action_exponent) {
        (Some(c), Some(a)) => Ok((c, a)),
        _ => Err(Error::not_applicable(family, "action")),
    }
}

/// `W(E) = c·E^α` between the two real (or PT-paired) turning points.
pub fn action(family: Family, param: f64) -> Result<f64> {
    let (c, a) = action_law(family)?;
    if !(param > 0.0) {
        return Err(Error::InvalidArgument(format!("action needs E > 0, got {param}")));
    }
    Ok(c * param.powf(a))
}

pub fn action_inverse(family: Family, w: f64) -> Result<f64> {
    let (c, a) = action_law(family)?;
    if !(w > 0.0) {
        return Err(Error::InvalidArgument(format!("action_inverse needs W > 0, got {w}")));
    }
    Ok((w / c).powf(1.0 / a))
}

/// Real-axis potential `V(x) = x^p - E`, sampled at `xs`.
///
/// For pt_cubic this is the ray-restricted form `|x|³(√3 - 1/3) - E`.
pub fn potential_profile(family: Family, param: f64, xs: &[f64]) -> Result<Vec<(f64, f64)>> {
    let v: Box<dyn Fn(f64) -> f64> = match family {
        Family::Budden => return Err(Error::not_applicable(family, "potential_profile")),
        Family::PtCubic => Box::new(move |x: f64| x.abs().powi(3) * (3f64.sqrt() - 1.0 / 3.0) - param),
        other => {
            let p = other.power().expect("hermitian power") as i32;
            Box::new(move |x: f64| x.powi(p) - param)
        }
    };
    Ok(xs.iter().map(|&x| (x, v(x))).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConnectionFactor {
    pub from: VertexId,
    pub to: VertexId,
    pub value: Complex,
}

/// The factors `[k, l]` of a family at one `W` (or `c`), with
/// lookup through reversal and chaining.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConnectionTable {
    pub family: Family,
    pub factors: Vec<ConnectionFactor>,
}

impl ConnectionTable {
    /// `[from, to]`. Reversed pairs invert; otherwise factors chain along the
    /// shortest path through intermediate vertices.
    pub fn lookup(&self, from: VertexId, to: VertexId) -> Result<Complex> {
        if from == to {
            return Ok(Complex::new(1.0, 0.0));
        }
        let mut seen = vec![from];
        let mut queue = VecDeque::from([(from, Complex::new(1.0, 0.0))]);
        while let Some((at, acc)) = queue.pop_front() {
            for f in &self.factors {
                let (next, step) = if f.from == at {
                    (f.to, f.value)
                } else if f.to == at {
                    (f.from, 1.0 / f.value)
                } else {
                    continue;
                };
                if seen.contains(&next) {
                    continue;
                }
                if next == to {
                    return Ok(acc * step);
                }
                seen.push(next);
                queue.push_back((next, acc * step));
            }
        }
        Err(Error::MissingFactor { from, to })
    }
}

fn factor(from: u8, to: u8, log: Complex) -> ConnectionFactor {
    ConnectionFactor { from: VertexId(from), to: VertexId(to), value: log.exp() }
}

/// Closed-form connection factors at action `w` (`c` for budden).
pub fn connection_factors(family: Family, w: f64) -> ConnectionTable {
    let s3 = 3f64.sqrt();
    let c = |re: f64, im: f64| Complex::new(re, im);
    let factors = match family {
        Family::Weber => vec![factor(1, 2, c(0.0, w))],
        Family::Budden => vec![factor(0, 1, c(PI * w / 2.0, 0.0))],
        Family::Quartic => vec![
            factor(1, 2, c(w / 2.0, w / 2.0)),
            factor(1, 3, c(0.0, w)),
            factor(2, 3, c(-w / 2.0, w / 2.0)),
        ],
        Family::Sextic => vec![
            factor(1, 2, c(s3 * w / 4.0, w / 4.0)),
            factor(3, 2, c(0.0, -w / 2.0)),
            factor(3, 4, c(-s3 * w / 4.0, w / 4.0)),
        ],
        Family::PtCubic => vec![
            factor(1, 2, c(s3 * w / 2.0, -w / 2.0)),
            factor(1, 3, c(0.0, -w)),
            factor(2, 3, c(-s3 * w / 2.0, -w / 2.0)),
        ],
    };
    ConnectionTable { family, factors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::find_root_bracketed;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_eval(Family::Quartic, c(0.0, 0.0), 1.0).unwrap(), c(1.0, 0.0));
        assert_eq!(q_eval(Family::PtCubic, c(0.0, 1.0), 0.0).unwrap(), c(-1.0, 0.0));
        assert_eq!(q_eval(Family::Budden, c(-2.5, 0.0), 2.5).unwrap(), c(0.0, 0.0));
        assert_eq!(q_eval(Family::Budden, c(0.0, 0.0), 1.0), Err(Error::PoleAtOrigin));
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        let z = c(0.37, -0.81);
        let h = 1e-6;
        for family in Family::ALL {
            let d = q_derivative(family, z, 1.3).unwrap();
            let fd = (q_eval(family, z + h, 1.3).unwrap() - q_eval(family, z - h, 1.3).unwrap()) / (2.0 * h);
            assert!((d - fd).norm() < 1e-7, "{family}");
        }
    }

    #[test]
    fn constants_match_reference_digits() {
        let k = action_constants();
        assert!(rounds_to(k.quartic, REFERENCE_QUARTIC));
        assert!(rounds_to(k.sextic, REFERENCE_SEXTIC));
        assert!(rounds_to(k.cubic, REFERENCE_CUBIC));
        // Full-precision references.
        assert!((k.quartic - 1.748_038_369_528_08).abs() < 1e-12);
        assert!((k.sextic - 1.821_487_985_915_69).abs() < 1e-12);
        assert!((k.cubic - 1.682_618_526_390_55).abs() < 1e-12);
    }

    #[test]
    fn action_examples() {
        assert!((action(Family::Weber, 1.0).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert!((action(Family::Quartic, 1.0).unwrap() - 1.74804).abs() < 1e-5);
        assert!((action(Family::PtCubic, 1.0).unwrap() - 1.457193).abs() < 1e-5);
        assert!(matches!(action(Family::Budden, 1.0), Err(Error::NotApplicable { .. })));
    }

    #[test]
    fn action_inverse_examples() {
        let e = action_inverse(Family::Quartic, FRAC_PI_2).unwrap();
        assert!((e - 0.8671).abs() < 5e-5);
        let e = action_inverse(Family::Sextic, FRAC_PI_2).unwrap();
        assert!((e - 0.8008).abs() < 5e-5);
        for n in 0..6 {
            let e = action_inverse(Family::Weber, (n as f64 + 0.5) * PI).unwrap();
            assert!((e - (2 * n + 1) as f64).abs() < 1e-13);
        }
    }

    #[test]
    fn root_finder_recovers_quartic_ground_wkb() {
        let f = |e: f64| action(Family::Quartic, e).unwrap() - FRAC_PI_2;
        let e = find_root_bracketed(f, 0.1, 2.0, 1e-12).unwrap();
        assert!((e - 0.8671).abs() < 5e-5);
    }

    #[test]
    fn layout_invariants() {
        let e = 2.7;
        let quartic = turning_points(Family::Quartic, e);
        assert_eq!(quartic.len(), 4);
        for (k, (_, z)) in quartic.iter().enumerate() {
            assert!((z - cis(k as f64 * FRAC_PI_2) * e.powf(0.25)).norm() < 1e-14);
        }
        let pt = turning_points(Family::PtCubic, e);
        assert!((pt[1].1 - c(0.0, e.cbrt())).norm() < 1e-14);
        let weber = turning_points(Family::Weber, 4.0);
        assert_eq!(weber, vec![(VertexId(1), c(2.0, 0.0)), (VertexId(2), c(-2.0, 0.0))]);
        let budden = vertices(Family::Budden, 3.0);
        assert_eq!(budden[0].order, -1);
        assert_eq!(budden[1].z, c(-3.0, 0.0));
        assert!(!Family::Budden.spec().has_bound_states);
        assert!(Family::ALL.iter().filter(|f| !f.has_bound_states()).count() == 1);
    }

    #[test]
    fn profile_examples() {
        let p = potential_profile(Family::Weber, 1.0, &[1.0, -1.0]).unwrap();
        assert_eq!(p, vec![(1.0, 0.0), (-1.0, 0.0)]);
        let p = potential_profile(Family::Quartic, 1.0604, &[0.0]).unwrap();
        assert_eq!(p[0].1, -1.0604);
        let p = potential_profile(Family::PtCubic, 0.0, &[1.0, -1.0]).unwrap();
        assert!((p[0].1 - 1.39872).abs() < 1e-5 && p[0].1 == p[1].1);
        assert!(potential_profile(Family::Budden, 1.0, &[1.0]).is_err());
    }

    #[test]
    fn factor_examples() {
        let w = 2.3;
        let q = connection_factors(Family::Quartic, w);
        assert!((q.lookup(VertexId(1), VertexId(3)).unwrap() - cis(w)).norm() < 1e-14);
        let b = connection_factors(Family::Budden, 1.7);
        assert!((b.lookup(VertexId(0), VertexId(1)).unwrap().re - (PI * 1.7 / 2.0).exp()).abs() < 1e-12);
        let chained = connection_factors(Family::Sextic, w).lookup(VertexId(1), VertexId(4)).unwrap();
        let s3 = 3f64.sqrt();
        let expect = Complex::new(s3 * w / 4.0, w / 4.0).exp() / cis(-w / 2.0) * Complex::new(-s3 * w / 4.0, w / 4.0).exp();
        assert!((chained - expect).norm() < 1e-12);
        assert!(matches!(
            connection_factors(Family::Sextic, w).lookup(VertexId(1), VertexId(6)),
            Err(Error::MissingFactor { .. })
        ));
    }

    #[test]
    fn factor_pairs_are_mutually_consistent() {
        // [1,3] = [1,2][2,3] wherever all three are listed.
        for family in [Family::Quartic, Family::PtCubic] {
            let t = connection_factors(family, 1.9);
            let direct = t.factors.iter().find(|f| f.from == VertexId(1) && f.to == VertexId(3)).unwrap().value;
            let via = t.factors[0].value * t.factors[2].value;
            assert!((direct - via).norm() < 1e-13, "{family}");
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("cubic".parse::<Family>().is_err());
    }

    proptest! {
        #[test]
        fn turning_points_are_zeros(e in 0.05f64..40.0) {
            for family in Family::ALL {
                for (_, z) in turning_points(family, e) {
                    prop_assert!(q_eval(family, z, e).unwrap().norm() <= 1e-10 * (1.0 + e));
                }
            }
        }

        #[test]
        fn action_scaling_law(e in 0.1f64..30.0, s in 0.5f64..4.0) {
            for family in [Family::Weber, Family::Quartic, Family::Sextic, Family::PtCubic] {
                let a = family.spec().action_exponent.unwrap();
                let lhs = action(family, s * e).unwrap();
                let rhs = s.powf(a) * action(family, e).unwrap();
                prop_assert!((lhs / rhs - 1.0).abs() < 1e-12);
                let back = action(family, action_inverse(family, lhs).unwrap()).unwrap();
                prop_assert!((back / lhs - 1.0).abs() < 1e-10);
            }
        }

        #[test]
        fn reversed_pairs_invert(w in 0.1f64..12.0, a in 1u8..5, b in 1u8..5) {
            for family in [Family::Quartic, Family::PtCubic] {
                let t = connection_factors(family, w);
                if a > 3 || b > 3 { continue; }
                let fwd = t.lookup(VertexId(a), VertexId(b)).unwrap();
                let back = t.lookup(VertexId(b), VertexId(a)).unwrap();
                prop_assert!((fwd * back - 1.0).norm() < 1e-12);
            }
        }
    }
}
