//! Bohr–Sommerfeld levels and their first-order phase-integral corrections.
//!
//! The corrected condition has the form `cos W = g(W)` with `g` exponentially
//! small. Writing `W = W_n + δ` with `W_n = (n + ½)π` turns it into
//! `sin δ = -(-1)ⁿ g`, solved with `|δ| < π/2`. By default `g` is evaluated at
//! `W_n`; [`pi_level_self_consistent`] evaluates it at `W` instead.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{Complex, I};
use crate::oracle::{self, OracleConfig};
use crate::potentials::{action_inverse, Family};

/// `W_n = (n + ½)π`.
pub fn bohr_sommerfeld_action(n: usize) -> f64 {
    (n as f64 + 0.5) * PI
}

fn parity(n: usize) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn require_bound_states(family: Family, operation: &'static str) -> Result<()> {
    if family.has_bound_states() {
        Ok(())
    } else {
        Err(Error::not_applicable(family, operation))
    }
}

fn require_correction(family: Family, operation: &'static str) -> Result<()> {
    if family.has_correction() {
        Ok(())
    } else {
        Err(Error::not_applicable(family, operation))
    }
}

pub fn wkb_level(family: Family, n: usize) -> Result<f64> {
    require_bound_states(family, "wkb_level")?;
    action_inverse(family, bohr_sommerfeld_action(n))
}

/// Right-hand side `g(W)` of `cos W = g(W)`.
pub fn correction_rhs(family: Family, w: f64) -> Result<f64> {
    let s3 = 3f64.sqrt();
    match family {
        Family::Quartic => Ok(-(-w).exp()),
        Family::Sextic => Ok(-2.0 * (-s3 * w / 2.0).exp() * (w / 2.0).cos()),
        Family::PtCubic => Ok(-(-s3 * w).exp()),
        _ => Err(Error::not_applicable(family, "pi_cos_target")),
    }
}

/// `g(W_n)`: the value `cos W` takes at the corrected level.
pub fn pi_cos_target(family: Family, n: usize) -> Result<f64> {
    correction_rhs(family, bohr_sommerfeld_action(n))
}

/// `δ_n` with `W = W_n + δ_n` at the corrected level.
pub fn pi_shift(family: Family, n: usize) -> Result<f64> {
    Ok((-parity(n) * pi_cos_target(family, n)?).asin())
}

/// Corrected level. For weber the correction vanishes identically and the
/// result equals [`wkb_level`].
pub fn pi_level(family: Family, n: usize) -> Result<f64> {
    if family == Family::Weber {
        return wkb_level(family, n);
    }
    require_correction(family, "pi_level")?;
    action_inverse(family, bohr_sommerfeld_action(n) + pi_shift(family, n)?)
}

/// Corrected level with `g` evaluated at the corrected action itself
/// (fixed-point iteration). Not the tabulated convention.
pub fn pi_level_self_consistent(family: Family, n: usize) -> Result<f64> {
    require_correction(family, "pi_level_self_consistent")?;
    let wn = bohr_sommerfeld_action(n);
    let mut w = wn;
    for _ in 0..100 {
        let next = wn + (-parity(n) * correction_rhs(family, w)?).asin();
        if (next - w).abs() <= 1e-15 * wn {
            w = next;
            break;
        }
        w = next;
    }
    action_inverse(family, w)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StokesEstimate {
    pub family: Family,
    pub n: usize,
    pub s: Complex,
    /// `ε` in `s = i(1 + ε)`, kept separately because `s - i` loses digits.
    pub excess: f64,
    /// Size of the first neglected term.
    pub order_remainder: f64,
}

/// First-order Stokes constant at level `n`.
///
/// quartic: `i(1 - cos(W_n)e^{-W_n} - e^{-2W_n}/2)` with `cos W_n` taken as
/// the corrected value, remainder `e^{-4W_n}`; sextic and pt_cubic: `i`,
/// remainder `e^{-√3W_n}`.
pub fn stokes_estimate(family: Family, n: usize) -> Result<StokesEstimate> {
    require_correction(family, "stokes_estimate")?;
    let wn = bohr_sommerfeld_action(n);
    let (excess, order_remainder) = match family {
        Family::Quartic => {
            let cos_w = pi_cos_target(family, n)?;
            let e = (-wn).exp();
            (-cos_w * e - e * e / 2.0, (-4.0 * wn).exp())
        }
        _ => (0.0, (-3f64.sqrt() * wn).exp()),
    };
    Ok(StokesEstimate { family, n, s: I * (1.0 + excess), excess, order_remainder })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyRecord {
    pub n: usize,
    pub e_exact: Option<f64>,
    pub e_wkb: f64,
    pub cos_w: f64,
    pub e_pi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelTable {
    pub family: Family,
    pub rows: Vec<EnergyRecord>,
    /// Set when the oracle was requested but failed; rows then lack `e_exact`.
    pub oracle_error: Option<String>,
}

pub fn energy_record(family: Family, n: usize) -> Result<EnergyRecord> {
    require_bound_states(family, "level_table")?;
    let cos_w = if family == Family::Weber { 0.0 } else { pi_cos_target(family, n)? };
    Ok(EnergyRecord { n, e_exact: None, e_wkb: wkb_level(family, n)?, cos_w, e_pi: pi_level(family, n)? })
}

/// Rows `0..=n_max`; `e_exact` is filled from the oracle when one is given.
pub fn level_table(family: Family, n_max: usize, oracle_config: Option<&OracleConfig>) -> Result<LevelTable> {
    let mut rows = (0..=n_max).map(|n| energy_record(family, n)).collect::<Result<Vec<_>>>()?;
    let mut oracle_error = None;
    if let Some(cfg) = oracle_config {
        match oracle::levels(family, n_max, cfg) {
            Ok(levels) => {
                for (row, level) in rows.iter_mut().zip(levels) {
                    row.e_exact = Some(level.value);
                }
            }
            Err(e) => oracle_error = Some(e.to_string()),
        }
    }
    Ok(LevelTable { family, rows, oracle_error })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potentials::action;

    const CORRECTED: [Family; 3] = [Family::Quartic, Family::Sextic, Family::PtCubic];

    #[test]
    fn wkb_examples() {
        assert!((wkb_level(Family::Quartic, 0).unwrap() - 0.8671).abs() < 5e-5);
        assert!((wkb_level(Family::PtCubic, 0).unwrap() - 1.09427).abs() < 1e-4);
        assert!((wkb_level(Family::Weber, 3).unwrap() - 7.0).abs() < 1e-13);
        assert!(wkb_level(Family::Budden, 0).is_err());
    }

    #[test]
    fn cos_target_examples() {
        assert!((pi_cos_target(Family::Quartic, 0).unwrap() + 0.207879).abs() < 1e-6);
        assert!((pi_cos_target(Family::Sextic, 1).unwrap() - 2.3888e-2).abs() < 5e-6);
        assert!((pi_cos_target(Family::PtCubic, 0).unwrap() + 6.5834e-2).abs() < 1e-4);
        assert!(matches!(pi_cos_target(Family::Weber, 0), Err(Error::NotApplicable { .. })));
        assert!(pi_cos_target(Family::Budden, 0).is_err());
    }

    #[test]
    fn pi_level_examples() {
        let check = |f, n, want: f64| {
            let got = pi_level(f, n).unwrap();
            assert!((got - want).abs() <= 1e-4, "{f} n={n}: {got} vs {want}");
        };
        check(Family::Quartic, 0, 1.0246);
        check(Family::Quartic, 1, 3.7424);
        check(Family::Sextic, 1, 4.1929);
        check(Family::PtCubic, 0, 1.1496);
        assert_eq!(pi_level(Family::Weber, 2).unwrap(), wkb_level(Family::Weber, 2).unwrap());
    }

    #[test]
    fn shift_sign_follows_parity() {
        assert!(pi_shift(Family::Quartic, 0).unwrap() > 0.0);
        assert!(pi_shift(Family::Quartic, 1).unwrap() < 0.0);
    }

    #[test]
    fn corrected_action_satisfies_condition() {
        for f in CORRECTED {
            for n in 0..10 {
                let w = action(f, pi_level(f, n).unwrap()).unwrap();
                assert!((w.cos() - pi_cos_target(f, n).unwrap()).abs() < 1e-12, "{f} n={n}");
            }
        }
    }

    #[test]
    fn corrections_shrink_with_n() {
        for f in CORRECTED {
            let gaps: Vec<f64> = (0..10).map(|n| (pi_level(f, n).unwrap() - wkb_level(f, n).unwrap()).abs()).collect();
            let targets: Vec<f64> = (0..10).map(|n| pi_cos_target(f, n).unwrap().abs()).collect();
            for n in 1..10 {
                // Once the shift drops below double precision both levels coincide.
                let roundoff = 4.0 * f64::EPSILON * wkb_level(f, n).unwrap();
                assert!(gaps[n] < gaps[n - 1] || gaps[n - 1] <= roundoff, "{f} n={n}: {gaps:?}");
                assert!(targets[n] < targets[n - 1], "{f} n={n}");
            }
        }
    }

    #[test]
    fn sign_patterns() {
        for n in 0..5 {
            assert!(pi_cos_target(Family::Quartic, n).unwrap() < 0.0);
            assert!(pi_cos_target(Family::PtCubic, n).unwrap() < 0.0);
        }
        let sextic: Vec<bool> = (0..5).map(|n| pi_cos_target(Family::Sextic, n).unwrap() > 0.0).collect();
        assert_eq!(sextic, vec![false, true, true, false, false]);
    }

    #[test]
    fn quartic_ground_cos_is_minus_exp() {
        let want = -(-PI / 2.0).exp();
        assert!((want + 0.207880).abs() < 5e-7);
        assert!((pi_cos_target(Family::Quartic, 0).unwrap() - want).abs() < 1e-15);
    }

    #[test]
    fn stokes_estimates() {
        let q = stokes_estimate(Family::Quartic, 0).unwrap();
        assert!(q.s.re == 0.0 && (q.s.im - 1.021607).abs() < 1e-6);
        assert!((q.excess - (-PI).exp() / 2.0).abs() < 1e-16);
        assert!((stokes_estimate(Family::Quartic, 9).unwrap().s - I).norm() < 1e-8);
        let s = stokes_estimate(Family::Sextic, 0).unwrap();
        assert_eq!(s.s, I);
        assert!((s.order_remainder - (-3f64.sqrt() * PI / 2.0).exp()).abs() < 1e-15);
        for f in CORRECTED {
            let gaps: Vec<f64> = (0..=10).map(|n| (stokes_estimate(f, n).unwrap().s - I).norm()).collect();
            assert!(gaps[10] <= gaps[0]);
        }
        assert!(stokes_estimate(Family::Weber, 0).is_err());
    }

    #[test]
    fn self_consistent_mode_differs_slightly() {
        let a = pi_level(Family::Quartic, 0).unwrap();
        let b = pi_level_self_consistent(Family::Quartic, 0).unwrap();
        assert!(a != b && (a - b).abs() < 0.05);
        let w = action(Family::Quartic, b).unwrap();
        assert!((w.cos() - correction_rhs(Family::Quartic, w).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn weber_table_is_exact() {
        let t = level_table(Family::Weber, 2, Some(&OracleConfig::default())).unwrap();
        assert!(t.oracle_error.is_none());
        for r in &t.rows {
            let k = (2 * r.n + 1) as f64;
            assert!((r.e_wkb - k).abs() < 1e-13 && (r.e_pi - k).abs() < 1e-13);
            assert!((r.e_exact.unwrap() - k).abs() < 1e-5);
            assert_eq!(r.cos_w, 0.0);
        }
    }

    #[test]
    fn oracle_failure_is_flagged_not_fatal() {
        let cfg = OracleConfig { energy_scan_max: 2.0, ..OracleConfig::default() };
        let t = level_table(Family::PtCubic, 2, Some(&cfg)).unwrap();
        assert!(t.oracle_error.is_some());
        assert!(t.rows.iter().all(|r| r.e_exact.is_none()));
        assert!(level_table(Family::Budden, 2, None).is_err());
    }
}
