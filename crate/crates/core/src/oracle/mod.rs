//! Brute-force eigenvalue solvers used as the reference ("exact") column.

mod hermitian;
mod pt_cubic;
mod sturm;

use serde::{Deserialize, Serialize};

pub use hermitian::{hermitian_levels, hermitian_levels_raw};
pub use pt_cubic::{pt_cubic_levels, pt_residual, pt_wronskian};
pub use sturm::{sturm_count, tridiagonal_eigenvalue};

use crate::error::{Error, Result};
use crate::potentials::Family;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleConfig {
    /// Half-width `L` of the box `[-L, L]` (finite differences) or the
    /// shooting start point `x = L`.
    pub box_half_width: f64,
    /// Number of finite-difference intervals on the coarse grid.
    pub grid_points: usize,
    /// RK4 step for the PT shooting.
    pub shooting_step: f64,
    /// Upper end of the PT energy scan.
    pub energy_scan_max: f64,
    /// Energy scan spacing for the PT shooting.
    pub scan_step: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { box_half_width: 10.0, grid_points: 8000, shooting_step: 1e-3, energy_scan_max: 60.0, scan_step: 0.05 }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if !(self.box_half_width > 0.0) {
            return bad(format!("box half-width must be positive, got {}", self.box_half_width));
        }
        if self.grid_points < 16 {
            return bad(format!("grid_points must be at least 16, got {}", self.grid_points));
        }
        if !(self.shooting_step > 0.0) || self.shooting_step > 1e-3 * self.box_half_width {
            return bad(format!(
                "shooting step must lie in (0, 1e-3·L] = (0, {}], got {}",
                1e-3 * self.box_half_width,
                self.shooting_step
            ));
        }
        if !(self.energy_scan_max > 0.0) || !(self.scan_step > 0.0) {
            return bad("energy scan bounds must be positive".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Eigenvalue {
    pub n: usize,
    pub value: f64,
    /// `|E(refined) - E(coarse)|` between the two refinement levels.
    pub convergence_estimate: f64,
}

/// Relative refinement difference above which a level is rejected.
pub const ACCEPT_RELATIVE: f64 = 5e-4;

/// Lowest `n_max + 1` levels of any family with bound states.
pub fn levels(family: Family, n_max: usize, config: &OracleConfig) -> Result<Vec<Eigenvalue>> {
    match family {
        Family::Weber | Family::Quartic | Family::Sextic => hermitian_levels(family, n_max, config),
        Family::PtCubic => pt_cubic_levels(n_max, config),
        Family::Budden => Err(Error::not_applicable(family, "eigenvalue oracle")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Refinement {
    /// Grid intervals (finite differences) or RK4 step (shooting).
    pub refinement: f64,
    pub value: f64,
}

/// Un-extrapolated level `n` at three successive refinements, coarsest first.
///
/// Finite differences use `N/4, N/2, N` intervals; the PT shooting uses steps
/// `4h, 2h, h`.
pub fn convergence_report(family: Family, n: usize, config: &OracleConfig) -> Result<Vec<Refinement>> {
    config.validate()?;
    match family {
        Family::Weber | Family::Quartic | Family::Sextic => [4, 2, 1]
            .iter()
            .map(|div| {
                let grid = (config.grid_points / div).max(16);
                let value = hermitian_levels_raw(family, n, config.box_half_width, grid)?[n];
                Ok(Refinement { refinement: grid as f64, value })
            })
            .collect(),
        Family::PtCubic => {
            let coarse = pt_cubic_levels(n, config)?[n].value;
            [4.0, 2.0, 1.0]
                .iter()
                .map(|mult| {
                    let h = config.shooting_step * mult;
                    let value = pt_cubic::refine_level(coarse, h, config)?;
                    Ok(Refinement { refinement: h, value })
                })
                .collect()
        }
        Family::Budden => Err(Error::not_applicable(family, "convergence_report")),
    }
}
