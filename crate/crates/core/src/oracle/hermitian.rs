use rayon::prelude::*;

use super::sturm::tridiagonal_eigenvalue;
use super::{Eigenvalue, OracleConfig, ACCEPT_RELATIVE};
use crate::error::{Error, Result};
use crate::potentials::Family;

/// Lowest `n_max + 1` eigenvalues of `-ψ'' + x^p ψ` on `[-L, L]` with
/// Dirichlet ends and `intervals` uniform cells (no extrapolation).
pub fn hermitian_levels_raw(family: Family, n_max: usize, half_width: f64, intervals: usize) -> Result<Vec<f64>> {
    let p = match family {
        Family::Weber | Family::Quartic | Family::Sextic => family.power().expect("power") as i32,
        _ => return Err(Error::not_applicable(family, "hermitian_levels")),
    };
    let h = 2.0 * half_width / intervals as f64;
    let inv_h2 = 1.0 / (h * h);
    let diag: Vec<f64> = (1..intervals)
        .map(|i| {
            let x = -half_width + i as f64 * h;
            2.0 * inv_h2 + x.powi(p)
        })
        .collect();
    let off_sq = vec![inv_h2 * inv_h2; intervals - 2];
    Ok((0..=n_max).into_par_iter().map(|k| tridiagonal_eigenvalue(&diag, &off_sq, k)).collect())
}

/// Finite-difference levels on `N` and `2N` cells, Richardson-extrapolated.
pub fn hermitian_levels(family: Family, n_max: usize, config: &OracleConfig) -> Result<Vec<Eigenvalue>> {
    config.validate()?;
    let coarse = hermitian_levels_raw(family, n_max, config.box_half_width, config.grid_points)?;
    let fine = hermitian_levels_raw(family, n_max, config.box_half_width, 2 * config.grid_points)?;
    coarse
        .iter()
        .zip(&fine)
        .enumerate()
        .map(|(n, (c, f))| {
            let estimate = (f - c).abs();
            let value = (4.0 * f - c) / 3.0;
            let threshold = ACCEPT_RELATIVE * value.abs();
            if estimate > threshold {
                return Err(Error::NotConverged { n, estimate, threshold });
            }
            Ok(Eigenvalue { n, value, convergence_estimate: estimate })
        })
        .collect()
}
