use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::Serialize;

use super::Complex;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: Complex,
    pub error_estimate: f64,
    pub evaluations: usize,
}

const MAX_PANELS: usize = 4000;

// 15-point Kronrod abscissae; odd indices are the embedded 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

struct Panel {
    a: f64,
    b: f64,
    value: Complex,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod15<F: FnMut(f64) -> Complex>(f: &mut F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let sum = f(center - dx) + f(center + dx);
        kronrod += sum * WGK[j];
        if j % 2 == 1 {
            gauss += sum * WG[j / 2];
        }
    }
    Panel {
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).norm(),
    }
}

/// Adaptive Gauss–Kronrod (7/15) quadrature of a complex-valued integrand.
///
/// Panels are bisected in order of decreasing error estimate until the sum of
/// estimates drops below `tol`. Only interior nodes are sampled, so
/// integrable endpoint singularities of inverse-square-root type are allowed.
pub fn quad_adaptive<F>(mut f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> Complex,
{
    if !(a < b) || !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "quadrature needs a < b and tol > 0 (got a = {a}, b = {b}, tol = {tol})"
        )));
    }
    let mut heap = BinaryHeap::new();
    let first = kronrod15(&mut f, a, b);
    let mut evaluations = 15;
    let mut error = first.error;
    heap.push(first);
    // Panels too narrow to split further are parked here.
    let mut frozen: Vec<Panel> = Vec::new();
    let min_width = (b - a) * 1e-15;

    while error > tol {
        if heap.len() + frozen.len() >= MAX_PANELS {
            return Err(Error::NonConvergence { estimate: error, tol, evaluations });
        }
        let Some(worst) = heap.pop() else { break };
        if worst.b - worst.a < min_width {
            frozen.push(worst);
            continue;
        }
        let mid = 0.5 * (worst.a + worst.b);
        let left = kronrod15(&mut f, worst.a, mid);
        let right = kronrod15(&mut f, mid, worst.b);
        evaluations += 30;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum from scratch so the running updates do not accumulate rounding.
    let mut value = Complex::new(0.0, 0.0);
    let mut err = 0.0;
    for p in heap.iter().chain(frozen.iter()) {
        value += p.value;
        err += p.error;
    }
    if err > tol {
        return Err(Error::NonConvergence { estimate: err, tol, evaluations });
    }
    Ok(QuadratureResult { value, error_estimate: err, evaluations })
}

/// Real-integrand convenience wrapper around [`quad_adaptive`].
pub fn quad_adaptive_real<F>(mut f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> f64,
{
    quad_adaptive(|x| Complex::new(f(x), 0.0), a, b, tol)
}

const GL5_X: [f64; 5] = [
    -0.906179845938663992797626878299392,
    -0.538469310105683091036314420700208,
    0.0,
    0.538469310105683091036314420700208,
    0.906179845938663992797626878299392,
];
const GL5_W: [f64; 5] = [
    0.236926885056189087514264040719917,
    0.478628670499366468041291514835638,
    0.568888888888888888888888888888889,
    0.478628670499366468041291514835638,
    0.236926885056189087514264040719917,
];

/// Fixed five-point Gauss–Legendre rule for `∫ f(z) dz` along the straight
/// segment `z0 → z1` in the complex plane.
pub fn gauss_legendre_segment<F>(mut f: F, z0: Complex, z1: Complex) -> Complex
where
    F: FnMut(Complex) -> Complex,
{
    let mid = (z0 + z1) * 0.5;
    let half = (z1 - z0) * 0.5;
    let mut acc = Complex::new(0.0, 0.0);
    for (x, w) in GL5_X.iter().zip(GL5_W.iter()) {
        acc += f(mid + half * *x) * *w;
    }
    acc * half
}
