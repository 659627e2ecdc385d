/// Number of eigenvalues below `lambda` of the symmetric tridiagonal matrix
/// with diagonal `diag` and off-diagonal squares `off_sq[i] = b_i²`
/// (`b_i` couples rows `i` and `i + 1`).
pub fn sturm_count(diag: &[f64], off_sq: &[f64], lambda: f64) -> usize {
    let mut count = 0;
    let mut d = 1.0;
    for (i, a) in diag.iter().enumerate() {
        let coupling = if i == 0 { 0.0 } else { off_sq[i - 1] / d };
        d = a - lambda - coupling;
        if d == 0.0 {
            d = -f64::EPSILON * (a.abs() + lambda.abs()).max(f64::MIN_POSITIVE);
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `k`-th smallest eigenvalue (from 0) by bisection on the Sturm count.
pub fn tridiagonal_eigenvalue(diag: &[f64], off_sq: &[f64], k: usize) -> f64 {
    // Gershgorin bounds.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (i, a) in diag.iter().enumerate() {
        let left = if i > 0 { off_sq[i - 1].sqrt() } else { 0.0 };
        let right = if i < off_sq.len() { off_sq[i].sqrt() } else { 0.0 };
        lo = lo.min(a - left - right);
        hi = hi.max(a + left + right);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= 4.0 * f64::EPSILON * mid.abs() {
            break;
        }
        if sturm_count(diag, off_sq, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}
