use crate::error::{Error, Result};

const MAX_ITER: usize = 200;

/// Brent's method on a sign-changing bracket `[lo, hi]`.
pub fn find_root_bracketed<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() || fa.is_nan() || fb.is_nan() {
        return Err(Error::NoSignChange { lo, hi, f_lo: fa, f_hi: fb });
    }
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for iter in 0..MAX_ITER {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let m = 0.5 * (c - b);
        if m.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol1 * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = d;
            }
        } else {
            d = m;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(m) };
        fb = f(b);
        if iter + 1 == MAX_ITER {
            break;
        }
    }
    Err(Error::NonConvergence { estimate: (c - b).abs(), tol, evaluations: MAX_ITER + 2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn finds_simple_roots() {
        let r = find_root_bracketed(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-13);
        let r = find_root_bracketed(|x| x.cos() - x, 0.0, 1.0, 1e-14).unwrap();
        assert!((r - 0.739_085_133_215_160_6).abs() < 1e-13);
    }

    #[test]
    fn textbook_brackets() {
        let r = find_root_bracketed(f64::cos, 1.0, 2.0, 1e-12).unwrap();
        assert!((r - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
        let r = find_root_bracketed(|x| x * x * x - 2.0, 1.0, 2.0, 1e-12).unwrap();
        assert!((r - 2f64.cbrt()).abs() < 1e-12);
    }

    #[test]
    fn rejects_bracket_without_sign_change() {
        let r = find_root_bracketed(|x| x * x + 1.0, -1.0, 1.0, 1e-12);
        assert!(matches!(r, Err(Error::NoSignChange { .. })));
    }

    #[test]
    fn endpoint_root_is_returned() {
        assert_eq!(find_root_bracketed(|x| x - 1.0, 1.0, 3.0, 1e-12).unwrap(), 1.0);
    }

    proptest! {
        #[test]
        fn cubic_roots(root in -10.0f64..10.0, k in 0.1f64..5.0) {
            let f = |x: f64| k * (x - root) * ((x - root).powi(2) + 1.0);
            let r = find_root_bracketed(f, root - 7.3, root + 3.1, 1e-13).unwrap();
            prop_assert!((r - root).abs() < 1e-10);
        }

        #[test]
        fn result_sits_on_a_sign_change(a in -3.0f64..-0.1, b in 0.1f64..3.0, shift in -0.09f64..0.09) {
            let f = |x: f64| (x - shift).sinh() + 0.3 * (x - shift);
            let r = find_root_bracketed(f, a, b, 1e-12).unwrap();
            prop_assert!(r >= a && r <= b);
            let step = 4e-12;
            prop_assert!(f(r - step) <= 0.0 && f(r + step) >= 0.0);
        }
    }
}
