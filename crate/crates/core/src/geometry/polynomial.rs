use crate::error::{Error, Result};
use crate::numerics::Complex;

/// Polynomial with complex coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    pub coeffs: Vec<Complex>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Complex>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&Complex::new(0.0, 0.0)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex::new(c, 0.0)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, z: Complex) -> Complex {
        self.coeffs.iter().rev().fold(Complex::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::new(vec![Complex::new(0.0, 0.0)]);
        }
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * k as f64).collect())
    }

    /// All roots (with repetition) by Durand–Kerner iteration, polished
    /// with Newton steps on simple roots.
    pub fn roots(&self) -> Result<Vec<Complex>> {
        let n = self.degree();
        if n == 0 {
            return Ok(Vec::new());
        }
        let lead = self.coeffs[n];
        if lead == Complex::new(0.0, 0.0) {
            return Err(Error::DegenerateLeadingCoefficient);
        }
        let monic: Vec<Complex> = self.coeffs.iter().map(|c| c / lead).collect();
        let bound = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
        let seed = Complex::new(0.4, 0.9);
        let mut z: Vec<Complex> = (0..n).map(|k| seed.powu(k as u32) * (0.5 * bound)).collect();
        let p = |x: Complex| monic.iter().rev().fold(Complex::new(0.0, 0.0), |acc, c| acc * x + c);
        for _ in 0..2000 {
            let mut change: f64 = 0.0;
            for i in 0..n {
                let mut denom = Complex::new(1.0, 0.0);
                for j in 0..n {
                    if i != j {
                        denom *= z[i] - z[j];
                    }
                }
                if denom == Complex::new(0.0, 0.0) {
                    z[i] += Complex::new(1e-8, 1e-8) * bound;
                    change = f64::INFINITY;
                    continue;
                }
                let step = p(z[i]) / denom;
                z[i] -= step;
                change = change.max(step.norm());
            }
            if change <= 1e-15 * bound {
                break;
            }
        }
        Ok(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity() {
        let p = Polynomial::from_real(&[-1.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        let roots = p.roots().unwrap();
        assert_eq!(roots.len(), 5);
        for r in roots {
            assert!((r.powu(5) - 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn double_root_is_found_twice() {
        // (z - 1)²(z + 2)
        let p = Polynomial::from_real(&[2.0, -3.0, 0.0, 1.0]);
        let mut roots = p.roots().unwrap();
        roots.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!((roots[0] + 2.0).norm() < 1e-10);
        assert!((roots[1] - 1.0).norm() < 1e-6 && (roots[2] - 1.0).norm() < 1e-6);
    }

    #[test]
    fn derivative_and_trailing_zeros() {
        let p = Polynomial::from_real(&[1.0, 2.0, 3.0, 0.0, 0.0]);
        assert_eq!(p.degree(), 2);
        assert_eq!(p.derivative(), Polynomial::from_real(&[2.0, 6.0]));
        assert!(Polynomial::from_real(&[4.0]).roots().unwrap().is_empty());
    }
}
