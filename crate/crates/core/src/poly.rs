//! Complex polynomials: arithmetic, Horner evaluation, and a log-scale
//! evaluation path that stays finite for |z| far beyond the overflow range.

use num_complex::Complex64;

use crate::logcomplex::LogComplex;

/// Polynomial with complex coefficients, lowest degree first.
/// The zero polynomial is the empty coefficient list; otherwise the leading
/// (highest-degree) coefficient is nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while let Some(c) = coeffs.last() {
            if c.norm_sqr() == 0.0 {
                coeffs.pop();
            } else {
                break;
            }
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Complex64) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn one() -> Self {
        Polynomial::constant(Complex64::new(1.0, 0.0))
    }

    /// c·z^k
    pub fn monomial(c: Complex64, k: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        Polynomial::new(coeffs)
    }

    /// ∏ (z − rᵢ), expanded; the reconstruction oracle for the root finder.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut p = Polynomial::one();
        for &r in roots {
            p = p.mul(&Polynomial::new(vec![-r, Complex64::new(1.0, 0.0)]));
        }
        p
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs.last().copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Constant term (value at 0).
    pub fn constant_term(&self) -> Complex64 {
        self.coeffs.first().copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Evaluation in log-polar form, finite for any |z|: for |z| > 1 the
    /// polynomial is evaluated as z^d·p̃(1/z) so no intermediate overflows.
    pub fn eval_log(&self, z: Complex64) -> LogComplex {
        if self.coeffs.is_empty() {
            return LogComplex::zero();
        }
        let d = self.coeffs.len() - 1;
        if z.norm() <= 1.0 || d == 0 {
            return LogComplex::from_complex(self.eval(z));
        }
        let u = z.inv();
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter() {
            acc = acc * u + c;
        }
        LogComplex::from_complex(z).powi(d as i32) * LogComplex::from_complex(acc)
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Polynomial::new(coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&c| -c).collect())
    }

    pub fn scale(&self, s: Complex64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs =
            vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }

    pub fn powi(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Σ|cᵢ|·|z|^i, the natural residual scale at z.
    pub fn scale_at(&self, z_abs: f64) -> f64 {
        let mut acc = 0.0;
        let mut p = 1.0;
        for &c in &self.coeffs {
            acc += c.norm() * p;
            p *= z_abs;
        }
        acc
    }
}

#[cfg(test)]
mod test {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn trims_leading_zeros() {
        let p = Polynomial::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(p.degree(), Some(1));
        assert!(Polynomial::new(vec![c(0.0, 0.0)]).is_zero());
    }

    #[test]
    fn horner_matches_direct() {
        // p(z) = 1 + 2z + 3z²  at z = 2+i: 1 + 2(2+i) + 3(3+4i) = 14 + 14i
        let p = Polynomial::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)]);
        let v = p.eval(c(2.0, 1.0));
        assert!((v - c(14.0, 14.0)).norm() < 1e-12);
    }

    #[test]
    fn log_eval_agrees_with_direct_in_range() {
        let p = Polynomial::new(vec![c(1.0, -1.0), c(0.5, 2.0), c(3.0, 0.0), c(0.0, 1.0)]);
        for &z in &[c(0.3, -0.2), c(2.0, 5.0), c(-30.0, 40.0)] {
            let direct = p.eval(z);
            let viewed = p.eval_log(z);
            assert!(
                (viewed.log_mod() - direct.norm().ln()).abs() < 1e-10,
                "modulus mismatch at {z}"
            );
            let diff = (viewed.arg() - direct.arg()).rem_euclid(std::f64::consts::TAU);
            assert!(diff < 1e-10 || diff > std::f64::consts::TAU - 1e-10);
        }
    }

    #[test]
    fn log_eval_survives_huge_arguments() {
        // z^6 at |z| = 1e60 overflows direct evaluation; the log path must not.
        let p = Polynomial::monomial(c(2.0, 0.0), 6);
        let v = p.eval_log(c(1e60, 0.0));
        assert!((v.log_mod() - (2f64.ln() + 6.0 * 1e60f64.ln())).abs() < 1e-6);
    }

    #[test]
    fn derivative_rule() {
        // d/dz (1 + 2z + 3z²) = 2 + 6z
        let p = Polynomial::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)]);
        assert_eq!(p.derivative(), Polynomial::new(vec![c(2.0, 0.0), c(6.0, 0.0)]));
    }

    #[test]
    fn from_roots_expands() {
        // (z−1)(z+1) = z² − 1
        let p = Polynomial::from_roots(&[c(1.0, 0.0), c(-1.0, 0.0)]);
        assert_eq!(
            p,
            Polynomial::new(vec![c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)])
        );
    }
}
