//! Rational functions p/q with exact root bookkeeping and the degree at
//! infinity di(p/q) = deg p − deg q.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::logcomplex::LogComplex;
use crate::poly::Polynomial;
use crate::roots::{roots_with_multiplicity, CLUSTER_RADIUS};

#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Validated constructor: denominator nonzero and no common root with the
    /// numerator (within the root-clustering tolerance).
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidConstruction(
                "rational function denominator is identically zero".into(),
            ));
        }
        let rf = RationalFunction { num, den };
        if let (Ok(nr), Ok(dr)) = (rf.numerator_roots(), rf.denominator_roots()) {
            for &(zn, _) in &nr {
                for &(zd, _) in &dr {
                    if (zn - zd).norm() <= CLUSTER_RADIUS * 1.0f64.max(zd.norm()) {
                        return Err(Error::InvalidConstruction(format!(
                            "numerator and denominator share a root near {zn}"
                        )));
                    }
                }
            }
        }
        Ok(rf)
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: Complex64) -> Self {
        RationalFunction::from_polynomial(Polynomial::constant(c))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Fold a constant denominator into the numerator.
    pub fn canonicalized(self) -> Self {
        if self.den.is_constant() && !self.den.is_zero() {
            let c = self.den.constant_term();
            RationalFunction {
                num: self.num.scale(c.inv()),
                den: Polynomial::one(),
            }
        } else {
            self
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::InvalidConstruction("cannot invert the zero function".into()));
        }
        Ok(RationalFunction { num: self.den.clone(), den: self.num.clone() })
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.num.eval(z) / self.den.eval(z)
    }

    pub fn eval_log(&self, z: Complex64) -> LogComplex {
        self.num.eval_log(z) / self.den.eval_log(z)
    }

    /// (p/q)' = (p'q − pq')/q², left unreduced.
    pub fn derivative(&self) -> RationalFunction {
        let num = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        RationalFunction { num, den: self.den.mul(&self.den) }
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
        .canonicalized()
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
        .canonicalized()
    }

    pub fn scale(&self, s: Complex64) -> RationalFunction {
        RationalFunction { num: self.num.scale(s), den: self.den.clone() }
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn numerator_roots(&self) -> Result<Vec<(Complex64, u32)>> {
        if self.num.degree().unwrap_or(0) == 0 {
            return Ok(Vec::new());
        }
        roots_with_multiplicity(&self.num, CLUSTER_RADIUS)
    }

    pub fn denominator_roots(&self) -> Result<Vec<(Complex64, u32)>> {
        if self.den.degree().unwrap_or(0) == 0 {
            return Ok(Vec::new());
        }
        roots_with_multiplicity(&self.den, CLUSTER_RADIUS)
    }

    /// Degree at infinity di = deg p − deg q; None for the zero function.
    pub fn degree_at_infinity(&self) -> Option<i64> {
        let dp = self.num.degree()? as i64;
        let dq = self.den.degree().unwrap_or(0) as i64;
        Some(dp - dq)
    }

    /// di⁺ = max(0, di); 0 for the zero function (absent term).
    pub fn degree_at_infinity_plus(&self) -> i64 {
        self.degree_at_infinity().unwrap_or(0).max(0)
    }

    /// |leading(p)| / |leading(q)|.
    pub fn leading_modulus_ratio(&self) -> f64 {
        if self.num.is_zero() {
            return 0.0;
        }
        self.num.leading().norm() / self.den.leading().norm()
    }
}

/// di and di⁺ of a rational function, per the degree-at-infinity definition.
pub fn degree_at_infinity(r: &RationalFunction) -> (Option<i64>, i64) {
    (r.degree_at_infinity(), r.degree_at_infinity_plus())
}
