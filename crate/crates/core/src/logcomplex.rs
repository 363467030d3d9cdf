//! Log-polar representation of complex values: exp(log_mod + i·arg).
//! Keeps products, quotients, and powers finite far beyond f64 range;
//! the evaluation backbone for exp-polynomial models and derivative quotients.

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogComplex {
    log_mod: f64,
    arg: f64,
}

impl LogComplex {
    pub fn new(log_mod: f64, arg: f64) -> Self {
        LogComplex { log_mod, arg }
    }

    pub fn one() -> Self {
        LogComplex { log_mod: 0.0, arg: 0.0 }
    }

    /// The zero value: log modulus −∞.
    pub fn zero() -> Self {
        LogComplex { log_mod: f64::NEG_INFINITY, arg: 0.0 }
    }

    pub fn from_complex(z: Complex64) -> Self {
        if z.norm_sqr() == 0.0 {
            return LogComplex::zero();
        }
        LogComplex { log_mod: z.norm().ln(), arg: z.arg() }
    }

    pub fn log_mod(&self) -> f64 {
        self.log_mod
    }

    pub fn arg(&self) -> f64 {
        self.arg
    }

    pub fn is_zero(&self) -> bool {
        self.log_mod == f64::NEG_INFINITY
    }

    pub fn recip(&self) -> Self {
        LogComplex { log_mod: -self.log_mod, arg: -self.arg }
    }

    pub fn powi(&self, k: i32) -> Self {
        LogComplex { log_mod: self.log_mod * k as f64, arg: self.arg * k as f64 }
    }

    /// Convert back to a Complex64; None when the modulus overflows.
    pub fn try_to_complex(&self) -> Option<Complex64> {
        if self.is_zero() {
            return Some(Complex64::new(0.0, 0.0));
        }
        if self.log_mod > 709.0 {
            return None;
        }
        let m = self.log_mod.exp();
        Some(Complex64::new(m * self.arg.cos(), m * self.arg.sin()))
    }

    pub fn to_complex(&self, context: &str) -> Result<Complex64> {
        self.try_to_complex()
            .ok_or_else(|| Error::Overflow(format!("{context}: log modulus {:.3}", self.log_mod)))
    }
}

impl std::ops::Mul for LogComplex {
    type Output = LogComplex;
    fn mul(self, rhs: LogComplex) -> LogComplex {
        if self.is_zero() || rhs.is_zero() {
            return LogComplex::zero();
        }
        LogComplex { log_mod: self.log_mod + rhs.log_mod, arg: self.arg + rhs.arg }
    }
}

impl std::ops::Div for LogComplex {
    type Output = LogComplex;
    fn div(self, rhs: LogComplex) -> LogComplex {
        if self.is_zero() {
            return LogComplex::zero();
        }
        LogComplex { log_mod: self.log_mod - rhs.log_mod, arg: self.arg - rhs.arg }
    }
}
