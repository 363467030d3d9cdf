//! The closed family of meromorphic test functions.
//!
//! Every model can be evaluated exactly (in log scale when values overflow),
//! differentiated to any order up to [`MAX_DERIVATIVE_ORDER`] by symbolic
//! rules, and asked for the complete list of its poles or a-points inside a
//! disc. Keeping the family closed is what makes the integrated counting
//! function exact rather than numerically estimated.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::logcomplex::LogComplex;
use crate::poly::Polynomial;
use crate::rational::RationalFunction;
use crate::roots::roots_with_multiplicity;
use crate::roots::CLUSTER_RADIUS;

/// Highest derivative order supported by the symbolic tables.
pub const MAX_DERIVATIVE_ORDER: u32 = 8;

/// Evaluation guard: points closer than this to a pole are rejected by the
/// direct-value API (log-scale evaluation has no guard and saturates instead).
pub fn pole_guard(z_norm: f64) -> f64 {
    1e-9 * z_norm.max(1.0)
}

/// Relative tolerance for deciding that a candidate pole or zero sits exactly
/// on the boundary circle of a queried disc.
const BOUNDARY_TOL: f64 = 1e-9;

fn binomial(n: u32, k: u32) -> f64 {
    let k = k.min(n - k.min(n));
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// tan(w) computed from e^{±2iw} so that neither branch overflows: the
/// exponential with non-positive real part is always the one formed.
fn stable_tan(w: Complex64) -> Complex64 {
    let i = Complex64::i();
    if w.im >= 0.0 {
        let u = (2.0 * i * w).exp();
        i * (Complex64::new(1.0, 0.0) - u) / (Complex64::new(1.0, 0.0) + u)
    } else {
        let v = (-2.0 * i * w).exp();
        -i * (Complex64::new(1.0, 0.0) - v) / (Complex64::new(1.0, 0.0) + v)
    }
}

/// Derivative tables for tan: d^k/dw^k tan(w) = P_k(tan w), with
/// P_0 = t and P_{k+1} = (1+t²)·P_k'. Shared by every tan-type model.
fn tan_derivative_polys() -> &'static Vec<Polynomial> {
    use std::sync::OnceLock;
    static TABLES: OnceLock<Vec<Polynomial>> = OnceLock::new();
    TABLES.get_or_init(|| {
        let one_plus_t2 = Polynomial::new(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        ]);
        let mut tables = Vec::with_capacity(MAX_DERIVATIVE_ORDER as usize + 1);
        tables.push(Polynomial::monomial(Complex64::new(1.0, 0.0), 1));
        for k in 0..MAX_DERIVATIVE_ORDER as usize {
            let next = one_plus_t2.mul(&tables[k].derivative());
            tables.push(next);
        }
        tables
    })
}

/// The same tables with one factor of 1+t² divided out: entry k ≥ 1 holds
/// P_k/(1+t²) = P_{k−1}', which is nonzero at t = ±i. Entry 0 is unused
/// (P_0 = t has no such factor) and kept as 1 to align the indices.
fn tan_reduced_derivative_polys() -> &'static Vec<Polynomial> {
    use std::sync::OnceLock;
    static TABLES: OnceLock<Vec<Polynomial>> = OnceLock::new();
    TABLES.get_or_init(|| {
        let full = tan_derivative_polys();
        let mut tables = Vec::with_capacity(full.len());
        tables.push(Polynomial::one());
        for k in 1..full.len() {
            tables.push(full[k - 1].derivative());
        }
        tables
    })
}

/// Numerator recurrence for repeated differentiation of (p/q)·exp(Q):
/// with f^{(k)} = (N_k/q^{k+1})·exp(Q), one has
/// N_{k+1} = N_k'·q − (k+1)·N_k·q' + N_k·q·Q' (drop the last term when
/// there is no exponential factor).
fn derivative_numerators(p: &Polynomial, q: &Polynomial, exponent: Option<&Polynomial>) -> Vec<Polynomial> {
    let qd = q.derivative();
    let qd_exp = exponent.map(|e| q.mul(&e.derivative()));
    let mut tables = Vec::with_capacity(MAX_DERIVATIVE_ORDER as usize + 1);
    tables.push(p.clone());
    for k in 0..MAX_DERIVATIVE_ORDER as usize {
        let nk: &Polynomial = &tables[k];
        let mut next = nk.derivative().mul(q).sub(&nk.mul(&qd).scale(Complex64::new((k + 1) as f64, 0.0)));
        if let Some(extra) = &qd_exp {
            next = next.add(&nk.mul(extra));
        }
        tables.push(next);
    }
    tables
}

/// Rational model p/q with precomputed derivative numerators and root lists.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalModel {
    rf: RationalFunction,
    deriv_numerators: Vec<Polynomial>,
    numerator_roots: Vec<(Complex64, u32)>,
    denominator_roots: Vec<(Complex64, u32)>,
}

impl RationalModel {
    pub fn rational_function(&self) -> &RationalFunction {
        &self.rf
    }
}

/// Model R(z)·exp(Q(z)) with R rational and Q a nonconstant polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpPolyModel {
    rf: RationalFunction,
    exponent: Polynomial,
    deriv_numerators: Vec<Polynomial>,
    numerator_roots: Vec<(Complex64, u32)>,
    denominator_roots: Vec<(Complex64, u32)>,
}

impl ExpPolyModel {
    pub fn rational_function(&self) -> &RationalFunction {
        &self.rf
    }

    pub fn exponent(&self) -> &Polynomial {
        &self.exponent
    }
}

/// Model tan(a·z + b), a ≠ 0.
#[derive(Debug, Clone, PartialEq)]
pub struct TanLinearModel {
    a: Complex64,
    b: Complex64,
}

impl TanLinearModel {
    pub fn slope(&self) -> Complex64 {
        self.a
    }

    pub fn offset(&self) -> Complex64 {
        self.b
    }
}

/// The closed family of test functions. Constructors canonicalize: a
/// reciprocal or shift of a rational model folds back into a rational model,
/// a reciprocal of R·exp(Q) becomes (1/R)·exp(−Q), and nested reciprocals
/// cancel, so the raw `Reciprocal`/`Shifted` wrappers survive only where the
/// fold would leave the family.
#[derive(Debug, Clone, PartialEq)]
pub enum FunctionModel {
    Rational(RationalModel),
    RationalTimesExpPoly(ExpPolyModel),
    TanLinear(TanLinearModel),
    Reciprocal(Box<FunctionModel>),
    Shifted(Box<FunctionModel>, Complex64),
}

impl FunctionModel {
    pub fn rational(rf: RationalFunction) -> Result<FunctionModel> {
        let rf = rf.canonicalized();
        let numerator_roots = rf.numerator_roots()?;
        let denominator_roots = rf.denominator_roots()?;
        let deriv_numerators = derivative_numerators(rf.numerator(), rf.denominator(), None);
        Ok(FunctionModel::Rational(RationalModel {
            rf,
            deriv_numerators,
            numerator_roots,
            denominator_roots,
        }))
    }

    pub fn rational_times_exp_poly(rf: RationalFunction, exponent: Polynomial) -> Result<FunctionModel> {
        let rf = rf.canonicalized();
        if rf.is_zero() {
            return FunctionModel::rational(rf);
        }
        if exponent.degree().unwrap_or(0) == 0 {
            // exp(const) is a scalar: fold it into the rational part.
            let c = exponent.constant_term().exp();
            return FunctionModel::rational(rf.scale(c));
        }
        let numerator_roots = rf.numerator_roots()?;
        let denominator_roots = rf.denominator_roots()?;
        let deriv_numerators = derivative_numerators(rf.numerator(), rf.denominator(), Some(&exponent));
        Ok(FunctionModel::RationalTimesExpPoly(ExpPolyModel {
            rf,
            exponent,
            deriv_numerators,
            numerator_roots,
            denominator_roots,
        }))
    }

    pub fn tan_linear(a: Complex64, b: Complex64) -> Result<FunctionModel> {
        if a.norm() == 0.0 {
            return Err(Error::InvalidConstruction("tan model requires a nonzero linear coefficient".into()));
        }
        Ok(FunctionModel::TanLinear(TanLinearModel { a, b }))
    }

    pub fn reciprocal(inner: FunctionModel) -> Result<FunctionModel> {
        match inner {
            FunctionModel::Rational(m) => FunctionModel::rational(m.rf.inverse()?),
            FunctionModel::RationalTimesExpPoly(m) => {
                FunctionModel::rational_times_exp_poly(m.rf.inverse()?, m.exponent.neg())
            }
            FunctionModel::Reciprocal(m) => Ok(*m),
            other => Ok(FunctionModel::Reciprocal(Box::new(other))),
        }
    }

    pub fn shifted(inner: FunctionModel, a: Complex64) -> Result<FunctionModel> {
        if a.norm() == 0.0 {
            return Ok(inner);
        }
        match inner {
            FunctionModel::Rational(m) => {
                let shifted = m.rf.add(&RationalFunction::constant(-a));
                FunctionModel::rational(shifted)
            }
            FunctionModel::Shifted(m, b) => FunctionModel::shifted(*m, a + b),
            other => Ok(FunctionModel::Shifted(Box::new(other), a)),
        }
    }

    /// The identity function z.
    pub fn identity() -> FunctionModel {
        FunctionModel::from_polynomial(Polynomial::monomial(Complex64::new(1.0, 0.0), 1))
    }

    pub fn from_polynomial(p: Polynomial) -> FunctionModel {
        FunctionModel::rational(RationalFunction::from_polynomial(p))
            .expect("polynomial models always construct")
    }

    /// exp(zⁿ).
    pub fn exp_monomial(n: u32) -> FunctionModel {
        FunctionModel::rational_times_exp_poly(
            RationalFunction::constant(Complex64::new(1.0, 0.0)),
            Polynomial::monomial(Complex64::new(1.0, 0.0), n as usize),
        )
        .expect("exp(z^n) always constructs")
    }

    /// True when the model is a polynomial (rational with constant denominator).
    pub fn is_polynomial(&self) -> bool {
        matches!(self, FunctionModel::Rational(m) if m.rf.denominator().is_constant())
    }

    /// True when the model is the zero function. Only a rational model can be
    /// identically zero: exp factors never vanish, tan is nonconstant, and
    /// shifts of rational models fold into the rational variant at
    /// construction.
    pub fn is_identically_zero(&self) -> bool {
        matches!(self, FunctionModel::Rational(m) if m.rf.is_zero())
    }

    /// Multiply by a nonzero constant, staying in the family. Fails for tan
    /// models, which admit no scalar multiple within the family.
    pub fn scale(&self, c: Complex64) -> Result<FunctionModel> {
        if c.norm() == 0.0 {
            return Err(Error::InvalidConstruction("cannot scale a model by zero".into()));
        }
        match self {
            FunctionModel::Rational(m) => FunctionModel::rational(m.rf.scale(c)),
            FunctionModel::RationalTimesExpPoly(m) => {
                FunctionModel::rational_times_exp_poly(m.rf.scale(c), m.exponent.clone())
            }
            FunctionModel::TanLinear(_) => {
                if (c - Complex64::new(1.0, 0.0)).norm() <= 1e-12 {
                    Ok(self.clone())
                } else {
                    Err(Error::Unsupported(
                        "scalar multiples of a tan model leave the function family".into(),
                    ))
                }
            }
            FunctionModel::Reciprocal(m) => FunctionModel::reciprocal(m.scale(c.inv())?),
            FunctionModel::Shifted(m, a) => FunctionModel::shifted(m.scale(c)?, a * c),
        }
    }

    /// Rescale so that f(0) = 1 (required by bounds that fix the origin
    /// value). Errors when the origin is a pole or zero, or when the model
    /// admits no scalar multiple inside the family.
    pub fn normalize_at_origin(&self) -> Result<FunctionModel> {
        let at0 = self.log_eval(Complex64::new(0.0, 0.0));
        if !at0.log_mod().is_finite() {
            return Err(Error::NormalizationError(
                "the origin is a pole or zero of the model, so f(0) = 1 cannot be arranged".into(),
            ));
        }
        let f0 = at0
            .try_to_complex()
            .ok_or_else(|| Error::NormalizationError("origin value too large to represent".into()))?;
        if (f0 - Complex64::new(1.0, 0.0)).norm() <= 1e-12 {
            return Ok(self.clone());
        }
        self.scale(f0.inv()).map_err(|_| {
            Error::NormalizationError(
                "tan models cannot be rescaled within the family; choose the offset so tan(b) = 1".into(),
            )
        })
    }

    /// Log-scale evaluation: total away from exact poles and zeros, immune to
    /// overflow (for R·exp(Q) the exponential contributes Re Q to the log
    /// modulus and Im Q to the argument). At an exact pole or zero the log
    /// modulus saturates to ±∞.
    pub fn log_eval(&self, z: Complex64) -> LogComplex {
        match self {
            FunctionModel::Rational(m) => m.rf.eval_log(z),
            FunctionModel::RationalTimesExpPoly(m) => {
                let q = m.exponent.eval(z);
                m.rf.eval_log(z) * LogComplex::new(q.re, q.im)
            }
            FunctionModel::TanLinear(m) => LogComplex::from_complex(stable_tan(m.a * z + m.b)),
            FunctionModel::Reciprocal(m) => m.log_eval(z).recip(),
            FunctionModel::Shifted(m, a) => {
                let lf = m.log_eval(z);
                let la = a.norm().ln();
                if lf.log_mod() > la + 40.0 {
                    // |f| dwarfs |a|: the shift is below double rounding.
                    lf
                } else if la > lf.log_mod() + 40.0 {
                    LogComplex::from_complex(-a)
                } else {
                    match lf.try_to_complex() {
                        Some(f) => LogComplex::from_complex(f - a),
                        None => lf,
                    }
                }
            }
        }
    }

    /// log|f(z)|, the quadrature integrand. ±∞ sentinels at exact poles and
    /// zeros; the caller re-samples rather than consuming them.
    pub fn log_abs(&self, z: Complex64) -> f64 {
        self.log_eval(z).log_mod()
    }

    /// Direct complex evaluation. Guarded: within [`pole_guard`] of a pole
    /// this refuses with `PoleProximity`, and values beyond double range
    /// report `Overflow` (use [`FunctionModel::log_eval`] instead).
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let guard = pole_guard(z.norm());
        let dist = self.nearest_pole_distance(z);
        if dist <= guard {
            return Err(Error::PoleProximity(format!(
                "point {z} lies within {guard:.3e} of a pole (distance {dist:.3e})"
            )));
        }
        self.log_eval(z).to_complex("function value")
    }

    /// Normalized derivative vector [f⁽⁰⁾/f, f'/f, …, f⁽ᵏ⁾/f] at z. Entry 0
    /// is 1 by construction. Values may be non-finite at exact zeros or poles
    /// of intermediate models; callers sampling on nudged grids never land
    /// there.
    pub fn normalized_derivatives(&self, z: Complex64, k_max: u32) -> Result<Vec<Complex64>> {
        if k_max > MAX_DERIVATIVE_ORDER {
            return Err(Error::OrderTooLarge { requested: k_max, max: MAX_DERIVATIVE_ORDER });
        }
        let n = k_max as usize;
        let one = Complex64::new(1.0, 0.0);
        Ok(match self {
            FunctionModel::Rational(m) => {
                let pv = m.rf.numerator().eval(z);
                let qv = m.rf.denominator().eval(z);
                (0..=n)
                    .map(|k| m.deriv_numerators[k].eval(z) / (pv * qv.powi(k as i32)))
                    .collect()
            }
            FunctionModel::RationalTimesExpPoly(m) => {
                let pv = m.rf.numerator().eval(z);
                let qv = m.rf.denominator().eval(z);
                (0..=n)
                    .map(|k| m.deriv_numerators[k].eval(z) / (pv * qv.powi(k as i32)))
                    .collect()
            }
            FunctionModel::TanLinear(m) => {
                let t = stable_tan(m.a * z + m.b);
                let tables = tan_derivative_polys();
                (0..=n)
                    .map(|k| m.a.powi(k as i32) * tables[k].eval(t) / t)
                    .collect()
            }
            FunctionModel::Reciprocal(inner) => {
                let v = inner.normalized_derivatives(z, k_max)?;
                let mut u = vec![one; n + 1];
                for k in 1..=n {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for i in 0..k {
                        acc += binomial(k as u32, i as u32) * u[i] * v[k - i];
                    }
                    u[k] = -acc;
                }
                u
            }
            FunctionModel::Shifted(inner, a) => {
                let v = inner.normalized_derivatives(z, k_max)?;
                // (f−a)^{(k)}/(f−a) = (f^{(k)}/f)·(f/(f−a)) for k ≥ 1; the
                // ratio f/(f−a) is formed from whichever of a/f, f/a is small.
                let lf = inner.log_eval(z);
                let la = a.norm().ln();
                let factor = if lf.log_mod() >= la {
                    let ratio = (LogComplex::from_complex(*a) / lf)
                        .try_to_complex()
                        .unwrap_or(Complex64::new(0.0, 0.0));
                    one / (one - ratio)
                } else {
                    let s = (lf / LogComplex::from_complex(*a))
                        .try_to_complex()
                        .unwrap_or(Complex64::new(0.0, 0.0));
                    s / (s - one)
                };
                let mut u = vec![one; n + 1];
                for k in 1..=n {
                    u[k] = v[k] * factor;
                }
                u
            }
        })
    }

    /// Log-scale derivative quotient f⁽ᵏ⁾(z)/f⁽ʲ⁾(z), k ≥ j. For rational and
    /// exp-polynomial models this is an exact ratio of the symbolic numerator
    /// tables, so it stays finite arbitrarily close to poles of f.
    pub fn derivative_quotient_log(&self, z: Complex64, k: u32, j: u32) -> Result<LogComplex> {
        if k < j {
            return Err(Error::OrderError { k, j });
        }
        if k > MAX_DERIVATIVE_ORDER {
            return Err(Error::OrderTooLarge { requested: k, max: MAX_DERIVATIVE_ORDER });
        }
        match self {
            FunctionModel::Rational(m) => {
                let nk = m.deriv_numerators[k as usize].eval_log(z);
                let nj = m.deriv_numerators[j as usize].eval_log(z);
                let qv = m.rf.denominator().eval_log(z);
                Ok(nk / (nj * qv.powi((k - j) as i32)))
            }
            FunctionModel::RationalTimesExpPoly(m) => {
                let nk = m.deriv_numerators[k as usize].eval_log(z);
                let nj = m.deriv_numerators[j as usize].eval_log(z);
                let qv = m.rf.denominator().eval_log(z);
                Ok(nk / (nj * qv.powi((k - j) as i32)))
            }
            FunctionModel::TanLinear(m) => {
                let t = stable_tan(m.a * z + m.b);
                let scale = LogComplex::from_complex(m.a).powi((k - j) as i32);
                let tables = tan_derivative_polys();
                if j == 0 {
                    let pk = tables[k as usize].eval_log(t);
                    let pj = tables[0].eval_log(t);
                    return Ok(scale * pk / pj);
                }
                // For k ≥ j ≥ 1 both P_k and P_j carry one exact factor of
                // 1+t², which vanishes on whole arcs of large circles where
                // tan rounds to ±i. Cancel it symbolically: P_k/(1+t²) is
                // P_{k−1}' by the recurrence, and P_{k−1}'(±i) ≠ 0.
                let reduced = tan_reduced_derivative_polys();
                let rk = reduced[k as usize].eval_log(t);
                let rj = reduced[j as usize].eval_log(t);
                Ok(scale * rk / rj)
            }
            _ => {
                let u = self.normalized_derivatives(z, k)?;
                Ok(LogComplex::from_complex(u[k as usize]) / LogComplex::from_complex(u[j as usize]))
            }
        }
    }

    /// k-th derivative value. Order 0 is plain evaluation.
    pub fn eval_derivative(&self, z: Complex64, order: u32) -> Result<Complex64> {
        if order > MAX_DERIVATIVE_ORDER {
            return Err(Error::OrderTooLarge { requested: order, max: MAX_DERIVATIVE_ORDER });
        }
        if order == 0 {
            return self.eval(z);
        }
        let guard = pole_guard(z.norm());
        let dist = self.nearest_pole_distance(z);
        if dist <= guard {
            return Err(Error::PoleProximity(format!(
                "point {z} lies within {guard:.3e} of a pole (distance {dist:.3e})"
            )));
        }
        self.derivative_log(z, order)?.to_complex("derivative value")
    }

    /// k-th derivative in log-polar form, total where possible (no pole
    /// guard): the preferred path for quadrature integrands and differential
    /// polynomial evaluation, where magnitudes overflow doubles.
    pub fn derivative_log(&self, z: Complex64, order: u32) -> Result<LogComplex> {
        if order > MAX_DERIVATIVE_ORDER {
            return Err(Error::OrderTooLarge { requested: order, max: MAX_DERIVATIVE_ORDER });
        }
        if order == 0 {
            return Ok(self.log_eval(z));
        }
        let k = order as usize;
        match self {
            // f = p/q gives f⁽ᵏ⁾ = Nₖ/q^{k+1}, exact even at zeros of p.
            FunctionModel::Rational(m) => {
                let nk = m.deriv_numerators[k].eval_log(z);
                let qv = m.rf.denominator().eval_log(z);
                Ok(nk / qv.powi(order as i32 + 1))
            }
            // f = (p/q)·e^Q gives f⁽ᵏ⁾ = (Nₖ/q^{k+1})·e^Q.
            FunctionModel::RationalTimesExpPoly(m) => {
                let nk = m.deriv_numerators[k].eval_log(z);
                let qv = m.rf.denominator().eval_log(z);
                let w = m.exponent.eval(z);
                let base = nk / qv.powi(order as i32 + 1);
                Ok(LogComplex::new(base.log_mod() + w.re, base.arg() + w.im))
            }
            // dᵏ/dzᵏ tan(az+b) = aᵏ·Pₖ(tan(az+b)).
            FunctionModel::TanLinear(m) => {
                let t = stable_tan(m.a * z + m.b);
                Ok(LogComplex::from_complex(m.a).powi(order as i32)
                    * tan_derivative_polys()[k].eval_log(t))
            }
            // Derivatives of a shift coincide with derivatives of the inner
            // model, so skip the quotient machinery (which degrades at zeros
            // of the shifted function).
            FunctionModel::Shifted(inner, _) => inner.derivative_log(z, order),
            FunctionModel::Reciprocal(_) => {
                let u = self.normalized_derivatives(z, order)?;
                Ok(self.log_eval(z) * LogComplex::from_complex(u[k]))
            }
        }
    }

    /// Distance from z to the nearest pole (+∞ when the model has none or
    /// their locations are not enumerable).
    pub fn nearest_pole_distance(&self, z: Complex64) -> f64 {
        match self {
            FunctionModel::Rational(m) => nearest_in(&m.denominator_roots, z),
            FunctionModel::RationalTimesExpPoly(m) => nearest_in(&m.denominator_roots, z),
            FunctionModel::TanLinear(m) => {
                nearest_lattice_distance(m.a * z + m.b, std::f64::consts::FRAC_PI_2) / m.a.norm()
            }
            FunctionModel::Reciprocal(inner) => inner.nearest_zero_distance(z),
            FunctionModel::Shifted(inner, _) => inner.nearest_pole_distance(z),
        }
    }

    /// Distance from z to the nearest zero (+∞ when not enumerable).
    pub fn nearest_zero_distance(&self, z: Complex64) -> f64 {
        match self {
            FunctionModel::Rational(m) => nearest_in(&m.numerator_roots, z),
            FunctionModel::RationalTimesExpPoly(m) => nearest_in(&m.numerator_roots, z),
            FunctionModel::TanLinear(m) => {
                nearest_lattice_distance(m.a * z + m.b, 0.0) / m.a.norm()
            }
            FunctionModel::Reciprocal(inner) => inner.nearest_pole_distance(z),
            FunctionModel::Shifted(_, _) => f64::INFINITY,
        }
    }

    /// All poles with multiplicity in |z| ≤ r. A pole sitting on the boundary
    /// circle itself (within relative tolerance 1e−9) is an error; nudge r.
    pub fn poles_in_disc(&self, r: f64) -> Result<Vec<(Complex64, u32)>> {
        if !(r > 0.0) {
            return Err(Error::DomainError(format!("disc radius must be positive, got {r}")));
        }
        match self {
            FunctionModel::Rational(m) => filter_disc(&m.denominator_roots, r, "pole"),
            FunctionModel::RationalTimesExpPoly(m) => filter_disc(&m.denominator_roots, r, "pole"),
            FunctionModel::TanLinear(m) => {
                let w0 = Complex64::new(std::f64::consts::FRAC_PI_2, 0.0);
                lattice_in_disc(w0, m.a, m.b, r, "pole")
            }
            FunctionModel::Reciprocal(inner) => inner.zeros_in_disc(Complex64::new(0.0, 0.0), r),
            FunctionModel::Shifted(inner, _) => inner.poles_in_disc(r),
        }
    }

    /// All solutions of f(z) = a with multiplicity in |z| ≤ r. Supported for
    /// every variant and every a except exponential-factor models with a ≠ 0,
    /// whose a-points have no closed enumeration.
    pub fn zeros_in_disc(&self, a: Complex64, r: f64) -> Result<Vec<(Complex64, u32)>> {
        if !(r > 0.0) {
            return Err(Error::DomainError(format!("disc radius must be positive, got {r}")));
        }
        match self {
            FunctionModel::Rational(m) => {
                if a.norm() == 0.0 {
                    return filter_disc(&m.numerator_roots, r, "zero");
                }
                let shifted = m.rf.numerator().sub(&m.rf.denominator().scale(a));
                if shifted.is_zero() {
                    return Err(Error::DomainError(
                        "the model is identically equal to the requested value".into(),
                    ));
                }
                if shifted.degree().unwrap_or(0) == 0 {
                    return Ok(Vec::new());
                }
                let roots = roots_with_multiplicity(&shifted, CLUSTER_RADIUS)?;
                filter_disc(&roots, r, "zero")
            }
            FunctionModel::RationalTimesExpPoly(m) => {
                if a.norm() == 0.0 {
                    filter_disc(&m.numerator_roots, r, "zero")
                } else {
                    Err(Error::Unsupported(
                        "a-point enumeration for exponential-factor models requires a = 0".into(),
                    ))
                }
            }
            FunctionModel::TanLinear(m) => {
                // tan(w) = a has solutions w = atan(a) + kπ, all simple;
                // a = ±i is omitted values (no solutions at all).
                if (a - Complex64::i()).norm() == 0.0 || (a + Complex64::i()).norm() == 0.0 {
                    return Ok(Vec::new());
                }
                let w0 = a.atan();
                lattice_in_disc(w0, m.a, m.b, r, "zero")
            }
            FunctionModel::Reciprocal(inner) => {
                if a.norm() == 0.0 {
                    inner.poles_in_disc(r)
                } else {
                    inner.zeros_in_disc(a.inv(), r)
                }
            }
            FunctionModel::Shifted(inner, s) => inner.zeros_in_disc(a + s, r),
        }
    }
}

fn nearest_in(roots: &[(Complex64, u32)], z: Complex64) -> f64 {
    roots
        .iter()
        .map(|(w, _)| (z - w).norm())
        .fold(f64::INFINITY, f64::min)
}

/// Distance from w to the nearest point of the lattice {offset + kπ : k ∈ ℤ}.
fn nearest_lattice_distance(w: Complex64, offset: f64) -> f64 {
    let k = ((w.re - offset) / std::f64::consts::PI).round();
    let mut best = f64::INFINITY;
    for kk in [k - 1.0, k, k + 1.0] {
        let p = Complex64::new(offset + kk * std::f64::consts::PI, 0.0);
        best = best.min((w - p).norm());
    }
    best
}

fn filter_disc(roots: &[(Complex64, u32)], r: f64, kind: &'static str) -> Result<Vec<(Complex64, u32)>> {
    let mut out = Vec::new();
    for &(z, m) in roots {
        let d = z.norm();
        if (d - r).abs() <= BOUNDARY_TOL * r {
            return Err(Error::BoundaryPole { kind, r, modulus: d });
        }
        if d < r {
            out.push((z, m));
        }
    }
    // solver output order is arbitrary; fix a deterministic one
    out.sort_by(|x, y| {
        x.0.re
            .partial_cmp(&y.0.re)
            .unwrap()
            .then(x.0.im.partial_cmp(&y.0.im).unwrap())
    });
    Ok(out)
}

/// Points z with a·z + b ≡ w0 (mod π) inside |z| ≤ r, all multiplicity 1.
fn lattice_in_disc(
    w0: Complex64,
    a: Complex64,
    b: Complex64,
    r: f64,
    kind: &'static str,
) -> Result<Vec<(Complex64, u32)>> {
    let pi = std::f64::consts::PI;
    let center = b - w0;
    let reach = r * a.norm() + 1.0;
    let k_lo = ((center.re - reach) / pi).floor() as i64;
    let k_hi = ((center.re + reach) / pi).ceil() as i64;
    let mut out = Vec::new();
    for k in k_lo..=k_hi {
        let z = (w0 + Complex64::new(k as f64 * pi, 0.0) - b) / a;
        let d = z.norm();
        if (d - r).abs() <= BOUNDARY_TOL * r {
            return Err(Error::BoundaryPole { kind, r, modulus: d });
        }
        if d < r {
            out.push((z, 1));
        }
    }
    out.sort_by(|x, y| {
        x.0.re
            .partial_cmp(&y.0.re)
            .unwrap()
            .then(x.0.im.partial_cmp(&y.0.im).unwrap())
    });
    Ok(out)
}

#[cfg(test)]
mod test {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn poly(coeffs: &[f64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&x| c(x, 0.0)).collect())
    }

    fn tan_z() -> FunctionModel {
        FunctionModel::tan_linear(c(1.0, 0.0), c(0.0, 0.0)).unwrap()
    }

    #[test]
    fn eval_identity_and_tan() {
        let id = FunctionModel::identity();
        assert_eq!(id.eval(c(2.0, 0.0)).unwrap(), c(2.0, 0.0));

        let t = tan_z();
        let v = t.eval(c(std::f64::consts::FRAC_PI_4, 0.0)).unwrap();
        assert!((v - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn eval_exp_cubic_matches_oracle() {
        // exp((1+i)^3), reference value computed at 40-digit precision.
        let m = FunctionModel::exp_monomial(3);
        let v = m.eval(c(1.0, 1.0)).unwrap();
        let oracle = c(-0.05631934999212788, 0.12306002480577674);
        assert!((v - oracle).norm() < 1e-15);
    }

    #[test]
    fn log_abs_exp_monomial_is_rn_cos() {
        let n = 6;
        let m = FunctionModel::exp_monomial(n);
        for &(r, th) in &[(2.0, 0.7), (500.0, 2.1), (10.0, -1.3)] {
            let z = Complex64::from_polar(r, th);
            let expected = r.powi(n as i32) * (n as f64 * th).cos();
            let got = m.log_abs(z);
            assert!(
                (got - expected).abs() <= 1e-9 * expected.abs().max(1.0),
                "r={r} th={th}: {got} vs {expected}"
            );
        }
    }

    #[test]
    fn log_abs_reciprocal_negates() {
        let t = tan_z();
        let rec = FunctionModel::reciprocal(t.clone()).unwrap();
        let z = c(1.1, 0.4);
        assert!((rec.log_abs(z) + t.log_abs(z)).abs() < 1e-12);
    }

    #[test]
    fn derivative_examples() {
        // (1/(z−2))''' at 0 is −6/16.
        let m = FunctionModel::rational(
            RationalFunction::new(poly(&[1.0]), poly(&[-2.0, 1.0])).unwrap(),
        )
        .unwrap();
        let v = m.eval_derivative(c(0.0, 0.0), 3).unwrap();
        assert!((v - c(-6.0 / 16.0, 0.0)).norm() < 1e-12);

        // tan'(0) = 1.
        let t = tan_z();
        let v = t.eval_derivative(c(0.0, 0.0), 1).unwrap();
        assert!((v - c(1.0, 0.0)).norm() < 1e-12);

        // (exp(z^n))' = n z^{n-1} exp(z^n).
        let m = FunctionModel::exp_monomial(4);
        let z = c(0.8, 0.3);
        let expected = 4.0 * z.powi(3) * (z.powi(4)).exp();
        let v = m.eval_derivative(z, 1).unwrap();
        assert!((v - expected).norm() < 1e-12 * expected.norm());
    }

    fn finite_difference(m: &FunctionModel, z: Complex64, k: u32, h: f64) -> Complex64 {
        // central differences of order k on a symmetric stencil
        match k {
            1 => (m.eval(z + c(h, 0.0)).unwrap() - m.eval(z - c(h, 0.0)).unwrap()) / (2.0 * h),
            2 => {
                (m.eval(z + c(h, 0.0)).unwrap() - 2.0 * m.eval(z).unwrap()
                    + m.eval(z - c(h, 0.0)).unwrap())
                    / (h * h)
            }
            3 => {
                (m.eval(z + c(2.0 * h, 0.0)).unwrap() - 2.0 * m.eval(z + c(h, 0.0)).unwrap()
                    + 2.0 * m.eval(z - c(h, 0.0)).unwrap()
                    - m.eval(z - c(2.0 * h, 0.0)).unwrap())
                    / (2.0 * h * h * h)
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let models: Vec<FunctionModel> = vec![
            FunctionModel::rational(
                RationalFunction::new(poly(&[1.0, 2.0, 1.0]), poly(&[3.0, 0.0, 1.0])).unwrap(),
            )
            .unwrap(),
            FunctionModel::rational_times_exp_poly(
                RationalFunction::new(poly(&[1.0, 1.0]), poly(&[2.0, 0.0, 1.0])).unwrap(),
                poly(&[0.0, 0.0, 1.0]),
            )
            .unwrap(),
            tan_z(),
            FunctionModel::reciprocal(tan_z()).unwrap(),
            FunctionModel::shifted(FunctionModel::exp_monomial(2), c(0.5, 0.2)).unwrap(),
            FunctionModel::reciprocal(
                FunctionModel::shifted(tan_z(), c(0.3, -0.1)).unwrap(),
            )
            .unwrap(),
        ];
        let z = c(0.63, 0.41);
        for m in &models {
            for k in 1..=3u32 {
                // large enough steps to stay above the cancellation floor,
                // with one Richardson pass to kill the h² truncation term
                let h = match k {
                    1 => 1e-5,
                    2 => 1e-3,
                    _ => 3e-3,
                };
                let coarse = finite_difference(m, z, k, h);
                let fine = finite_difference(m, z, k, h / 2.0);
                let approx = (4.0 * fine - coarse) / 3.0;
                let exact = m.eval_derivative(z, k).unwrap();
                let scale = exact.norm().max(1.0);
                assert!(
                    (exact - approx).norm() <= 1e-6 * scale.max(approx.norm()),
                    "k={k} model {m:?}: exact {exact} vs fd {approx}"
                );
            }
        }
    }

    #[test]
    fn order_limit_enforced() {
        let t = tan_z();
        assert!(matches!(
            t.eval_derivative(c(0.5, 0.0), MAX_DERIVATIVE_ORDER + 1),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn tan_derivative_quotients_survive_the_far_arcs() {
        // High above the real axis tan rounds to exactly i, so the shared
        // 1+t² factor of consecutive derivatives vanishes identically; the
        // quotient must still come out finite (and equal 2·tan → 2i).
        let t = tan_z();
        let z = c(3.0, 40.0);
        let q = t.derivative_quotient_log(z, 2, 1).unwrap();
        assert!(q.log_mod().is_finite());
        assert!((q.log_mod() - 2.0f64.ln()).abs() < 1e-12, "got {}", q.log_mod());
        // near the real axis it must agree with the direct ratio
        let w = c(0.7, 0.1);
        let direct = t.eval_derivative(w, 2).unwrap() / t.eval_derivative(w, 1).unwrap();
        let via_log = t.derivative_quotient_log(w, 2, 1).unwrap().to_complex("quotient").unwrap();
        assert!((direct - via_log).norm() < 1e-12 * direct.norm());
        // k = j short-circuits to 1 regardless of arc
        let unit = t.derivative_quotient_log(z, 2, 2).unwrap();
        assert!(unit.log_mod().abs() < 1e-12);
    }

    #[test]
    fn pole_guard_triggers() {
        let t = tan_z();
        let near_pole = c(std::f64::consts::FRAC_PI_2 + 1e-12, 0.0);
        assert!(matches!(t.eval(near_pole), Err(Error::PoleProximity(_))));
    }

    #[test]
    fn tan_poles_in_disc() {
        let t = tan_z();
        let poles = t.poles_in_disc(5.0).unwrap();
        let pi = std::f64::consts::PI;
        let expected = [-1.5 * pi, -0.5 * pi, 0.5 * pi, 1.5 * pi];
        assert_eq!(poles.len(), 4);
        for (got, want) in poles.iter().zip(expected.iter()) {
            assert!((got.0 - c(*want, 0.0)).norm() < 1e-12);
            assert_eq!(got.1, 1);
        }
    }

    #[test]
    fn exp_poly_is_entire() {
        let m = FunctionModel::exp_monomial(7);
        assert!(m.poles_in_disc(100.0).unwrap().is_empty());
    }

    #[test]
    fn rational_pole_multiplicity() {
        // 1/((z−1)²(z+3)) in |z| ≤ 2 has exactly the double pole at 1.
        let den = Polynomial::from_roots(&[c(1.0, 0.0), c(1.0, 0.0), c(-3.0, 0.0)]);
        let m = FunctionModel::rational(RationalFunction::new(poly(&[1.0]), den).unwrap()).unwrap();
        let poles = m.poles_in_disc(2.0).unwrap();
        assert_eq!(poles.len(), 1);
        assert!((poles[0].0 - c(1.0, 0.0)).norm() < 1e-8);
        assert_eq!(poles[0].1, 2);
    }

    #[test]
    fn zeros_of_square_and_tan() {
        let m = FunctionModel::from_polynomial(poly(&[0.0, 0.0, 1.0]));
        let zeros = m.zeros_in_disc(c(0.0, 0.0), 2.0).unwrap();
        assert_eq!(zeros.len(), 1);
        assert_eq!(zeros[0].1, 2);
        assert!(zeros[0].0.norm() < 1e-12);

        let t = tan_z();
        let zeros = t.zeros_in_disc(c(0.0, 0.0), 5.0).unwrap();
        let pi = std::f64::consts::PI;
        assert_eq!(zeros.len(), 3);
        for (got, want) in zeros.iter().zip([-pi, 0.0, pi].iter()) {
            assert!((got.0 - c(*want, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn rational_a_points_match_quadratic_formula() {
        // (z²+1)/(z−3) = 1 ⇔ z² − z + 4 = 0 ⇔ z = (1 ± i√15)/2.
        let m = FunctionModel::rational(
            RationalFunction::new(poly(&[1.0, 0.0, 1.0]), poly(&[-3.0, 1.0])).unwrap(),
        )
        .unwrap();
        let pts = m.zeros_in_disc(c(1.0, 0.0), 10.0).unwrap();
        assert_eq!(pts.len(), 2);
        let s = 15.0f64.sqrt() / 2.0;
        // match as a set: the two roots tie on re up to rounding, so their
        // sorted order is not predictable
        for want in [c(0.5, -s), c(0.5, s)] {
            assert!(
                pts.iter().any(|(got, _)| (got - want).norm() < 1e-10),
                "missing a-point near {want}"
            );
        }
    }

    #[test]
    fn reciprocal_involution_on_pole_sets() {
        let t = tan_z();
        let cot = FunctionModel::reciprocal(t.clone()).unwrap();
        let a = cot.poles_in_disc(7.0).unwrap();
        let b = t.zeros_in_disc(c(0.0, 0.0), 7.0).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn boundary_pole_detected() {
        let t = tan_z();
        assert!(matches!(
            t.poles_in_disc(std::f64::consts::FRAC_PI_2),
            Err(Error::BoundaryPole { .. })
        ));
    }

    #[test]
    fn shifted_exp_zero_points_unsupported() {
        let m = FunctionModel::exp_monomial(2);
        assert!(matches!(
            m.zeros_in_disc(c(1.0, 0.0), 5.0),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn normalize_at_origin_variants() {
        // rational: (z+2)/(z−3) has f(0) = −2/3; normalized value is 1.
        let m = FunctionModel::rational(
            RationalFunction::new(poly(&[2.0, 1.0]), poly(&[-3.0, 1.0])).unwrap(),
        )
        .unwrap();
        let n = m.normalize_at_origin().unwrap();
        assert!((n.eval(c(0.0, 0.0)).unwrap() - c(1.0, 0.0)).norm() < 1e-12);

        // exp model: (1/(1−z))·exp(z²+1) normalizes exactly.
        let m = FunctionModel::rational_times_exp_poly(
            RationalFunction::new(poly(&[1.0]), poly(&[1.0, -1.0])).unwrap(),
            poly(&[1.0, 0.0, 1.0]),
        )
        .unwrap();
        let n = m.normalize_at_origin().unwrap();
        assert!((n.eval(c(0.0, 0.0)).unwrap() - c(1.0, 0.0)).norm() < 1e-12);

        // tan(z + π/4) is already normalized; tan(z) cannot be.
        let ok = FunctionModel::tan_linear(c(1.0, 0.0), c(std::f64::consts::FRAC_PI_4, 0.0))
            .unwrap();
        assert!(ok.normalize_at_origin().is_ok());
        assert!(tan_z().normalize_at_origin().is_err());
    }

    #[test]
    fn exp_normalization_subtraction_form() {
        // Normalizing R·exp(Q) at the origin divides R by R(0)·exp(Q(0)),
        // which matches subtracting Q(0) from the exponent.
        let m = FunctionModel::rational_times_exp_poly(
            RationalFunction::constant(c(2.0, 0.0)),
            poly(&[0.5, 0.0, 0.0, 1.0]),
        )
        .unwrap();
        let n = m.normalize_at_origin().unwrap();
        let z = c(0.4, 0.7);
        let expected = (z.powi(3) + c(0.5, 0.0)).exp() * 2.0 / (2.0 * c(0.5, 0.0).exp());
        assert!((n.eval(z).unwrap() - expected).norm() < 1e-13);
    }

    #[test]
    fn derivative_quotient_log_matches_direct() {
        let m = FunctionModel::rational_times_exp_poly(
            RationalFunction::new(poly(&[1.0, 1.0]), poly(&[2.0, 0.0, 1.0])).unwrap(),
            poly(&[0.0, 0.0, 1.0]),
        )
        .unwrap();
        let z = c(1.2, -0.7);
        let direct = m.eval_derivative(z, 2).unwrap() / m.eval_derivative(z, 1).unwrap();
        let lq = m.derivative_quotient_log(z, 2, 1).unwrap();
        assert!((lq.log_mod() - direct.norm().ln()).abs() < 1e-10);
    }

    #[test]
    fn quotient_is_finite_in_huge_regime() {
        // exp(z^8) at |z| = 60: |f| ≈ exp(1.7e14), far beyond double range,
        // but f''/f' stays representable in log scale.
        let m = FunctionModel::exp_monomial(8);
        let z = Complex64::from_polar(60.0, 0.3);
        let lq = m.derivative_quotient_log(z, 2, 1).unwrap();
        assert!(lq.log_mod().is_finite());
        // f'/f = 8 z^7, so f''/f' ≈ 8 z^7 for large z (relative error ~ z^{-8}).
        let expected = 8.0 * z.powi(7);
        assert!((lq.log_mod() - expected.norm().ln()).abs() < 1e-6);
    }

    #[test]
    fn reciprocal_folds_rational_and_exp() {
        let m = FunctionModel::rational(
            RationalFunction::new(poly(&[1.0, 0.0, 1.0]), poly(&[-3.0, 1.0])).unwrap(),
        )
        .unwrap();
        let r = FunctionModel::reciprocal(m).unwrap();
        assert!(matches!(r, FunctionModel::Rational(_)));

        let e = FunctionModel::exp_monomial(3);
        let r = FunctionModel::reciprocal(e).unwrap();
        match &r {
            FunctionModel::RationalTimesExpPoly(em) => {
                assert_eq!(em.exponent().coeffs()[3], c(-1.0, 0.0));
            }
            other => panic!("expected exp-poly fold, got {other:?}"),
        }

        // double reciprocal cancels
        let t = tan_z();
        let rr = FunctionModel::reciprocal(FunctionModel::reciprocal(t.clone()).unwrap()).unwrap();
        assert_eq!(rr, t);
    }

    #[test]
    fn shift_folds_into_rational() {
        let m = FunctionModel::identity();
        let s = FunctionModel::shifted(m, c(2.0, 0.0)).unwrap();
        assert!(matches!(s, FunctionModel::Rational(_)));
        assert!((s.eval(c(5.0, 0.0)).unwrap() - c(3.0, 0.0)).norm() < 1e-15);
    }
}
