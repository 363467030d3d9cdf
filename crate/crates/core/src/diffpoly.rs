//! Differential polynomials P(z, w): finite sums of terms
//! a(z) · w^{j0} · (w')^{j1} ⋯ (w^(n))^{jn} whose coefficients are complex
//! constants or rational functions of z.
//!
//! Two gradings drive every bound built on top of this module: the degree
//! d = j0 + j1 + ⋯ + jn of a term and its weight w = j1 + 2·j2 + ⋯ + n·jn.
//! Polynomial-level aggregates come in a max-over-terms and a sum-over-terms
//! flavour, and both are exposed because the two certificate modes charge
//! different ones. Evaluation against a [`FunctionModel`] runs in the
//! log-magnitude domain so that factors like (f'')^3 near a pole do not
//! overflow doubles before cancellation gets a chance to act.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::funcmodel::{pole_guard, FunctionModel};
use crate::logcomplex::LogComplex;
use crate::rational::RationalFunction;
use crate::util::log_plus;

/// Exponent vector (j0, j1, …, jn) of one term: entry i is the power of the
/// i-th derivative of w. Canonical form has no trailing zeros and at least
/// one entry, so the constant term always carries the index (0).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex {
    exponents: Vec<u32>,
}

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        let mut e = exponents;
        while e.len() > 1 && e.last() == Some(&0) {
            e.pop();
        }
        if e.is_empty() {
            e.push(0);
        }
        MultiIndex { exponents: e }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Degree d = Σ jᵢ, the total power of w and its derivatives. The size
    /// |λ| of the index is defined by the same sum, so no separate accessor
    /// exists for it.
    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Weight w = Σ i·jᵢ: every derivative charges its order times its power.
    pub fn weight(&self) -> u32 {
        self.exponents
            .iter()
            .enumerate()
            .map(|(i, &j)| i as u32 * j)
            .sum()
    }

    /// Highest derivative order present with a nonzero power.
    pub fn order(&self) -> u32 {
        self.exponents
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &j)| j > 0)
            .map_or(0, |(i, _)| i as u32)
    }

    /// True exactly for the index (0): no factor of w at all.
    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, j) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, ")")
    }
}

/// Degree d of a single term index.
pub fn term_degree(index: &MultiIndex) -> u32 {
    index.degree()
}

/// Weight w of a single term index.
pub fn term_weight(index: &MultiIndex) -> u32 {
    index.weight()
}

/// Coefficient of one term: a complex constant or a rational function of z.
/// Constants stay constants under merging; mixed arithmetic promotes to the
/// rational representation.
#[derive(Debug, Clone)]
pub enum CoefficientFn {
    Constant(Complex64),
    Rational(RationalFunction),
}

impl CoefficientFn {
    pub fn is_zero(&self) -> bool {
        match self {
            CoefficientFn::Constant(c) => c.norm_sqr() == 0.0,
            CoefficientFn::Rational(r) => r.is_zero(),
        }
    }

    pub fn add(&self, other: &CoefficientFn) -> CoefficientFn {
        match (self, other) {
            (CoefficientFn::Constant(a), CoefficientFn::Constant(b)) => {
                CoefficientFn::Constant(a + b)
            }
            _ => CoefficientFn::Rational(self.to_rational().add(&other.to_rational())),
        }
    }

    pub fn mul(&self, other: &CoefficientFn) -> CoefficientFn {
        match (self, other) {
            (CoefficientFn::Constant(a), CoefficientFn::Constant(b)) => {
                CoefficientFn::Constant(a * b)
            }
            _ => CoefficientFn::Rational(self.to_rational().mul(&other.to_rational())),
        }
    }

    pub fn neg(&self) -> CoefficientFn {
        match self {
            CoefficientFn::Constant(c) => CoefficientFn::Constant(-c),
            CoefficientFn::Rational(r) => CoefficientFn::Rational(r.neg()),
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            CoefficientFn::Constant(c) => *c,
            CoefficientFn::Rational(r) => r.eval(z),
        }
    }

    pub fn eval_log(&self, z: Complex64) -> LogComplex {
        match self {
            CoefficientFn::Constant(c) => LogComplex::from_complex(*c),
            CoefficientFn::Rational(r) => r.eval_log(z),
        }
    }

    /// di⁺: positive part of the degree at infinity. Zero for constants.
    pub fn degree_at_infinity_plus(&self) -> i64 {
        match self {
            CoefficientFn::Constant(_) => 0,
            CoefficientFn::Rational(r) => r.degree_at_infinity_plus(),
        }
    }

    /// |leading numerator coefficient| / |leading denominator coefficient|.
    pub fn leading_modulus_ratio(&self) -> f64 {
        match self {
            CoefficientFn::Constant(c) => c.norm(),
            CoefficientFn::Rational(r) => r.leading_modulus_ratio(),
        }
    }

    /// Closed-form stand-in for the proximity function of this coefficient:
    /// max(0, di⁺ · log r + log⁺(leading modulus ratio)). Exact for
    /// constants, asymptotically exact for rationals as r grows, and clamped
    /// below at zero because a proximity function is a mean of log⁺ values.
    pub fn proximity_closed_form(&self, r: f64) -> f64 {
        let di = self.degree_at_infinity_plus() as f64;
        (di * r.ln() + log_plus(self.leading_modulus_ratio())).max(0.0)
    }

    /// Reciprocal coefficient, for charges of the form m(r, 1/a).
    pub fn reciprocal(&self) -> Result<CoefficientFn> {
        match self {
            CoefficientFn::Constant(c) => {
                if c.norm_sqr() == 0.0 {
                    return Err(Error::DomainError(
                        "reciprocal of an identically zero coefficient".into(),
                    ));
                }
                Ok(CoefficientFn::Constant(Complex64::new(1.0, 0.0) / c))
            }
            CoefficientFn::Rational(r) => Ok(CoefficientFn::Rational(r.inverse()?)),
        }
    }

    fn to_rational(&self) -> RationalFunction {
        match self {
            CoefficientFn::Constant(c) => RationalFunction::constant(*c),
            CoefficientFn::Rational(r) => r.clone(),
        }
    }
}

impl From<Complex64> for CoefficientFn {
    fn from(c: Complex64) -> Self {
        CoefficientFn::Constant(c)
    }
}

impl From<f64> for CoefficientFn {
    fn from(x: f64) -> Self {
        CoefficientFn::Constant(Complex64::new(x, 0.0))
    }
}

impl From<RationalFunction> for CoefficientFn {
    fn from(r: RationalFunction) -> Self {
        CoefficientFn::Rational(r)
    }
}

/// One term: coefficient times the monomial described by the multi-index.
#[derive(Debug, Clone)]
pub struct DiffTerm {
    pub coeff: CoefficientFn,
    pub index: MultiIndex,
}

impl DiffTerm {
    pub fn new(coeff: impl Into<CoefficientFn>, index: MultiIndex) -> Self {
        DiffTerm { coeff: coeff.into(), index }
    }

    pub fn degree(&self) -> u32 {
        self.index.degree()
    }

    pub fn weight(&self) -> u32 {
        self.index.weight()
    }
}

/// A differential polynomial with like terms merged and zero terms dropped,
/// stored in lexicographic multi-index order. The empty polynomial (all
/// terms cancelled) is representable; aggregate queries report it as an
/// error instead of inventing numbers for it.
#[derive(Debug, Clone, Default)]
pub struct DiffPolynomial {
    terms: BTreeMap<MultiIndex, CoefficientFn>,
}

impl DiffPolynomial {
    /// Merge like terms by coefficient addition and drop exact zeros.
    pub fn new(terms: Vec<DiffTerm>) -> Self {
        let mut map: BTreeMap<MultiIndex, CoefficientFn> = BTreeMap::new();
        for term in terms {
            match map.remove(&term.index) {
                Some(existing) => {
                    map.insert(term.index, existing.add(&term.coeff));
                }
                None => {
                    map.insert(term.index, term.coeff);
                }
            }
        }
        map.retain(|_, c| !c.is_zero());
        DiffPolynomial { terms: map }
    }

    pub fn from_term(coeff: impl Into<CoefficientFn>, index: MultiIndex) -> Self {
        DiffPolynomial::new(vec![DiffTerm::new(coeff, index)])
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &CoefficientFn)> {
        self.terms.iter()
    }

    /// card(I): the number of terms after merging.
    pub fn card(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn require_terms(&self) -> Result<()> {
        if self.terms.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        Ok(())
    }

    /// Maximal term degree d(P).
    pub fn degree(&self) -> Result<u32> {
        self.require_terms()?;
        Ok(self.terms.keys().map(MultiIndex::degree).max().unwrap())
    }

    /// Maximal term weight w(P).
    pub fn weight(&self) -> Result<u32> {
        self.require_terms()?;
        Ok(self.terms.keys().map(MultiIndex::weight).max().unwrap())
    }

    /// Sum of term degrees over all terms.
    pub fn sum_degrees(&self) -> Result<u32> {
        self.require_terms()?;
        Ok(self.terms.keys().map(MultiIndex::degree).sum())
    }

    /// Sum of term weights over all terms.
    pub fn sum_weights(&self) -> Result<u32> {
        self.require_terms()?;
        Ok(self.terms.keys().map(MultiIndex::weight).sum())
    }

    /// Highest derivative order appearing in any term; 0 when no term
    /// differentiates w (including the empty polynomial).
    pub fn highest_order(&self) -> u32 {
        self.terms.keys().map(MultiIndex::order).max().unwrap_or(0)
    }

    /// Coefficient of the constant-in-w term, i.e. the value P(z, 0).
    pub fn constant_coefficient(&self) -> Option<&CoefficientFn> {
        self.terms.get(&MultiIndex::new(vec![0]))
    }

    pub fn neg(&self) -> DiffPolynomial {
        let terms = self
            .terms
            .iter()
            .map(|(idx, c)| DiffTerm::new(c.neg(), idx.clone()))
            .collect();
        DiffPolynomial::new(terms)
    }

    pub fn add(&self, other: &DiffPolynomial) -> DiffPolynomial {
        let mut terms: Vec<DiffTerm> = self
            .terms
            .iter()
            .map(|(idx, c)| DiffTerm::new(c.clone(), idx.clone()))
            .collect();
        terms.extend(
            other
                .terms
                .iter()
                .map(|(idx, c)| DiffTerm::new(c.clone(), idx.clone())),
        );
        DiffPolynomial::new(terms)
    }

    /// Per-term values of P(z, f) in log-polar form, canonical term order.
    /// Total away from derivative-order limits: pole passes are the caller's
    /// concern and show up as infinite log moduli, not errors.
    pub fn term_values_log(
        &self,
        model: &FunctionModel,
        z: Complex64,
    ) -> Result<Vec<(MultiIndex, LogComplex)>> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (index, coeff) in &self.terms {
            let mut value = coeff.eval_log(z);
            for (order, &power) in index.exponents().iter().enumerate() {
                if power == 0 {
                    continue;
                }
                let d = model.derivative_log(z, order as u32)?;
                value = value
                    * LogComplex::new(d.log_mod() * power as f64, d.arg() * power as f64);
            }
            out.push((index.clone(), value));
        }
        Ok(out)
    }

    /// P(z, f) in log-polar form: terms summed in complex arithmetic scaled
    /// by the largest term magnitude, so cancellations near poles resolve
    /// without overflowing.
    pub fn evaluate_log(&self, model: &FunctionModel, z: Complex64) -> Result<LogComplex> {
        let values: Vec<LogComplex> = self
            .term_values_log(model, z)?
            .into_iter()
            .map(|(_, v)| v)
            .collect();
        Ok(sum_log_complex(&values))
    }

    /// P(z, f) as a plain complex number. Refuses points inside the model's
    /// pole guard; values beyond the floating range surface as overflow.
    pub fn evaluate(&self, model: &FunctionModel, z: Complex64) -> Result<Complex64> {
        if self.highest_order() > 0 {
            let guard = pole_guard(z.norm());
            let dist = model.nearest_pole_distance(z);
            if dist <= guard {
                return Err(Error::PoleProximity(format!(
                    "point {z} lies within {guard:.3e} of a pole (distance {dist:.3e})"
                )));
            }
        }
        self.evaluate_log(model, z)?
            .to_complex("differential polynomial value")
    }
}

/// Sum of log-polar values, scaled by the largest magnitude so the complex
/// accumulation never overflows. An infinite input (a pole pass) dominates
/// the sum; NaN propagates.
fn sum_log_complex(values: &[LogComplex]) -> LogComplex {
    if values.iter().any(|v| v.log_mod().is_nan()) {
        return LogComplex::new(f64::NAN, 0.0);
    }
    if let Some(v) = values.iter().find(|v| v.log_mod() == f64::INFINITY) {
        return *v;
    }
    let scale = values
        .iter()
        .map(LogComplex::log_mod)
        .fold(f64::NEG_INFINITY, f64::max);
    if scale == f64::NEG_INFINITY {
        return LogComplex::zero();
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for v in values {
        acc += Complex64::from_polar((v.log_mod() - scale).exp(), v.arg());
    }
    if acc.norm_sqr() == 0.0 {
        return LogComplex::zero();
    }
    LogComplex::new(scale + acc.norm().ln(), acc.arg())
}

/// A validated Clunie normal form f^n · P(z, f) = Q(z, f): every term of Q
/// has total degree at most n.
#[derive(Debug, Clone)]
pub struct ClunieForm {
    n: u32,
    p: DiffPolynomial,
    q: DiffPolynomial,
}

impl ClunieForm {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn p(&self) -> &DiffPolynomial {
        &self.p
    }

    pub fn q(&self) -> &DiffPolynomial {
        &self.q
    }
}

/// Accepts f^n · P = Q when every term of Q has total degree at most n;
/// rejections list every offending term. The split is supplied, not
/// discovered: the factorization is not unique.
pub fn validate_clunie_split(
    n: u32,
    p: DiffPolynomial,
    q: DiffPolynomial,
) -> Result<ClunieForm> {
    if n == 0 {
        return Err(Error::DomainError(
            "Clunie exponent n must be at least 1".into(),
        ));
    }
    if p.is_empty() || q.is_empty() {
        return Err(Error::EmptyPolynomial);
    }
    let offenders: Vec<String> = q
        .terms()
        .filter(|(idx, _)| idx.degree() > n)
        .map(|(idx, _)| format!("{idx} with degree {}", idx.degree()))
        .collect();
    if !offenders.is_empty() {
        return Err(Error::DegreeViolation {
            n,
            terms: offenders.join(", "),
        });
    }
    Ok(ClunieForm { n, p, q })
}
