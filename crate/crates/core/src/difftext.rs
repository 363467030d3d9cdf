//! Text form of differential polynomials.
//!
//! Grammar: a polynomial is a signed sum of terms; a term is a product of
//! factors joined by `*` (or `/` when the divisor is coefficient-valued).
//! A factor is either a derivative of w, written `w`, `w'`, `w''`, `w'''`
//! or `w^(k)` for order k, optionally raised to an integer power as in
//! `w'^2`, or a rational expression in z: numbers (`2`, `0.5`, `1e-3`,
//! `2i`), the variable `z`, parenthesized arithmetic such as `(1/2)` or
//! `(z^2+1)/(z-2)`, and named constants bound by the caller. `w` may not
//! appear inside a coefficient expression and a parenthesized exponent
//! directly after an unprimed `w` always denotes a derivative order.
//!
//! The printer emits one canonical spelling per polynomial (terms in
//! multi-index order, derivatives ascending within a term), and the parser
//! inverts it exactly.

use std::collections::{BTreeMap, HashMap};

use num_complex::Complex64;

use crate::diffpoly::{CoefficientFn, DiffPolynomial, DiffTerm, MultiIndex};
use crate::error::{Error, Result};
use crate::modeltext::polynomial_to_string;
use crate::poly::Polynomial;
use crate::rational::RationalFunction;

/// Largest integer exponent the parser accepts, for powers of z and of
/// derivative factors alike.
const MAX_PARSE_POWER: u32 = 4096;
/// Largest derivative order the parser represents. Evaluation enforces its
/// own, much smaller, limit; combinatorics work at any represented order.
const MAX_PARSE_ORDER: u32 = 30;

#[derive(Debug, Clone, PartialEq)]
enum TokKind {
    Num(f64),
    ImagNum(f64),
    Ident(String),
    Z,
    /// `w` followed by `primes` apostrophes.
    W(u32),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Tok {
    kind: TokKind,
    pos: usize,
}

fn lex(input: &str) -> Result<Vec<Tok>> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let pos = i;
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
            }
            b'+' => {
                toks.push(Tok { kind: TokKind::Plus, pos });
                i += 1;
            }
            b'-' => {
                toks.push(Tok { kind: TokKind::Minus, pos });
                i += 1;
            }
            b'*' => {
                toks.push(Tok { kind: TokKind::Star, pos });
                i += 1;
            }
            b'/' => {
                toks.push(Tok { kind: TokKind::Slash, pos });
                i += 1;
            }
            b'^' => {
                toks.push(Tok { kind: TokKind::Caret, pos });
                i += 1;
            }
            b'(' => {
                toks.push(Tok { kind: TokKind::LParen, pos });
                i += 1;
            }
            b')' => {
                toks.push(Tok { kind: TokKind::RParen, pos });
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        i = j;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let text = &input[start..i];
                let value: f64 = text.parse().map_err(|_| Error::SyntaxError {
                    position: start,
                    message: format!("malformed number literal '{text}'"),
                })?;
                if i < bytes.len() && bytes[i] == b'i' {
                    i += 1;
                    toks.push(Tok { kind: TokKind::ImagNum(value), pos });
                } else {
                    toks.push(Tok { kind: TokKind::Num(value), pos });
                }
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &input[start..i];
                match word {
                    "z" => toks.push(Tok { kind: TokKind::Z, pos }),
                    "i" => toks.push(Tok { kind: TokKind::ImagNum(1.0), pos }),
                    "w" => {
                        let mut primes = 0u32;
                        while i < bytes.len() && bytes[i] == b'\'' {
                            primes += 1;
                            i += 1;
                        }
                        toks.push(Tok { kind: TokKind::W(primes), pos });
                    }
                    _ => toks.push(Tok {
                        kind: TokKind::Ident(word.to_string()),
                        pos,
                    }),
                }
            }
            _ => {
                return Err(Error::SyntaxError {
                    position: pos,
                    message: format!("unexpected character '{}'", &input[pos..].chars().next().unwrap()),
                });
            }
        }
    }
    Ok(toks)
}

/// A parsed multiplicative factor: either a derivative power of w or a
/// coefficient piece.
enum Factor {
    WPower { order: u32, power: u32 },
    Coeff(CoefficientFn),
}

struct Parser<'a> {
    toks: Vec<Tok>,
    idx: usize,
    len: usize,
    constants: &'a HashMap<String, Complex64>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&TokKind> {
        self.toks.get(self.idx).map(|t| &t.kind)
    }

    fn peek2(&self) -> Option<&TokKind> {
        self.toks.get(self.idx + 1).map(|t| &t.kind)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.len, |t| t.pos)
    }

    fn bump(&mut self) -> Option<TokKind> {
        let k = self.toks.get(self.idx).map(|t| t.kind.clone());
        if k.is_some() {
            self.idx += 1;
        }
        k
    }

    fn error(&self, message: String) -> Error {
        Error::SyntaxError { position: self.pos(), message }
    }

    fn expect(&mut self, kind: TokKind, what: &str) -> Result<()> {
        if self.peek() == Some(&kind) {
            self.idx += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    /// A nonnegative integer literal, used for every exponent position.
    fn parse_exponent(&mut self) -> Result<u32> {
        let pos = self.pos();
        match self.bump() {
            Some(TokKind::Num(v)) => {
                if v.fract() != 0.0 || !(0.0..=MAX_PARSE_POWER as f64).contains(&v) {
                    return Err(Error::SyntaxError {
                        position: pos,
                        message: format!(
                            "exponent must be an integer between 0 and {MAX_PARSE_POWER}"
                        ),
                    });
                }
                Ok(v as u32)
            }
            _ => Err(Error::SyntaxError {
                position: pos,
                message: "expected a nonnegative integer exponent".into(),
            }),
        }
    }

    /// poly := [sign] term ((+|-) term)*
    fn parse_poly(&mut self) -> Result<Vec<DiffTerm>> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some(TokKind::Minus) => {
                self.idx += 1;
                true
            }
            Some(TokKind::Plus) => {
                self.idx += 1;
                false
            }
            _ => false,
        };
        loop {
            terms.push(self.parse_term(negate)?);
            match self.peek() {
                Some(TokKind::Plus) => {
                    self.idx += 1;
                    negate = false;
                }
                Some(TokKind::Minus) => {
                    self.idx += 1;
                    negate = true;
                }
                None => break,
                _ => {
                    return Err(self.error(
                        "expected '+', '-', or end of input after a term".into(),
                    ))
                }
            }
        }
        Ok(terms)
    }

    /// term := factor (("*"|"/") factor)*
    fn parse_term(&mut self, negate: bool) -> Result<DiffTerm> {
        let mut coeff = CoefficientFn::Constant(Complex64::new(
            if negate { -1.0 } else { 1.0 },
            0.0,
        ));
        let mut exps: Vec<u32> = Vec::new();
        let mut apply = |factor: Factor, coeff: &mut CoefficientFn, pos: usize| -> Result<()> {
            match factor {
                Factor::WPower { order, power } => {
                    if exps.len() <= order as usize {
                        exps.resize(order as usize + 1, 0);
                    }
                    let slot = &mut exps[order as usize];
                    *slot = slot.checked_add(power).unwrap_or(u32::MAX);
                    if *slot > MAX_PARSE_POWER {
                        return Err(Error::SyntaxError {
                            position: pos,
                            message: format!(
                                "total power of a derivative factor exceeds {MAX_PARSE_POWER}"
                            ),
                        });
                    }
                    Ok(())
                }
                Factor::Coeff(c) => {
                    *coeff = coeff.mul(&c);
                    Ok(())
                }
            }
        };

        let pos = self.pos();
        let first = self.parse_factor()?;
        apply(first, &mut coeff, pos)?;
        loop {
            match self.peek() {
                Some(TokKind::Star) => {
                    self.idx += 1;
                    let pos = self.pos();
                    let f = self.parse_factor()?;
                    apply(f, &mut coeff, pos)?;
                }
                Some(TokKind::Slash) => {
                    self.idx += 1;
                    let pos = self.pos();
                    match self.parse_factor()? {
                        Factor::WPower { .. } => {
                            return Err(Error::SyntaxError {
                                position: pos,
                                message: "cannot divide by a factor of w".into(),
                            });
                        }
                        Factor::Coeff(c) => {
                            coeff = divide(&coeff, &c, pos)?;
                        }
                    }
                }
                _ => break,
            }
        }
        Ok(DiffTerm::new(coeff, MultiIndex::new(exps)))
    }

    fn parse_factor(&mut self) -> Result<Factor> {
        if let Some(TokKind::W(primes)) = self.peek().cloned() {
            let w_pos = self.pos();
            self.idx += 1;
            let mut order = primes;
            let mut power = 1u32;
            if self.peek() == Some(&TokKind::Caret) {
                // A parenthesized exponent right after an unprimed w selects
                // a derivative order; a bare integer is a power.
                if primes == 0 && self.peek2() == Some(&TokKind::LParen) {
                    self.idx += 2;
                    order = self.parse_exponent()?;
                    if order > MAX_PARSE_ORDER {
                        return Err(Error::SyntaxError {
                            position: w_pos,
                            message: format!(
                                "derivative order exceeds the limit {MAX_PARSE_ORDER}"
                            ),
                        });
                    }
                    self.expect(TokKind::RParen, "')' after the derivative order")?;
                    if self.peek() == Some(&TokKind::Caret) {
                        self.idx += 1;
                        power = self.parse_exponent()?;
                    }
                } else {
                    self.idx += 1;
                    power = self.parse_exponent()?;
                }
            }
            if order > MAX_PARSE_ORDER {
                return Err(Error::SyntaxError {
                    position: w_pos,
                    message: format!("derivative order exceeds the limit {MAX_PARSE_ORDER}"),
                });
            }
            return Ok(Factor::WPower { order, power });
        }
        Ok(Factor::Coeff(self.parse_rat_power()?))
    }

    /// rat_power := rat_primary ["^" int]
    fn parse_rat_power(&mut self) -> Result<CoefficientFn> {
        let base = self.parse_rat_primary()?;
        if self.peek() == Some(&TokKind::Caret) {
            self.idx += 1;
            let k = self.parse_exponent()?;
            return Ok(coeff_pow(&base, k));
        }
        Ok(base)
    }

    fn parse_rat_primary(&mut self) -> Result<CoefficientFn> {
        let pos = self.pos();
        match self.bump() {
            Some(TokKind::Num(v)) => Ok(CoefficientFn::Constant(Complex64::new(v, 0.0))),
            Some(TokKind::ImagNum(v)) => Ok(CoefficientFn::Constant(Complex64::new(0.0, v))),
            Some(TokKind::Z) => Ok(CoefficientFn::Rational(
                RationalFunction::from_polynomial(Polynomial::monomial(
                    Complex64::new(1.0, 0.0),
                    1,
                )),
            )),
            Some(TokKind::Ident(name)) => match self.constants.get(&name) {
                Some(c) => Ok(CoefficientFn::Constant(*c)),
                None => Err(Error::SyntaxError {
                    position: pos,
                    message: format!("constant '{name}' has no binding"),
                }),
            },
            Some(TokKind::LParen) => {
                let value = self.parse_rfexpr()?;
                self.expect(TokKind::RParen, "')' to close the coefficient")?;
                Ok(value)
            }
            Some(TokKind::W(_)) => Err(Error::SyntaxError {
                position: pos,
                message: "w may not appear inside a coefficient".into(),
            }),
            _ => Err(Error::SyntaxError {
                position: pos,
                message: "expected a coefficient or a factor of w".into(),
            }),
        }
    }

    /// rfexpr := [sign] rf_prod ((+|-) rf_prod)*
    fn parse_rfexpr(&mut self) -> Result<CoefficientFn> {
        let mut negate = false;
        match self.peek() {
            Some(TokKind::Minus) => {
                self.idx += 1;
                negate = true;
            }
            Some(TokKind::Plus) => {
                self.idx += 1;
            }
            _ => {}
        }
        let mut acc = self.parse_rf_prod()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(TokKind::Plus) => {
                    self.idx += 1;
                    let rhs = self.parse_rf_prod()?;
                    acc = acc.add(&rhs);
                }
                Some(TokKind::Minus) => {
                    self.idx += 1;
                    let rhs = self.parse_rf_prod()?;
                    acc = acc.add(&rhs.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    /// rf_prod := rat_power (("*"|"/") rat_power)*
    fn parse_rf_prod(&mut self) -> Result<CoefficientFn> {
        let mut acc = self.parse_rat_power()?;
        loop {
            match self.peek() {
                Some(TokKind::Star) => {
                    self.idx += 1;
                    let rhs = self.parse_rat_power()?;
                    acc = acc.mul(&rhs);
                }
                Some(TokKind::Slash) => {
                    self.idx += 1;
                    let pos = self.pos();
                    let rhs = self.parse_rat_power()?;
                    acc = divide(&acc, &rhs, pos)?;
                }
                _ => return Ok(acc),
            }
        }
    }
}

fn divide(a: &CoefficientFn, b: &CoefficientFn, pos: usize) -> Result<CoefficientFn> {
    if b.is_zero() {
        return Err(Error::SyntaxError {
            position: pos,
            message: "division by a zero coefficient".into(),
        });
    }
    let recip = b.reciprocal().map_err(|e| Error::SyntaxError {
        position: pos,
        message: format!("divisor cannot be inverted: {e}"),
    })?;
    Ok(a.mul(&recip))
}

fn coeff_pow(base: &CoefficientFn, k: u32) -> CoefficientFn {
    let mut result = CoefficientFn::Constant(Complex64::new(1.0, 0.0));
    let mut square = base.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            result = result.mul(&square);
        }
        k >>= 1;
        if k > 0 {
            square = square.mul(&square);
        }
    }
    result
}

/// Parse a differential polynomial, resolving named constants through
/// `constants`. Warnings (terms that merged or cancelled to zero) are
/// discarded; use [`parse_diffpoly_with_warnings`] to inspect them.
pub fn parse_diffpoly(
    text: &str,
    constants: &HashMap<String, Complex64>,
) -> Result<DiffPolynomial> {
    parse_diffpoly_with_warnings(text, constants).map(|(p, _)| p)
}

/// Parse, also reporting which multi-indices ended up with a zero
/// coefficient (written as zero, or cancelled during the like-term merge).
pub fn parse_diffpoly_with_warnings(
    text: &str,
    constants: &HashMap<String, Complex64>,
) -> Result<(DiffPolynomial, Vec<String>)> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::SyntaxError {
            position: 0,
            message: "empty input".into(),
        });
    }
    let mut parser = Parser { toks, idx: 0, len: text.len(), constants };
    let terms = parser.parse_poly()?;
    let mut seen: BTreeMap<MultiIndex, usize> = BTreeMap::new();
    for t in &terms {
        *seen.entry(t.index.clone()).or_insert(0) += 1;
    }
    let poly = DiffPolynomial::new(terms);
    let mut warnings = Vec::new();
    for (idx, count) in seen {
        if poly.terms().all(|(i, _)| *i != idx) {
            if count > 1 {
                warnings.push(format!("like terms at {idx} cancelled to zero"));
            } else {
                warnings.push(format!("term at {idx} has a zero coefficient"));
            }
        }
    }
    Ok((poly, warnings))
}

fn fmt_real(x: f64) -> String {
    format!("{x}")
}

fn w_factor_string(order: usize, power: u32) -> String {
    let base = match order {
        0 => "w".to_string(),
        1 => "w'".to_string(),
        2 => "w''".to_string(),
        3 => "w'''".to_string(),
        k => format!("w^({k})"),
    };
    if power > 1 {
        format!("{base}^{power}")
    } else {
        base
    }
}

/// Coefficient text, sign-extracted for real constants so terms join with
/// a bare minus. `omit` reports a unit coefficient that can vanish in front
/// of a nonempty w-part.
fn coefficient_parts(coeff: &CoefficientFn) -> (String, bool, bool) {
    match coeff {
        CoefficientFn::Constant(c) => {
            if c.im == 0.0 {
                let neg = c.re < 0.0;
                let mag = c.re.abs();
                (fmt_real(mag), neg, mag == 1.0)
            } else if c.re == 0.0 {
                let neg = c.im < 0.0;
                (format!("{}i", fmt_real(c.im.abs())), neg, false)
            } else {
                let sign = if c.im < 0.0 { '-' } else { '+' };
                (
                    format!("({}{}{}i)", fmt_real(c.re), sign, fmt_real(c.im.abs())),
                    false,
                    false,
                )
            }
        }
        CoefficientFn::Rational(rf) => {
            if rf.numerator().is_constant() && rf.denominator().is_constant() {
                return coefficient_parts(&CoefficientFn::Constant(
                    rf.eval(Complex64::new(0.0, 0.0)),
                ));
            }
            let num = format!("({})", polynomial_to_string(rf.numerator()));
            let den = rf.denominator();
            if den.is_constant() && den.constant_term() == Complex64::new(1.0, 0.0) {
                (num, false, false)
            } else {
                (format!("{num}/({})", polynomial_to_string(den)), false, false)
            }
        }
    }
}

/// Canonical text: terms in multi-index order, coefficient first,
/// derivative factors ascending. [`parse_diffpoly`] inverts it.
pub fn diffpoly_to_string(p: &DiffPolynomial) -> String {
    if p.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, coeff) in p.terms() {
        let w_part: Vec<String> = idx
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &power)| power > 0)
            .map(|(order, &power)| w_factor_string(order, power))
            .collect();
        let (coeff_str, neg, unit) = coefficient_parts(coeff);
        let body = if w_part.is_empty() {
            coeff_str
        } else if unit {
            w_part.join("*")
        } else {
            format!("{coeff_str}*{}", w_part.join("*"))
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    out
}
