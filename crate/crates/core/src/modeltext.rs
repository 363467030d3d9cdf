//! Textual grammar for function models: parser and canonical printer.
//!
//! ```text
//! model    := "1/(" model ")"
//!           | "(" model ")" "-" complex
//!           | "tan" "(" poly ")"              (degree-1 argument)
//!           | rational [ "*" "exp" "(" poly ")" ]
//!           | "exp" "(" poly ")"
//! rational := polyatom [ "/" polyatom ]
//! polyatom := "(" poly ")" | poly
//! poly     := [sign] term { ("+" | "-") term }
//! term     := coeff [ "*" zpow ] | zpow
//! zpow     := "z" [ "^" integer ]
//! coeff    := number | number "i" | "i" | "(" real [ ("+"|"-") imag ] ")"
//! ```
//!
//! Parsing a printed model reproduces the model exactly (round-trip
//! identity); numbers are printed with enough digits to survive the trip.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::funcmodel::FunctionModel;
use crate::poly::Polynomial;
use crate::rational::RationalFunction;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Imag(f64),
    Ident(String),
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            _ if c.is_ascii_digit() || c == '.' => {
                let start = i;
                while i < bytes.len() && ((bytes[i] as char).is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                // exponent part, only if followed by digits
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && (bytes[j] as char).is_ascii_digit() {
                        i = j;
                        while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let text = &input[start..i];
                let value: f64 = text.parse().map_err(|_| Error::SyntaxError {
                    position: start,
                    message: format!("invalid number `{text}`"),
                })?;
                // a trailing `i` fused to the number is an imaginary literal
                if i < bytes.len()
                    && bytes[i] == b'i'
                    && !(i + 1 < bytes.len() && (bytes[i + 1] as char).is_ascii_alphanumeric())
                {
                    i += 1;
                    toks.push((Tok::Imag(value), start));
                } else {
                    toks.push((Tok::Num(value), start));
                }
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(input[start..i].to_string()), start));
            }
            _ => {
                return Err(Error::SyntaxError {
                    position: i,
                    message: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.idx + 1).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(_, p)| *p).unwrap_or(self.len)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(t, _)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn error(&self, message: String) -> Error {
        Error::SyntaxError { position: self.pos(), message }
    }

    fn is_ident(&self, name: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == name)
    }

    // ----- model level -----

    fn parse_model(&mut self) -> Result<FunctionModel> {
        // reciprocal: 1/( model )
        if let (Some(Tok::Num(v)), Some(Tok::Slash)) = (self.peek(), self.peek2()) {
            if *v == 1.0 && self.toks.get(self.idx + 2).map(|(t, _)| t) == Some(&Tok::LParen) {
                let save = self.idx;
                self.idx += 3;
                match self.parse_model() {
                    Ok(inner) if self.eat(&Tok::RParen) => {
                        return FunctionModel::reciprocal(inner);
                    }
                    _ => self.idx = save,
                }
            }
        }
        // shifted: ( model ) - complex
        if self.peek() == Some(&Tok::LParen) {
            let save = self.idx;
            self.idx += 1;
            if let Ok(inner) = self.parse_model() {
                if self.eat(&Tok::RParen) && self.eat(&Tok::Minus) {
                    if let Ok(a) = self.parse_complex_signed() {
                        return FunctionModel::shifted(inner, a);
                    }
                }
            }
            self.idx = save;
        }
        // tan( linear )
        if self.is_ident("tan") {
            self.idx += 1;
            self.expect(&Tok::LParen, "`(` after tan")?;
            let p = self.parse_poly()?;
            self.expect(&Tok::RParen, "`)` closing tan argument")?;
            let coeffs = p.coeffs();
            if p.degree() != Some(1) {
                return Err(self.error("tan argument must be linear in z with nonzero slope".into()));
            }
            return FunctionModel::tan_linear(coeffs[1], coeffs[0]);
        }
        // bare exp( poly )
        if self.is_ident("exp") {
            self.idx += 1;
            self.expect(&Tok::LParen, "`(` after exp")?;
            let q = self.parse_poly()?;
            self.expect(&Tok::RParen, "`)` closing exp argument")?;
            let one = RationalFunction::constant(Complex64::new(1.0, 0.0));
            return FunctionModel::rational_times_exp_poly(one, q);
        }
        // rational [ * exp( poly ) ]
        let rf = self.parse_rational()?;
        if self.peek() == Some(&Tok::Star) {
            let save = self.idx;
            self.idx += 1;
            if self.is_ident("exp") {
                self.idx += 1;
                self.expect(&Tok::LParen, "`(` after exp")?;
                let q = self.parse_poly()?;
                self.expect(&Tok::RParen, "`)` closing exp argument")?;
                return FunctionModel::rational_times_exp_poly(rf, q);
            }
            self.idx = save;
        }
        FunctionModel::rational(rf)
    }

    fn parse_rational(&mut self) -> Result<RationalFunction> {
        let num = self.parse_polyatom()?;
        if self.eat(&Tok::Slash) {
            let den = self.parse_polyatom()?;
            RationalFunction::new(num, den)
        } else {
            Ok(RationalFunction::from_polynomial(num))
        }
    }

    fn parse_polyatom(&mut self) -> Result<Polynomial> {
        if self.peek() == Some(&Tok::LParen) {
            let save = self.idx;
            self.idx += 1;
            if let Ok(p) = self.parse_poly() {
                if self.eat(&Tok::RParen) {
                    // `(…)*z^k` is a coefficient, not a grouped polynomial;
                    // reparse below so the term parser sees the whole product.
                    let coefficient_like = self.peek() == Some(&Tok::Star)
                        && !matches!(self.peek2(), Some(Tok::Ident(s)) if s == "exp");
                    if !coefficient_like {
                        return Ok(p);
                    }
                }
            }
            self.idx = save;
        }
        self.parse_poly()
    }

    // ----- polynomial level -----

    fn parse_poly(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero();
        let mut negate = false;
        if self.eat(&Tok::Minus) {
            negate = true;
        } else {
            self.eat(&Tok::Plus);
        }
        loop {
            let term = self.parse_term()?;
            acc = if negate { acc.sub(&term) } else { acc.add(&term) };
            match self.peek() {
                Some(Tok::Plus) => {
                    negate = false;
                    self.idx += 1;
                }
                Some(Tok::Minus) => {
                    negate = true;
                    self.idx += 1;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Polynomial> {
        // z-power with implicit unit coefficient
        if self.is_ident("z") {
            let k = self.parse_zpow()?;
            return Ok(Polynomial::monomial(Complex64::new(1.0, 0.0), k));
        }
        let coeff = self.parse_coeff()?;
        // `* z^k`, unless the star belongs to a following `exp`
        if self.peek() == Some(&Tok::Star) {
            if let Some(Tok::Ident(name)) = self.peek2() {
                if name == "z" {
                    self.idx += 1;
                    let k = self.parse_zpow()?;
                    return Ok(Polynomial::monomial(coeff, k));
                }
            }
        }
        Ok(Polynomial::constant(coeff))
    }

    fn parse_zpow(&mut self) -> Result<usize> {
        if !self.is_ident("z") {
            return Err(self.error("expected `z`".into()));
        }
        self.idx += 1;
        if self.eat(&Tok::Caret) {
            match self.bump() {
                Some(Tok::Num(v)) if v >= 0.0 && v.fract() == 0.0 && v <= 4096.0 => Ok(v as usize),
                _ => Err(self.error("exponent must be a small nonnegative integer".into())),
            }
        } else {
            Ok(1)
        }
    }

    /// Unsigned coefficient forms: `2`, `2i`, `i`, `(a+bi)`, `(-a)`, `(2i)`.
    fn parse_coeff(&mut self) -> Result<Complex64> {
        match self.peek() {
            Some(Tok::Num(_)) | Some(Tok::Imag(_)) => self.parse_complex_unsigned(),
            Some(Tok::Ident(s)) if s == "i" => {
                self.idx += 1;
                Ok(Complex64::new(0.0, 1.0))
            }
            Some(Tok::LParen) => {
                self.idx += 1;
                let v = self.parse_complex_paren_body()?;
                self.expect(&Tok::RParen, "`)` closing complex literal")?;
                Ok(v)
            }
            _ => Err(self.error("expected a coefficient".into())),
        }
    }

    fn parse_complex_unsigned(&mut self) -> Result<Complex64> {
        match self.bump() {
            Some(Tok::Num(v)) => Ok(Complex64::new(v, 0.0)),
            Some(Tok::Imag(v)) => Ok(Complex64::new(0.0, v)),
            _ => Err(self.error("expected a number".into())),
        }
    }

    /// Inside parentheses: signed real, optionally ± an imaginary part; or a
    /// signed pure-imaginary literal.
    fn parse_complex_paren_body(&mut self) -> Result<Complex64> {
        let neg = if self.eat(&Tok::Minus) {
            true
        } else {
            self.eat(&Tok::Plus);
            false
        };
        let first = self.parse_complex_unsigned()?;
        let first = if neg { -first } else { first };
        if first.im != 0.0 {
            return Ok(first);
        }
        match self.peek() {
            Some(Tok::Plus) | Some(Tok::Minus) => {
                let minus = self.bump() == Some(Tok::Minus);
                let imag = match self.bump() {
                    Some(Tok::Imag(v)) => v,
                    Some(Tok::Ident(s)) if s == "i" => 1.0,
                    _ => return Err(self.error("expected an imaginary part like `2i`".into())),
                };
                Ok(Complex64::new(first.re, if minus { -imag } else { imag }))
            }
            _ => Ok(first),
        }
    }

    /// A complex literal with optional leading sign (shift constants).
    fn parse_complex_signed(&mut self) -> Result<Complex64> {
        let neg = self.eat(&Tok::Minus);
        let v = self.parse_coeff()?;
        Ok(if neg { -v } else { v })
    }
}

/// Parse a model from its textual form.
pub fn parse_model(input: &str) -> Result<FunctionModel> {
    let toks = lex(input)?;
    let mut p = Parser { toks, idx: 0, len: input.len() };
    let m = p.parse_model()?;
    if p.idx != p.toks.len() {
        return Err(p.error("trailing input after a complete model".into()));
    }
    Ok(m)
}

/// Parse a bare polynomial in z.
pub fn parse_polynomial(input: &str) -> Result<Polynomial> {
    let toks = lex(input)?;
    let mut p = Parser { toks, idx: 0, len: input.len() };
    let q = p.parse_poly()?;
    if p.idx != p.toks.len() {
        return Err(p.error("trailing input after a complete polynomial".into()));
    }
    Ok(q)
}

fn fmt_real(x: f64) -> String {
    // `{}` prints the shortest decimal that parses back to the same double
    format!("{x}")
}

/// One polynomial term without its leading sign; `negative` reports whether
/// the caller should join it with a minus.
fn term_body(c: Complex64, k: usize) -> (String, bool) {
    let zpow = match k {
        0 => String::new(),
        1 => "z".to_string(),
        _ => format!("z^{k}"),
    };
    if c.im == 0.0 {
        let neg = c.re < 0.0;
        let mag = c.re.abs();
        let body = if k == 0 {
            fmt_real(mag)
        } else if mag == 1.0 {
            zpow
        } else {
            format!("{}*{}", fmt_real(mag), zpow)
        };
        (body, neg)
    } else if c.re == 0.0 {
        let neg = c.im < 0.0;
        let mag = c.im.abs();
        let body = if k == 0 {
            format!("{}i", fmt_real(mag))
        } else {
            format!("{}i*{}", fmt_real(mag), zpow)
        };
        (body, neg)
    } else {
        let sign = if c.im < 0.0 { '-' } else { '+' };
        let lit = format!("({}{}{}i)", fmt_real(c.re), sign, fmt_real(c.im.abs()));
        let body = if k == 0 { lit } else { format!("{lit}*{zpow}") };
        (body, false)
    }
}

/// Canonical polynomial text, descending degree.
pub fn polynomial_to_string(p: &Polynomial) -> String {
    let coeffs = p.coeffs();
    let mut out = String::new();
    for k in (0..coeffs.len()).rev() {
        let c = coeffs[k];
        if c.re == 0.0 && c.im == 0.0 {
            continue;
        }
        let (body, neg) = term_body(c, k);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push('-');
        } else {
            out.push('+');
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn shift_to_string(a: Complex64) -> String {
    if a.im == 0.0 && a.re >= 0.0 {
        fmt_real(a.re)
    } else if a.im == 0.0 {
        format!("({})", fmt_real(a.re))
    } else {
        let sign = if a.im < 0.0 { '-' } else { '+' };
        format!("({}{}{}i)", fmt_real(a.re), sign, fmt_real(a.im.abs()))
    }
}

fn rational_to_string(rf: &RationalFunction) -> String {
    let den = rf.denominator();
    if den.is_constant() && den.constant_term() == Complex64::new(1.0, 0.0) {
        polynomial_to_string(rf.numerator())
    } else {
        format!(
            "({})/({})",
            polynomial_to_string(rf.numerator()),
            polynomial_to_string(den)
        )
    }
}

/// Canonical model text; `parse_model` inverts it exactly.
pub fn model_to_string(m: &FunctionModel) -> String {
    match m {
        FunctionModel::Rational(rm) => rational_to_string(rm.rational_function()),
        FunctionModel::RationalTimesExpPoly(em) => {
            let rf = em.rational_function();
            let q = polynomial_to_string(em.exponent());
            let num = rf.numerator();
            let den = rf.denominator();
            let den_is_one =
                den.is_constant() && den.constant_term() == Complex64::new(1.0, 0.0);
            if den_is_one && num.is_constant() && num.constant_term() == Complex64::new(1.0, 0.0) {
                format!("exp({q})")
            } else if den_is_one {
                format!("({})*exp({q})", polynomial_to_string(num))
            } else {
                format!(
                    "({})/({})*exp({q})",
                    polynomial_to_string(num),
                    polynomial_to_string(den)
                )
            }
        }
        FunctionModel::TanLinear(tm) => {
            let arg = Polynomial::new(vec![tm.offset(), tm.slope()]);
            format!("tan({})", polynomial_to_string(&arg))
        }
        FunctionModel::Reciprocal(inner) => format!("1/({})", model_to_string(inner)),
        FunctionModel::Shifted(inner, a) => {
            format!("({})-{}", model_to_string(inner), shift_to_string(*a))
        }
    }
}

impl fmt::Display for FunctionModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&model_to_string(self))
    }
}
