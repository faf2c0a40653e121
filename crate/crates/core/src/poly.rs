//! Exact multivariate polynomials with rational coefficients.
//!
//! A [`Polynomial`] lives in a ring with a fixed number of variables; only
//! variable positions matter internally. Terms are kept in a map keyed by
//! [`Monomial`], whose ordering is graded lexicographic with variable 0 the
//! most significant. Zero coefficients are never stored, so structural
//! equality coincides with polynomial equality.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("evaluation point has {got} coordinates, expected {expected}")]
    PointLength { expected: usize, got: usize },
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("invalid variable list: {0}")]
    InvalidVariables(String),
}

/// Exponent vector of a monomial, one entry per ring variable.
///
/// Ordered graded-lexicographically: total degree first, then exponents
/// compared from the first variable on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            degree: 0,
            exps: vec![0; nvars].into(),
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial {
            degree: 1,
            exps: exps.into(),
        }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial {
            degree: exps.iter().sum(),
            exps: exps.into(),
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: other.degree - self.degree,
            exps: other
                .exps
                .iter()
                .zip(self.exps.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

// Integer coefficients dominate in practice; skip the gcd normalisation
// `Ratio` performs when both operands have denominator one.
fn coeff_mul(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_integer() && b.is_integer() {
        BigRational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

fn coeff_add_assign(acc: &mut BigRational, c: BigRational) {
    if acc.is_integer() && c.is_integer() {
        let sum = acc.numer() + c.numer();
        *acc = BigRational::from_integer(sum);
    } else {
        *acc += c;
    }
}

/// Ordered list of variable names used for parsing and printing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variables(Vec<String>);

impl Variables {
    pub fn new<I, S>(names: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            let mut chars = name.chars();
            let valid = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(PolyError::InvalidVariables(format!(
                    "`{name}` is not an identifier"
                )));
            }
            if names[..i].contains(name) {
                return Err(PolyError::InvalidVariables(format!(
                    "`{name}` listed twice"
                )));
            }
        }
        Ok(Variables(names))
    }

    /// `x1, x2, ..., xn`.
    pub fn indexed(n: usize) -> Self {
        Variables((1..=n).map(|i| format!("x{i}")).collect())
    }

    /// Parses a comma-separated list such as `x,y,z`.
    pub fn parse_list(text: &str) -> Result<Self, PolyError> {
        Self::new(text.split(',').map(str::trim).filter(|s| !s.is_empty()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

/// A polynomial in a fixed number of variables with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, BigRational::from_integer(BigInt::from(c)))
    }

    /// The variable at `index`. Panics if `index >= nvars`.
    pub fn var(nvars: usize, index: usize) -> Self {
        Self::term(Monomial::var(nvars, index), BigRational::one())
    }

    pub fn term(monomial: Monomial, c: BigRational) -> Self {
        let nvars = monomial.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(monomial, c);
        }
        Polynomial { nvars, terms }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity differs from ring arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value of a constant polynomial (zero included), `None` otherwise.
    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` stands for the degree of zero (negative infinity).
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                coeff_add_assign(o.get_mut(), c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(PolyError::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_arity(other)?;
        if self.terms.len() == 1 || other.terms.len() == 1 {
            let mut out = Polynomial::zero(self.nvars);
            out.add_product(self, other);
            return Ok(out);
        }
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                products.push((ma.mul(mb), coeff_mul(ca, cb)));
            }
        }
        products.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Monomial, BigRational)> = Vec::with_capacity(products.len());
        for (m, c) in products {
            match merged.last_mut() {
                Some((last, acc)) if *last == m => coeff_add_assign(acc, c),
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Ok(Polynomial {
            nvars: self.nvars,
            terms: merged.into_iter().collect(),
        })
    }

    /// `self += a * b`, skipping the allocation of the intermediate product.
    pub fn add_product(&mut self, a: &Polynomial, b: &Polynomial) {
        assert!(
            self.nvars == a.nvars && a.nvars == b.nvars,
            "variable count mismatch in add_product"
        );
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), coeff_mul(ca, cb));
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Division with remainder by a single divisor under graded-lex order.
    ///
    /// Returns `(quotient, remainder)` with `self = quotient * divisor + remainder`
    /// and no term of the remainder divisible by the leading monomial of `divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        self.check_arity(divisor)?;
        let (lead_m, lead_c) = divisor.leading_term().ok_or(PolyError::DivisionByZero)?;
        let mut rest = self.clone();
        let mut quotient = Polynomial::zero(self.nvars);
        let mut remainder = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rest.terms.pop_last() {
            if lead_m.divides(&m) {
                let qm = lead_m.quotient_of(&m);
                let qc = &c / lead_c;
                // The leading term cancels exactly; subtract the tail only.
                let neg_qc = -&qc;
                for (dm, dc) in divisor.terms.iter().rev().skip(1) {
                    rest.add_term(qm.mul(dm), coeff_mul(&neg_qc, dc));
                }
                quotient.add_term(qm, qc);
            } else {
                remainder.add_term(m, c);
            }
        }
        Ok((quotient, remainder))
    }

    /// Exact division: `Some(q)` with `self = q * divisor` when `divisor` divides `self`.
    pub fn try_divide(&self, divisor: &Polynomial) -> Result<Option<Polynomial>, PolyError> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::PointLength {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    value *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += value;
        }
        Ok(total)
    }

    /// Re-embeds into a ring with `nvars` variables, keeping variable positions.
    /// Returns `None` if a used variable would be dropped.
    pub fn with_nvars(&self, nvars: usize) -> Option<Polynomial> {
        let mut out = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            let exps = m.exponents();
            if exps.iter().skip(nvars).any(|&e| e != 0) {
                return None;
            }
            let mut new = exps[..exps.len().min(nvars)].to_vec();
            new.resize(nvars, 0);
            out.terms.insert(Monomial::from_exponents(new), c.clone());
        }
        Some(out)
    }

    pub fn parse(text: &str, vars: &Variables) -> Result<Polynomial, PolyError> {
        Parser::new(text, vars).parse_expr()
    }

    /// Display adapter using the given variable names.
    pub fn display<'a>(&'a self, vars: &'a Variables) -> PolyDisplay<'a> {
        PolyDisplay {
            poly: self,
            names: Some(vars),
        }
    }

    /// Canonical text with the given names.
    pub fn to_text(&self, vars: &Variables) -> String {
        self.display(vars).to_string()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial add")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial sub")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial mul")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: Option<&'a Variables>,
}

impl PolyDisplay<'_> {
    fn write_monomial(&self, f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
        let mut first = true;
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match self.names {
                Some(vars) => f.write_str(&vars.names()[i])?,
                None => write!(f, "x{}", i + 1)?,
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.poly.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                self.write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

/// Prints with indexed names `x1, x2, ...`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        PolyDisplay {
            poly: self,
            names: None,
        }
        .fmt(f)
    }
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    vars: &'a Variables,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, vars: &'a Variables) -> Self {
        Parser {
            src,
            bytes: src.as_bytes(),
            pos: 0,
            vars,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> PolyError {
        PolyError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn parse_expr(&mut self) -> Result<Polynomial, PolyError> {
        let nvars = self.vars.len();
        let mut result = Polynomial::zero(nvars);
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            None => return Err(self.error("empty expression")),
            _ => false,
        };
        loop {
            let (m, c) = self.parse_term()?;
            result.add_term(m, if negate { -c } else { c });
            match self.peek() {
                None => break,
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(other) => {
                    return Err(self.error(format!("unexpected `{}`", other as char)));
                }
            }
            self.pos += 1;
        }
        Ok(result)
    }

    fn parse_term(&mut self) -> Result<(Monomial, BigRational), PolyError> {
        let mut exps = vec![0u32; self.vars.len()];
        let mut coeff = BigRational::one();
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let num = self.parse_uint()?;
                    let mut value = BigRational::from_integer(num);
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        self.skip_ws();
                        let den = self.parse_uint()?;
                        if den.is_zero() {
                            return Err(self.error("zero denominator"));
                        }
                        value /= BigRational::from_integer(den);
                    }
                    coeff *= value;
                }
                Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                    let start = self.pos;
                    while self.pos < self.bytes.len()
                        && (self.bytes[self.pos].is_ascii_alphanumeric()
                            || self.bytes[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    let name = &self.src[start..self.pos];
                    let index =
                        self.vars
                            .index_of(name)
                            .ok_or_else(|| PolyError::UnknownVariable {
                                name: name.to_string(),
                                position: start,
                            })?;
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        e = self
                            .parse_uint()?
                            .try_into()
                            .map_err(|_| self.error("exponent too large"))?;
                    }
                    exps[index] = exps[index]
                        .checked_add(e)
                        .ok_or_else(|| self.error("exponent too large"))?;
                }
                Some(other) => {
                    return Err(self.error(format!("expected a factor, found `{}`", other as char)))
                }
                None => return Err(self.error("expected a factor, found end of input")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::from_exponents(exps), coeff))
    }

    fn parse_uint(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer"));
        }
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }
}
