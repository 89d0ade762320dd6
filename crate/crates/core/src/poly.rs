//! Multivariate polynomials in degrevlex order, with text parsing and printing.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::monomial::{Monomial, MAX_VARS};

/// The ambient polynomial ring `k[x_1, ..., x_n]`, standard grading.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyRing {
    pub field: FieldSpec,
    pub variables: Vec<String>,
}

impl PolyRing {
    pub fn new(field: FieldSpec, variables: &[&str]) -> Result<Arc<Self>> {
        Self::from_names(field, variables.iter().map(|s| s.to_string()).collect())
    }

    pub fn from_names(field: FieldSpec, variables: Vec<String>) -> Result<Arc<Self>> {
        if variables.len() > MAX_VARS {
            return Err(Error::Scope(format!("at most {MAX_VARS} variables are supported")));
        }
        for (i, v) in variables.iter().enumerate() {
            if v.is_empty() || !v.chars().next().unwrap().is_alphabetic() || !v.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::Parse(format!("bad variable name {v:?}")));
            }
            if variables[..i].contains(v) {
                return Err(Error::Parse(format!("duplicate variable {v:?}")));
            }
        }
        Ok(Arc::new(PolyRing { field, variables }))
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::term(self.field.one(), Monomial::var(i))
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        Polynomial::constant(self.field.from_i64(c))
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        Parser::new(self, text)?.parse_all()
    }
}

/// Terms sorted strictly descending in degrevlex, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Builds from arbitrary terms, combining duplicates and dropping zeros.
    pub fn from_terms(mut terms: Vec<(Monomial, Scalar)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp_degrevlex(&a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = &last.1 + &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    /// Scalar value of a degree-zero polynomial.
    pub fn constant_value(&self) -> Option<&Scalar> {
        match self.terms.as_slice() {
            [(m, c)] if m.is_one() => Some(c),
            _ => None,
        }
    }

    pub fn is_monomial_term(&self) -> bool {
        self.terms.len() == 1
    }

    /// Total degree if homogeneous; `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.0.cmp_degrevlex(&b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.1 + &b.1;
                    if !c.is_zero() {
                        out.push((a.0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect() }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in &other.terms {
            acc = acc.add(&self.mul_term(c, m));
        }
        acc
    }

    pub fn pow(&self, e: u32, one: &Scalar) -> Polynomial {
        let mut acc = Polynomial::constant(one.clone());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn display(&self, ring: &PolyRing) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_literal();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&m.display(&ring.variables));
            } else {
                s.push_str(&format!("{}*{}", abs, m.display(&ring.variables)));
            }
        }
        s
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.terms)
    }
}

// ---------------------------------------------------------------------------
// parser

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

struct Parser<'a> {
    ring: &'a PolyRing,
    toks: Vec<Tok>,
    pos: usize,
    text: String,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a PolyRing, text: &str) -> Result<Self> {
        let mut toks = Vec::new();
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                toks.push(Tok::Num(s.parse().unwrap()));
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push(Tok::Ident(chars[start..i].iter().collect()));
            } else if "+-*/^()".contains(c) {
                toks.push(Tok::Sym(c));
                i += 1;
            } else {
                return Err(Error::Parse(format!("unexpected character {c:?} in polynomial {text:?}")));
            }
        }
        Ok(Parser { ring, toks, pos: 0, text: text.to_string() })
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in polynomial {:?}", self.text))
    }

    fn peek_sym(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Sym(c)) => Some(*c),
            _ => None,
        }
    }

    fn parse_all(mut self) -> Result<Polynomial> {
        if self.toks.is_empty() {
            return Err(self.err("empty expression"));
        }
        let p = self.expr()?;
        if self.pos != self.toks.len() {
            return Err(self.err("trailing input"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek_sym() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek_sym() {
            self.pos += 1;
            let rhs = self.unary()?;
            if c == '*' {
                acc = acc.mul(&rhs);
            } else {
                let d = rhs
                    .constant_value()
                    .cloned()
                    .ok_or_else(|| self.err("division by a non-constant"))?;
                let inv = d.inverse().map_err(|_| self.err("division by zero"))?;
                acc = acc.scale(&inv);
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.peek_sym() == Some('-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        if self.peek_sym() == Some('+') {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek_sym() == Some('^') {
            self.pos += 1;
            let e = match self.toks.get(self.pos) {
                Some(Tok::Num(n)) => u32::try_from(n.clone()).map_err(|_| self.err("exponent too large"))?,
                _ => return Err(self.err("expected exponent")),
            };
            self.pos += 1;
            return Ok(base.pow(e, &self.ring.field.one()));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let c = self.ring.field.fraction(&n, &BigInt::from(1))?;
                Ok(Polynomial::constant(c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let i = self
                    .ring
                    .variables
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| self.err(&format!("unknown variable {name:?}")))?;
                Ok(self.ring.var(i))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let p = self.expr()?;
                if self.peek_sym() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(p)
            }
            _ => Err(self.err("expected a term")),
        }
    }
}
