//! Canonical text and JSON forms.
//!
//! Text: terms in descending graded-lex order, e.g. `3*x1^2*x2 - x3^-1 + 7`.
//! JSON: `{"vars":[...],"terms":[{"e":[...],"c":"decimal"}]}`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::context::{is_identifier, Ctx, VariableContext};
use super::{IntPolynomial, Monomial, PolyError};

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut first = true;
            if !abs.is_one() || m.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(self.ctx().name(i))?;
                if e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Parses the canonical text form (whitespace-insensitive, terms in any
/// order, repeated monomials are combined).
pub fn parse_polynomial(text: &str, ctx: &Ctx) -> Result<IntPolynomial, PolyError> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, ctx };
    p.polynomial()
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    ctx: &'a Ctx,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.s.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected integer"))
    }

    fn ident(&mut self) -> Result<&str, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.s[start..self.pos]).map_err(|_| self.err("bad utf-8"))?;
        if !is_identifier(name) {
            return Err(self.err("expected variable name"));
        }
        Ok(name)
    }

    fn polynomial(&mut self) -> Result<IntPolynomial, PolyError> {
        let mut terms = Vec::new();
        let mut sign = BigInt::one();
        if let Some(b'-') = self.peek() {
            self.pos += 1;
            sign = -sign;
        } else if let Some(b'+') = self.peek() {
            self.pos += 1;
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, c * &sign));
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    sign = BigInt::one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -BigInt::one();
                }
                Some(_) => return Err(self.err("unexpected character")),
            }
        }
        Ok(IntPolynomial::from_terms(self.ctx, terms))
    }

    fn term(&mut self) -> Result<(Monomial, BigInt), PolyError> {
        let mut coeff = BigInt::one();
        let mut exps = vec![0i64; self.ctx.len()];
        let mut expect_factor = true;
        while expect_factor {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.integer()?,
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let name = self.ident()?.to_string();
                    let i = self.ctx.position(&name).ok_or(PolyError::UnmappedVariable(name))?;
                    let mut e = BigInt::one();
                    if let Some(b'^') = self.peek() {
                        self.pos += 1;
                        e = self.integer()?;
                    }
                    let e: i64 = e.try_into().map_err(|_| self.err("exponent too large"))?;
                    exps[i] += e;
                }
                _ => return Err(self.err("expected coefficient or variable")),
            }
            expect_factor = matches!(self.peek(), Some(b'*'));
            if expect_factor {
                self.pos += 1;
            }
        }
        Ok((Monomial::from_i64(&exps), coeff))
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TermJson {
    pub e: Vec<i64>,
    pub c: String,
}

impl IntPolynomial {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.ctx().names().to_vec(),
            terms: self.terms().iter().map(|(m, c)| TermJson { e: m.to_i64(), c: c.to_string() }).collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self, PolyError> {
        let ctx = VariableContext::new(j.vars.iter().cloned())?;
        Self::from_json_in(j, &ctx)
    }

    /// Reads into an existing context whose names must match `j.vars`.
    pub fn from_json_in(j: &PolyJson, ctx: &Ctx) -> Result<Self, PolyError> {
        if ctx.names() != j.vars.as_slice() {
            return Err(PolyError::ContextMismatch);
        }
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            if t.e.len() != ctx.len() {
                return Err(PolyError::Parse("exponent vector length differs from vars".into()));
            }
            let c: BigInt = t.c.parse().map_err(|_| PolyError::Parse(format!("bad coefficient `{}`", t.c)))?;
            if c.is_zero() {
                continue;
            }
            terms.push((Monomial::from_i64(&t.e), c));
        }
        Ok(Self::from_terms(ctx, terms))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("polynomial JSON serialises")
    }
}
