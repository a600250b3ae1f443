use num_bigint::BigInt;

use super::context::Ctx;
use super::{IntPolynomial, Monomial, PolyError};

/// Dense polynomial in an auxiliary variable `t` whose coefficients are
/// sparse polynomials over a common context. `coeffs[k]` multiplies `t^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    ctx: Ctx,
    coeffs: Vec<IntPolynomial>,
}

impl UniPoly {
    pub fn new(ctx: &Ctx, coeffs: Vec<IntPolynomial>) -> Self {
        let mut p = Self { ctx: ctx.clone(), coeffs };
        p.trim();
        p
    }

    pub fn zero(ctx: &Ctx) -> Self {
        Self { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn constant(c: IntPolynomial) -> Self {
        let ctx = c.ctx().clone();
        Self::new(&ctx, vec![c])
    }

    /// `a + b t`
    pub fn linear(a: IntPolynomial, b: IntPolynomial) -> Self {
        let ctx = a.ctx().clone();
        Self::new(&ctx, vec![a, b])
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[IntPolynomial] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> IntPolynomial {
        self.coeffs.get(k).cloned().unwrap_or_else(|| IntPolynomial::zero(&self.ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&IntPolynomial> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(&self.ctx, (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(&self.ctx, (0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut out = vec![IntPolynomial::zero(&self.ctx); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Self::new(&self.ctx, out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::constant(IntPolynomial::one(&self.ctx));
        for _ in 0..k {
            result = result.mul(self);
        }
        result
    }

    pub fn scale(&self, c: &IntPolynomial) -> Self {
        Self::new(&self.ctx, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division by `a + b t` with `b` a nonzero integer.
    pub fn divide_linear(&self, a: &BigInt, b: &BigInt) -> Result<Self, PolyError> {
        if b == &BigInt::from(0) {
            return Err(PolyError::DivisionByZero);
        }
        let Some(deg) = self.degree() else {
            return Ok(self.clone());
        };
        if deg == 0 {
            return Err(PolyError::InexactDivision);
        }
        // Synthetic division from the top: q_{k-1} = (r_k) / b, r_{k-1} -= a q_{k-1}.
        let mut rem: Vec<IntPolynomial> = self.coeffs.clone();
        let mut quot = vec![IntPolynomial::zero(&self.ctx); deg];
        for k in (1..=deg).rev() {
            let q = rem[k].div_integer(b)?;
            rem[k - 1] = &rem[k - 1] - &q.scale(a);
            quot[k - 1] = q;
        }
        if !rem[0].is_zero() {
            return Err(PolyError::InexactDivision);
        }
        Ok(Self::new(&self.ctx, quot))
    }

    /// Largest `e` with `(a + b t)^e` dividing `self`, and the cofactor.
    pub fn strip_linear(&self, a: &BigInt, b: &BigInt) -> (usize, Self) {
        let mut cur = self.clone();
        let mut e = 0;
        if cur.is_zero() {
            return (0, cur);
        }
        while let Ok(q) = cur.divide_linear(a, b) {
            cur = q;
            e += 1;
        }
        (e, cur)
    }

    /// Maps every coefficient through `f`.
    pub fn map_coeffs<F>(&self, ctx: &Ctx, f: F) -> Result<Self, PolyError>
    where
        F: Fn(&IntPolynomial) -> Result<IntPolynomial, PolyError>,
    {
        Ok(Self::new(ctx, self.coeffs.iter().map(f).collect::<Result<_, _>>()?))
    }

    /// Flattens into a polynomial over `ctx` extended by the variable `t`
    /// at position `t_index`.
    pub fn to_polynomial(&self, target: &Ctx, t_index: usize) -> Result<IntPolynomial, PolyError> {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            let embedded = c.embed(target)?;
            let tk = Monomial::var(target.len(), t_index, k as i64);
            for (m, v) in embedded.terms() {
                terms.push((m.mul(&tk), v.clone()));
            }
        }
        Ok(IntPolynomial::from_terms(target, terms))
    }

    /// Collects powers of variable `t_index` of `f` into a [`UniPoly`] over
    /// `base`, the context of `f` without that variable.
    pub fn from_polynomial(f: &IntPolynomial, t_index: usize, base: &Ctx) -> Result<Self, PolyError> {
        let src = f.ctx();
        let map: Vec<Option<usize>> = (0..src.len())
            .map(|i| if i == t_index { Ok(None) } else { base.position(src.name(i)).map(Some).ok_or_else(|| PolyError::UnmappedVariable(src.name(i).to_string())) })
            .collect::<Result<_, _>>()?;
        let mut buckets: Vec<Vec<(Monomial, BigInt)>> = Vec::new();
        for (m, c) in f.terms() {
            let k = m.exp(t_index);
            if k < 0 {
                return Err(PolyError::NonPolynomial);
            }
            let k = k as usize;
            if buckets.len() <= k {
                buckets.resize_with(k + 1, Vec::new);
            }
            let mut e = vec![0i64; base.len()];
            for (i, slot) in map.iter().enumerate() {
                if let Some(j) = slot {
                    e[*j] = m.exp(i);
                }
            }
            buckets[k].push((Monomial::from_i64(&e), c.clone()));
        }
        Ok(Self::new(base, buckets.into_iter().map(|b| IntPolynomial::from_terms(base, b)).collect()))
    }
}
