use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::context::{same_context, Ctx};
use super::monomial::Monomial;
use super::PolyError;

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted in descending graded lexicographic order with no
/// zero coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug)]
pub struct IntPolynomial {
    ctx: Ctx,
    terms: Vec<(Monomial, BigInt)>,
}

impl PartialEq for IntPolynomial {
    fn eq(&self, other: &Self) -> bool {
        same_context(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for IntPolynomial {}

impl IntPolynomial {
    pub fn zero(ctx: &Ctx) -> Self {
        Self { ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, BigInt::one())
    }

    pub fn constant(ctx: &Ctx, c: impl Into<BigInt>) -> Self {
        Self::term(ctx, c, Monomial::one(ctx.len()))
    }

    pub fn term(ctx: &Ctx, c: impl Into<BigInt>, m: Monomial) -> Self {
        assert_eq!(m.nvars(), ctx.len(), "monomial length does not match context");
        let c = c.into();
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Self { ctx: ctx.clone(), terms }
    }

    pub fn var(ctx: &Ctx, i: usize) -> Self {
        Self::term(ctx, 1, Monomial::var(ctx.len(), i, 1))
    }

    /// Looks a variable up by name.
    pub fn named(ctx: &Ctx, name: &str) -> Result<Self, PolyError> {
        let i = ctx.position(name).ok_or_else(|| PolyError::UnmappedVariable(name.to_string()))?;
        Ok(Self::var(ctx, i))
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I>(ctx: &Ctx, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ctx.len(), "monomial length does not match context");
            *acc.entry(m).or_default() += c;
        }
        Self::from_map(ctx, acc)
    }

    fn from_map(ctx: &Ctx, acc: HashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Self { ctx: ctx.clone(), terms }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, BigInt)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// No negative exponents anywhere.
    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_nonnegative())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms
            .binary_search_by(|(k, _)| m.cmp(k))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    /// Largest total degree among terms; `None` for zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn min_total_degree(&self) -> Option<i64> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.total_degree() == self.min_total_degree()
    }

    pub fn degree_in(&self, var: usize) -> Option<i64> {
        self.terms.iter().map(|(m, _)| m.exp(var)).max()
    }

    fn check_ctx(&self, other: &Self) -> Result<(), PolyError> {
        if same_context(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ctx(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ctx(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ctx(other)?;
        Ok(self.mul_impl(other))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sgn = |c: &BigInt| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sgn(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sgn(c))));
        Self { ctx: self.ctx.clone(), terms: out }
    }

    /// Heap-based product: one cursor per term of the shorter factor, output
    /// produced in descending order.
    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        let (long, short) = if self.terms.len() >= other.terms.len() {
            (&self.terms, &other.terms)
        } else {
            (&other.terms, &self.terms)
        };
        if short.len() == 1 {
            let (m, c) = &short[0];
            return self.map_terms_sorted(long, |(lm, lc)| (lm.mul(m), lc * c));
        }

        struct Cursor {
            mono: Monomial,
            row: usize,
            col: usize,
        }
        impl PartialEq for Cursor {
            fn eq(&self, o: &Self) -> bool {
                self.mono == o.mono
            }
        }
        impl Eq for Cursor {}
        impl PartialOrd for Cursor {
            fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
                Some(self.cmp(o))
            }
        }
        impl Ord for Cursor {
            fn cmp(&self, o: &Self) -> Ordering {
                self.mono.cmp(&o.mono)
            }
        }

        let mut heap: BinaryHeap<Cursor> = short
            .iter()
            .enumerate()
            .map(|(row, (m, _))| Cursor { mono: m.mul(&long[0].0), row, col: 0 })
            .collect();
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(long.len() * 2);
        while let Some(cur) = heap.pop() {
            let c = &short[cur.row].1 * &long[cur.col].1;
            match out.last_mut() {
                Some((m, acc)) if *m == cur.mono => *acc += c,
                _ => {
                    if matches!(out.last(), Some((_, acc)) if acc.is_zero()) {
                        out.pop();
                    }
                    out.push((cur.mono.clone(), c));
                }
            }
            let col = cur.col + 1;
            if col < long.len() {
                heap.push(Cursor { mono: short[cur.row].0.mul(&long[col].0), row: cur.row, col });
            }
        }
        if matches!(out.last(), Some((_, acc)) if acc.is_zero()) {
            out.pop();
        }
        Self { ctx: self.ctx.clone(), terms: out }
    }

    /// Applies an order-preserving map to sorted terms, dropping zeros.
    fn map_terms_sorted<F>(&self, terms: &[(Monomial, BigInt)], f: F) -> Self
    where
        F: Fn(&(Monomial, BigInt)) -> (Monomial, BigInt),
    {
        let out = terms.iter().map(f).filter(|(_, c)| !c.is_zero()).collect();
        Self { ctx: self.ctx.clone(), terms: out }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        self.map_terms_sorted(&self.terms, |(m, k)| (m.clone(), k * c))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        self.map_terms_sorted(&self.terms, |(k, c)| (k.mul(m), c.clone()))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k;
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

    /// Exact division by an integer.
    pub fn div_integer(&self, d: &BigInt) -> Result<Self, PolyError> {
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            out.push((m.clone(), q));
        }
        Ok(Self { ctx: self.ctx.clone(), terms: out })
    }

    /// Returns `q` with `q * g == self`, or [`PolyError::InexactDivision`].
    ///
    /// Division by a single term works for Laurent inputs. Otherwise both
    /// operands must be genuine polynomials.
    pub fn exact_divide(&self, g: &Self) -> Result<Self, PolyError> {
        self.check_ctx(g)?;
        if g.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        if g.is_monomial() {
            let (gm, gc) = &g.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let (q, r) = c.div_rem(gc);
                if !r.is_zero() {
                    return Err(PolyError::InexactDivision);
                }
                out.push((m.div(gm), q));
            }
            return Ok(Self { ctx: self.ctx.clone(), terms: out });
        }
        if !self.is_polynomial() || !g.is_polynomial() {
            return Err(PolyError::NonPolynomial);
        }
        let (glm, glc) = &g.terms[0];
        let gtail = &g.terms[1..];
        let min_deg = glm.degree();
        let mut rem: BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if m.degree() < min_deg || !glm.divides(&m) {
                return Err(PolyError::InexactDivision);
            }
            let (qc, r) = c.div_rem(glc);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            let qm = m.div(glm);
            for (tm, tc) in gtail {
                let key = tm.mul(&qm);
                let delta = tc * &qc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Ok(Self { ctx: self.ctx.clone(), terms: quot })
    }

    /// Positive gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Componentwise minimum of all exponent vectors: the largest monomial
    /// dividing every term in the Laurent sense.
    pub fn monomial_gcd(&self) -> Option<Monomial> {
        let mut it = self.terms.iter();
        let first = it.next()?.0.clone();
        Some(it.fold(first, |acc, (m, _)| acc.gcd(m)))
    }

    /// `(content, monomial, primitive)` with `self = ±content * monomial *
    /// primitive`, the primitive part having coefficient gcd 1, no monomial
    /// factor, and a positive leading coefficient.
    pub fn content_and_primitive(&self) -> Result<(BigInt, Monomial, Self), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroInput);
        }
        let content = self.content();
        let mono = self.monomial_gcd().expect("nonzero");
        let inv = mono.inverse();
        let sign_neg = self.terms[0].1.is_negative();
        let divisor = if sign_neg { -content.clone() } else { content.clone() };
        let terms = self.terms.iter().map(|(m, c)| (m.mul(&inv), c / &divisor)).collect();
        Ok((content, mono, Self { ctx: self.ctx.clone(), terms }))
    }

    /// Flips the sign if needed so the leading coefficient is positive.
    /// Returns the sign that was applied.
    pub fn normalize_sign(&mut self) -> i32 {
        if matches!(self.terms.first(), Some((_, c)) if c.is_negative()) {
            for (_, c) in &mut self.terms {
                *c = -std::mem::take(c);
            }
            -1
        } else {
            1
        }
    }

    pub fn with_positive_lead(mut self) -> Self {
        self.normalize_sign();
        self
    }

    /// Every variable replaced by its reciprocal.
    pub fn reciprocal(&self) -> Self {
        Self::from_terms(&self.ctx, self.terms.iter().map(|(m, c)| (m.inverse(), c.clone())))
    }

    /// Multiplies by the monomial that makes every exponent nonnegative with
    /// no monomial factor left. Returns the shifted polynomial together with
    /// the monomial that was multiplied in.
    pub fn clear_monomial(&self) -> (Self, Monomial) {
        match self.monomial_gcd() {
            None => (self.clone(), Monomial::one(self.ctx.len())),
            Some(g) => {
                let shift = g.inverse();
                (self.mul_monomial(&shift), shift)
            }
        }
    }

    /// Moves the polynomial into another context with identical variable
    /// order, or into one that extends it.
    pub fn embed(&self, target: &Ctx) -> Result<Self, PolyError> {
        let map: Vec<usize> = self
            .ctx
            .names()
            .iter()
            .map(|n| target.position(n).ok_or_else(|| PolyError::UnmappedVariable(n.clone())))
            .collect::<Result<_, _>>()?;
        Ok(Self::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0i64; target.len()];
                for (i, &j) in map.iter().enumerate() {
                    e[j] = m.exp(i);
                }
                (Monomial::from_i64(&e), c.clone())
            }),
        ))
    }

    /// Renames variables positionally; the new context must have the same length.
    pub fn relabel(&self, target: &Ctx) -> Result<Self, PolyError> {
        if target.len() != self.ctx.len() {
            return Err(PolyError::ContextMismatch);
        }
        Ok(Self { ctx: target.clone(), terms: self.terms.clone() })
    }

    /// Exact evaluation at a rational point (zero coordinates are rejected
    /// when a negative exponent needs them).
    pub fn eval_rational(&self, point: &[BigRational]) -> Result<BigRational, PolyError> {
        assert_eq!(point.len(), self.ctx.len());
        let mut cache: HashMap<(usize, i64), BigRational> = HashMap::new();
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = BigRational::from_integer(c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = i64::from(e);
                if e < 0 && point[i].is_zero() {
                    return Err(PolyError::DivisionByZero);
                }
                let p = cache
                    .entry((i, e))
                    .or_insert_with(|| num_traits::pow::Pow::pow(&point[i], e as i32));
                v *= &*p;
            }
            total += v;
        }
        Ok(total)
    }

    /// Floating-point complex evaluation.
    pub fn eval_complex(&self, point: &[num_complex::Complex64]) -> num_complex::Complex64 {
        assert_eq!(point.len(), self.ctx.len());
        let mut total = num_complex::Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut v = num_complex::Complex64::new(bigint_to_f64(c), 0.0);
            for (i, &e) in m.exps().iter().enumerate() {
                if e != 0 {
                    v *= point[i].powi(i32::from(e));
                }
            }
            total += v;
        }
        total
    }
}

pub(crate) fn bigint_to_f64(c: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN)
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.checked_add(rhs).expect("polynomial context mismatch")
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.checked_sub(rhs).expect("polynomial context mismatch")
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.checked_mul(rhs).expect("polynomial context mismatch")
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(mut self) -> IntPolynomial {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}
