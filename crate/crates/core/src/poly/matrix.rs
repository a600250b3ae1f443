use std::collections::HashMap;

use num_bigint::BigInt;

use super::context::Ctx;
use super::{IntPolynomial, PolyError};
use crate::cancel::CancelToken;

/// Dense rectangular grid of polynomials over one context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ctx: Ctx,
    rows: usize,
    cols: usize,
    data: Vec<IntPolynomial>,
}

impl PolyMatrix {
    pub fn zeros(ctx: &Ctx, rows: usize, cols: usize) -> Self {
        Self { ctx: ctx.clone(), rows, cols, data: vec![IntPolynomial::zero(ctx); rows * cols] }
    }

    pub fn identity(ctx: &Ctx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, IntPolynomial::one(ctx));
        }
        m
    }

    pub fn from_rows(ctx: &Ctx, rows: Vec<Vec<IntPolynomial>>) -> Result<Self, PolyError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(PolyError::Shape("ragged rows".into()));
        }
        Ok(Self { ctx: ctx.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &IntPolynomial {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: IntPolynomial) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[IntPolynomial] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn require_square(&self) -> Result<usize, PolyError> {
        if self.rows == self.cols {
            Ok(self.rows)
        } else {
            Err(PolyError::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)))
        }
    }

    /// Fraction-free Bareiss elimination. Pivots are chosen with the fewest
    /// terms; a Laurent entry that blocks exact division sends the whole
    /// computation to [`PolyMatrix::determinant_by_minors`].
    pub fn determinant(&self) -> Result<IntPolynomial, PolyError> {
        self.determinant_with(&CancelToken::new())
    }

    pub fn determinant_with(&self, cancel: &CancelToken) -> Result<IntPolynomial, PolyError> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(IntPolynomial::one(&self.ctx));
        }
        match self.bareiss(n, cancel) {
            Err(PolyError::NonPolynomial) => self.determinant_by_minors(cancel),
            other => other,
        }
    }

    fn bareiss(&self, n: usize, cancel: &CancelToken) -> Result<IntPolynomial, PolyError> {
        let mut a: Vec<Vec<IntPolynomial>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = IntPolynomial::one(&self.ctx);
        for k in 0..n - 1 {
            cancel.check()?;
            let pivot = (k..n).filter(|&r| !a[r][k].is_zero()).min_by_key(|&r| a[r][k].len());
            let Some(p) = pivot else {
                return Ok(IntPolynomial::zero(&self.ctx));
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            let (top, bottom) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in bottom.iter_mut() {
                cancel.check()?;
                for j in k + 1..n {
                    let mut v = &pivot_row[k] * &row[j];
                    if !row[k].is_zero() && !pivot_row[j].is_zero() {
                        v = &v - &(&row[k] * &pivot_row[j]);
                    }
                    row[j] = if prev.is_one() { v } else { v.exact_divide(&prev)? };
                }
                row[k] = IntPolynomial::zero(&self.ctx);
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    /// Division-free Laplace expansion organised row by row: after `k` rows
    /// every `k`-subset of columns carries the corresponding minor.
    ///
    /// Only additions and multiplications occur, so this also works over
    /// Laurent entries. Cost is driven by the number of nonzero minors,
    /// which stays small for banded matrices such as Sylvester matrices.
    pub fn determinant_by_minors(&self, cancel: &CancelToken) -> Result<IntPolynomial, PolyError> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(IntPolynomial::one(&self.ctx));
        }
        if n > 63 {
            return Err(PolyError::Shape("minor expansion supports at most 63 columns".into()));
        }
        let mut level: HashMap<u64, IntPolynomial> = HashMap::new();
        level.insert(0, IntPolynomial::one(&self.ctx));
        for k in 0..n {
            cancel.check()?;
            let mut next: HashMap<u64, IntPolynomial> = HashMap::new();
            let mut keys: Vec<u64> = level.keys().copied().collect();
            keys.sort_unstable();
            for s in keys {
                let minor = &level[&s];
                for j in 0..n {
                    let bit = 1u64 << j;
                    let entry = self.get(k, j);
                    if s & bit != 0 || entry.is_zero() {
                        continue;
                    }
                    let below = (s & (bit - 1)).count_ones() as usize;
                    let term = minor * entry;
                    let slot = next.entry(s | bit).or_insert_with(|| IntPolynomial::zero(&self.ctx));
                    *slot = if (k + below) % 2 == 0 { &*slot + &term } else { &*slot - &term };
                }
            }
            next.retain(|_, v| !v.is_zero());
            if next.is_empty() {
                return Ok(IntPolynomial::zero(&self.ctx));
            }
            level = next;
        }
        Ok(level.remove(&((1u64 << n) - 1)).unwrap_or_else(|| IntPolynomial::zero(&self.ctx)))
    }

    pub fn map<F>(&self, f: F) -> Self
    where
        F: Fn(&IntPolynomial) -> IntPolynomial,
    {
        Self { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale_row(&mut self, i: usize, c: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(i, j).scale(c);
            self.set(i, j, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VariableContext;

    #[test]
    fn identity_and_repeated_rows() {
        let ctx = VariableContext::numbered("x", 2);
        let id = PolyMatrix::identity(&ctx, 4);
        assert!(id.determinant().unwrap().is_one());
        assert!(id.determinant_by_minors(&CancelToken::new()).unwrap().is_one());
        let x = IntPolynomial::var(&ctx, 0);
        let y = IntPolynomial::var(&ctx, 1);
        let row = vec![x.clone(), y.clone(), &x + &y];
        let m = PolyMatrix::from_rows(&ctx, vec![row.clone(), vec![y.clone(), x.clone(), x.clone()], row]).unwrap();
        assert!(m.determinant().unwrap().is_zero());
        assert!(m.determinant_by_minors(&CancelToken::new()).unwrap().is_zero());
    }

    #[test]
    fn two_by_two() {
        let ctx = VariableContext::numbered("x", 4);
        let v: Vec<_> = (0..4).map(|i| IntPolynomial::var(&ctx, i)).collect();
        let m = PolyMatrix::from_rows(&ctx, vec![vec![v[0].clone(), v[1].clone()], vec![v[2].clone(), v[3].clone()]]).unwrap();
        let expect = &(&v[0] * &v[3]) - &(&v[1] * &v[2]);
        assert_eq!(m.determinant().unwrap(), expect);
    }

    #[test]
    fn non_square_rejected() {
        let ctx = VariableContext::numbered("x", 1);
        let m = PolyMatrix::zeros(&ctx, 2, 3);
        assert!(matches!(m.determinant(), Err(PolyError::Shape(_))));
    }

    #[test]
    fn cancelled_expansion() {
        let ctx = VariableContext::numbered("x", 1);
        let t = CancelToken::new();
        t.cancel();
        assert_eq!(PolyMatrix::identity(&ctx, 3).determinant_by_minors(&t), Err(PolyError::Cancelled));
    }
}
