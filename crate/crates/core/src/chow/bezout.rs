//! Determinantal Chow form for Cohen-Macaulay presentations: the lattice
//! ideal is generated by the `2 x 2` minors of a `2 x 3` matrix of
//! monomials with `d1 = d2 = d3 >= d4 = d5 = d6`.

use serde::{Deserialize, Serialize};

use super::{divide_exactly, pair_context, row_names, ChowForm};
use crate::cancel::CancelToken;
use crate::error::{Error, Result};
use crate::lattice::{hnf, BConfig};
use crate::poly::{parse_polynomial, IntPolynomial, Monomial, PolyMatrix, VariableContext};

/// Exponent vectors of `m_1 .. m_6`: `top = (m1, m2, m3)`,
/// `bottom = (m4, m5, m6)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutInput {
    pub top: [Vec<i64>; 3],
    pub bottom: [Vec<i64>; 3],
}

/// `{"matrix": [["d*g^2", ...], ["a", ...]]}` over the row names of `B`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BezoutFile {
    pub matrix: [[String; 3]; 2],
}

impl BezoutInput {
    pub fn parse(file: &BezoutFile, rows: &[String]) -> Result<Self> {
        let ctx = VariableContext::new(rows.iter().cloned())?;
        let mono = |s: &str| -> Result<Vec<i64>> {
            let p = parse_polynomial(s, &ctx)?;
            match p.terms() {
                [(m, c)] if c == &1.into() && m.is_nonnegative() => Ok(m.to_i64()),
                _ => Err(Error::Input(format!("`{s}` is not a monomial"))),
            }
        };
        let row = |k: usize| -> Result<[Vec<i64>; 3]> {
            Ok([mono(&file.matrix[k][0])?, mono(&file.matrix[k][1])?, mono(&file.matrix[k][2])?])
        };
        Ok(Self { top: row(0)?, bottom: row(1)? })
    }

    fn all(&self) -> [&Vec<i64>; 6] {
        [&self.top[0], &self.top[1], &self.top[2], &self.bottom[0], &self.bottom[1], &self.bottom[2]]
    }

    pub fn degrees(&self) -> [i64; 6] {
        self.all().map(|m| m.iter().sum())
    }

    /// `d1 + d4`
    pub fn delta(&self) -> i64 {
        let d = self.degrees();
        d[0] + d[3]
    }

    /// Checks the degree pattern and that the three minors are binomials
    /// whose exponent differences lie in the column lattice of `B`.
    pub fn validate(&self, b: &BConfig) -> Result<()> {
        if self.all().iter().any(|m| m.len() != b.n() || m.iter().any(|&e| e < 0)) {
            return Err(Error::Input(format!("monomials must have {} nonnegative exponents", b.n())));
        }
        let d = self.degrees();
        if !(d[0] == d[1] && d[1] == d[2] && d[3] == d[4] && d[4] == d[5] && d[0] >= d[3]) {
            return Err(Error::Precondition(format!("need d1 = d2 = d3 >= d4 = d5 = d6, got degrees {d:?}")));
        }
        let lattice = hnf::row_hnf(&hnf::transpose(&b.as_int_matrix()));
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let u: Vec<i128> = (0..b.n())
                .map(|k| i128::from(self.top[i][k] + self.bottom[j][k] - self.top[j][k] - self.bottom[i][k]))
                .collect();
            let mut with_u = lattice.clone();
            with_u.push(u);
            if hnf::row_hnf(&with_u) != lattice {
                return Err(Error::Precondition(format!(
                    "minor ({}, {}) is not a binomial of the lattice ideal of B",
                    i + 1,
                    j + 1
                )));
            }
        }
        Ok(())
    }
}

/// The Bezout matrix `B(y)`: coefficients of the Bezout polynomial with
/// respect to `(1, v, .., v^{d1-1}, u, uv, .., uv^{d4-1}) x (1, t, .., t^{delta-1})`.
pub fn bezout_matrix(b: &BConfig, input: &BezoutInput, names: Option<&[String]>) -> Result<PolyMatrix> {
    input.validate(b)?;
    let rows = row_names(b.n(), names)?;
    let y = pair_context(&rows)?;
    let ext = y.extended(["s", "t", "u", "v"])?;
    let base = y.len();
    let (s, t, u, v) = (base, base + 1, base + 2, base + 3);
    let var = |i: usize| IntPolynomial::var(&ext, i);
    let image = |m: &[i64], param: usize| -> IntPolynomial {
        let mut acc = IntPolynomial::one(&ext);
        for (k, &e) in m.iter().enumerate() {
            if e > 0 {
                let line = &var(2 * k) + &(&var(2 * k + 1) * &var(param));
                acc = &acc * &line.pow(e as u32);
            }
        }
        acc
    };
    let mut cells = Vec::with_capacity(3);
    for i in 0..3 {
        let (top_t, bot_t) = (image(&input.top[i], t), image(&input.bottom[i], t));
        let (top_v, bot_v) = (image(&input.top[i], v), image(&input.bottom[i], v));
        cells.push(vec![
            &top_t + &(&bot_t * &var(s)),
            &top_t + &(&bot_t * &var(u)),
            &top_v + &(&bot_v * &var(u)),
        ]);
    }
    let det = PolyMatrix::from_rows(&ext, cells)?.determinant_by_minors(&CancelToken::new())?;
    let divisor = &(&var(s) - &var(u)) * &(&var(t) - &var(v));
    let bez = divide_exactly(&det, &divisor, "(s - u)(t - v)")?;

    let d = input.degrees();
    let (d1, d4, delta) = (d[0] as usize, d[3] as usize, input.delta() as usize);
    let mut entries: Vec<Vec<Vec<(Monomial, num_bigint::BigInt)>>> = vec![vec![Vec::new(); delta]; delta];
    for (m, c) in bez.terms() {
        let (es, et, eu, ev) = (m.exp(s), m.exp(t) as usize, m.exp(u), m.exp(v) as usize);
        let row = match (es, eu) {
            (0, 0) if ev < d1 => ev,
            (0, 1) if ev < d4 => d1 + ev,
            _ => return Err(Error::Internal(format!("Bezout polynomial has a term outside the basis: {m:?}"))),
        };
        if et >= delta {
            return Err(Error::Internal("Bezout polynomial has t-degree at least delta".into()));
        }
        entries[row][et].push((Monomial::from_exps(&m.exps()[..base]), c.clone()));
    }
    let cells = entries
        .into_iter()
        .map(|r| r.into_iter().map(|terms| IntPolynomial::from_terms(&y, terms)).collect())
        .collect();
    Ok(PolyMatrix::from_rows(&y, cells)?)
}

pub fn bezout_chow_form(b: &BConfig, input: &BezoutInput, names: Option<&[String]>, cancel: &CancelToken) -> Result<ChowForm> {
    let m = bezout_matrix(b, input, names)?;
    let mut polynomial = m.determinant_by_minors(cancel)?;
    let sign = polynomial.normalize_sign();
    let stats = b.stats();
    Ok(ChowForm { polynomial, degree: 2 * stats.degree, stats, sign })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::chow_form_with;

    fn file(top: [&str; 3], bottom: [&str; 3]) -> BezoutFile {
        BezoutFile { matrix: [top.map(String::from), bottom.map(String::from)] }
    }

    #[test]
    fn segre_scroll() {
        // Minors of [[x1,x2,x3],[x4,x5,x6]]: the scroll of type (1,1).
        let b = BConfig::new(vec![[1, 1], [-1, 0], [0, -1], [-1, -1], [1, 0], [0, 1]]).unwrap();
        assert_eq!(b.degree(), 3);
        let rows = row_names(6, None).unwrap();
        let input = BezoutInput::parse(&file(["x1", "x2", "x3"], ["x4", "x5", "x6"]), &rows).unwrap();
        assert_eq!(input.delta(), 2);
        let m = bezout_matrix(&b, &input, None).unwrap();
        assert_eq!((m.nrows(), m.ncols()), (2, 2));
        let bez = bezout_chow_form(&b, &input, None, &CancelToken::new()).unwrap();
        let direct = chow_form_with(&b, None, &CancelToken::new()).unwrap();
        assert_eq!(bez.polynomial, direct.polynomial);
    }

    #[test]
    fn hypotheses_checked() {
        let b = BConfig::new(vec![[1, 1], [-1, 0], [0, -1], [-1, -1], [1, 0], [0, 1]]).unwrap();
        let rows = row_names(6, None).unwrap();
        let bad = BezoutInput::parse(&file(["x1^2", "x2", "x3"], ["x4", "x5", "x6"]), &rows).unwrap();
        assert!(matches!(bad.validate(&b), Err(Error::Precondition(_))));
        let wrong = BezoutInput::parse(&file(["x1", "x3", "x2"], ["x4", "x5", "x6"]), &rows).unwrap();
        assert!(matches!(wrong.validate(&b), Err(Error::Precondition(_))));
        assert!(BezoutInput::parse(&file(["2*x1", "x2", "x3"], ["x4", "x5", "x6"]), &rows).is_err());
    }
}
