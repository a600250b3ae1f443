//! The `n x 2` matrix `B`, its Gale dual `A`, and the combinatorial data
//! (column masses, quadrant overlaps, relevant lines, degree) read off
//! from them.

pub mod hnf;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use hnf::IntMatrix;

pub type Row = [i64; 2];

/// `a1*b2 - a2*b1`.
pub fn det2(a: Row, b: Row) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Primitive direction and the multiplier: `v = k * dir` with `k > 0`.
pub fn primitive(v: Row) -> (Row, i64) {
    let g = v[0].gcd(&v[1]);
    if g == 0 {
        return ([0, 0], 0);
    }
    ([v[0] / g, v[1] / g], g)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BConfig {
    rows: Vec<Row>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AConfig {
    rows: Vec<Vec<i64>>,
    n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigStats {
    pub beta: [i64; 2],
    /// Nonzero `nu_rs` only, with `r < s`.
    pub nu: Vec<(usize, usize, i64)>,
    pub nu_sum: i64,
    pub degree: i64,
}

impl ConfigStats {
    pub fn nu(&self, r: usize, s: usize) -> i64 {
        let (r, s) = (r.min(s), r.max(s));
        self.nu.iter().find(|&&(a, b, _)| a == r && b == s).map_or(0, |t| t.2)
    }
}

/// A line through the origin holding rows of `B` in both directions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelevantLine {
    pub v: Row,
    pub members: Vec<usize>,
    /// `b_members[j] = lambdas[j] * v`
    pub lambdas: Vec<i64>,
    pub alpha: i64,
    pub delta: i64,
    pub b_v: Row,
}

impl BConfig {
    /// Checks `n >= 3`, zero column sums and rank two. Zero rows are kept.
    pub fn new(rows: Vec<Row>) -> Result<Self> {
        if rows.len() < 3 {
            return Err(Error::TooFewRows(rows.len()));
        }
        for column in 0..2 {
            let sum: i64 = rows.iter().map(|r| r[column]).sum();
            if sum != 0 {
                return Err(Error::ColumnSum { column: column + 1, sum });
            }
        }
        let cfg = Self { rows };
        if cfg.minor_gcd() == 0 {
            return Err(Error::RankDeficient);
        }
        Ok(cfg)
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> Row {
        self.rows[i]
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn column(&self, l: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[l]).collect()
    }

    /// Gcd of all `2 x 2` minors; zero iff the rank is below two.
    pub fn minor_gcd(&self) -> i64 {
        let mut g = 0i64;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                g = g.gcd(&det2(self.rows[i], self.rows[j]));
                if g == 1 {
                    return 1;
                }
            }
        }
        g
    }

    /// The rows generate `Z^2`, i.e. the lattice ideal is prime.
    pub fn is_prime(&self) -> bool {
        self.minor_gcd() == 1
    }

    pub fn require_prime(&self) -> Result<()> {
        match self.minor_gcd() {
            1 => Ok(()),
            g => Err(Error::NotPrime(g)),
        }
    }

    pub fn require_nonzero_rows(&self) -> Result<()> {
        match self.rows.iter().position(|r| *r == [0, 0]) {
            Some(i) => Err(Error::ZeroRow(i + 1)),
            None => Ok(()),
        }
    }

    pub fn beta(&self) -> [i64; 2] {
        let pos = |l: usize| self.rows.iter().map(|r| r[l].max(0)).sum();
        [pos(0), pos(1)]
    }

    /// Positive only for rows in the interiors of opposite quadrants.
    pub fn nu_pair(&self, r: usize, s: usize) -> i64 {
        let (a, b) = (self.rows[r], self.rows[s]);
        let interior_opposite = a.iter().chain(b.iter()).all(|&x| x != 0)
            && a[0].signum() == -b[0].signum()
            && a[1].signum() == -b[1].signum();
        if !interior_opposite {
            return 0;
        }
        (a[0] * b[1]).abs().min((a[1] * b[0]).abs())
    }

    pub fn stats(&self) -> ConfigStats {
        let beta = self.beta();
        let mut nu = Vec::new();
        for r in 0..self.n() {
            for s in r + 1..self.n() {
                let v = self.nu_pair(r, s);
                if v > 0 {
                    nu.push((r, s, v));
                }
            }
        }
        let nu_sum = nu.iter().map(|t| t.2).sum();
        ConfigStats { beta, nu, nu_sum, degree: beta[0] * beta[1] - nu_sum }
    }

    pub fn degree(&self) -> i64 {
        self.stats().degree
    }

    /// Lines through the origin carrying rows in opposite directions,
    /// ordered by first member. `v` is primitive and oriented so that
    /// `alpha >= 0`, with `alpha = 0` broken towards lexicographically
    /// positive `v`.
    pub fn relevant_lines(&self) -> Vec<RelevantLine> {
        let mut groups: Vec<(Row, Vec<usize>)> = Vec::new();
        for (i, &r) in self.rows.iter().enumerate() {
            if r == [0, 0] {
                continue;
            }
            let (mut d, _) = primitive(r);
            if d[0] < 0 || (d[0] == 0 && d[1] < 0) {
                d = [-d[0], -d[1]];
            }
            match groups.iter_mut().find(|g| g.0 == d) {
                Some(g) => g.1.push(i),
                None => groups.push((d, vec![i])),
            }
        }
        let mut out = Vec::new();
        for (d, members) in groups {
            let mut lambdas: Vec<i64> = members
                .iter()
                .map(|&i| {
                    let (p, k) = primitive(self.rows[i]);
                    if p == d {
                        k
                    } else {
                        -k
                    }
                })
                .collect();
            if !(lambdas.iter().any(|&l| l > 0) && lambdas.iter().any(|&l| l < 0)) {
                continue;
            }
            let mut v = d;
            let mut alpha: i64 = lambdas.iter().sum();
            if alpha < 0 {
                v = [-v[0], -v[1]];
                alpha = -alpha;
                lambdas.iter_mut().for_each(|l| *l = -*l);
            }
            let delta = lambdas.iter().filter(|&&l| l < 0).map(|l| -l).sum();
            out.push(RelevantLine { v, members, lambdas, alpha, delta, b_v: [alpha * v[0], alpha * v[1]] });
        }
        out
    }

    /// Rows lying on no relevant line.
    pub fn off_line_rows(&self) -> Vec<usize> {
        let lines = self.relevant_lines();
        (0..self.n()).filter(|i| !lines.iter().any(|l| l.members.contains(i))).collect()
    }

    /// Gale dual `A`: the rows are a Hermite-reduced integer basis of the
    /// kernel of `B^T`.
    pub fn gale_dual(&self) -> Result<AConfig> {
        self.require_prime()?;
        let bt: IntMatrix = (0..2).map(|l| self.rows.iter().map(|r| i128::from(r[l])).collect()).collect();
        let kernel = hnf::kernel_basis(&bt, self.n());
        let rows = kernel.iter().map(|r| r.iter().map(|&x| narrow(x)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        AConfig::new(rows)
    }

    pub fn as_int_matrix(&self) -> IntMatrix {
        self.rows.iter().map(|r| vec![i128::from(r[0]), i128::from(r[1])]).collect()
    }
}

fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Internal("integer overflow in lattice computation".into()))
}

impl AConfig {
    /// Checks rank `n - 2` and the existence of `w` with `w . a_i = 1`.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Input("rows of A have different lengths".into()));
        }
        if n < 3 {
            return Err(Error::TooFewRows(n));
        }
        let cfg = Self { rows, n };
        let found = hnf::rank(&cfg.as_int_matrix());
        if found != n - 2 || cfg.rows.len() != n - 2 {
            return Err(Error::ARank { expected: n - 2, found });
        }
        if cfg.homogenizing_vector().is_none() {
            return Err(Error::NoHomogenizingVector);
        }
        Ok(cfg)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Number of columns.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn column(&self, i: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[i]).collect()
    }

    pub fn as_int_matrix(&self) -> IntMatrix {
        self.rows.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect()
    }

    /// A rational `w` with `w . a_i = 1` for every column, if one exists.
    pub fn homogenizing_vector(&self) -> Option<Vec<BigRational>> {
        // Solve A^T w = 1 by elimination on the augmented n x (k+1) system.
        let k = self.rows.len();
        let mut m: Vec<Vec<BigRational>> = (0..self.n)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..k).map(|r| BigRational::from_integer(self.rows[r][i].into())).collect();
                row.push(BigRational::one());
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..k {
            let Some(p) = (r..self.n).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip();
            m[r].iter_mut().for_each(|x| *x *= &inv);
            for i in 0..self.n {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in 0..=k {
                        let t = &m[r][j] * &f;
                        m[i][j] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        if m[r..].iter().any(|row| !row[k].is_zero()) {
            return None;
        }
        let mut w = vec![BigRational::zero(); k];
        for (i, &c) in pivots.iter().enumerate() {
            w[c] = m[i][k].clone();
        }
        Some(w)
    }

    /// Gale dual `B`: the columns are an integer kernel basis of `A`,
    /// Hermite-reduced under the right `GL(2, Z)` action.
    pub fn gale_dual(&self) -> Result<BConfig> {
        let kernel = hnf::kernel_basis(&self.as_int_matrix(), self.n);
        if kernel.len() != 2 {
            return Err(Error::ARank { expected: self.n - 2, found: self.n - kernel.len() });
        }
        let rows = (0..self.n).map(|i| Ok([narrow(kernel[0][i])?, narrow(kernel[1][i])?])).collect::<Result<_>>()?;
        BConfig::new(rows)
    }
}

/// JSON input: `{"B": [[..],..]}` or `{"A": [[..],..]}`, optionally with
/// variable names.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ConfigFile {
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<Row>>,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
}

impl ConfigFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
    }

    pub fn to_bconfig(&self) -> Result<BConfig> {
        match (&self.b, &self.a) {
            (Some(b), None) => BConfig::new(b.clone()),
            (None, Some(a)) => AConfig::new(a.clone())?.gale_dual(),
            _ => Err(Error::Input("expected exactly one of \"B\" or \"A\"".into())),
        }
    }
}
