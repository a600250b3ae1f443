//! Cayley configurations `B = (b_1, ..., b_r, c_1, c_2, -b_1, ..., -b_r,
//! -c_1 - c_2)` and the mixed resultant of the sparse system
//!
//! ```text
//! f_0 = z1 t^alpha + z2 t^beta + z3,    f_i = x_i t_i^gamma_i + y_i.
//! ```

use num_complex::Complex64;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cancel::CancelToken;
use crate::discriminant::a_discriminant_with;
use crate::error::{Error, Result};
use crate::lattice::{det2, BConfig, Row};
use crate::poly::IntPolynomial;
use crate::polygon::LatticePolygon;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyConfig {
    pub b_vectors: Vec<Row>,
    pub c_vectors: [Row; 2],
    pub derived_b: BConfig,
    pub gammas: Vec<i64>,
    /// `(alpha_i, beta_i)`: row `i` of the diagonal Gale dual is
    /// `gamma_i e_i + alpha_i e_{r+1} + beta_i e_{r+2}`.
    pub exponents: Vec<[i64; 2]>,
    /// `|det(c_1, c_2)|`.
    pub gamma_total: i64,
}

impl CayleyConfig {
    pub fn r(&self) -> usize {
        self.b_vectors.len()
    }

    /// `gamma_1 ... gamma_r / Gamma`, the index of the lattice spanned by
    /// the diagonal Gale dual in the full kernel.
    pub fn index(&self) -> i64 {
        self.gammas.iter().product::<i64>() / self.gamma_total
    }

    /// `x1..xr, z1, z2, y1..yr, z3` in the row order of `derived_b`.
    pub fn variable_names(&self) -> Vec<String> {
        let r = self.r();
        let mut out: Vec<String> = (1..=r).map(|i| format!("x{i}")).collect();
        out.extend(["z1".to_string(), "z2".to_string()]);
        out.extend((1..=r).map(|i| format!("y{i}")));
        out.push("z3".into());
        out
    }

    /// `alpha` and `beta` as exponent vectors of `t_1..t_r`.
    pub fn trinomial_exponents(&self) -> [Vec<i64>; 2] {
        [self.exponents.iter().map(|e| e[0]).collect(), self.exponents.iter().map(|e| e[1]).collect()]
    }
}

pub fn build_cayley(b_vectors: &[Row], c_vectors: [Row; 2]) -> Result<CayleyConfig> {
    let [c1, c2] = c_vectors;
    let d = det2(c1, c2);
    if d == 0 {
        return Err(Error::Precondition("det(c_1, c_2) must be nonzero".into()));
    }
    if b_vectors.is_empty() {
        return Err(Error::Input("at least one vector b_i is required".into()));
    }
    if let Some(i) = b_vectors.iter().position(|b| *b == [0, 0]) {
        return Err(Error::ZeroRow(i + 1));
    }
    let mut tilde: Vec<Row> = b_vectors.to_vec();
    tilde.extend([c1, c2]);
    let g = tilde
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| tilde[i + 1..].iter().map(move |&q| det2(p, q)))
        .fold(0i64, |acc, m| acc.gcd(&m));
    if g != 1 {
        return Err(Error::Precondition(format!("b_1, ..., b_r, c_1, c_2 span a sublattice of index {g}")));
    }

    // b_i = (det(b_i, c2) c1 + det(c1, b_i) c2) / d.
    let mut gammas = Vec::with_capacity(b_vectors.len());
    let mut exponents = Vec::with_capacity(b_vectors.len());
    for &b in b_vectors {
        let (p, q) = (det2(b, c2), det2(c1, b));
        let gamma = d.abs() / d.abs().gcd(&p).gcd(&q);
        exponents.push([-p * gamma / d, -q * gamma / d]);
        gammas.push(gamma);
    }

    let mut rows = tilde.clone();
    rows.extend(b_vectors.iter().map(|b| [-b[0], -b[1]]));
    rows.push([-c1[0] - c2[0], -c1[1] - c2[1]]);
    let derived_b = BConfig::new(rows)?;
    Ok(CayleyConfig {
        b_vectors: b_vectors.to_vec(),
        c_vectors,
        derived_b,
        gammas,
        exponents,
        gamma_total: d.abs(),
    })
}

/// `Res(f_0, ..., f_r)`, which is the A-discriminant of the derived
/// configuration, in the variables of [`CayleyConfig::variable_names`].
pub fn mixed_resultant(cfg: &CayleyConfig) -> Result<IntPolynomial> {
    mixed_resultant_with(cfg, &CancelToken::new())
}

pub fn mixed_resultant_with(cfg: &CayleyConfig, cancel: &CancelToken) -> Result<IntPolynomial> {
    let names = cfg.variable_names();
    Ok(a_discriminant_with(&cfg.derived_b, Some(&names), cancel)?.d_a)
}

#[derive(Clone, Debug, Serialize)]
pub struct TermBoundReport {
    pub terms: usize,
    pub gamma: i64,
    /// `floor(5 Gamma / 4 + 7 / 4)`.
    pub bound: i64,
    /// Lattice points of `conv{0, c_1, c_2}`.
    pub triangle_points: i64,
    pub holds: bool,
}

pub fn check_term_bound(cfg: &CayleyConfig, resultant: &IntPolynomial) -> TermBoundReport {
    let [c1, c2] = cfg.c_vectors;
    let tri = LatticePolygon::from_edges(&[
        (c1, vec![]),
        ([c2[0] - c1[0], c2[1] - c1[1]], vec![]),
        ([-c2[0], -c2[1]], vec![]),
    ]);
    let terms = resultant.len();
    let gamma = cfg.gamma_total;
    let bound = (5 * gamma + 7) / 4;
    let triangle_points = tri.lattice_point_count();
    TermBoundReport {
        terms,
        gamma,
        bound,
        triangle_points,
        holds: terms as i64 <= bound && terms as i64 <= triangle_points,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductFormulaReport {
    pub trials: usize,
    /// `D_A` appears to this power in the product over all branches.
    pub power: i64,
    /// Exponents of the Laurent monomial in the variable order of
    /// [`CayleyConfig::variable_names`].
    pub monomial: Vec<i64>,
    pub max_relative_deviation: f64,
    pub passed: bool,
}

/// Tolerance on the relative spread of the normalised ratio.
pub const PRODUCT_TOLERANCE: f64 = 1e-6;

fn sample(rng: &mut ChaCha8Rng) -> Complex64 {
    loop {
        let z = Complex64::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..std::f64::consts::TAU));
        if z.norm() > 1e-3 {
            return z;
        }
    }
}

/// `prod_branches f_0(t)` over the common roots `t_i = eta^k (-y_i/x_i)^{1/gamma_i}`.
fn branch_product(cfg: &CayleyConfig, point: &[Complex64]) -> Complex64 {
    let r = cfg.r();
    let (xs, zs, ys) = (&point[..r], &point[r..r + 2], &point[r + 2..2 * r + 2]);
    let z3 = point[2 * r + 2];
    let roots: Vec<Vec<Complex64>> = (0..r)
        .map(|i| {
            let g = cfg.gammas[i];
            let base = (-ys[i] / xs[i]).powf(1.0 / g as f64);
            (0..g).map(|k| base * Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / g as f64)).collect()
        })
        .collect();
    let [alpha, beta] = cfg.trinomial_exponents();
    let mono = |t: &[Complex64], e: &[i64]| t.iter().zip(e).fold(Complex64::new(1.0, 0.0), |acc, (ti, &ei)| acc * ti.powi(ei as i32));
    let mut acc = Complex64::new(1.0, 0.0);
    let mut idx = vec![0usize; r];
    loop {
        let t: Vec<Complex64> = (0..r).map(|i| roots[i][idx[i]]).collect();
        acc *= zs[0] * mono(&t, &alpha) + zs[1] * mono(&t, &beta) + z3;
        let mut k = 0;
        loop {
            if k == r {
                return acc;
            }
            idx[k] += 1;
            if idx[k] < roots[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Compares the product formula with `D_A^k` numerically.
///
/// The monomial factor is read off from how the ratio scales when one
/// variable is doubled; its constant is fixed by the first trial.
pub fn product_formula_check(cfg: &CayleyConfig, resultant: &IntPolynomial, trials: usize, seed: u64) -> ProductFormulaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nvars = resultant.ctx().len();
    let power = cfg.index();
    let ratio = |p: &[Complex64]| branch_product(cfg, p) / resultant.eval_complex(p).powi(power as i32);

    let base: Vec<Complex64> = (0..nvars).map(|_| sample(&mut rng)).collect();
    let r0 = ratio(&base);
    let monomial: Vec<i64> = (0..nvars)
        .map(|v| {
            let mut p = base.clone();
            p[v] *= 2.0;
            (ratio(&p) / r0).norm().log2().round() as i64
        })
        .collect();
    let normalised = |p: &[Complex64]| {
        let m = p.iter().zip(&monomial).fold(Complex64::new(1.0, 0.0), |acc, (x, &e)| acc * x.powi(e as i32));
        ratio(p) / m
    };
    let c0 = normalised(&base);
    let mut worst = 0.0f64;
    for _ in 0..trials {
        let p: Vec<Complex64> = (0..nvars).map(|_| sample(&mut rng)).collect();
        let dev = (normalised(&p) - c0).norm() / c0.norm();
        worst = worst.max(dev);
    }
    ProductFormulaReport {
        trials,
        power,
        monomial,
        max_relative_deviation: worst,
        passed: worst.is_finite() && worst < PRODUCT_TOLERANCE,
    }
}
