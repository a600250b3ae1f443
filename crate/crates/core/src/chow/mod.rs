//! Chow form of the toric variety `X_B` as the Sylvester resultant of the
//! two restricted binomials, divided by the bracket factors.
//!
//! A generic line is `x_i = y_i0 + y_i1 t`; with row names `a, b, ...` the
//! line coordinates are `a0, a1, b0, b1, ...` (an underscore is inserted
//! when a row name already ends in a digit).

pub mod bezout;

use std::collections::HashSet;

use crate::cancel::CancelToken;
use crate::error::{Error, Result};
use crate::lattice::{BConfig, ConfigStats};
use crate::poly::{sylvester_resultant_with, Ctx, IntPolynomial, PolyError, UniPoly, VariableContext};
use crate::polygon::{build_pb, PolygonMap};

pub use bezout::{bezout_chow_form, BezoutInput};

/// `x1, ..., xn`, or the caller's names after validation.
pub fn row_names(n: usize, user: Option<&[String]>) -> Result<Vec<String>> {
    match user {
        None => Ok((1..=n).map(|i| format!("x{i}")).collect()),
        Some(names) if names.len() != n => {
            Err(Error::Input(format!("{} variable names given for {n} rows", names.len())))
        }
        Some(names) => {
            VariableContext::new(names.iter().cloned())?;
            Ok(names.to_vec())
        }
    }
}

pub fn pair_names(rows: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(2 * rows.len());
    for r in rows {
        let sep = if r.ends_with(|c: char| c.is_ascii_digit()) { "_" } else { "" };
        out.push(format!("{r}{sep}0"));
        out.push(format!("{r}{sep}1"));
    }
    out
}

/// Context `y_10, y_11, ..., y_n0, y_n1` for the given row names.
pub fn pair_context(rows: &[String]) -> Result<Ctx> {
    Ok(VariableContext::new(pair_names(rows))?)
}

/// `H_l(t) = prod_{b_il > 0} L_i^{b_il} - prod_{b_il < 0} L_i^{-b_il}` with
/// `L_i = p_i + q_i t` for the supplied images `(p_i, q_i)`.
pub fn build_h_with(b: &BConfig, ctx: &Ctx, lines: &[(IntPolynomial, IntPolynomial)]) -> [UniPoly; 2] {
    let one = UniPoly::constant(IntPolynomial::one(ctx));
    let mut out = [UniPoly::zero(ctx), UniPoly::zero(ctx)];
    for (l, slot) in out.iter_mut().enumerate() {
        let (mut pos, mut neg) = (one.clone(), one.clone());
        for (i, r) in b.rows().iter().enumerate() {
            let e = r[l];
            if e == 0 {
                continue;
            }
            let f = UniPoly::linear(lines[i].0.clone(), lines[i].1.clone()).pow(e.unsigned_abs() as u32);
            if e > 0 {
                pos = pos.mul(&f);
            } else {
                neg = neg.mul(&f);
            }
        }
        *slot = pos.sub(&neg);
    }
    out
}

fn symbolic_lines(b: &BConfig, ctx: &Ctx) -> Vec<(IntPolynomial, IntPolynomial)> {
    (0..b.n()).map(|i| (IntPolynomial::var(ctx, 2 * i), IntPolynomial::var(ctx, 2 * i + 1))).collect()
}

pub fn build_h(b: &BConfig, ctx: &Ctx) -> [UniPoly; 2] {
    build_h_with(b, ctx, &symbolic_lines(b, ctx))
}

/// `[rs] = y_r0 y_s1 - y_r1 y_s0`.
pub fn bracket(ctx: &Ctx, r: usize, s: usize) -> IntPolynomial {
    let y = |i: usize| IntPolynomial::var(ctx, i);
    &(&y(2 * r) * &y(2 * s + 1)) - &(&y(2 * r + 1) * &y(2 * s))
}

pub(crate) fn divide_exactly(f: &IntPolynomial, g: &IntPolynomial, what: &str) -> Result<IntPolynomial> {
    f.exact_divide(g).map_err(|e| match e {
        PolyError::InexactDivision => Error::Internal(format!("{what} does not divide exactly")),
        other => other.into(),
    })
}

#[derive(Clone, Debug)]
pub struct ChowForm {
    pub polynomial: IntPolynomial,
    /// Total degree, `2 d_B`.
    pub degree: i64,
    pub stats: ConfigStats,
    /// Sign applied to the raw quotient to make the leading coefficient
    /// positive.
    pub sign: i32,
}

/// `Res_t(H_1, H_2) / prod [rs]^{nu_rs}` before sign normalisation.
pub fn raw_chow_quotient(b: &BConfig, ctx: &Ctx, cancel: &CancelToken) -> Result<IntPolynomial> {
    let [h1, h2] = build_h(b, ctx);
    let mut f = sylvester_resultant_with(&h1, &h2, cancel)?;
    let mut nu = b.stats().nu;
    nu.sort_by_key(|&(r, s, v)| (v, r, s));
    for (r, s, v) in nu {
        let br = bracket(ctx, r, s);
        for _ in 0..v {
            cancel.check()?;
            f = divide_exactly(&f, &br, "bracket factor")?;
        }
    }
    Ok(f)
}

pub fn chow_form(b: &BConfig) -> Result<ChowForm> {
    chow_form_with(b, None, &CancelToken::new())
}

pub fn chow_form_with(b: &BConfig, names: Option<&[String]>, cancel: &CancelToken) -> Result<ChowForm> {
    let rows = row_names(b.n(), names)?;
    let ctx = pair_context(&rows)?;
    let mut polynomial = raw_chow_quotient(b, &ctx, cancel)?;
    let sign = polynomial.normalize_sign();
    let stats = b.stats();
    Ok(ChowForm { polynomial, degree: 2 * stats.degree, stats, sign })
}

/// Checks the grading: every term has total degree `2 d_B` and its
/// multidegree in the pairs `(y_i0, y_i1)` is the image of a lattice
/// point of `P_B` under `v -> (mu_i - det(b_i, v))_i`.
pub fn check_grading(b: &BConfig, f: &IntPolynomial) -> Result<()> {
    let d = b.degree();
    let map = PolygonMap::chow(b);
    let allowed: HashSet<Vec<i64>> = build_pb(b).lattice_points().iter().map(|&v| map.apply(v)).collect();
    for (m, _) in f.terms() {
        if m.degree() != 2 * d {
            return Err(Error::Internal(format!("term of degree {} in a Chow form of degree {}", m.degree(), 2 * d)));
        }
        let md: Vec<i64> = (0..b.n()).map(|i| m.exp(2 * i) + m.exp(2 * i + 1)).collect();
        if !allowed.contains(&md) {
            return Err(Error::Internal(format!("multidegree {md:?} is not a lattice point of the Chow polygon")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn names(s: &str) -> Vec<String> {
        s.split(',').map(String::from).collect()
    }

    #[test]
    fn naming() {
        assert_eq!(pair_names(&names("a,x1")), names("a0,a1,x1_0,x1_1"));
        assert_eq!(row_names(2, None).unwrap(), names("x1,x2"));
        assert!(row_names(2, Some(&names("a"))).is_err());
        assert!(row_names(2, Some(&names("a,a"))).is_err());
    }

    #[test]
    fn line_in_p3() {
        let b = BConfig::new(vec![[1, 0], [0, 1], [-1, 0], [0, -1]]).unwrap();
        let n = names("a,b,c,d");
        let c = chow_form_with(&b, Some(&n), &CancelToken::new()).unwrap();
        let ctx = c.polynomial.ctx().clone();
        let e = parse_polynomial("a0*b1 - a0*d1 - c0*b1 + c0*d1 - a1*b0 + a1*d0 + c1*b0 - c1*d0", &ctx).unwrap();
        assert!(c.polynomial == e || c.polynomial == -&e);
        assert_eq!(c.degree, 2);
        check_grading(&b, &c.polynomial).unwrap();
    }

    #[test]
    fn h_polynomials() {
        let b = BConfig::new(vec![[2, 0], [-1, 1], [-1, -1]]).unwrap();
        let ctx = pair_context(&names("a,b,c")).unwrap();
        let [h1, h2] = build_h(&b, &ctx);
        assert_eq!((h1.degree(), h2.degree()), (Some(2), Some(1)));
        let v = |s: &str| parse_polynomial(s, &ctx).unwrap();
        assert_eq!(h1.coeff(0), v("a0^2 - b0*c0"));
        assert_eq!(h1.coeff(1), v("2*a0*a1 - b0*c1 - b1*c0"));
        assert_eq!(h1.coeff(2), v("a1^2 - b1*c1"));
        assert_eq!(h2.coeff(0), v("b0 - c0"));
        assert_eq!(h2.coeff(1), v("b1 - c1"));
    }

    #[test]
    fn conic_chow_form() {
        let b = BConfig::new(vec![[2, 0], [-1, 1], [-1, -1]]).unwrap();
        let c = chow_form(&b).unwrap();
        assert_eq!(c.degree, 4);
        assert!(c.polynomial.is_homogeneous());
        assert_eq!(c.polynomial.total_degree(), Some(4));
        check_grading(&b, &c.polynomial).unwrap();
    }

    #[test]
    fn bracket_division_is_exact() {
        // (1,1) and (-1,-1) sit in opposite open quadrants: nu = 1.
        let b = BConfig::new(vec![[1, 1], [-1, -1], [1, 0], [-1, 0], [0, 1], [0, -1]]).unwrap();
        assert_eq!(b.stats().nu_sum, 1);
        let c = chow_form(&b).unwrap();
        assert_eq!(c.degree, 2 * b.degree());
        check_grading(&b, &c.polynomial).unwrap();
    }
}
