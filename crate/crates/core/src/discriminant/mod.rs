//! Full discriminants `E_A`, `Ẽ_B`, the facet binomials `D_v` and the
//! A-discriminant `D_A`.
//!
//! `Ẽ_B` and `E_A` are obtained by specialising the Chow form's
//! resultant formula before the resultant is taken: the lines
//! `y_i0 + y_i1 t` become `(b_i1 + b_i2 t) x_i` (or `(b_i1 + b_i2 t) X / x_i`
//! with `X = x_1 ... x_n`). Rows paired by a bracket that would specialise
//! to zero are perturbed until the bracket division is done.
//!
//! Both discriminants are images of the bracket quotient before its sign
//! is normalised, so reciprocity holds exactly.

pub mod horn;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::cancel::CancelToken;
use crate::chow::{build_h_with, divide_exactly, row_names, ChowForm};
use crate::error::{Error, Result};
use crate::lattice::{det2, BConfig, RelevantLine};
use crate::poly::{
    formal_resultant, substitute, Ctx, IntPolynomial, Monomial, UniPoly, VariableContext,
};
use crate::polygon::build_qb;

pub use horn::{horn_discriminant, horn_implicitize, HornCurve};


fn x_context(b: &BConfig, names: Option<&[String]>) -> Result<Ctx> {
    Ok(VariableContext::new(row_names(b.n(), names)?)?)
}

fn dual_image(b: &BConfig, ctx: &Ctx, i: usize, l: usize) -> IntPolynomial {
    IntPolynomial::term(ctx, b.row(i)[l], Monomial::var(b.n(), i, 1))
}

/// Rows that appear in a pair with `nu_rs > 0` and `det(b_r, b_s) = 0`.
fn symbolic_rows(b: &BConfig) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for (r, s, _) in b.stats().nu {
        if det2(b.row(r), b.row(s)) == 0 {
            out.insert(r);
            out.insert(s);
        }
    }
    out
}

/// Resultant of `h_1`, `h_2` read as binary forms of degrees `beta_1`,
/// `beta_2`.
fn beta_resultant(b: &BConfig, h1: &UniPoly, h2: &UniPoly, cancel: &CancelToken) -> Result<IntPolynomial> {
    let [b1, b2] = b.beta();
    Ok(formal_resultant(h1, b1 as usize, h2, b2 as usize, cancel)?)
}

/// `Res_t(H_1, H_2) / prod [rs]^nu` under `y_il -> b_il x_i`.
///
/// Under this substitution `h_l = x^{N_l} (w_l F_l(t) - G_l(t))` with
/// `w_l = x^{b_l}` and integer `F_l`, `G_l`, so the resultant is taken in
/// `Z[w_1, w_2]` and lifted back by a monomial map. Brackets that vanish
/// are kept alive by moving the rows of `symbolic_rows` to
/// `x_i (b_il + eps c_il)` with pairwise independent `c_i = (1, k)`;
/// `eps` is set to zero after the division.
fn specialised_quotient(b: &BConfig, xctx: &Ctx, cancel: &CancelToken) -> Result<IntPolynomial> {
    let n = b.n();
    let sym = symbolic_rows(b);
    let wctx = VariableContext::new(["w1", "w2", "eps"])?;
    let eps = IntPolynomial::var(&wctx, 2);
    let forms: Vec<[IntPolynomial; 2]> = (0..n)
        .map(|i| {
            let r = b.row(i);
            let c = sym.iter().position(|&j| j == i).map_or([0, 0], |k| [1, k as i64 + 1]);
            [0, 1].map(|l| &IntPolynomial::constant(&wctx, r[l]) + &eps.scale(&BigInt::from(c[l])))
        })
        .collect();

    let beta = b.beta();
    let mut shift = vec![0i64; n];
    let mut eqs = Vec::with_capacity(2);
    for l in 0..2 {
        let one = UniPoly::constant(IntPolynomial::one(&wctx));
        let (mut pos, mut neg) = (one.clone(), one);
        for i in 0..n {
            let e = b.row(i)[l];
            if e == 0 {
                continue;
            }
            let f = UniPoly::linear(forms[i][0].clone(), forms[i][1].clone()).pow(e.unsigned_abs() as u32);
            if e > 0 {
                pos = pos.mul(&f);
            } else {
                neg = neg.mul(&f);
                shift[i] += -e * beta[1 - l];
            }
        }
        eqs.push(pos.scale(&IntPolynomial::var(&wctx, l)).sub(&neg));
    }
    let mut f = formal_resultant(&eqs[0], beta[0] as usize, &eqs[1], beta[1] as usize, cancel)?;
    if f.is_zero() {
        return Err(Error::Internal("specialised resultant vanishes".into()));
    }
    let mut nu = b.stats().nu;
    nu.sort_by_key(|&(r, s, v)| (v, r, s));
    for (r, s, v) in nu {
        let br = &(&forms[r][0] * &forms[s][1]) - &(&forms[r][1] * &forms[s][0]);
        for _ in 0..v {
            cancel.check()?;
            f = divide_exactly(&f, &br, "specialised bracket")?;
        }
        shift[r] -= v;
        shift[s] -= v;
    }

    let cols = [b.column(0), b.column(1)];
    let mut terms = Vec::with_capacity(f.len());
    for (m, c) in f.terms() {
        let e = m.to_i64();
        if e[2] != 0 {
            continue;
        }
        let x: Vec<i64> = (0..n).map(|i| shift[i] + e[0] * cols[0][i] + e[1] * cols[1][i]).collect();
        if x.iter().any(|&v| v < 0) {
            return Err(Error::Internal("specialised quotient is not a polynomial".into()));
        }
        terms.push((Monomial::from_i64(&x), c.clone()));
    }
    Ok(IntPolynomial::from_terms(xctx, terms))
}

/// `E_A(x) = Ẽ_B(X / x_1, ..., X / x_n) / X^{d_B}` with `X = x_1 ... x_n`.
fn full_from_dual(b: &BConfig, dual: &IntPolynomial) -> Result<IntPolynomial> {
    let d = b.degree();
    let mut terms = Vec::with_capacity(dual.len());
    for (m, c) in dual.terms() {
        let e = m.to_i64();
        let total: i64 = e.iter().sum();
        let image: Vec<i64> = e.iter().map(|&ej| total - ej - d).collect();
        if image.iter().any(|&x| x < 0) {
            return Err(Error::Internal("(x_1...x_n)^d_B does not divide the full chart".into()));
        }
        terms.push((Monomial::from_i64(&image), c.clone()));
    }
    Ok(IntPolynomial::from_terms(dual.ctx(), terms))
}

/// `Ẽ_B(x) = C̃_B(b_il x_i)`.
pub fn dual_full_discriminant(b: &BConfig) -> Result<IntPolynomial> {
    dual_full_discriminant_with(b, None, &CancelToken::new())
}

pub fn dual_full_discriminant_with(
    b: &BConfig,
    names: Option<&[String]>,
    cancel: &CancelToken,
) -> Result<IntPolynomial> {
    let ctx = x_context(b, names)?;
    specialised_quotient(b, &ctx, cancel)
}

/// Substitutes `y_il -> b_il x_i` into an already computed Chow form.
/// Agrees with [`dual_full_discriminant`] up to the form's `sign`.
pub fn dual_full_discriminant_from_chow(b: &BConfig, chow: &ChowForm, names: Option<&[String]>) -> Result<IntPolynomial> {
    let ctx = x_context(b, names)?;
    let images: Vec<Option<IntPolynomial>> = (0..b.n())
        .flat_map(|i| [0, 1].map(|l| Some(dual_image(b, &ctx, i, l))))
        .collect();
    Ok(substitute(&chow.polynomial, &images, &ctx, true)?)
}

/// `E_A(x) = (x_1 ... x_n)^{d_B} C̃_B(b_il / x_i)`.
pub fn full_discriminant(b: &BConfig) -> Result<IntPolynomial> {
    full_discriminant_with(b, None, &CancelToken::new())
}

pub fn full_discriminant_with(b: &BConfig, names: Option<&[String]>, cancel: &CancelToken) -> Result<IntPolynomial> {
    b.require_prime()?;
    let ctx = x_context(b, names)?;
    full_from_dual(b, &specialised_quotient(b, &ctx, cancel)?)
}

/// `Res_t(h_1, h_2) / (prod det(b_r, b_s)^nu_rs (x_r x_s)^nu_rs)`, valid
/// when every relevant line is a coordinate axis.
pub fn fast_dual_full_discriminant(b: &BConfig) -> Result<IntPolynomial> {
    fast_dual_full_discriminant_with(b, None, &CancelToken::new())
}

pub fn fast_dual_full_discriminant_with(
    b: &BConfig,
    names: Option<&[String]>,
    cancel: &CancelToken,
) -> Result<IntPolynomial> {
    if let Some(line) = b.relevant_lines().iter().find(|l| l.v[0] != 0 && l.v[1] != 0) {
        return Err(Error::Precondition(format!(
            "relevant line through ({}, {}) is not a coordinate axis",
            line.v[0], line.v[1]
        )));
    }
    let ctx = x_context(b, names)?;
    let [h1, h2] = specialized_h_in(b, &ctx);
    let res = beta_resultant(b, &h1, &h2, cancel)?;
    let mut c = BigInt::one();
    let mut m = Monomial::one(b.n());
    for (r, s, v) in b.stats().nu {
        let d = BigInt::from(det2(b.row(r), b.row(s)));
        c *= num_traits::pow(d, v as usize);
        m = m.mul(&Monomial::var(b.n(), r, v)).mul(&Monomial::var(b.n(), s, v));
    }
    divide_exactly(&res, &IntPolynomial::term(&ctx, c, m), "bracket images")
}

/// `h_l(t)`: `H_l` under `y_il -> b_il x_i`.
pub fn specialized_h(b: &BConfig, names: Option<&[String]>) -> Result<[UniPoly; 2]> {
    Ok(specialized_h_in(b, &x_context(b, names)?))
}

fn specialized_h_in(b: &BConfig, ctx: &Ctx) -> [UniPoly; 2] {
    let lines: Vec<_> = (0..b.n())
        .map(|i| (dual_image(b, ctx, i, 0), dual_image(b, ctx, i, 1)))
        .collect();
    build_h_with(b, ctx, &lines)
}

/// Power of `v_1 + v_2 t` removed from `h_l` for one relevant line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineExponent {
    pub line: usize,
    pub l: usize,
    /// `delta_v |v_l|`.
    pub expected: usize,
    /// Found by trial division.
    pub found: usize,
}

#[derive(Clone, Debug)]
pub struct ResidualFactors {
    pub p: [UniPoly; 2],
    pub exponents: Vec<LineExponent>,
}

impl ResidualFactors {
    pub fn mismatches(&self) -> impl Iterator<Item = &LineExponent> {
        self.exponents.iter().filter(|e| e.expected != e.found)
    }
}

/// `p_l`: `h_l` with every relevant-line factor `v_1 + v_2 t` divided out.
pub fn residual_factors(b: &BConfig, names: Option<&[String]>) -> Result<ResidualFactors> {
    b.require_nonzero_rows()?;
    let ctx = x_context(b, names)?;
    Ok(residual_factors_in(b, &ctx))
}

fn residual_factors_in(b: &BConfig, ctx: &Ctx) -> ResidualFactors {
    let [mut p1, mut p2] = specialized_h_in(b, ctx);
    let beta = b.beta();
    let mut exponents = Vec::new();
    for (k, line) in b.relevant_lines().iter().enumerate() {
        let (v1, v2) = (BigInt::from(line.v[0]), BigInt::from(line.v[1]));
        for (l, p) in [&mut p1, &mut p2].into_iter().enumerate() {
            let expected = (line.delta * line.v[l].abs()) as usize;
            // The horizontal form s sits at infinity: its power is the
            // drop in degree.
            let found = if line.v[1] == 0 {
                beta[l] as usize - p.degree().unwrap_or(0)
            } else {
                let (found, rest) = p.strip_linear(&v1, &v2);
                *p = rest;
                found
            };
            exponents.push(LineExponent { line: k, l, expected, found });
        }
    }
    ResidualFactors { p: [p1, p2], exponents }
}

/// `D_v` with `b^(v)_i = det(b_i, v)`:
/// `prod_{b^(v)_j<0} (b^(v)_j)^{-b^(v)_j} prod_{b^(v)_i>0} x_i^{b^(v)_i}
///  - prod_{b^(v)_i>0} (b^(v)_i)^{b^(v)_i} prod_{b^(v)_j<0} x_j^{-b^(v)_j}`,
/// divided by the gcd of its two coefficients.
pub fn facet_binomial(b: &BConfig, line: &RelevantLine, names: Option<&[String]>) -> Result<IntPolynomial> {
    let ctx = x_context(b, names)?;
    Ok(facet_binomial_in(b, line, &ctx))
}

fn facet_binomial_in(b: &BConfig, line: &RelevantLine, ctx: &Ctx) -> IntPolynomial {
    let n = b.n();
    let (mut c_pos, mut c_neg) = (BigInt::one(), BigInt::one());
    let (mut m_pos, mut m_neg) = (vec![0i64; n], vec![0i64; n]);
    for i in 0..n {
        let e = det2(b.row(i), line.v);
        if e > 0 {
            c_pos *= num_traits::pow(BigInt::from(e), e as usize);
            m_pos[i] = e;
        } else if e < 0 {
            c_neg *= num_traits::pow(BigInt::from(e), (-e) as usize);
            m_neg[i] = -e;
        }
    }
    let g = c_neg.gcd(&c_pos);
    &IntPolynomial::term(ctx, &c_neg / &g, Monomial::from_i64(&m_pos))
        - &IntPolynomial::term(ctx, &c_pos / &g, Monomial::from_i64(&m_neg))
}

#[derive(Clone, Debug)]
pub struct Facet {
    pub line: RelevantLine,
    pub binomial: IntPolynomial,
    pub delta: i64,
}

/// Everything produced on the way to `D_A`.
///
/// `E_A = nu' x^{u'} D_A prod D_v^{delta_v}` and
/// `D_A = x^u r_B(1/x) / nu`.
#[derive(Clone, Debug)]
pub struct DiscriminantBundle {
    pub e_a: IntPolynomial,
    pub e_dual: IntPolynomial,
    pub d_a: IntPolynomial,
    pub r_b: IntPolynomial,
    pub facets: Vec<Facet>,
    pub nu: BigInt,
    pub u: Monomial,
    pub nu_prime: BigInt,
    pub u_prime: Monomial,
    pub residual: ResidualFactors,
}

impl DiscriminantBundle {
    /// `Ẽ_B(x) = (x_1 ... x_n)^{d_B} E_A(1/x)`.
    pub fn check_reciprocity(&self, b: &BConfig) -> Result<()> {
        let x_d = Monomial::from_i64(&vec![b.degree(); b.n()]);
        if self.e_a.reciprocal().mul_monomial(&x_d) != self.e_dual {
            return Err(Error::Internal("reciprocity between the full discriminants fails".into()));
        }
        Ok(())
    }

    /// Rebuilds `E_A` from its factors.
    pub fn check_factorization(&self) -> Result<()> {
        let ctx = self.e_a.ctx();
        let mut f = &IntPolynomial::term(ctx, self.nu_prime.clone(), self.u_prime.clone()) * &self.d_a;
        for facet in &self.facets {
            f = &f * &facet.binomial.pow(facet.delta as u32);
        }
        if f != self.e_a {
            return Err(Error::Internal("E_A differs from the product of its factors".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mono = |m: &Monomial| m.to_i64();
        json!({
            "variables": self.e_a.ctx().names(),
            "E_A": self.e_a.to_json(),
            "E_dual": self.e_dual.to_json(),
            "D_A": self.d_a.to_json(),
            "r_B": self.r_b.to_json(),
            "facets": self.facets.iter().map(|f| json!({
                "v": f.line.v,
                "rows": f.line.members.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "delta": f.delta,
                "D_v": f.binomial.to_json(),
            })).collect::<Vec<_>>(),
            "nu": self.nu.to_string(),
            "u": mono(&self.u),
            "nu_prime": self.nu_prime.to_string(),
            "u_prime": mono(&self.u_prime),
            "line_exponents": self.residual.exponents.iter().map(|e| json!({
                "line": e.line, "l": e.l + 1, "expected": e.expected, "found": e.found,
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn a_discriminant(b: &BConfig) -> Result<DiscriminantBundle> {
    a_discriminant_with(b, None, &CancelToken::new())
}

pub fn a_discriminant_with(b: &BConfig, names: Option<&[String]>, cancel: &CancelToken) -> Result<DiscriminantBundle> {
    b.require_nonzero_rows()?;
    b.require_prime()?;
    let ctx = x_context(b, names)?;
    let n = b.n();

    let residual = residual_factors_in(b, &ctx);
    let point = build_qb(b)?.is_point();
    let [p1, p2] = &residual.p;
    let (Some(m1), Some(m2)) = (p1.degree(), p2.degree()) else {
        return Err(Error::Internal("a residual factor vanishes".into()));
    };
    let r_b = formal_resultant(p1, m1, p2, m2, cancel)?;
    if r_b.is_zero() {
        return Err(Error::Internal("residual factors share a root".into()));
    }
    let (d_a, nu, u) = if point {
        (IntPolynomial::one(&ctx), r_b.constant_value().unwrap_or_else(BigInt::one), Monomial::one(n))
    } else {
        let (cleared, u) = r_b.reciprocal().clear_monomial();
        let (content, _, d_a) = cleared.content_and_primitive()?;
        let lead_negative = cleared.leading_coefficient().is_some_and(|c| c.is_negative());
        (d_a, if lead_negative { -content } else { content }, u)
    };

    let facets: Vec<Facet> = b
        .relevant_lines()
        .into_iter()
        .map(|line| Facet { binomial: facet_binomial_in(b, &line, &ctx), delta: line.delta, line })
        .collect();

    let e_dual = specialised_quotient(b, &ctx, cancel)?;
    let e_a = full_from_dual(b, &e_dual)?;

    let mut q = divide_exactly(&e_a, &d_a, "D_A in E_A")?;
    for f in &facets {
        for _ in 0..f.delta {
            cancel.check()?;
            q = divide_exactly(&q, &f.binomial, "facet binomial in E_A")?;
        }
    }
    if !q.is_monomial() {
        return Err(Error::Internal(format!("E_A / (D_A prod D_v^delta_v) has {} terms", q.len())));
    }
    let (u_prime, nu_prime) = q.leading_term().map(|(m, c)| (m.clone(), c.clone())).expect("one term");
    if nu.is_zero() {
        return Err(Error::Internal("zero content in r_B".into()));
    }

    let bundle = DiscriminantBundle { e_a, e_dual, d_a, r_b, facets, nu, u, nu_prime, u_prime, residual };
    bundle.check_reciprocity(b)?;
    Ok(bundle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn intro() -> BConfig {
        BConfig::new(vec![[1, 0], [0, 1], [-1, -1], [-1, 0], [0, -1], [1, 1], [-2, 0], [0, -2], [2, 2]]).unwrap()
    }

    fn abc(n: usize) -> Vec<String> {
        "abcdefghi".chars().take(n).map(String::from).collect()
    }

    #[test]
    fn square_dual_discriminant() {
        let b = BConfig::new(vec![[1, 0], [0, 1], [-1, 0], [0, -1]]).unwrap();
        let e = dual_full_discriminant(&b).unwrap();
        let ctx = e.ctx().clone();
        let expect = parse_polynomial("x1*x2 + x1*x4 + x3*x2 + x3*x4", &ctx).unwrap();
        assert!(e == expect || e == -&expect);
        assert_eq!(e.len(), 4);
    }

    #[test]
    fn specialised_h_matches_substituted_h() {
        let b = BConfig::new(vec![[2, 0], [-1, 1], [-1, -1]]).unwrap();
        let [h1, h2] = specialized_h(&b, None).unwrap();
        let ctx = h1.ctx().clone();
        let v = |s: &str| parse_polynomial(s, &ctx).unwrap();
        assert_eq!(h1.coeff(0), v("4*x1^2 - x2*x3"));
        assert!(h1.coeff(1).is_zero());
        assert_eq!(h1.coeff(2), v("x2*x3"));
        assert_eq!(h2.coeff(0), v("-x2 + x3"));
        assert_eq!(h2.coeff(1), v("x2 + x3"));
    }

    #[test]
    fn intro_facets() {
        let b = intro();
        let n = abc(9);
        let lines = b.relevant_lines();
        let ctx = VariableContext::new(n.clone()).unwrap();
        let diag = lines.iter().find(|l| l.v == [1, 1]).unwrap();
        let d = facet_binomial(&b, diag, Some(&n)).unwrap();
        assert_eq!(d, parse_polynomial("a*e*h^2 - b*d*g^2", &ctx).unwrap());
        let horiz = lines.iter().find(|l| l.v == [-1, 0]).unwrap();
        let d = facet_binomial(&b, horiz, Some(&n)).unwrap();
        // det(b_i, (-1, 0)) = b_i2.
        assert_eq!(d, parse_polynomial("b*f*i^2 - c*e*h^2", &ctx).unwrap());
    }

    #[test]
    fn intro_residual_exponents() {
        let r = residual_factors(&intro(), None).unwrap();
        assert_eq!(r.mismatches().count(), 0);
        let total: usize = r.exponents.iter().map(|e| e.found).sum();
        assert_eq!(total, 4);
    }

    #[test]
    fn fast_path_refuses_diagonal_line() {
        assert!(matches!(fast_dual_full_discriminant(&intro()), Err(Error::Precondition(_))));
    }

    #[test]
    fn fast_path_on_axis_lines() {
        let b = BConfig::new(vec![[1, 0], [-1, 0], [1, 1], [-1, -2], [0, 1]]).unwrap();
        assert_eq!(fast_dual_full_discriminant(&b).unwrap(), dual_full_discriminant(&b).unwrap());
    }

    #[test]
    fn from_chow_agrees_up_to_sign() {
        let b = BConfig::new(vec![[2, 0], [-1, 1], [-1, -1], [0, 0]]).unwrap();
        let chow = crate::chow::chow_form(&b).unwrap();
        let via = dual_full_discriminant_from_chow(&b, &chow, None).unwrap();
        let direct = dual_full_discriminant(&b).unwrap();
        assert_eq!(via, direct.scale(&BigInt::from(chow.sign)));
    }

    #[test]
    fn twisted_cubic() {
        let b = BConfig::new(vec![[1, 0], [-2, 1], [1, -2], [0, 1]]).unwrap();
        let bundle = a_discriminant(&b).unwrap();
        let ctx = bundle.d_a.ctx().clone();
        let disc = parse_polynomial(
            "27*x1^2*x4^2 - 18*x1*x2*x3*x4 + 4*x1*x3^3 + 4*x2^3*x4 - x2^2*x3^2",
            &ctx,
        )
        .unwrap();
        assert_eq!(bundle.d_a, disc);
        bundle.check_factorization().unwrap();
        assert!(bundle.facets.is_empty());
    }

    #[test]
    fn zero_row_rejected() {
        let b = BConfig::new(vec![[2, 0], [-1, 1], [-1, -1], [0, 0]]).unwrap();
        assert!(matches!(a_discriminant(&b), Err(Error::ZeroRow(4))));
    }

    #[test]
    fn symmetric_gives_one() {
        let b = BConfig::new(vec![[1, 0], [0, 1], [-1, 0], [0, -1]]).unwrap();
        let bundle = a_discriminant(&b).unwrap();
        assert!(bundle.d_a.is_one());
        bundle.check_factorization().unwrap();
    }
}
