//! The Horn uniformization `w_l = prod_i (b_i1 + b_i2 t)^{b_il}` and its
//! implicit equation `Delta(w_1, w_2)`, lifted back to `D_A` through
//! `w_l -> prod_i x_i^{b_il}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::cancel::CancelToken;
use crate::chow::row_names;
use crate::error::{Error, Result};
use crate::lattice::{primitive, BConfig, Row};
use crate::poly::{
    substitute_scaled, sylvester_resultant_with, IntPolynomial, Monomial, PolyError, ScaledMonomial, UniPoly,
    VariableContext,
};

/// A linear form `c_1 + c_2 t` with a multiplicity.
pub type Factor = (Row, u32);

#[derive(Clone, Debug)]
pub struct HornCurve {
    /// Per coordinate, the forms `b_i1 + b_i2 t` with `b_il > 0`.
    pub numerators: [Vec<Factor>; 2],
    /// Per coordinate, the forms with `b_il < 0`, multiplicity `-b_il`.
    pub denominators: [Vec<Factor>; 2],
    /// Primitive forms left after cancelling common factors, so that
    /// `w_l = (p_l / q_l) * prod num / prod den`.
    pub reduced_numerators: [Vec<Factor>; 2],
    pub reduced_denominators: [Vec<Factor>; 2],
    pub scalars: [(BigInt, BigInt); 2],
    /// `Delta(w_1, w_2)`, primitive with positive leading coefficient;
    /// the constant 1 when the curve degenerates to a point.
    pub implicit: IntPolynomial,
}

/// Direction with a positive first nonzero entry and `r = lambda * dir`.
fn oriented(r: Row) -> (Row, i64) {
    let (d, k) = primitive(r);
    if d[0] < 0 || (d[0] == 0 && d[1] < 0) {
        ([-d[0], -d[1]], -k)
    } else {
        (d, k)
    }
}

fn product(ctx: &crate::poly::Ctx, factors: &[Factor]) -> UniPoly {
    let mut acc = UniPoly::constant(IntPolynomial::one(ctx));
    for &(f, e) in factors {
        let lin = UniPoly::linear(IntPolynomial::constant(ctx, f[0]), IntPolynomial::constant(ctx, f[1]));
        acc = acc.mul(&lin.pow(e));
    }
    acc
}

pub fn horn_implicitize(b: &BConfig) -> Result<HornCurve> {
    horn_implicitize_with(b, &CancelToken::new())
}

pub fn horn_implicitize_with(b: &BConfig, cancel: &CancelToken) -> Result<HornCurve> {
    b.require_nonzero_rows()?;
    let mut numerators: [Vec<Factor>; 2] = Default::default();
    let mut denominators: [Vec<Factor>; 2] = Default::default();
    let mut reduced_numerators: [Vec<Factor>; 2] = Default::default();
    let mut reduced_denominators: [Vec<Factor>; 2] = Default::default();
    let mut scalars = [(BigInt::one(), BigInt::one()), (BigInt::one(), BigInt::one())];
    for l in 0..2 {
        let mut by_dir: BTreeMap<Row, i64> = BTreeMap::new();
        for &r in b.rows() {
            let e = r[l];
            if e == 0 {
                continue;
            }
            let (d, lambda) = oriented(r);
            let lam = num_traits::pow(BigInt::from(lambda), e.unsigned_abs() as usize);
            if e > 0 {
                numerators[l].push((r, e as u32));
                scalars[l].0 *= lam;
            } else {
                denominators[l].push((r, (-e) as u32));
                scalars[l].1 *= lam;
            }
            *by_dir.entry(d).or_default() += e;
        }
        for (d, e) in by_dir {
            // The horizontal direction is the constant form 1.
            if d[1] == 0 || e == 0 {
                continue;
            }
            if e > 0 {
                reduced_numerators[l].push((d, e as u32));
            } else {
                reduced_denominators[l].push((d, (-e) as u32));
            }
        }
    }

    let ctx = VariableContext::new(["w1", "w2"])?;
    let eqs: Vec<UniPoly> = (0..2)
        .map(|l| {
            let (p, q) = &scalars[l];
            let w = IntPolynomial::var(&ctx, l).scale(q);
            let lhs = product(&ctx, &reduced_denominators[l]).scale(&w);
            let rhs = product(&ctx, &reduced_numerators[l]).scale(&IntPolynomial::constant(&ctx, p.clone()));
            lhs.sub(&rhs)
        })
        .collect();
    let implicit = match sylvester_resultant_with(&eqs[0], &eqs[1], cancel) {
        Ok(r) if r.is_zero() => return Err(Error::Internal("Horn parametrization has a common factor".into())),
        Ok(r) if r.is_constant() => IntPolynomial::one(&ctx),
        Ok(r) => r.clear_monomial().0.content_and_primitive()?.2,
        Err(PolyError::DegenerateResultant) => IntPolynomial::one(&ctx),
        Err(e) => return Err(e.into()),
    };
    Ok(HornCurve { numerators, denominators, reduced_numerators, reduced_denominators, scalars, implicit })
}

impl HornCurve {
    /// `Delta(prod x_i^{b_i1}, prod x_i^{b_i2})` with monomial factors and
    /// content removed, sign normalised.
    pub fn lift(&self, b: &BConfig, names: Option<&[String]>) -> Result<IntPolynomial> {
        let ctx = VariableContext::new(row_names(b.n(), names)?)?;
        if self.implicit.is_one() {
            return Ok(IntPolynomial::one(&ctx));
        }
        let images: Vec<Option<ScaledMonomial>> =
            (0..2).map(|l| Some(ScaledMonomial::integer(1, Monomial::from_i64(&b.column(l))))).collect();
        let s = substitute_scaled(&self.implicit, &images, &ctx, true)?;
        Ok(s.numerator.content_and_primitive()?.2)
    }
}

/// `D_A` through the Horn curve.
pub fn horn_discriminant(b: &BConfig, names: Option<&[String]>, cancel: &CancelToken) -> Result<IntPolynomial> {
    horn_implicitize_with(b, cancel)?.lift(b, names)
}
