use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::context::Ctx;
use super::{IntPolynomial, Monomial, PolyError};

/// Image of one variable under a scaled-monomial substitution:
/// `x ↦ (num / den) * monomial`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledMonomial {
    pub num: BigInt,
    pub den: BigInt,
    pub monomial: Monomial,
}

impl ScaledMonomial {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>, monomial: Monomial) -> Self {
        Self { num: num.into(), den: den.into(), monomial }
    }

    pub fn integer(c: impl Into<BigInt>, monomial: Monomial) -> Self {
        Self::new(c, 1, monomial)
    }
}

/// Result of a scaled-monomial substitution:
/// `value = numerator / (denominator * monomial_denominator)`.
///
/// The numerator is a genuine polynomial without monomial factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substituted {
    pub numerator: IntPolynomial,
    pub denominator: BigInt,
    pub monomial_denominator: Monomial,
}

impl Substituted {
    /// `numerator / monomial_denominator` as a Laurent polynomial, exact
    /// only when `denominator` is one.
    pub fn laurent(&self) -> IntPolynomial {
        self.numerator.mul_monomial(&self.monomial_denominator.inverse())
    }
}

fn resolve_images<'a, T>(
    f: &IntPolynomial,
    images: &'a [Option<T>],
    strict: bool,
) -> Result<Vec<Option<&'a T>>, PolyError> {
    if images.len() != f.ctx().len() {
        return Err(PolyError::Shape("substitution map length differs from context".into()));
    }
    let used: Vec<bool> = (0..f.ctx().len()).map(|i| f.terms().iter().any(|(m, _)| m.exp(i) != 0)).collect();
    let mut out = Vec::with_capacity(images.len());
    for (i, img) in images.iter().enumerate() {
        if img.is_none() && used[i] && strict {
            return Err(PolyError::UnmappedVariable(f.ctx().name(i).to_string()));
        }
        out.push(img.as_ref());
    }
    Ok(out)
}

/// Applies `x_i ↦ (num_i/den_i) * m_i`.
///
/// With `strict` off, an unmapped variable is carried over to the target
/// context under the same name.
pub fn substitute_scaled(
    f: &IntPolynomial,
    images: &[Option<ScaledMonomial>],
    target: &Ctx,
    strict: bool,
) -> Result<Substituted, PolyError> {
    let imgs = resolve_images(f, images, strict)?;
    let carry = carry_map(f, target, &imgs)?;
    for img in imgs.iter().flatten() {
        if img.den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if img.monomial.nvars() != target.len() {
            return Err(PolyError::ContextMismatch);
        }
    }
    let mut raw: Vec<(Monomial, BigRational)> = Vec::with_capacity(f.len());
    let mut power_cache: HashMap<(usize, i64), BigRational> = HashMap::new();
    for (m, c) in f.terms() {
        let mut coeff = BigRational::from_integer(c.clone());
        let mut mono = Monomial::one(target.len());
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let e = i64::from(e);
            match imgs[i] {
                Some(img) => {
                    let p = power_cache.entry((i, e)).or_insert_with(|| {
                        let base = BigRational::new(img.num.clone(), img.den.clone());
                        num_traits::pow::Pow::pow(&base, e as i32)
                    });
                    coeff *= &*p;
                    mono = mono.mul(&img.monomial.pow_signed(e));
                }
                None => {
                    let j = carry[i].expect("checked by carry_map");
                    mono = mono.mul(&Monomial::var(target.len(), j, e));
                }
            }
        }
        raw.push((mono, coeff));
    }
    let denominator = raw.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let numer = IntPolynomial::from_terms(
        target,
        raw.into_iter().map(|(m, c)| (m, (c * BigRational::from_integer(denominator.clone())).to_integer())),
    );
    let (numerator, shift) = numer.clear_monomial();
    Ok(Substituted { numerator, denominator, monomial_denominator: shift })
}

/// General ring substitution `x_i ↦ images[i]`, all images living in
/// `target`. Single-term images take a term-by-term fast path.
pub fn substitute(
    f: &IntPolynomial,
    images: &[Option<IntPolynomial>],
    target: &Ctx,
    strict: bool,
) -> Result<IntPolynomial, PolyError> {
    let imgs = resolve_images(f, images, strict)?;
    let carry = carry_map(f, target, &imgs)?;
    for img in imgs.iter().flatten() {
        if !super::context::same_context(img.ctx(), target) {
            return Err(PolyError::ContextMismatch);
        }
    }
    let used_all_monomial = imgs.iter().enumerate().all(|(i, img)| match img {
        Some(p) => p.len() <= 1 || f.terms().iter().all(|(m, _)| m.exp(i) == 0),
        None => true,
    });
    if used_all_monomial {
        let mut terms = Vec::with_capacity(f.len());
        'outer: for (m, c) in f.terms() {
            let mut coeff = c.clone();
            let mut mono = Monomial::one(target.len());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = i64::from(e);
                match imgs[i] {
                    Some(p) => {
                        let Some((pm, pc)) = p.leading_term() else {
                            if e > 0 {
                                continue 'outer;
                            }
                            return Err(PolyError::DivisionByZero);
                        };
                        if e < 0 {
                            if !(pc.is_one() || (-pc).is_one()) {
                                return Err(PolyError::NonPolynomial);
                            }
                            if (-e) % 2 == 1 && pc.is_negative() {
                                coeff = -coeff;
                            }
                        } else {
                            coeff *= num_traits::pow::Pow::pow(pc, e as u64);
                        }
                        mono = mono.mul(&pm.pow_signed(e));
                    }
                    None => mono = mono.mul(&Monomial::var(target.len(), carry[i].expect("carried"), e)),
                }
            }
            terms.push((mono, coeff));
        }
        return Ok(IntPolynomial::from_terms(target, terms));
    }

    let mut powers: HashMap<(usize, i64), IntPolynomial> = HashMap::new();
    let mut acc = IntPolynomial::zero(target);
    for (m, c) in f.terms() {
        let mut t = IntPolynomial::constant(target, c.clone());
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let e = i64::from(e);
            let factor = match imgs[i] {
                Some(p) => {
                    if e < 0 && !p.is_monomial() {
                        return Err(PolyError::NonPolynomial);
                    }
                    if e < 0 {
                        let inv = IntPolynomial::one(target).exact_divide(p)?;
                        inv.pow((-e) as u32)
                    } else {
                        powers.entry((i, e)).or_insert_with(|| p.pow(e as u32)).clone()
                    }
                }
                None => IntPolynomial::term(target, 1, Monomial::var(target.len(), carry[i].expect("carried"), e)),
            };
            t = &t * &factor;
        }
        acc = &acc + &t;
    }
    Ok(acc)
}

fn carry_map<T>(f: &IntPolynomial, target: &Ctx, imgs: &[Option<&T>]) -> Result<Vec<Option<usize>>, PolyError> {
    let src = f.ctx();
    imgs.iter()
        .enumerate()
        .map(|(i, img)| match img {
            Some(_) => Ok(None),
            None => match target.position(src.name(i)) {
                Some(j) => Ok(Some(j)),
                None if f.terms().iter().any(|(m, _)| m.exp(i) != 0) => {
                    Err(PolyError::UnmappedVariable(src.name(i).to_string()))
                }
                None => Ok(None),
            },
        })
        .collect()
}

impl Monomial {
    /// `self^e` for any sign of `e`.
    pub fn pow_signed(&self, e: i64) -> Monomial {
        if e >= 0 {
            self.pow(e as u32)
        } else {
            self.inverse().pow((-e) as u32)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VariableContext;

    #[test]
    fn scale_variable() {
        let ctx = VariableContext::numbered("x", 1);
        let f = IntPolynomial::var(&ctx, 0).pow(2);
        let img = ScaledMonomial::integer(2, Monomial::var(1, 0, 1));
        let r = substitute_scaled(&f, &[Some(img)], &ctx, true).unwrap();
        assert_eq!(r.denominator, BigInt::one());
        assert_eq!(r.laurent(), IntPolynomial::var(&ctx, 0).pow(2).scale(&BigInt::from(4)));
    }

    #[test]
    fn reciprocal_with_denominator_tracking() {
        let src = VariableContext::new(["y11", "y21"]).unwrap();
        let dst = VariableContext::new(["x1", "y21"]).unwrap();
        let f = &IntPolynomial::var(&src, 0) * &IntPolynomial::var(&src, 1);
        let img = ScaledMonomial::integer(1, Monomial::var(2, 0, -1));
        let r = substitute_scaled(&f, &[Some(img), None], &dst, false).unwrap();
        assert!(r.numerator.is_one());
        assert_eq!(r.monomial_denominator, Monomial::from_exps(&[1, -1]));
        assert_eq!(r.laurent().terms()[0].0, Monomial::from_exps(&[-1, 1]));
    }

    #[test]
    fn strict_mode_rejects_unmapped() {
        let ctx = VariableContext::numbered("x", 2);
        let f = IntPolynomial::var(&ctx, 1);
        let err = substitute(&f, &[Some(IntPolynomial::one(&ctx)), None], &ctx, true).unwrap_err();
        assert_eq!(err, PolyError::UnmappedVariable("x2".into()));
    }

    #[test]
    fn polynomial_images() {
        let ctx = VariableContext::numbered("x", 2);
        let x1 = IntPolynomial::var(&ctx, 0);
        let x2 = IntPolynomial::var(&ctx, 1);
        let f = &(&x1 * &x1) + &x2;
        let r = substitute(&f, &[Some(&x1 + &x2), Some(x1.clone())], &ctx, true).unwrap();
        assert_eq!(r, &(&(&x1 + &x2) * &(&x1 + &x2)) + &x1);
    }
}
