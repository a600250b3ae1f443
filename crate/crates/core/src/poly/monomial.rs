use std::cmp::Ordering;

use smallvec::SmallVec;

/// Signed exponent; negative entries make a Laurent monomial.
pub type Exp = i16;

type ExpVec = SmallVec<[Exp; 24]>;

/// Exponent vector with cached total degree.
///
/// Ordering is graded lexicographic: total degree first, then the exponent
/// of the first variable, then the second, and so on. The order is
/// translation invariant on the whole lattice, so it is compatible with
/// multiplication of Laurent monomials as well.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    degree: i32,
    exps: ExpVec,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self { degree: 0, exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn from_exps(exps: &[Exp]) -> Self {
        Self { degree: exps.iter().map(|&e| i32::from(e)).sum(), exps: SmallVec::from_slice(exps) }
    }

    /// Panics if an entry does not fit in [`Exp`].
    pub fn from_i64(exps: &[i64]) -> Self {
        let v: ExpVec = exps.iter().map(|&e| to_exp(e)).collect();
        Self { degree: v.iter().map(|&e| i32::from(e)).sum(), exps: v }
    }

    pub fn var(nvars: usize, i: usize, e: i64) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = to_exp(e);
        m.degree = i32::from(m.exps[i]);
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[Exp] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> i64 {
        i64::from(self.exps[i])
    }

    pub fn degree(&self) -> i64 {
        i64::from(self.degree)
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.exps.iter().all(|&e| e >= 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| add_exp(a, b)).collect();
        Self { degree: self.degree + other.degree, exps }
    }

    /// Laurent quotient; always defined.
    pub fn div(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| sub_exp(a, b)).collect();
        Self { degree: self.degree - other.degree, exps }
    }

    /// True when `other / self` has no negative exponent.
    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn pow(&self, k: u32) -> Self {
        let k = i64::from(k);
        let exps: ExpVec = self.exps.iter().map(|&e| to_exp(i64::from(e) * k)).collect();
        Self { degree: exps.iter().map(|&e| i32::from(e)).sum(), exps }
    }

    pub fn inverse(&self) -> Self {
        Self { degree: -self.degree, exps: self.exps.iter().map(|&e| -e).collect() }
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Self) -> Self {
        let exps: ExpVec = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect();
        Self { degree: exps.iter().map(|&e| i32::from(e)).sum(), exps }
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Self) -> Self {
        let exps: ExpVec = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        Self { degree: exps.iter().map(|&e| i32::from(e)).sum(), exps }
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.exps.iter().map(|&e| i64::from(e)).collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn to_exp(e: i64) -> Exp {
    Exp::try_from(e).unwrap_or_else(|_| panic!("exponent {e} out of range"))
}

fn add_exp(a: Exp, b: Exp) -> Exp {
    a.checked_add(b).expect("exponent overflow")
}

fn sub_exp(a: Exp, b: Exp) -> Exp {
    a.checked_sub(b).expect("exponent overflow")
}
