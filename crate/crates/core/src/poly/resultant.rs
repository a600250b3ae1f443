use super::{IntPolynomial, PolyError, PolyMatrix, UniPoly};
use crate::cancel::CancelToken;

/// The `(m + n)`-square Sylvester matrix of `f` (degree `m`) and `g`
/// (degree `n`): `n` shifted rows of `f` coefficients followed by `m`
/// shifted rows of `g` coefficients, highest power first.
pub fn sylvester_matrix(f: &UniPoly, g: &UniPoly) -> Result<PolyMatrix, PolyError> {
    let ctx = f.ctx().clone();
    let m = f.degree().ok_or(PolyError::ZeroInput)?;
    let n = g.degree().ok_or(PolyError::ZeroInput)?;
    let size = m + n;
    let mut mat = PolyMatrix::zeros(&ctx, size, size);
    for i in 0..n {
        for (k, c) in f.coeffs().iter().enumerate() {
            mat.set(i, i + m - k, c.clone());
        }
    }
    for i in 0..m {
        for (k, c) in g.coeffs().iter().enumerate() {
            mat.set(n + i, i + n - k, c.clone());
        }
    }
    Ok(mat)
}

/// Sylvester matrix for `f`, `g` read as polynomials of formal degrees
/// `m >= deg f` and `n >= deg g`, leading coefficients possibly zero.
pub fn formal_sylvester_matrix(f: &UniPoly, m: usize, g: &UniPoly, n: usize) -> Result<PolyMatrix, PolyError> {
    if f.degree().is_some_and(|d| d > m) || g.degree().is_some_and(|d| d > n) {
        return Err(PolyError::Shape("formal degree below actual degree".into()));
    }
    let size = m + n;
    let mut mat = PolyMatrix::zeros(f.ctx(), size, size);
    for i in 0..n {
        for (k, c) in f.coeffs().iter().enumerate() {
            mat.set(i, i + m - k, c.clone());
        }
    }
    for i in 0..m {
        for (k, c) in g.coeffs().iter().enumerate() {
            mat.set(n + i, i + n - k, c.clone());
        }
    }
    Ok(mat)
}

/// Resultant of the binary forms of degrees `m` and `n` whose
/// dehomogenisations are `f` and `g`.
pub fn formal_resultant(f: &UniPoly, m: usize, g: &UniPoly, n: usize, cancel: &CancelToken) -> Result<IntPolynomial, PolyError> {
    if m + n == 0 {
        return Ok(IntPolynomial::one(f.ctx()));
    }
    formal_sylvester_matrix(f, m, g, n)?.determinant_by_minors(cancel)
}

/// `Res_t(f, g) = lc(f)^deg(g) * prod g(roots of f)`.
pub fn sylvester_resultant(f: &UniPoly, g: &UniPoly) -> Result<IntPolynomial, PolyError> {
    sylvester_resultant_with(f, g, &CancelToken::new())
}

pub fn sylvester_resultant_with(f: &UniPoly, g: &UniPoly, cancel: &CancelToken) -> Result<IntPolynomial, PolyError> {
    let ctx = f.ctx().clone();
    match (f.degree(), g.degree()) {
        (Some(0), Some(0)) => Err(PolyError::DegenerateResultant),
        (None, _) | (_, None) => Ok(IntPolynomial::zero(&ctx)),
        (Some(0), Some(n)) => Ok(f.coeffs()[0].pow(n as u32)),
        (Some(m), Some(0)) => Ok(g.coeffs()[0].pow(m as u32)),
        _ => sylvester_matrix(f, g)?.determinant_by_minors(cancel),
    }
}
