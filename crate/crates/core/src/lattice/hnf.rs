//! Hermite and Smith normal forms over `i128`, and integer kernels.

pub type IntMatrix = Vec<Vec<i128>>;

/// `(g, x, y)` with `x*a + y*b = g >= 0`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

pub fn gcd(a: i128, b: i128) -> i128 {
    ext_gcd(a, b).0
}

/// Row-style Hermite normal form with zero rows dropped: pivots positive,
/// entries above each pivot reduced into `[0, pivot)`.
pub fn row_hnf(m: &[Vec<i128>]) -> IntMatrix {
    let mut a: IntMatrix = m.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        for i in r + 1..a.len() {
            if a[i][c] == 0 {
                continue;
            }
            let (g, x, y) = ext_gcd(a[r][c], a[i][c]);
            let (p, q) = (a[r][c] / g, a[i][c] / g);
            for k in 0..ncols {
                let (u, v) = (a[r][k], a[i][k]);
                a[r][k] = x * u + y * v;
                a[i][k] = -q * u + p * v;
            }
        }
        if a[r][c] == 0 {
            continue;
        }
        if a[r][c] < 0 {
            a[r].iter_mut().for_each(|e| *e = -*e);
        }
        let piv = a[r][c];
        for i in 0..r {
            let f = a[i][c].div_euclid(piv);
            if f != 0 {
                for k in 0..ncols {
                    a[i][k] -= f * a[r][k];
                }
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

pub fn rank(m: &[Vec<i128>]) -> usize {
    row_hnf(m).len()
}

/// Integer basis of `{x in Z^n : m x = 0}` as rows in Hermite form.
pub fn kernel_basis(m: &[Vec<i128>], n: usize) -> IntMatrix {
    let mut a: IntMatrix = m.to_vec();
    let mut u: IntMatrix = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let mut p = 0;
    for i in 0..a.len() {
        if p == n {
            break;
        }
        for j in p + 1..n {
            if a[i][j] == 0 {
                continue;
            }
            let (g, x, y) = ext_gcd(a[i][p], a[i][j]);
            let (s, t) = (a[i][p] / g, a[i][j] / g);
            for row in a.iter_mut().chain(u.iter_mut()) {
                let (cp, cj) = (row[p], row[j]);
                row[p] = x * cp + y * cj;
                row[j] = -t * cp + s * cj;
            }
        }
        if a[i][p] != 0 {
            p += 1;
        }
    }
    let basis: IntMatrix = (p..n).map(|j| u.iter().map(|row| row[j]).collect()).collect();
    row_hnf(&basis)
}

/// Nonzero Smith invariant factors `d_1 | d_2 | ...`.
pub fn smith_invariants(m: &[Vec<i128>]) -> Vec<i128> {
    let mut a: IntMatrix = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let best = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = best else {
                return out;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let piv = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let f = a[i][t] / piv;
                for k in t..cols {
                    a[i][k] -= f * a[t][k];
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let f = a[t][j] / piv;
                for row in a.iter_mut().skip(t) {
                    row[j] -= f * row[t];
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % piv != 0));
            match bad {
                Some(i) => {
                    for k in t..cols {
                        a[t][k] += a[i][k];
                    }
                }
                None => {
                    out.push(piv.abs());
                    break;
                }
            }
        }
    }
    out
}

pub fn mat_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect())
        .collect()
}

pub fn transpose(a: &[Vec<i128>]) -> IntMatrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_of_small_matrix() {
        let m = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let h = row_hnf(&m);
        assert_eq!(h.len(), 3);
        for i in 0..3 {
            assert!(h[i][i] > 0);
            for j in 0..i {
                assert_eq!(h[i][j], 0);
                assert!((0..h[i][i]).contains(&h[j][i]));
            }
        }
        assert_eq!(h[0][0] * h[1][1] * h[2][2], 144);
        // Same row lattice: stacking adds nothing.
        let mut both = h.clone();
        both.extend(m.iter().cloned());
        assert_eq!(row_hnf(&both), h);
    }

    #[test]
    fn kernel_of_all_ones() {
        let k = kernel_basis(&[vec![1, 1, 1]], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(v.iter().sum::<i128>(), 0);
        }
        assert_eq!(smith_invariants(&k), vec![1, 1]);
    }

    #[test]
    fn smith_of_diagonal() {
        assert_eq!(smith_invariants(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_invariants(&[vec![2, 0, 0, 0], vec![0, 2, 0, 0]]), vec![2, 2]);
        assert_eq!(smith_invariants(&[vec![0, 0]]), Vec::<i128>::new());
    }
}
