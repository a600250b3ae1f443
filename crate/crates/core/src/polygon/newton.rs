use std::collections::HashMap;

use crate::poly::{IntPolynomial, PolyError};

/// Convex hull of the support of a polynomial whose exponent vectors span
/// an affine space of dimension at most two.
///
/// The hull is computed in the coordinate projection `(e_k, e_l)`, chosen
/// so that it is injective on the affine span.
#[derive(Clone, Debug)]
pub struct NewtonPolygon {
    base: Vec<i64>,
    dirs: Vec<Vec<i64>>,
    coords: Option<(usize, usize)>,
    /// Vertices counterclockwise in the projection (at most two when the
    /// support is collinear).
    vertices: Vec<Vec<i64>>,
}

fn cross(o: [i64; 2], a: [i64; 2], b: [i64; 2]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Andrew's monotone chain; collinear points dropped.
fn hull(mut pts: Vec<[i64; 2]>) -> Vec<[i64; 2]> {
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<[i64; 2]> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<[i64; 2]> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl NewtonPolygon {
    pub fn of(f: &IntPolynomial) -> Result<Self, PolyError> {
        let pts: Vec<Vec<i64>> = f.terms().iter().map(|(m, _)| m.to_i64()).collect();
        Self::from_points(&pts)
    }

    pub fn from_points(pts: &[Vec<i64>]) -> Result<Self, PolyError> {
        let base = pts.first().cloned().ok_or(PolyError::ZeroInput)?;
        let diffs: Vec<Vec<i64>> = pts.iter().map(|p| sub(p, &base)).collect();
        let Some(d1) = diffs.iter().find(|d| d.iter().any(|&x| x != 0)).cloned() else {
            return Ok(Self { base: base.clone(), dirs: Vec::new(), coords: None, vertices: vec![base] });
        };
        let n = base.len();
        let mut found = None;
        'search: for d2 in &diffs {
            for k in 0..n {
                for l in k + 1..n {
                    if d1[k] * d2[l] - d1[l] * d2[k] != 0 {
                        found = Some((d2.clone(), k, l));
                        break 'search;
                    }
                }
            }
        }
        match found {
            None => {
                // Collinear: order along a coordinate where d1 moves.
                let k = d1.iter().position(|&x| x != 0).expect("nonzero direction");
                let s = d1[k].signum();
                let lo = pts.iter().min_by_key(|p| s * p[k]).expect("nonempty").clone();
                let hi = pts.iter().max_by_key(|p| s * p[k]).expect("nonempty").clone();
                Ok(Self { base, dirs: vec![d1], coords: Some((k, k)), vertices: vec![lo, hi] })
            }
            Some((d2, k, l)) => {
                let mut back: HashMap<[i64; 2], Vec<i64>> = HashMap::new();
                for p in pts {
                    back.insert([p[k], p[l]], p.clone());
                }
                let h = hull(back.keys().copied().collect());
                let vertices = h.iter().map(|q| back[q].clone()).collect();
                Ok(Self { base, dirs: vec![d1, d2], coords: Some((k, l)), vertices })
            }
        }
    }

    pub fn dimension(&self) -> usize {
        self.dirs.len()
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn vertex_set(&self) -> std::collections::BTreeSet<Vec<i64>> {
        self.vertices.iter().cloned().collect()
    }

    /// Membership of an exponent vector in the hull: it must lie in the
    /// affine span and inside the projected polygon.
    pub fn contains(&self, e: &[i64]) -> bool {
        if e.len() != self.base.len() {
            return false;
        }
        let d = sub(e, &self.base);
        match (self.dirs.len(), self.coords) {
            (0, _) => d.iter().all(|&x| x == 0),
            (1, Some((k, _))) => {
                let d1 = &self.dirs[0];
                // d must be a rational multiple of d1.
                if (0..d.len()).any(|i| d[i] * d1[k] != d1[i] * d[k]) {
                    return false;
                }
                let s = d1[k].signum();
                let (lo, hi) = (s * self.vertices[0][k], s * self.vertices[1][k]);
                (lo..=hi).contains(&(s * e[k]))
            }
            (2, Some((k, l))) => {
                let (d1, d2) = (&self.dirs[0], &self.dirs[1]);
                let m = d1[k] * d2[l] - d1[l] * d2[k];
                // Cramer: m d = s d1 + t d2.
                let s = d[k] * d2[l] - d[l] * d2[k];
                let t = d1[k] * d[l] - d1[l] * d[k];
                if (0..d.len()).any(|i| m * d[i] != s * d1[i] + t * d2[i]) {
                    return false;
                }
                let p = [e[k], e[l]];
                let vs: Vec<[i64; 2]> = self.vertices.iter().map(|v| [v[k], v[l]]).collect();
                if vs.len() < 3 {
                    return vs.contains(&p);
                }
                (0..vs.len()).all(|i| cross(vs[i], vs[(i + 1) % vs.len()], p) >= 0)
            }
            _ => false,
        }
    }
}
