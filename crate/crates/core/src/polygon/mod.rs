//! Planar lattice polygons built from the rows of `B`, and the affine maps
//! that carry them onto the Chow polygon, the secondary polygon and the
//! Newton polygon of the A-discriminant.

mod newton;
pub mod svg;

use std::cmp::Ordering;

use num_integer::Integer;
use serde::Serialize;

use crate::error::Result;
use crate::lattice::{det2, primitive, BConfig, Row};

pub use newton::NewtonPolygon;

/// One boundary edge and the rows of `B` that were merged into it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub vector: Row,
    pub rows: Vec<usize>,
}

/// Convex lattice polygon, vertices counterclockwise starting from the
/// lexicographically smallest one. `edges[k]` runs from `vertices[k]` to
/// `vertices[k + 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticePolygon {
    vertices: Vec<Row>,
    edges: Vec<Edge>,
}

/// Half-plane test for angles in `[0, pi)` versus `[pi, 2 pi)`.
fn upper_half(v: Row) -> bool {
    v[1] > 0 || (v[1] == 0 && v[0] > 0)
}

/// Counterclockwise angular order from the positive x-axis, angle 0
/// included, over `[0, 2 pi)`.
pub fn angle_cmp(a: Row, b: Row) -> Ordering {
    match (upper_half(a), upper_half(b)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => 0.cmp(&det2(a, b)),
    }
}

/// Indices of the nonzero rows sorted counterclockwise; rows pointing the
/// same way keep their original order.
pub fn ccw_order(rows: &[Row]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..rows.len()).filter(|&i| rows[i] != [0, 0]).collect();
    idx.sort_by(|&i, &j| angle_cmp(rows[i], rows[j]));
    idx
}

impl LatticePolygon {
    pub fn point() -> Self {
        Self { vertices: vec![[0, 0]], edges: Vec::new() }
    }

    /// Chains the edge vectors in counterclockwise order. Same-direction
    /// vectors are merged into one edge. The vectors must sum to zero.
    pub fn from_edges(edges: &[(Row, Vec<usize>)]) -> Self {
        let mut idx: Vec<usize> = (0..edges.len()).filter(|&i| edges[i].0 != [0, 0]).collect();
        idx.sort_by(|&i, &j| angle_cmp(edges[i].0, edges[j].0));
        let mut merged: Vec<Edge> = Vec::new();
        for i in idx {
            let (v, rows) = &edges[i];
            match merged.last_mut() {
                Some(e) if primitive(e.vector).0 == primitive(*v).0 => {
                    e.vector = [e.vector[0] + v[0], e.vector[1] + v[1]];
                    e.rows.extend(rows);
                }
                _ => merged.push(Edge { vector: *v, rows: rows.clone() }),
            }
        }
        if merged.is_empty() {
            return Self::point();
        }
        debug_assert_eq!(merged.iter().fold([0, 0], |s, e| [s[0] + e.vector[0], s[1] + e.vector[1]]), [0, 0]);
        let mut pts = Vec::with_capacity(merged.len());
        let mut p = [0i64, 0];
        for e in &merged {
            pts.push(p);
            p = [p[0] + e.vector[0], p[1] + e.vector[1]];
        }
        let start = (0..pts.len()).min_by_key(|&k| pts[k]).unwrap_or(0);
        let o = pts[start];
        pts.rotate_left(start);
        merged.rotate_left(start);
        Self { vertices: pts.iter().map(|q| [q[0] - o[0], q[1] - o[1]]).collect(), edges: merged }
    }

    pub fn vertices(&self) -> &[Row] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_point(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn translated(&self, d: Row) -> Self {
        Self { vertices: self.vertices.iter().map(|v| [v[0] + d[0], v[1] + d[1]]).collect(), edges: self.edges.clone() }
    }

    /// Twice the area: `sum_{i<j} det(e_i, e_j)` over the ccw edges.
    pub fn double_area(&self) -> i64 {
        let mut total = 0;
        let mut prefix = [0i64, 0];
        for e in &self.edges {
            total += det2(prefix, e.vector);
            prefix = [prefix[0] + e.vector[0], prefix[1] + e.vector[1]];
        }
        total
    }

    pub fn boundary_point_count(&self) -> i64 {
        self.edges.iter().map(|e| e.vector[0].gcd(&e.vector[1])).sum()
    }

    /// Pick's formula `1 + (boundary + 2 * area) / 2`.
    pub fn lattice_point_count(&self) -> i64 {
        1 + (self.boundary_point_count() + self.double_area()) / 2
    }

    pub fn contains(&self, p: Row) -> bool {
        if self.is_point() {
            return p == self.vertices[0];
        }
        let (lo, hi) = self.bounding_box();
        if p[0] < lo[0] || p[0] > hi[0] || p[1] < lo[1] || p[1] > hi[1] {
            return false;
        }
        self.edges.iter().zip(&self.vertices).all(|(e, v)| det2(e.vector, [p[0] - v[0], p[1] - v[1]]) >= 0)
    }

    pub fn bounding_box(&self) -> (Row, Row) {
        let lo = [self.vertices.iter().map(|v| v[0]).min().unwrap_or(0), self.vertices.iter().map(|v| v[1]).min().unwrap_or(0)];
        let hi = [self.vertices.iter().map(|v| v[0]).max().unwrap_or(0), self.vertices.iter().map(|v| v[1]).max().unwrap_or(0)];
        (lo, hi)
    }

    /// All lattice points, row by row.
    pub fn lattice_points(&self) -> Vec<Row> {
        let (lo, hi) = self.bounding_box();
        let mut out = Vec::new();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                if self.contains([x, y]) {
                    out.push([x, y]);
                }
            }
        }
        out
    }

    /// Invariance of the edge multiset under negation.
    pub fn is_centrally_symmetric(&self) -> bool {
        self.edges.iter().all(|e| self.edges.iter().any(|f| f.vector == [-e.vector[0], -e.vector[1]]))
    }
}

/// `P_B`: edges are the nonzero rows of `B`.
pub fn build_pb(b: &BConfig) -> LatticePolygon {
    let edges: Vec<(Row, Vec<usize>)> = b.rows().iter().enumerate().map(|(i, &r)| (r, vec![i])).collect();
    LatticePolygon::from_edges(&edges)
}

/// `Q_B`: rows off the relevant lines, plus `b_v = alpha_v v` per line.
pub fn build_qb(b: &BConfig) -> Result<LatticePolygon> {
    b.require_nonzero_rows()?;
    Ok(LatticePolygon::from_edges(&qb_edges(b)))
}

fn qb_edges(b: &BConfig) -> Vec<(Row, Vec<usize>)> {
    let mut edges: Vec<(Row, Vec<usize>)> = b.off_line_rows().into_iter().map(|i| (b.row(i), vec![i])).collect();
    for line in b.relevant_lines() {
        if line.alpha != 0 {
            edges.push((line.b_v, line.members.clone()));
        }
    }
    edges
}

/// `Q` built from `b_i^perp = (b_i2, -b_i1)`, translated to touch both
/// coordinate axes from inside the first quadrant.
pub fn dehomog_newton(b: &BConfig) -> Result<LatticePolygon> {
    b.require_nonzero_rows()?;
    let edges: Vec<(Row, Vec<usize>)> = qb_edges(b).into_iter().map(|(v, r)| ([v[1], -v[0]], r)).collect();
    let q = LatticePolygon::from_edges(&edges);
    let (lo, _) = q.bounding_box();
    Ok(q.translated([-lo[0], -lo[1]]))
}

/// `mu_i = max_v det(b_i, v)` over the vertices of `P_B`, in row order.
pub fn mu_vector(b: &BConfig) -> Vec<i64> {
    let p = build_pb(b);
    b.rows().iter().map(|&r| p.vertices().iter().map(|&v| det2(r, v)).max().unwrap_or(0)).collect()
}

/// `nu_i = min_v det(b_i, v)` over the vertices of `Q_B`.
pub fn nu_vector(b: &BConfig) -> Result<Vec<i64>> {
    let q = build_qb(b)?;
    Ok(b.rows().iter().map(|&r| q.vertices().iter().map(|&v| det2(r, v)).min().unwrap_or(0)).collect())
}

pub fn degree_via_mu(b: &BConfig) -> i64 {
    let s: i64 = mu_vector(b).iter().sum();
    debug_assert!(s % 2 == 0);
    s / 2
}

pub fn degree_da(b: &BConfig) -> Result<i64> {
    Ok(-nu_vector(b)?.iter().sum::<i64>())
}

pub fn is_centrally_symmetric(b: &BConfig) -> bool {
    build_pb(b).is_centrally_symmetric()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    Chow,
    Secondary,
    Newton,
}

/// `v -> (sign * det(b_i, v) + offset_i)_i`, the affine maps from a
/// lattice polygon into `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolygonMap {
    pub kind: MapKind,
    rows: Vec<Row>,
    sign: i64,
    pub offsets: Vec<i64>,
}

impl PolygonMap {
    /// `v^(i) = mu_i - det(b_i, v)` on `P_B`.
    pub fn chow(b: &BConfig) -> Self {
        Self { kind: MapKind::Chow, rows: b.rows().to_vec(), sign: -1, offsets: mu_vector(b) }
    }

    /// `d_B - v^(i)` on `P_B`.
    pub fn secondary(b: &BConfig) -> Self {
        let d = b.degree();
        let offsets = mu_vector(b).iter().map(|m| d - m).collect();
        Self { kind: MapKind::Secondary, rows: b.rows().to_vec(), sign: 1, offsets }
    }

    /// `det(b_i, v) - nu_i` on `Q_B`.
    pub fn newton(b: &BConfig) -> Result<Self> {
        let offsets = nu_vector(b)?.iter().map(|x| -x).collect();
        Ok(Self { kind: MapKind::Newton, rows: b.rows().to_vec(), sign: 1, offsets })
    }

    pub fn apply(&self, v: Row) -> Vec<i64> {
        self.rows.iter().zip(&self.offsets).map(|(&r, o)| self.sign * det2(r, v) + o).collect()
    }

    pub fn apply_all(&self, pts: &[Row]) -> Vec<Vec<i64>> {
        pts.iter().map(|&v| self.apply(v)).collect()
    }
}

pub fn chow_polygon(b: &BConfig) -> Vec<Vec<i64>> {
    PolygonMap::chow(b).apply_all(build_pb(b).vertices())
}

pub fn secondary_polygon(b: &BConfig) -> Vec<Vec<i64>> {
    PolygonMap::secondary(b).apply_all(build_pb(b).vertices())
}

pub fn newton_polygon_da(b: &BConfig) -> Result<Vec<Vec<i64>>> {
    Ok(PolygonMap::newton(b)?.apply_all(build_qb(b)?.vertices()))
}
