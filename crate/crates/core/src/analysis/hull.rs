//! Brute-force exact convex hulls for small point sets.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{integer_kernel, rat_rank, IntMat, IntVec, Rat, RatVec};
use crate::polytope::{validate_delzant, HalfSpace, ValidationReport};

/// A full-dimensional polytope with both representations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvexPolytope {
    dim: usize,
    halfspaces: Vec<HalfSpace>,
    vertices: Vec<RatVec>,
}

impl ConvexPolytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    /// Sorted lexicographically.
    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn vertex_index(&self, p: &RatVec) -> Option<usize> {
        self.vertices.binary_search(p).ok()
    }

    fn tight(&self, p: &RatVec) -> Vec<usize> {
        (0..self.halfspaces.len()).filter(|&i| self.halfspaces[i].slack(p).is_zero()).collect()
    }

    fn normals_rank(&self, idx: &[usize]) -> usize {
        let rows: Vec<IntVec> = idx.iter().map(|&i| self.halfspaces[i].normal().clone()).collect();
        if rows.is_empty() {
            return 0;
        }
        IntMat::from_rows(&rows, self.dim).rank()
    }

    /// Primitive directions of the edges leaving vertex `v`, sorted.
    pub fn edge_directions(&self, v: usize) -> Vec<IntVec> {
        let here = &self.vertices[v];
        let at = self.tight(here);
        let mut out: Vec<IntVec> = self
            .vertices
            .iter()
            .filter(|w| *w != here)
            .filter(|w| {
                let shared: Vec<usize> = self.tight(w).into_iter().filter(|i| at.contains(i)).collect();
                self.normals_rank(&shared) + 1 == self.dim
            })
            .map(|w| w.sub(here).clear_denominators().primitive_part())
            .collect();
        out.sort();
        out
    }

    pub fn validate(&self) -> ValidationReport {
        validate_delzant(&self.halfspaces, self.dim)
    }
}

fn affine_rank(points: &[RatVec]) -> usize {
    let Some(first) = points.first() else { return 0 };
    let diffs: Vec<Vec<Rat>> = points[1..].iter().map(|p| p.sub(first).entries().to_vec()).collect();
    if diffs.is_empty() {
        0
    } else {
        rat_rank(&diffs)
    }
}

/// Hull of `points` in dimension `dim`; fails with `DegenerateImage` when
/// the points do not affinely span.
pub fn convex_hull(points: &[RatVec], dim: usize) -> Result<ConvexPolytope> {
    if let Some(p) = points.iter().find(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
    }
    let mut pts: Vec<RatVec> = points.to_vec();
    pts.sort();
    pts.dedup();
    let rank = affine_rank(&pts);
    if dim == 0 || rank < dim {
        return Err(Error::DegenerateImage { expected: dim, found: rank });
    }

    let mut facets: BTreeSet<HalfSpace> = BTreeSet::new();
    for subset in (0..pts.len()).combinations(dim) {
        let base = &pts[subset[0]];
        let w = if dim == 1 {
            IntVec::from_i64(&[1])
        } else {
            let diffs: Vec<IntVec> = subset[1..].iter().map(|&i| pts[i].sub(base).clear_denominators()).collect();
            let mut ker = integer_kernel(&IntMat::from_rows(&diffs, dim));
            if ker.len() != 1 {
                continue;
            }
            ker.pop().unwrap().primitive_part()
        };
        let off = w.dot_rat(base);
        let vals: Vec<Rat> = pts.iter().map(|p| w.dot_rat(p) - &off).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            facets.insert(HalfSpace::new(w.clone(), off.clone())?);
        }
        if vals.iter().all(|v| !v.is_positive()) {
            facets.insert(HalfSpace::new(w.neg(), -off)?);
        }
    }
    let mut poly = ConvexPolytope { dim, halfspaces: facets.into_iter().collect(), vertices: vec![] };
    let vertices: Vec<RatVec> = pts
        .iter()
        .filter(|p| {
            let t = poly.tight(p);
            poly.normals_rank(&t) == dim
        })
        .cloned()
        .collect();
    poly.vertices = vertices;
    Ok(poly)
}
