//! Batch evaluation over all rational hyperplanes of bounded height.

use itertools::Itertools;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{equivalence_verdict, EquivalenceReport};
use crate::error::Result;
use crate::lattice::{hnf, integer_kernel, Int, IntMat, IntVec};
use crate::polytope::DelzantPolytope;
use crate::subspace::AffineSubspace;

fn height(v: &IntVec) -> Int {
    v.entries().iter().map(Signed::abs).max().unwrap_or_else(Int::zero)
}

/// Primitive vectors in `[−h, h]ⁿ` with first nonzero entry positive,
/// ordered by height and then lexicographically.
pub fn primitive_normals(n: usize, h: u32) -> Vec<IntVec> {
    let h = i64::from(h);
    let mut out: Vec<IntVec> = (0..n)
        .map(|_| -h..=h)
        .multi_cartesian_product()
        .map(|xs| IntVec::from_i64(&xs))
        .filter(|v| !v.is_zero() && v.is_primitive() && v.sign_normalized() == *v)
        .collect();
    out.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));
    out
}

/// Saturated basis of `q^⊥ ∩ Zⁿ` in Hermite normal form.
pub fn hyperplane_basis(q: &IntVec) -> Vec<IntVec> {
    let n = q.dim();
    let ker = integer_kernel(&IntMat::from_rows(std::slice::from_ref(q), n));
    let (h, _) = hnf(&IntMat::from_rows(&ker, n));
    h.row_vecs().into_iter().filter(|r| !r.is_zero()).collect()
}

/// Every hyperplane through the origin whose primitive normal has height at
/// most `h`, one per lattice, in a fixed order. In dimension 2 the basis
/// vector and the normal have the same height.
pub fn saturated_hyperplanes(n: usize, h: u32) -> Vec<AffineSubspace> {
    if n < 2 {
        return vec![];
    }
    primitive_normals(n, h)
        .iter()
        .map(|q| AffineSubspace::linear(hyperplane_basis(q)).expect("kernel bases are saturated"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogRow {
    pub basis: Vec<IntVec>,
    pub q: IntVec,
    pub good: bool,
    pub smooth: bool,
    pub holds: bool,
    pub failures: Vec<String>,
}

/// Human-readable per-vertex failure reasons of a verdict.
pub fn failure_reasons(r: &EquivalenceReport) -> Vec<String> {
    let mut out = Vec::new();
    for v in &r.vertices {
        let c = &v.classification;
        if let Some(s) = &v.chart.singular_stratum {
            out.push(format!("vertex {}: chart singular on stratum {:?}", c.point, s));
        }
        if c.choice_same == Some(false) {
            out.push(format!("vertex {}: no drop gives a cone basis that is a Z-basis", c.point));
        }
    }
    if let Some(e) = &r.image_error {
        out.push(e.clone());
    }
    out
}

impl CatalogRow {
    pub fn from_report(r: &EquivalenceReport) -> Self {
        CatalogRow {
            basis: r.basis.clone(),
            q: r.q.clone(),
            good: r.good,
            smooth: r.smooth,
            holds: r.holds,
            failures: failure_reasons(r),
        }
    }
}

/// Runs [`equivalence_verdict`] on every hyperplane of height at most `h`.
/// Rows are computed in parallel and returned in enumeration order.
pub fn sweep(poly: &DelzantPolytope, h: u32, strict: bool) -> Result<Vec<CatalogRow>> {
    saturated_hyperplanes(poly.dim(), h)
        .par_iter()
        .map(|sub| equivalence_verdict(poly, sub, strict).map(|r| CatalogRow::from_report(&r)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::builtin;

    #[test]
    fn counts_in_dimension_two() {
        assert!(saturated_hyperplanes(2, 0).is_empty());
        let qs: Vec<IntVec> = saturated_hyperplanes(2, 1).iter().map(|s| s.q().clone()).collect();
        assert_eq!(qs.len(), 4);
        assert_eq!(primitive_normals(2, 3).len(), 16);
    }

    #[test]
    fn bases_are_orthogonal_and_saturated() {
        for s in saturated_hyperplanes(3, 2) {
            assert!(!s.was_saturated());
            assert!(s.basis().iter().all(|p| p.dot(s.q()).is_zero()));
        }
    }

    #[test]
    fn square_height_one() {
        let rows = sweep(&builtin("cube:2:1").unwrap(), 1, true).unwrap();
        let axis: Vec<&CatalogRow> = rows
            .iter()
            .filter(|r| r.basis == vec![IntVec::from_i64(&[1, 0])] || r.basis == vec![IntVec::from_i64(&[0, 1])])
            .collect();
        assert_eq!(axis.len(), 2);
        assert!(axis.iter().all(|r| r.smooth && r.holds));
    }

    #[test]
    fn cp2_height_three() {
        let rows = sweep(&builtin("simplex:2:1").unwrap(), 3, true).unwrap();
        let find = |p: &[i64]| rows.iter().find(|r| r.basis == vec![IntVec::from_i64(p)]).unwrap();
        assert!(find(&[1, 1]).smooth);
        assert!(find(&[1, 2]).smooth);
        assert!(!find(&[3, 2]).smooth);
        assert!(rows.iter().all(|r| r.holds));
    }
}
