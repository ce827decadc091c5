//! Rational-slope affine hyperplanes `V = Rp₁ + ⋯ + Rpₙ₋₁ + a`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{
    is_saturated_basis, orthogonal_primitive, saturate, IntVec, Rat, RatVec,
};

/// A codimension-one affine subspace with a saturated integral basis and
/// the primitive orthogonal vector `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineSubspace {
    dim: usize,
    basis: Vec<IntVec>,
    offset: RatVec,
    q: IntVec,
    /// Set when the given basis was replaced by a saturated one.
    saturated_from: Option<Vec<IntVec>>,
}

impl AffineSubspace {
    /// Validates `basis` (n−1 independent vectors in Zⁿ) and saturates it if
    /// needed; the original basis is then kept in [`Self::saturated_from`].
    pub fn new(basis: Vec<IntVec>, offset: RatVec) -> Result<Self> {
        let dim = offset.dim();
        if dim < 2 {
            return Err(Error::BadParams("ambient dimension must be at least 2".into()));
        }
        if basis.len() + 1 != dim {
            return Err(Error::DimensionMismatch { expected: dim - 1, found: basis.len() });
        }
        if let Some(p) = basis.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
        }
        let (basis, saturated_from) = if is_saturated_basis(&basis)? {
            (basis, None)
        } else {
            (saturate(&basis)?, Some(basis))
        };
        let q = orthogonal_primitive(&basis)?;
        Ok(AffineSubspace { dim, basis, offset, q, saturated_from })
    }

    /// Linear subspace (offset 0).
    pub fn linear(basis: Vec<IntVec>) -> Result<Self> {
        let dim = basis.first().map_or(0, IntVec::dim);
        Self::new(basis, RatVec::zeros(dim))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[IntVec] {
        &self.basis
    }

    pub fn offset(&self) -> &RatVec {
        &self.offset
    }

    pub fn q(&self) -> &IntVec {
        &self.q
    }

    pub fn saturated_from(&self) -> Option<&[IntVec]> {
        self.saturated_from.as_deref()
    }

    pub fn was_saturated(&self) -> bool {
        self.saturated_from.is_some()
    }

    /// Same lattice data, different offset.
    pub fn with_offset(&self, offset: RatVec) -> Result<Self> {
        if offset.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: offset.dim() });
        }
        Ok(AffineSubspace { offset, ..self.clone() })
    }

    /// `i*(ξ) = (⟨p₁,ξ⟩, …, ⟨pₙ₋₁,ξ⟩)`
    pub fn pullback(&self, xi: &RatVec) -> Result<RatVec> {
        if xi.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: xi.dim() });
        }
        Ok(RatVec::new(self.basis.iter().map(|p| p.dot_rat(xi)).collect()))
    }

    /// Integral version of [`Self::pullback`].
    pub fn pullback_int(&self, xi: &IntVec) -> Result<IntVec> {
        if xi.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: xi.dim() });
        }
        Ok(IntVec::new(self.basis.iter().map(|p| p.dot(xi)).collect()))
    }

    /// `⟨a, q⟩`; the chart constant is `e^{⟨a,q⟩}`.
    pub fn chart_constant_exponent(&self) -> Rat {
        self.q.dot_rat(&self.offset)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::rat;

    fn v(xs: &[i64]) -> IntVec {
        IntVec::from_i64(xs)
    }

    #[test]
    fn orthogonal_vectors() {
        let s = AffineSubspace::linear(vec![v(&[1, 1])]).unwrap();
        assert_eq!(s.q(), &v(&[1, -1]));
        assert!(!s.was_saturated());
        let s = AffineSubspace::linear(vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        assert_eq!(s.q(), &v(&[0, 0, 1]));
    }

    #[test]
    fn saturation_is_flagged() {
        let s = AffineSubspace::linear(vec![v(&[2, 4])]).unwrap();
        assert_eq!(s.basis(), &[v(&[1, 2])]);
        assert_eq!(s.q(), &v(&[2, -1]));
        assert_eq!(s.saturated_from(), Some(&[v(&[2, 4])][..]));
    }

    #[test]
    fn bad_bases() {
        assert_eq!(
            AffineSubspace::linear(vec![v(&[1, 0, 0]), v(&[2, 0, 0])]),
            Err(Error::DependentInput)
        );
        assert!(matches!(
            AffineSubspace::new(vec![v(&[1, 0, 0])], RatVec::zeros(3)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            AffineSubspace::new(vec![v(&[1, 0])], RatVec::zeros(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn pullbacks() {
        let s = AffineSubspace::linear(vec![v(&[1, 1])]).unwrap();
        assert_eq!(s.pullback(&RatVec::from_i64(&[1, 0])).unwrap(), RatVec::from_i64(&[1]));
        let s = AffineSubspace::linear(vec![v(&[1, 2])]).unwrap();
        assert_eq!(s.pullback_int(&v(&[0, -1])).unwrap(), v(&[-2]));
        let s = AffineSubspace::linear(vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        assert_eq!(s.pullback(&RatVec::from_i64(&[3, 5, 7])).unwrap(), RatVec::from_i64(&[3, 5]));
        assert!(s.pullback(&RatVec::from_i64(&[1, 2])).is_err());
    }

    #[test]
    fn constant_exponents() {
        let s = AffineSubspace::linear(vec![v(&[1, 2])]).unwrap();
        assert_eq!(s.chart_constant_exponent(), rat(0, 1));
        let a = s.with_offset(RatVec::from_i64(&[1, 0])).unwrap();
        assert_eq!(a.chart_constant_exponent(), rat(2, 1));
        let s = AffineSubspace::new(vec![v(&[1, 1])], RatVec::from_i64(&[1, 1])).unwrap();
        assert_eq!(s.chart_constant_exponent(), rat(0, 1));
    }
}
