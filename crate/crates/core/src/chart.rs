//! The binomial `f = z^a − c·z^b` cutting out the closure in a vertex chart,
//! and an exact decision of whether its zero locus is smooth.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{serialize_rat_field, Int, IntVec, Rat, RatVec};
use crate::polytope::{DelzantPolytope, VertexFrame};
use crate::subspace::AffineSubspace;

/// `z^aexp − e^{const_exponent} · z^bexp` with disjoint supports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartBinomial {
    aexp: IntVec,
    bexp: IntVec,
    #[serde(serialize_with = "serialize_rat_field")]
    const_exponent: Rat,
}

impl ChartBinomial {
    pub fn new(aexp: IntVec, bexp: IntVec, const_exponent: Rat) -> Result<Self> {
        if aexp.dim() != bexp.dim() {
            return Err(Error::DimensionMismatch { expected: aexp.dim(), found: bexp.dim() });
        }
        let ok = aexp.entries().iter().zip(bexp.entries()).all(|(a, b)| {
            !a.is_negative() && !b.is_negative() && (a.is_zero() || b.is_zero())
        });
        if !ok {
            return Err(Error::PreconditionViolated(
                "exponents must be non-negative with disjoint supports".into(),
            ));
        }
        if aexp.is_zero() && bexp.is_zero() {
            return Err(Error::PreconditionViolated("binomial is constant".into()));
        }
        Ok(ChartBinomial { aexp, bexp, const_exponent })
    }

    pub fn from_i64(aexp: &[i64], bexp: &[i64]) -> Result<Self> {
        Self::new(IntVec::from_i64(aexp), IntVec::from_i64(bexp), Rat::zero())
    }

    pub fn dim(&self) -> usize {
        self.aexp.dim()
    }

    pub fn aexp(&self) -> &IntVec {
        &self.aexp
    }

    pub fn bexp(&self) -> &IntVec {
        &self.bexp
    }

    pub fn const_exponent(&self) -> &Rat {
        &self.const_exponent
    }

    fn support(v: &IntVec) -> Vec<usize> {
        (0..v.dim()).filter(|&i| !v[i].is_zero()).collect()
    }

    fn degree(v: &IntVec) -> Int {
        v.entries().iter().sum()
    }
}

/// Splits `⟨uⱼ, q⟩` into positive and negative parts.
pub fn build_binomial(frame: &VertexFrame, sub: &AffineSubspace) -> Result<ChartBinomial> {
    if frame.dim() != sub.dim() {
        return Err(Error::DimensionMismatch { expected: frame.dim(), found: sub.dim() });
    }
    let n = frame.dim();
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for i in 0..n {
        let c = frame.normal(i).dot(sub.q());
        if c.is_positive() {
            a.push(c);
            b.push(Int::zero());
        } else {
            b.push(-c);
            a.push(Int::zero());
        }
    }
    ChartBinomial::new(IntVec::new(a), IntVec::new(b), sub.chart_constant_exponent())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SmoothReason {
    /// One side is constant, so the locus avoids every coordinate hyperplane.
    EmptySideNoBoundary,
    /// One side is a single variable to the first power.
    UnitExponentSide,
    /// Both sides have degree at least two; the gradient dies where both vanish.
    BothSidesDegreeTwo,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessVerdict {
    pub smooth: bool,
    /// Coordinates set to zero at a singular point.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub singular_stratum: Option<Vec<usize>>,
    pub reason: SmoothReason,
}

/// `sum(aexp) ≤ 1 or sum(bexp) ≤ 1`
pub fn closed_form_smooth(bin: &ChartBinomial) -> bool {
    let one = Int::one();
    ChartBinomial::degree(&bin.aexp) <= one || ChartBinomial::degree(&bin.bexp) <= one
}

/// Whether the locus meets the stratum `{zᵢ = 0 ⇔ i ∈ s}` and the gradient
/// vanishes identically there.
fn stratum_is_singular(bin: &ChartBinomial, sa: &[usize], sb: &[usize], s: &[usize]) -> bool {
    let hits = |supp: &[usize]| supp.iter().any(|i| s.contains(i));
    let meets = hits(sa) == hits(sb);
    if !meets {
        return false;
    }
    let partial_dies = |exp: &IntVec, supp: &[usize]| {
        supp.iter().all(|&i| {
            supp.iter().any(|&k| s.contains(&k) && (k != i || exp[i] > Int::one()))
        })
    };
    partial_dies(&bin.aexp, sa) && partial_dies(&bin.bexp, sb)
}

/// Exhaustive search over coordinate strata; returns the first singular
/// stratum in subset-mask order.
pub fn stratum_oracle(bin: &ChartBinomial) -> Option<Vec<usize>> {
    let sa = ChartBinomial::support(&bin.aexp);
    let sb = ChartBinomial::support(&bin.bexp);
    let mut coords: Vec<usize> = sa.iter().chain(&sb).copied().collect();
    coords.sort_unstable();
    let k = coords.len();
    (0u64..1 << k).find_map(|mask| {
        let s: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| coords[b]).collect();
        stratum_is_singular(bin, &sa, &sb, &s).then_some(s)
    })
}

/// Runs both the closed form and the stratum oracle; they must agree.
pub fn is_smooth(bin: &ChartBinomial) -> Result<SmoothnessVerdict> {
    let closed = closed_form_smooth(bin);
    let stratum = stratum_oracle(bin);
    if closed != stratum.is_none() {
        return Err(Error::CrossCheckMismatch(format!(
            "binomial a={} b={}: closed form says smooth={closed}, strata say smooth={}",
            bin.aexp,
            bin.bexp,
            stratum.is_none()
        )));
    }
    let reason = if bin.aexp.is_zero() || bin.bexp.is_zero() {
        SmoothReason::EmptySideNoBoundary
    } else if closed {
        SmoothReason::UnitExponentSide
    } else {
        SmoothReason::BothSidesDegreeTwo
    };
    Ok(SmoothnessVerdict { smooth: closed, singular_stratum: stratum, reason })
}

/// Checks that `f` and every partial vanish at the point with `zᵢ = 0` for
/// `i ∈ stratum` and `zᵢ` free elsewhere, by exponent bookkeeping.
pub fn verify_singular_stratum(bin: &ChartBinomial, stratum: &[usize]) -> bool {
    let sa = ChartBinomial::support(&bin.aexp);
    let sb = ChartBinomial::support(&bin.bexp);
    stratum.iter().all(|i| sa.contains(i) || sb.contains(i)) && stratum_is_singular(bin, &sa, &sb, stratum)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartEntry {
    pub vertex: usize,
    pub point: RatVec,
    pub binomial: ChartBinomial,
    pub verdict: SmoothnessVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessReport {
    pub smooth: bool,
    pub charts: Vec<ChartEntry>,
}

pub fn smoothness_report(poly: &DelzantPolytope, sub: &AffineSubspace) -> Result<SmoothnessReport> {
    let charts = poly
        .frames()
        .iter()
        .enumerate()
        .map(|(vertex, f)| {
            let binomial = build_binomial(f, sub)?;
            let verdict = is_smooth(&binomial)?;
            Ok(ChartEntry { vertex, point: f.vertex().clone(), binomial, verdict })
        })
        .collect::<Result<Vec<_>>>()?;
    let smooth = charts.iter().all(|c| c.verdict.smooth);
    Ok(SmoothnessReport { smooth, charts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::builtin;

    fn sub(p: &[i64]) -> AffineSubspace {
        AffineSubspace::linear(vec![IntVec::from_i64(p)]).unwrap()
    }

    #[test]
    fn binomials_on_cp2() {
        let p = builtin("simplex:2:1").unwrap();
        let o = p.vertex_index(&RatVec::from_i64(&[0, 0])).unwrap();
        let r = p.vertex_index(&RatVec::from_i64(&[1, 0])).unwrap();
        let b = build_binomial(p.frame(o), &sub(&[1, 2])).unwrap();
        assert_eq!((b.aexp(), b.bexp()), (&IntVec::from_i64(&[2, 0]), &IntVec::from_i64(&[0, 1])));
        let b = build_binomial(p.frame(r), &sub(&[1, 1])).unwrap();
        assert_eq!((b.aexp(), b.bexp()), (&IntVec::from_i64(&[0, 0]), &IntVec::from_i64(&[1, 0])));
        let b = build_binomial(p.frame(o), &sub(&[3, 2])).unwrap();
        assert_eq!((b.aexp(), b.bexp()), (&IntVec::from_i64(&[2, 0]), &IntVec::from_i64(&[0, 3])));
    }

    #[test]
    fn smoothness_examples() {
        let v = is_smooth(&ChartBinomial::from_i64(&[2, 0], &[0, 1]).unwrap()).unwrap();
        assert!(v.smooth);
        assert_eq!(v.reason, SmoothReason::UnitExponentSide);
        let v = is_smooth(&ChartBinomial::from_i64(&[0, 0], &[1, 1]).unwrap()).unwrap();
        assert!(v.smooth);
        assert_eq!(v.reason, SmoothReason::EmptySideNoBoundary);
        let bin = ChartBinomial::from_i64(&[2, 0], &[0, 3]).unwrap();
        let v = is_smooth(&bin).unwrap();
        assert!(!v.smooth);
        assert_eq!(v.singular_stratum, Some(vec![0, 1]));
        assert_eq!(v.reason, SmoothReason::BothSidesDegreeTwo);
        assert!(verify_singular_stratum(&bin, &[0, 1]));
        assert!(!verify_singular_stratum(&bin, &[0]));
    }

    #[test]
    fn one_sided_high_degree_is_smooth() {
        // z₁² z₂ = c never touches the coordinate axes
        let v = is_smooth(&ChartBinomial::from_i64(&[2, 1, 0], &[0, 0, 0]).unwrap()).unwrap();
        assert!(v.smooth);
    }

    #[test]
    fn invalid_binomials() {
        assert!(ChartBinomial::from_i64(&[1, 0], &[1, 0]).is_err());
        assert!(ChartBinomial::from_i64(&[-1, 0], &[0, 1]).is_err());
        assert!(ChartBinomial::from_i64(&[0, 0], &[0, 0]).is_err());
    }

    #[test]
    fn reports_on_cp2() {
        let p = builtin("simplex:2:1").unwrap();
        assert!(smoothness_report(&p, &sub(&[1, 1])).unwrap().smooth);
        assert!(smoothness_report(&p, &sub(&[1, 2])).unwrap().smooth);
        let r = smoothness_report(&p, &sub(&[3, 2])).unwrap();
        assert!(!r.smooth);
        let bad: Vec<_> = r.charts.iter().filter(|c| !c.verdict.smooth).map(|c| c.point.clone()).collect();
        assert_eq!(bad, vec![RatVec::from_i64(&[0, 0])]);
    }
}
