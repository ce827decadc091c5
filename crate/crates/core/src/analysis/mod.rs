//! The image polytope `i*(Δ)` and the combined verdict comparing goodness
//! with chart smoothness.

mod hull;

use serde::Serialize;

use crate::chart::{build_binomial, is_smooth, ChartBinomial, SmoothnessVerdict};
use crate::classify::{good_polytope, VertexClassification};
use crate::error::{Error, Result};
use crate::lattice::{serialize_rat_field, IntVec, Rat};
use crate::polytope::{DelzantPolytope, ValidationReport};
use crate::subspace::AffineSubspace;

pub use hull::{convex_hull, ConvexPolytope};

/// Hull of the vertex images, in dimension `n − 1`.
pub fn image_polytope(poly: &DelzantPolytope, sub: &AffineSubspace) -> Result<ConvexPolytope> {
    let images = poly.vertices().map(|v| sub.pullback(v)).collect::<Result<Vec<_>>>()?;
    convex_hull(&images, sub.dim() - 1)
}

pub fn image_is_delzant(img: &ConvexPolytope) -> bool {
    img.validate().passed
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ImageLabel {
    /// The closure is smooth, so the image is its moment polytope.
    MomentImage,
    /// The closure is singular; the hull is reported for reference only.
    FormalImage,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexReport {
    #[serde(flatten)]
    pub classification: VertexClassification,
    pub binomial: ChartBinomial,
    pub chart: SmoothnessVerdict,
    /// For a vertex with a vertical edge whose image is a vertex: the
    /// remaining edge images are the image polytope's edge directions there.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image_edges_match: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub good: bool,
    pub smooth: bool,
    pub holds: bool,
    /// Goodness when the cone and Z-basis conditions may use different drops.
    pub good_split: bool,
    pub readings_agree: bool,
    pub basis: Vec<IntVec>,
    pub q: IntVec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub saturated_from: Option<Vec<IntVec>>,
    #[serde(serialize_with = "serialize_rat_field")]
    pub const_exponent: Rat,
    pub image_label: ImageLabel,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image: Option<ConvexPolytope>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image_is_delzant: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image_validation: Option<ValidationReport>,
    pub vertices: Vec<VertexReport>,
}

impl EquivalenceReport {
    /// Smooth pairs must have a Delzant image.
    pub fn image_consistent(&self) -> bool {
        !self.smooth || self.image_is_delzant == Some(true)
    }

    /// Local indices of charts that are singular.
    pub fn singular_vertices(&self) -> Vec<usize> {
        self.vertices.iter().filter(|v| !v.chart.smooth).map(|v| v.classification.vertex).collect()
    }
}

/// Computes goodness and chart smoothness independently and compares them.
/// In strict mode a disagreement, or a smooth pair with a non-Delzant image,
/// is an error.
pub fn equivalence_verdict(poly: &DelzantPolytope, sub: &AffineSubspace, strict: bool) -> Result<EquivalenceReport> {
    let gp = good_polytope(poly, sub)?;
    let charts = poly
        .frames()
        .iter()
        .map(|f| {
            let b = build_binomial(f, sub)?;
            let v = is_smooth(&b)?;
            Ok((b, v))
        })
        .collect::<Result<Vec<_>>>()?;
    let smooth = charts.iter().all(|(_, v)| v.smooth);

    let (image, image_error) = match image_polytope(poly, sub) {
        Ok(img) => (Some(img), None),
        Err(e @ Error::DegenerateImage { .. }) => (None, Some(e.to_string())),
        Err(e) => return Err(e),
    };
    let image_validation = image.as_ref().map(ConvexPolytope::validate);
    let image_is_delzant = image_validation.as_ref().map(|r| r.passed);

    let vertices = gp
        .vertices
        .into_iter()
        .zip(charts)
        .map(|(classification, (binomial, chart))| {
            let image_edges_match = match &image {
                Some(img) if classification.image_is_vertex && !classification.jset.is_empty() => {
                    let mut dirs: Vec<IntVec> = classification
                        .edge_images
                        .iter()
                        .filter(|e| !e.is_zero())
                        .map(IntVec::primitive_part)
                        .collect();
                    dirs.sort();
                    Some(img.vertex_index(&classification.image).is_some_and(|k| img.edge_directions(k) == dirs))
                }
                _ => None,
            };
            VertexReport { classification, binomial, chart, image_edges_match }
        })
        .collect();

    let holds = gp.good == smooth;
    let report = EquivalenceReport {
        good: gp.good,
        smooth,
        holds,
        good_split: gp.good_split,
        readings_agree: gp.readings_agree,
        basis: sub.basis().to_vec(),
        q: sub.q().clone(),
        saturated_from: sub.saturated_from().map(<[IntVec]>::to_vec),
        const_exponent: sub.chart_constant_exponent(),
        image_label: if smooth { ImageLabel::MomentImage } else { ImageLabel::FormalImage },
        image,
        image_error,
        image_is_delzant,
        image_validation,
        vertices,
    };
    if strict {
        if !report.holds {
            return Err(Error::EquivalenceViolated(format!(
                "q = {}: good = {}, smooth = {}",
                report.q, report.good, report.smooth
            )));
        }
        if !report.image_consistent() {
            return Err(Error::EquivalenceViolated(format!(
                "q = {}: smooth but the image polytope is not Delzant",
                report.q
            )));
        }
    }
    Ok(report)
}
