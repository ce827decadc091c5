//! Per-vertex combinatorics: sign classes of `⟨uᵢ, q⟩`, the set `J` of
//! edges killed by the pullback, vertex-ness of the image and goodness.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::feasibility::nonnegative_solution;
use crate::lattice::{
    rat_from_int, serialize_int_field, serialize_rat_slice, solve_square, Int, IntMat, IntVec,
    Rat, RatVec,
};
use crate::polytope::{DelzantPolytope, VertexFrame};
use crate::subspace::AffineSubspace;

/// Local indices split by the sign of `⟨uᵢ, q⟩`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IndexSets {
    pub iplus: Vec<usize>,
    pub iminus: Vec<usize>,
    pub izero: Vec<usize>,
}

fn check_dims(frame: &VertexFrame, sub: &AffineSubspace) -> Result<()> {
    if frame.dim() != sub.dim() {
        return Err(Error::DimensionMismatch { expected: frame.dim(), found: sub.dim() });
    }
    Ok(())
}

/// `⟨uᵢ, q⟩` for each active normal, in local order.
pub fn pairings(frame: &VertexFrame, sub: &AffineSubspace) -> Result<Vec<Int>> {
    check_dims(frame, sub)?;
    Ok((0..frame.dim()).map(|i| frame.normal(i).dot(sub.q())).collect())
}

pub fn index_sets(frame: &VertexFrame, sub: &AffineSubspace) -> Result<IndexSets> {
    let mut sets = IndexSets::default();
    for (i, c) in pairings(frame, sub)?.iter().enumerate() {
        if !c.is_negative() {
            sets.iplus.push(i);
        }
        if !c.is_positive() {
            sets.iminus.push(i);
        }
        if c.is_zero() {
            sets.izero.push(i);
        }
    }
    Ok(sets)
}

/// `i*(vᵢ)` for every edge direction at the vertex.
pub fn edge_images(frame: &VertexFrame, sub: &AffineSubspace) -> Result<Vec<IntVec>> {
    check_dims(frame, sub)?;
    (0..frame.dim()).map(|i| sub.pullback_int(&frame.edge(i))).collect()
}

/// Local indices whose edge direction maps to zero. At most one.
pub fn jset(frame: &VertexFrame, sub: &AffineSubspace) -> Result<Vec<usize>> {
    let images = edge_images(frame, sub)?;
    let j: Vec<usize> = (0..images.len()).filter(|&i| images[i].is_zero()).collect();
    if j.len() > 1 {
        return Err(Error::CrossCheckMismatch(format!(
            "{} edge directions at {} lie in the kernel of the pullback",
            j.len(),
            frame.vertex()
        )));
    }
    Ok(j)
}

/// `Σ ⟨uᵢ,q⟩ · i*(vᵢ)`; always zero.
pub fn linear_identity_residual(frame: &VertexFrame, sub: &AffineSubspace) -> Result<IntVec> {
    let c = pairings(frame, sub)?;
    let images = edge_images(frame, sub)?;
    Ok(images
        .iter()
        .zip(&c)
        .fold(IntVec::zeros(sub.dim() - 1), |acc, (img, ci)| acc.add(&img.scale(ci))))
}

/// Outcome of [`cone_pointed`]; `witness` holds `r ≥ 0` with `Σ r = 1`
/// and `Σ rⱼ gⱼ = 0` when the cone is not pointed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeTest {
    pub pointed: bool,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_opt_rats")]
    pub witness: Option<Vec<Rat>>,
}

fn serialize_opt_rats<S: serde::Serializer>(v: &Option<Vec<Rat>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => serialize_rat_slice(x, s),
        None => s.serialize_none(),
    }
}

/// Decides whether the cone spanned by `gens` contains a line, via
/// feasibility of `{G r = 0, Σ r = 1, r ≥ 0}`.
pub fn cone_pointed(gens: &[RatVec]) -> ConeTest {
    let Some(d) = gens.first().map(RatVec::dim) else {
        return ConeTest { pointed: true, witness: None };
    };
    let k = gens.len();
    let mut a: Vec<Vec<Rat>> = (0..d).map(|r| gens.iter().map(|g| g[r].clone()).collect()).collect();
    a.push(vec![Rat::one(); k]);
    let mut b = vec![Rat::zero(); d];
    b.push(Rat::one());
    match nonnegative_solution(&a, &b, k) {
        Some(r) => ConeTest { pointed: false, witness: Some(r) },
        None => ConeTest { pointed: true, witness: None },
    }
}

/// True iff `point ∈ conv(others)`.
pub fn in_convex_hull(point: &RatVec, others: &[RatVec]) -> bool {
    if others.is_empty() {
        return false;
    }
    let d = point.dim();
    let mut a: Vec<Vec<Rat>> = (0..d).map(|r| others.iter().map(|o| o[r].clone()).collect()).collect();
    a.push(vec![Rat::one(); others.len()]);
    let mut b = point.entries().to_vec();
    b.push(Rat::one());
    nonnegative_solution(&a, &b, others.len()).is_some()
}

fn vertex_images(poly: &DelzantPolytope, sub: &AffineSubspace) -> Result<Vec<RatVec>> {
    poly.vertices().map(|v| sub.pullback(v)).collect()
}

fn image_vertex_tests(
    poly: &DelzantPolytope,
    sub: &AffineSubspace,
    vertex: usize,
    images: &[RatVec],
) -> Result<(ConeTest, bool)> {
    let frame = poly.frame(vertex);
    let gens: Vec<RatVec> = edge_images(frame, sub)?
        .into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.to_rat())
        .collect();
    let cone = cone_pointed(&gens);
    let me = &images[vertex];
    let mut others: Vec<RatVec> = images.iter().filter(|x| *x != me).cloned().collect();
    others.sort();
    others.dedup();
    let hull_vertex = !in_convex_hull(me, &others);
    if cone.pointed != hull_vertex {
        return Err(Error::CrossCheckMismatch(format!(
            "image of vertex {}: cone test says {}, hull test says {}",
            frame.vertex(),
            cone.pointed,
            hull_vertex
        )));
    }
    Ok((cone, hull_vertex))
}

/// Whether `i*(λ)` is a vertex of `i*(Δ)`, decided by cone pointedness and
/// by hull membership; the two must agree.
pub fn image_is_vertex(poly: &DelzantPolytope, sub: &AffineSubspace, vertex: usize) -> Result<bool> {
    let images = vertex_images(poly, sub)?;
    image_vertex_tests(poly, sub, vertex, &images).map(|(c, _)| c.pointed)
}

/// One candidate for the dropped direction at a good vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeChoice {
    /// Local index of the dropped direction.
    pub dropped: usize,
    /// `S` with `i*(v_dropped) = Σ Sᵢ i*(vᵢ)` over the remaining indices, in order.
    #[serde(serialize_with = "serialize_rat_slice")]
    pub coefficients: Vec<Rat>,
    /// Determinant of the remaining images.
    #[serde(serialize_with = "serialize_int_field")]
    pub det: Int,
    /// All `Sᵢ ≥ 0`.
    pub in_cone: bool,
    /// `|det| = 1`.
    pub zbasis: bool,
}

/// Every drop whose remaining images are independent.
pub fn cone_choices(images: &[IntVec]) -> Vec<ConeChoice> {
    let n = images.len();
    let mut out = Vec::new();
    for j in 0..n {
        let rest: Vec<IntVec> = (0..n).filter(|&i| i != j).map(|i| images[i].clone()).collect();
        let m = IntMat::from_cols(&rest, n - 1);
        let det = m.det();
        if det.is_zero() {
            continue;
        }
        let b: Vec<Rat> = images[j].entries().iter().map(rat_from_int).collect();
        let s = solve_square(&m.to_rat_rows(), &b).expect("nonzero determinant");
        let in_cone = s.iter().all(|x| !x.is_negative());
        let zbasis = det.abs().is_one();
        out.push(ConeChoice { dropped: j, coefficients: s, det, in_cone, zbasis });
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexClassification {
    pub vertex: usize,
    pub point: RatVec,
    pub image: RatVec,
    pub pairings: IntVec,
    pub index_sets: IndexSets,
    pub edge_images: Vec<IntVec>,
    pub jset: Vec<usize>,
    pub image_is_vertex: bool,
    pub cone: ConeTest,
    pub all_images_nonzero: bool,
    pub is_good: bool,
    /// Smallest drop satisfying both conditions, else smallest satisfying
    /// the cone condition alone.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cone_choice: Option<ConeChoice>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zbasis_ok: Option<bool>,
    /// Some drop satisfies both conditions at once (good vertices only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub choice_same: Option<bool>,
    /// Some drop satisfies the cone condition and some drop gives a Z-basis.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub choice_split: Option<bool>,
    /// `⟨uᵢ,q⟩ = −Sᵢ ⟨u_dropped,q⟩` for the reported choice.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation_ok: Option<bool>,
}

fn classify_with(
    poly: &DelzantPolytope,
    sub: &AffineSubspace,
    vertex: usize,
    images: &[RatVec],
) -> Result<VertexClassification> {
    let frame = poly.frame(vertex);
    let c = pairings(frame, sub)?;
    let index_sets = index_sets(frame, sub)?;
    let eimg = edge_images(frame, sub)?;
    let jset = jset(frame, sub)?;
    let (cone, image_is_vertex) = image_vertex_tests(poly, sub, vertex, images)?;
    let all_images_nonzero = jset.is_empty();
    let is_good = image_is_vertex && all_images_nonzero;

    let mut out = VertexClassification {
        vertex,
        point: frame.vertex().clone(),
        image: images[vertex].clone(),
        pairings: IntVec::new(c.clone()),
        index_sets,
        edge_images: eimg.clone(),
        jset,
        image_is_vertex,
        cone,
        all_images_nonzero,
        is_good,
        cone_choice: None,
        zbasis_ok: None,
        choice_same: None,
        choice_split: None,
        relation_ok: None,
    };
    if !is_good {
        return Ok(out);
    }
    let choices = cone_choices(&eimg);
    let same = choices.iter().find(|ch| ch.in_cone && ch.zbasis);
    let first_cone = choices.iter().find(|ch| ch.in_cone);
    let split = first_cone.is_some() && choices.iter().any(|ch| ch.zbasis);
    let reported = same.or(first_cone).cloned();
    out.choice_same = Some(same.is_some());
    out.choice_split = Some(split);
    out.zbasis_ok = reported.as_ref().map(|ch| ch.zbasis);
    out.relation_ok = reported.as_ref().map(|ch| {
        let cj = rat_from_int(&c[ch.dropped]);
        (0..c.len())
            .filter(|&i| i != ch.dropped)
            .zip(&ch.coefficients)
            .all(|(i, s)| rat_from_int(&c[i]) == -(s * &cj))
    });
    out.cone_choice = reported;
    Ok(out)
}

pub fn good_vertex(poly: &DelzantPolytope, sub: &AffineSubspace, vertex: usize) -> Result<VertexClassification> {
    let images = vertex_images(poly, sub)?;
    classify_with(poly, sub, vertex, &images)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodPolytope {
    /// Every good vertex has one drop satisfying both conditions.
    pub good: bool,
    /// Same, with the two conditions allowed to use different drops.
    pub good_split: bool,
    pub readings_agree: bool,
    pub vertices: Vec<VertexClassification>,
}

pub fn good_polytope(poly: &DelzantPolytope, sub: &AffineSubspace) -> Result<GoodPolytope> {
    if poly.dim() != sub.dim() {
        return Err(Error::DimensionMismatch { expected: poly.dim(), found: sub.dim() });
    }
    let images = vertex_images(poly, sub)?;
    let vertices = (0..poly.num_vertices())
        .map(|v| classify_with(poly, sub, v, &images))
        .collect::<Result<Vec<_>>>()?;
    let good = vertices.iter().all(|v| v.choice_same != Some(false));
    let good_split = vertices.iter().all(|v| v.choice_split != Some(false));
    Ok(GoodPolytope { good, good_split, readings_agree: good == good_split, vertices })
}
