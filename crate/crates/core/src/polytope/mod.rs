//! Delzant polytopes from half-space data.
//!
//! Input is always an H-representation; vertices are enumerated exactly by
//! solving every `n`-subset of facet equations. At each vertex the active
//! inward normals `u₁ … uₙ` (ascending facet order) and the dual edge
//! directions `v₁ … vₙ` satisfy `ᵗU · V = I`.

mod builtin;

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::feasibility::nonnegative_solution;
use crate::lattice::{
    rat_from_int, serialize_int_field, serialize_rat_field, solve_square, Int, IntMat, IntVec,
    Rat, RatVec,
};

pub use builtin::{builtin, cube, hirzebruch, product, simplex};

/// `{x : ⟨normal, x⟩ ≥ offset}` with a primitive inward normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HalfSpace {
    normal: IntVec,
    #[serde(serialize_with = "serialize_rat_field")]
    offset: Rat,
}

impl HalfSpace {
    /// Non-primitive normals are divided by their content (offset scaled alike).
    pub fn new(normal: IntVec, offset: Rat) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::BadParams("half-space normal is zero".into()));
        }
        let g = normal.content();
        if g.is_one() {
            return Ok(HalfSpace { normal, offset });
        }
        let offset = offset / rat_from_int(&g);
        Ok(HalfSpace { normal: normal.primitive_part(), offset })
    }

    pub fn normal(&self) -> &IntVec {
        &self.normal
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    /// `⟨normal, x⟩ − offset`
    pub fn slack(&self, x: &RatVec) -> Rat {
        self.normal.dot_rat(x) - &self.offset
    }

    pub fn contains(&self, x: &RatVec) -> bool {
        !self.slack(x).is_negative()
    }
}

/// A vertex with the indices of every half-space tight at it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexData {
    pub point: RatVec,
    pub active: Vec<usize>,
}

/// Local data at a vertex λ: the active inward normals (columns of `normals`)
/// and the dual edge directions (columns of `edges`), with `ᵗU · V = I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexFrame {
    vertex: RatVec,
    active: Vec<usize>,
    normals: IntMat,
    edges: IntMat,
}

impl VertexFrame {
    pub fn vertex(&self) -> &RatVec {
        &self.vertex
    }

    /// Global facet indices, ascending; local index `i` refers to `active[i]`.
    pub fn active(&self) -> &[usize] {
        &self.active
    }

    pub fn dim(&self) -> usize {
        self.vertex.dim()
    }

    /// Matrix with the active normals as columns.
    pub fn normals(&self) -> &IntMat {
        &self.normals
    }

    /// Matrix with the edge directions as columns.
    pub fn edges(&self) -> &IntMat {
        &self.edges
    }

    pub fn normal(&self, i: usize) -> IntVec {
        self.normals.col(i)
    }

    pub fn edge(&self, i: usize) -> IntVec {
        self.edges.col(i)
    }
}

fn dims_ok(halfspaces: &[HalfSpace], dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(Error::BadParams("dimension must be positive".into()));
    }
    for h in halfspaces {
        if h.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: h.dim() });
        }
    }
    Ok(())
}

/// True iff `{x : ⟨uᵢ, x⟩ ≥ 0 ∀ i} = {0}`, i.e. the normals span `Rⁿ` and
/// admit a strictly positive vanishing combination.
pub fn recession_cone_is_trivial(halfspaces: &[HalfSpace], dim: usize) -> bool {
    let m = halfspaces.len();
    let normals: Vec<IntVec> = halfspaces.iter().map(|h| h.normal.clone()).collect();
    if m == 0 || IntMat::from_rows(&normals, dim).rank() < dim {
        return false;
    }
    // Σ sᵢ uᵢ = −Σ uᵢ with s ≥ 0, i.e. y = 1 + s > 0 and Σ yᵢ uᵢ = 0
    let a: Vec<Vec<Rat>> = (0..dim)
        .map(|r| normals.iter().map(|u| rat_from_int(&u[r])).collect())
        .collect();
    let b: Vec<Rat> = (0..dim)
        .map(|r| -normals.iter().fold(Rat::zero(), |acc, u| acc + rat_from_int(&u[r])))
        .collect();
    nonnegative_solution(&a, &b, m).is_some()
}

/// All vertices, with every tight half-space recorded; no simplicity check.
fn enumerate_raw(halfspaces: &[HalfSpace], dim: usize) -> Result<Vec<VertexData>> {
    dims_ok(halfspaces, dim)?;
    if !recession_cone_is_trivial(halfspaces, dim) {
        return Err(Error::Unbounded);
    }
    let mut points: BTreeMap<RatVec, ()> = BTreeMap::new();
    for subset in (0..halfspaces.len()).combinations(dim) {
        let a: Vec<Vec<Rat>> = subset.iter().map(|&i| halfspaces[i].normal.to_rat().entries().to_vec()).collect();
        let b: Vec<Rat> = subset.iter().map(|&i| halfspaces[i].offset.clone()).collect();
        let Some(x) = solve_square(&a, &b) else { continue };
        let x = RatVec::new(x);
        if points.contains_key(&x) || !halfspaces.iter().all(|h| h.contains(&x)) {
            continue;
        }
        points.insert(x, ());
    }
    if points.is_empty() {
        return Err(Error::Empty);
    }
    Ok(points
        .into_keys()
        .map(|point| {
            let active = halfspaces
                .iter()
                .enumerate()
                .filter(|(_, h)| h.slack(&point).is_zero())
                .map(|(i, _)| i)
                .collect();
            VertexData { point, active }
        })
        .collect())
}

/// Exact H-to-V conversion for a simple bounded polyhedron. Vertices come
/// back in lexicographic order.
pub fn enumerate_vertices(halfspaces: &[HalfSpace], dim: usize) -> Result<Vec<VertexData>> {
    let verts = enumerate_raw(halfspaces, dim)?;
    if let Some(v) = verts.iter().find(|v| v.active.len() > dim) {
        return Err(Error::NotSimple { vertex: v.point.to_string(), facets: v.active.len() });
    }
    if let Some(i) = (0..halfspaces.len()).find(|i| !verts.iter().any(|v| v.active.contains(i))) {
        return Err(Error::RedundantHalfSpace(i));
    }
    Ok(verts)
}

/// Builds the dual frame at a simple vertex; fails unless the active normals
/// form a Z-basis.
pub fn vertex_frame(data: &VertexData, halfspaces: &[HalfSpace]) -> Result<VertexFrame> {
    let n = data.point.dim();
    if data.active.len() != n {
        return Err(Error::NotSimple { vertex: data.point.to_string(), facets: data.active.len() });
    }
    let cols: Vec<IntVec> = data.active.iter().map(|&i| halfspaces[i].normal.clone()).collect();
    let normals = IntMat::from_cols(&cols, n);
    let ut = normals.transpose();
    let det = ut.det();
    if !det.abs().is_one() {
        return Err(Error::NotSmoothDelzant { vertex: data.point.to_string(), det: det.to_string() });
    }
    let edges = ut.integral_inverse().expect("unimodular matrices have integral inverses");
    Ok(VertexFrame { vertex: data.point.clone(), active: data.active.clone(), normals, edges })
}

/// Per-vertex outcome of [`validate_delzant`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCheck {
    pub vertex: RatVec,
    pub active: Vec<usize>,
    pub simple: bool,
    /// Always true: normals are integral by construction.
    pub rational: bool,
    pub smooth: bool,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_opt_int")]
    pub det: Option<Int>,
}

fn serialize_opt_int<S: serde::Serializer>(v: &Option<Int>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => serialize_int_field(x, s),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    pub vertices: Vec<VertexCheck>,
}

/// Checks simplicity, rationality and smoothness at every vertex. Never
/// fails: problems are recorded in the report.
pub fn validate_delzant(halfspaces: &[HalfSpace], dim: usize) -> ValidationReport {
    let verts = match enumerate_raw(halfspaces, dim) {
        Ok(v) => v,
        Err(e) => {
            return ValidationReport { passed: false, failure: Some(e.to_string()), vertices: vec![] }
        }
    };
    let vertices: Vec<VertexCheck> = verts
        .into_iter()
        .map(|v| {
            let simple = v.active.len() == dim;
            let det = simple.then(|| {
                let rows: Vec<IntVec> = v.active.iter().map(|&i| halfspaces[i].normal.clone()).collect();
                IntMat::from_rows(&rows, dim).det()
            });
            let smooth = det.as_ref().is_some_and(|d| d.abs().is_one());
            VertexCheck { vertex: v.point, active: v.active, simple, rational: true, smooth, det }
        })
        .collect();
    let failure = (0..halfspaces.len())
        .find(|i| !vertices.iter().any(|v| v.active.contains(i)))
        .map(|i| Error::RedundantHalfSpace(i).to_string());
    let passed = failure.is_none() && vertices.iter().all(|v| v.simple && v.smooth);
    ValidationReport { passed, failure, vertices }
}

/// A validated Delzant polytope together with its vertex frames.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DelzantPolytope {
    dim: usize,
    halfspaces: Vec<HalfSpace>,
    frames: Vec<VertexFrame>,
}

impl DelzantPolytope {
    pub fn new(dim: usize, halfspaces: Vec<HalfSpace>) -> Result<Self> {
        let verts = enumerate_vertices(&halfspaces, dim)?;
        let frames = verts
            .iter()
            .map(|v| vertex_frame(v, &halfspaces))
            .collect::<Result<Vec<_>>>()?;
        Ok(DelzantPolytope { dim, halfspaces, frames })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn frames(&self) -> &[VertexFrame] {
        &self.frames
    }

    pub fn frame(&self, vertex: usize) -> &VertexFrame {
        &self.frames[vertex]
    }

    pub fn num_vertices(&self) -> usize {
        self.frames.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &RatVec> {
        self.frames.iter().map(|f| &f.vertex)
    }

    pub fn vertex_index(&self, point: &RatVec) -> Option<usize> {
        self.frames.iter().position(|f| &f.vertex == point)
    }

    pub fn validation(&self) -> ValidationReport {
        validate_delzant(&self.halfspaces, self.dim)
    }

    /// `D^{λσ} = (Q^λ)⁻¹ Q^σ`, where `Q` is the edge matrix; since
    /// `(Q^λ)⁻¹ = ᵗU^λ` this is integral.
    pub fn transition_matrix(&self, lambda: usize, sigma: usize) -> IntMat {
        self.frames[lambda].normals.transpose().mul(&self.frames[sigma].edges)
    }

    /// Follows edge `i` from vertex `lambda`; returns the vertex reached and
    /// the (positive) step length.
    pub fn edge_endpoint(&self, lambda: usize, i: usize) -> Option<(usize, Rat)> {
        let f = &self.frames[lambda];
        let dir = f.edge(i).to_rat();
        let mut step: Option<Rat> = None;
        for (k, h) in self.halfspaces.iter().enumerate() {
            if f.active.contains(&k) {
                continue;
            }
            let rate = h.normal.dot_rat(&dir);
            if !rate.is_negative() {
                continue;
            }
            let t = h.slack(&f.vertex) / -rate;
            if step.as_ref().map_or(true, |s| &t < s) {
                step = Some(t);
            }
        }
        let t = step?;
        let end = f.vertex.add(&dir.scale(&t));
        self.vertex_index(&end).map(|idx| (idx, t))
    }
}
