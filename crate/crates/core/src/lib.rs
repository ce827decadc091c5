//! Exact smoothness tests for closures of codimension-one complex subtori in
//! toric manifolds.
//!
//! A smooth toric manifold is given by its Delzant polytope `Δ`, and a
//! rational hyperplane `V` by a saturated integral basis `p₁ … pₙ₋₁`. The
//! closure of the subtorus is smooth exactly when `Δ` is *good* for the
//! pullback `i*`; this crate decides both sides independently and compares
//! them.
//!
//! ```
//! use subtorus::{builtin, equivalence_verdict, AffineSubspace, IntVec};
//!
//! let cp2 = builtin("simplex:2:1").unwrap();
//! let v = AffineSubspace::linear(vec![IntVec::from_i64(&[3, 2])]).unwrap();
//! let r = equivalence_verdict(&cp2, &v, true).unwrap();
//! assert!(!r.smooth && !r.good);
//! ```

pub mod analysis;
pub mod chart;
pub mod classify;
pub mod error;
pub mod feasibility;
pub mod io;
pub mod lattice;
pub mod polytope;
pub mod subspace;
pub mod sweep;

pub use analysis::{equivalence_verdict, image_polytope, ConvexPolytope, EquivalenceReport, ImageLabel};
pub use chart::{build_binomial, is_smooth, smoothness_report, ChartBinomial, SmoothReason, SmoothnessVerdict};
pub use classify::{good_polytope, good_vertex, GoodPolytope, IndexSets, VertexClassification};
pub use error::{Error, Result};
pub use lattice::{format_rat, parse_rat, Int, IntMat, IntVec, Rat, RatVec};
pub use polytope::{builtin, validate_delzant, DelzantPolytope, HalfSpace, ValidationReport, VertexFrame};
pub use subspace::AffineSubspace;
pub use sweep::{sweep, CatalogRow};
