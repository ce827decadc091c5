//! JSON input formats.
//!
//! Polytopes: `{"dim": 2, "halfspaces": [{"normal": [1, 0], "offset": "0"}, …]}`.
//! Subspaces: `{"basis": [[1, 2]], "offset": ["0", "1/2"]}`; `offset` may be
//! omitted. Integers may be JSON numbers or strings, rationals may be numbers
//! or `"n/d"` strings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{parse_rat, Int, IntVec, Rat, RatVec};
use crate::polytope::{DelzantPolytope, HalfSpace};
use crate::subspace::AffineSubspace;

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum Scalar {
    Int(i64),
    Str(String),
}

impl Scalar {
    fn to_int(&self) -> Result<Int> {
        match self {
            Scalar::Int(x) => Ok(Int::from(*x)),
            Scalar::Str(s) => s.trim().parse().map_err(|_| Error::Parse(format!("not an integer: `{s}`"))),
        }
    }

    fn to_rat(&self) -> Result<Rat> {
        match self {
            Scalar::Int(x) => Ok(Rat::from_integer(Int::from(*x))),
            Scalar::Str(s) => parse_rat(s),
        }
    }
}

fn int_vec(xs: &[Scalar]) -> Result<IntVec> {
    Ok(IntVec::new(xs.iter().map(Scalar::to_int).collect::<Result<_>>()?))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHalfSpace {
    normal: Vec<Scalar>,
    offset: Scalar,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPolytope {
    dim: usize,
    halfspaces: Vec<RawHalfSpace>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSubspace {
    basis: Vec<Vec<Scalar>>,
    #[serde(default)]
    offset: Option<Vec<Scalar>>,
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Dimension and half-spaces, without validation.
pub fn parse_halfspaces(text: &str) -> Result<(usize, Vec<HalfSpace>)> {
    let raw: RawPolytope = from_json(text)?;
    let hs = raw
        .halfspaces
        .iter()
        .map(|h| {
            let normal = int_vec(&h.normal)?;
            if normal.dim() != raw.dim {
                return Err(Error::DimensionMismatch { expected: raw.dim, found: normal.dim() });
            }
            HalfSpace::new(normal, h.offset.to_rat()?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((raw.dim, hs))
}

pub fn parse_polytope(text: &str) -> Result<DelzantPolytope> {
    let (dim, hs) = parse_halfspaces(text)?;
    DelzantPolytope::new(dim, hs)
}

pub fn parse_subspace(text: &str) -> Result<AffineSubspace> {
    let raw: RawSubspace = from_json(text)?;
    let basis = raw.basis.iter().map(|p| int_vec(p)).collect::<Result<Vec<_>>>()?;
    let n = basis.first().map_or(0, IntVec::dim);
    let offset = match raw.offset {
        Some(xs) => RatVec::new(xs.iter().map(Scalar::to_rat).collect::<Result<_>>()?),
        None => RatVec::zeros(n),
    };
    AffineSubspace::new(basis, offset)
}

#[derive(Serialize)]
struct PolytopeOut<'a> {
    dim: usize,
    halfspaces: &'a [HalfSpace],
}

/// Inverse of [`parse_halfspaces`].
pub fn halfspaces_to_json(dim: usize, halfspaces: &[HalfSpace]) -> String {
    serde_json::to_string_pretty(&PolytopeOut { dim, halfspaces }).expect("serializable")
}

#[derive(Serialize)]
struct SubspaceOut<'a> {
    basis: &'a [IntVec],
    offset: &'a RatVec,
}

pub fn subspace_to_json(sub: &AffineSubspace) -> String {
    serde_json::to_string(&SubspaceOut { basis: sub.basis(), offset: sub.offset() }).expect("serializable")
}
