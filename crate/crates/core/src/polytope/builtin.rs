//! Named Delzant polytopes.
//!
//! Names are `simplex:n:s`, `cube:n:s`, `hirzebruch:k:s1:s2`, joined by `*`
//! for products, e.g. `simplex:1:1*simplex:2:1`. Sizes may be rationals.

use num_traits::{Signed, Zero};

use super::{DelzantPolytope, HalfSpace};
use crate::error::{Error, Result};
use crate::lattice::{int, parse_rat, rat_from_int, Int, IntVec, Rat};

fn positive(s: &Rat, what: &str) -> Result<()> {
    if s.is_positive() {
        Ok(())
    } else {
        Err(Error::BadParams(format!("{what} must be positive, got {s}")))
    }
}

fn unit(n: usize, i: usize, sign: i64) -> IntVec {
    let mut v = vec![Int::zero(); n];
    v[i] = int(sign);
    IntVec::new(v)
}

/// `{x ≥ 0, Σ xᵢ ≤ s}`
pub fn simplex(n: usize, s: Rat) -> Result<DelzantPolytope> {
    if n == 0 {
        return Err(Error::BadParams("simplex dimension must be positive".into()));
    }
    positive(&s, "simplex size")?;
    let mut hs: Vec<HalfSpace> = (0..n).map(|i| HalfSpace::new(unit(n, i, 1), Rat::zero())).collect::<Result<_>>()?;
    hs.push(HalfSpace::new(IntVec::new(vec![int(-1); n]), -s)?);
    DelzantPolytope::new(n, hs)
}

/// `[0, s]ⁿ`
pub fn cube(n: usize, s: Rat) -> Result<DelzantPolytope> {
    if n == 0 {
        return Err(Error::BadParams("cube dimension must be positive".into()));
    }
    positive(&s, "cube size")?;
    let mut hs: Vec<HalfSpace> = (0..n).map(|i| HalfSpace::new(unit(n, i, 1), Rat::zero())).collect::<Result<_>>()?;
    for i in 0..n {
        hs.push(HalfSpace::new(unit(n, i, -1), -s.clone())?);
    }
    DelzantPolytope::new(n, hs)
}

/// Hirzebruch trapezoid with normals `(1,0), (0,1), (0,−1), (−1,−k)`.
pub fn hirzebruch(k: Int, s1: Rat, s2: Rat) -> Result<DelzantPolytope> {
    if k.is_negative() {
        return Err(Error::BadParams("hirzebruch twist must be non-negative".into()));
    }
    positive(&s1, "hirzebruch height")?;
    positive(&s2, "hirzebruch width")?;
    let kr = rat_from_int(&k);
    let far = -(&s2 + &kr * &s1);
    let hs = vec![
        HalfSpace::new(IntVec::from_i64(&[1, 0]), Rat::zero())?,
        HalfSpace::new(IntVec::from_i64(&[0, 1]), Rat::zero())?,
        HalfSpace::new(IntVec::from_i64(&[0, -1]), -s1)?,
        HalfSpace::new(IntVec::new(vec![int(-1), -k]), far)?,
    ];
    DelzantPolytope::new(2, hs)
}

/// Cartesian product; facets of `a` come first.
pub fn product(a: &DelzantPolytope, b: &DelzantPolytope) -> Result<DelzantPolytope> {
    let (na, nb) = (a.dim(), b.dim());
    let mut hs = Vec::with_capacity(a.halfspaces().len() + b.halfspaces().len());
    for h in a.halfspaces() {
        let mut v = h.normal().entries().to_vec();
        v.resize(na + nb, Int::zero());
        hs.push(HalfSpace::new(IntVec::new(v), h.offset().clone())?);
    }
    for h in b.halfspaces() {
        let mut v = vec![Int::zero(); na];
        v.extend(h.normal().entries().iter().cloned());
        hs.push(HalfSpace::new(IntVec::new(v), h.offset().clone())?);
    }
    DelzantPolytope::new(na + nb, hs)
}

fn parse_dim(s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::BadParams(format!("bad dimension `{s}`")))
}

fn parse_size(s: &str) -> Result<Rat> {
    parse_rat(s.trim()).map_err(|_| Error::BadParams(format!("bad size `{s}`")))
}

fn factor(text: &str) -> Result<DelzantPolytope> {
    let parts: Vec<&str> = text.trim().split(':').collect();
    let arity = |k: usize| {
        if parts.len() == k + 1 {
            Ok(())
        } else {
            Err(Error::BadParams(format!("`{}` takes {k} parameters, got {}", parts[0], parts.len() - 1)))
        }
    };
    match parts[0].to_ascii_lowercase().as_str() {
        "simplex" => {
            arity(2)?;
            simplex(parse_dim(parts[1])?, parse_size(parts[2])?)
        }
        "cube" => {
            arity(2)?;
            cube(parse_dim(parts[1])?, parse_size(parts[2])?)
        }
        "hirzebruch" => {
            arity(3)?;
            let k: Int = parts[1]
                .trim()
                .parse()
                .map_err(|_| Error::BadParams(format!("bad twist `{}`", parts[1])))?;
            hirzebruch(k, parse_size(parts[2])?, parse_size(parts[3])?)
        }
        other => Err(Error::UnknownName(other.to_string())),
    }
}

/// Looks up a builtin by name, e.g. `hirzebruch:1:1:1` or `cube:1:1*simplex:2:1`.
pub fn builtin(name: &str) -> Result<DelzantPolytope> {
    let mut factors = name.split('*');
    let first = factor(factors.next().unwrap_or_default())?;
    factors.try_fold(first, |acc, f| product(&acc, &factor(f)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{rat, RatVec};

    #[test]
    fn builtin_shapes() {
        assert_eq!(builtin("simplex:2:1").unwrap().num_vertices(), 3);
        assert_eq!(builtin("cube:3:2").unwrap().num_vertices(), 8);
        assert_eq!(builtin("hirzebruch:2:1:1").unwrap().num_vertices(), 4);
        let p = builtin("simplex:1:1*simplex:2:1").unwrap();
        assert_eq!((p.dim(), p.num_vertices()), (3, 6));
    }

    #[test]
    fn hirzebruch_vertices() {
        let p = hirzebruch(int(1), rat(1, 1), rat(1, 1)).unwrap();
        let vs: Vec<RatVec> = p.vertices().cloned().collect();
        assert_eq!(
            vs,
            vec![
                RatVec::from_i64(&[0, 0]),
                RatVec::from_i64(&[0, 1]),
                RatVec::from_i64(&[1, 1]),
                RatVec::from_i64(&[2, 0]),
            ]
        );
    }

    #[test]
    fn rational_sizes() {
        let p = builtin("simplex:2:3/2").unwrap();
        assert!(p.vertices().any(|v| v == &RatVec::new(vec![rat(3, 2), rat(0, 1)])));
    }

    #[test]
    fn bad_names() {
        assert!(matches!(builtin("torus:2"), Err(Error::UnknownName(_))));
        assert!(matches!(builtin("simplex:2"), Err(Error::BadParams(_))));
        assert!(matches!(builtin("cube:2:0"), Err(Error::BadParams(_))));
        assert!(matches!(builtin("simplex:0:1"), Err(Error::BadParams(_))));
    }
}
