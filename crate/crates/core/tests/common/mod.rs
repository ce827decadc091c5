#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use subtorus::lattice::{is_saturated_basis, rat};
use subtorus::sweep::saturated_hyperplanes;
use subtorus::{builtin, AffineSubspace, DelzantPolytope, IntVec, Rat, RatVec};

pub const CORPUS: &[&str] = &[
    "simplex:2:1",
    "simplex:3:1",
    "simplex:4:1",
    "cube:2:1",
    "cube:3:1",
    "hirzebruch:0:1:1",
    "hirzebruch:1:1:1",
    "hirzebruch:2:1:1",
    "hirzebruch:3:1:1",
    "simplex:1:1*simplex:2:1",
];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vec(rng: &mut impl Rng, n: usize, bound: i64) -> IntVec {
    IntVec::from_i64(&(0..n).map(|_| rng.gen_range(-bound..=bound)).collect::<Vec<_>>())
}

/// n−1 random vectors with entries in [−bound, bound], rejected until
/// independent and saturated.
pub fn random_saturated_basis(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<IntVec> {
    loop {
        let basis: Vec<IntVec> = (0..n - 1).map(|_| random_vec(rng, n, bound)).collect();
        if let Ok(true) = is_saturated_basis(&basis) {
            return basis;
        }
    }
}

pub fn random_offset(rng: &mut impl Rng, n: usize) -> RatVec {
    RatVec::new((0..n).map(|_| rat(rng.gen_range(-5..=5), rng.gen_range(1..=4))).collect())
}

pub struct Pair {
    pub name: String,
    pub poly: DelzantPolytope,
    pub sub: AffineSubspace,
}

/// Every corpus polytope crossed with all hyperplanes of height ≤ 3 when
/// n = 2 and with `random` random saturated hyperplanes otherwise.
pub fn corpus_pairs(random: usize) -> Vec<Pair> {
    let mut r = rng(0x5eed);
    let mut out = Vec::new();
    for name in CORPUS {
        let poly = builtin(name).unwrap();
        let subs: Vec<AffineSubspace> = if poly.dim() == 2 {
            saturated_hyperplanes(2, 3)
        } else {
            (0..random)
                .map(|_| AffineSubspace::linear(random_saturated_basis(&mut r, poly.dim(), 4)).unwrap())
                .collect()
        };
        for sub in subs {
            out.push(Pair { name: name.to_string(), poly: poly.clone(), sub });
        }
    }
    out
}

/// Leibniz-formula determinant, independent of the library's elimination.
pub fn leibniz_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0i128;
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(p: &mut Vec<usize>, k: usize, m: &[Vec<i64>], total: &mut i128) {
    if k == p.len() {
        let mut inversions = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        let prod: i128 = (0..p.len()).map(|i| m[i][p[i]] as i128).product();
        *total += if inversions % 2 == 0 { prod } else { -prod };
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, m, total);
        p.swap(k, i);
    }
}

pub fn to_i64(v: &IntVec) -> Vec<i64> {
    v.entries().iter().map(|x| i64::try_from(x).unwrap()).collect()
}

pub fn rat_i(x: i64) -> Rat {
    rat(x, 1)
}
