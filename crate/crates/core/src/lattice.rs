//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers ([`BigInt`]) or
//! exact rationals ([`BigRational`]); there is no floating point anywhere.
//! Matrices are small (desk-scale dimensions), so the algorithms favour
//! clarity over asymptotics: Bareiss determinants, row-style Hermite normal
//! form with an explicit unimodular transform, and a plain elimination loop
//! for the Smith normal form diagonal.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    BigInt::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_from_int(v: &Int) -> Rat {
    BigRational::from_integer(v.clone())
}

/// Formats a rational as `"num/den"`, or `"num"` when the denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"num/den"` or `"num"` into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<Int> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("invalid rational `{s}`")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(parse_int(n)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

fn serialize_int<S: Serializer>(v: &Int, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

struct IntRef<'a>(&'a Int);

impl Serialize for IntRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_int(self.0, s)
    }
}

/// Serde helper: a single [`Int`] as a JSON number (or string if it overflows i64).
pub fn serialize_int_field<S: Serializer>(v: &Int, s: S) -> std::result::Result<S::Ok, S::Error> {
    serialize_int(v, s)
}

/// Serde helper: a single [`Rat`] as a `"num/den"` string.
pub fn serialize_rat_field<S: Serializer>(v: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rat(v))
}

/// Serde helper: a list of rationals as strings.
pub fn serialize_rat_slice<S: Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&format_rat(r))?;
    }
    seq.end()
}

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

/// Integer vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec(Vec<Int>);

impl IntVec {
    pub fn new(entries: Vec<Int>) -> Self {
        IntVec(entries)
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVec(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        IntVec(vec![Int::zero(); dim])
    }

    /// The `i`-th standard basis vector.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Int::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Int] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Int> {
        self.0
    }

    pub fn dot(&self, other: &IntVec) -> Int {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn dot_rat(&self, other: &RatVec) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(other.entries())
            .fold(Rat::zero(), |acc, (a, b)| acc + rat_from_int(a) * b)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// gcd of the entries (0 for the zero vector).
    pub fn content(&self) -> Int {
        self.0.iter().fold(Int::zero(), |g, x| g.gcd(x))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Divides out the content; the zero vector is returned unchanged.
    pub fn primitive_part(&self) -> IntVec {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntVec(self.0.iter().map(|x| x / &g).collect())
    }

    pub fn neg(&self) -> IntVec {
        IntVec(self.0.iter().map(|x| -x).collect())
    }

    /// Flips the sign so that the first nonzero entry is positive.
    pub fn sign_normalized(&self) -> IntVec {
        match self.0.iter().find(|x| !x.is_zero()) {
            Some(x) if x.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn add(&self, other: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: &Int) -> IntVec {
        IntVec(self.0.iter().map(|x| x * k).collect())
    }

    pub fn to_rat(&self) -> RatVec {
        RatVec(self.0.iter().map(rat_from_int).collect())
    }
}

impl Index<usize> for IntVec {
    type Output = Int;
    fn index(&self, i: usize) -> &Int {
        &self.0[i]
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for IntVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for x in &self.0 {
            seq.serialize_element(&IntRef(x))?;
        }
        seq.end()
    }
}

/// Rational vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVec(Vec<Rat>);

impl RatVec {
    pub fn new(entries: Vec<Rat>) -> Self {
        RatVec(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        RatVec(vec![Rat::zero(); dim])
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        RatVec(entries.iter().map(|&x| rat(x, 1)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.0
    }

    pub fn add(&self, other: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Rat) -> RatVec {
        RatVec(self.0.iter().map(|x| x * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Clears denominators: returns the smallest positive integer multiple
    /// with integral entries.
    pub fn clear_denominators(&self) -> IntVec {
        let l = self.0.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()));
        IntVec(self.0.iter().map(|x| x.numer() * (&l / x.denom())).collect())
    }

    /// Returns the integer vector if every entry is integral.
    pub fn to_int(&self) -> Option<IntVec> {
        self.0
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntVec)
    }
}

impl Index<usize> for RatVec {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_rat(x))?;
        }
        write!(f, ")")
    }
}

impl Serialize for RatVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_rat_slice(&self.0, s)
    }
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// Dense row-major integer matrix. Zero rows or columns are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMat {
    pub fn new(rows: usize, cols: usize, data: Vec<Int>) -> Self {
        assert_eq!(data.len(), rows * cols, "IntMat data length");
        IntMat { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat::new(rows, cols, vec![Int::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let data = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged matrix");
                row.iter().map(|&x| BigInt::from(x))
            })
            .collect();
        IntMat::new(r, c, data)
    }

    /// Matrix whose rows are the given vectors. `cols` is used when `rows` is empty.
    pub fn from_rows(rows: &[IntVec], cols: usize) -> Self {
        let data = rows
            .iter()
            .flat_map(|v| {
                assert_eq!(v.dim(), cols, "row dimension");
                v.entries().iter().cloned()
            })
            .collect();
        IntMat::new(rows.len(), cols, data)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[IntVec], rows: usize) -> Self {
        Self::from_rows(cols, rows).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Int {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Int) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> IntVec {
        IntVec(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn col(&self, c: usize) -> IntVec {
        IntVec((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn row_vecs(&self) -> Vec<IntVec> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn col_vecs(&self) -> Vec<IntVec> {
        (0..self.cols).map(|c| self.col(c)).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s: Int = (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum();
                out.set(i, j, s);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &IntVec) -> IntVec {
        assert_eq!(self.cols, v.dim());
        IntVec((0..self.rows).map(|r| self.row(r).dot(v)).collect())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn to_nested(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|r| self.row(r).0).collect()
    }

    fn from_nested(rows: Vec<Vec<Int>>, cols: usize) -> IntMat {
        let r = rows.len();
        IntMat::new(r, cols, rows.into_iter().flatten().collect())
    }

    pub fn to_rat_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| rat_from_int(self.get(r, c))).collect())
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut a = self.to_nested();
        let mut negate = false;
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        negate = !negate;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().abs().is_one()
    }

    pub fn rank(&self) -> usize {
        rat_rank(&self.to_rat_rows())
    }

    /// Inverse over the integers, if it exists (i.e. the matrix is unimodular).
    pub fn integral_inverse(&self) -> Option<IntMat> {
        if !self.is_square() {
            return None;
        }
        let inv = rat_inverse(&self.to_rat_rows())?;
        let n = self.rows;
        let mut data = Vec::with_capacity(n * n);
        for row in inv {
            for x in row {
                if !x.is_integer() {
                    return None;
                }
                data.push(x.to_integer());
            }
        }
        Some(IntMat::new(n, n, data))
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.row(r))?;
        }
        write!(f, "]")
    }
}

impl Serialize for IntMat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = self.row_vecs();
        let mut seq = s.serialize_seq(Some(rows.len()))?;
        for r in &rows {
            seq.serialize_element(r)?;
        }
        seq.end()
    }
}

// ---------------------------------------------------------------------------
// Rational elimination
// ---------------------------------------------------------------------------

/// Rank of a rational matrix given by rows.
pub fn rat_rank(rows: &[Vec<Rat>]) -> usize {
    let mut a = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot_row = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot_row[c];
            for (x, y) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                *x -= y * &f;
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

/// Solves the square system `a x = b`; `None` if `a` is singular.
pub fn solve_square(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    gauss_jordan(&mut m, n)?;
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

/// Inverse of a square rational matrix.
pub fn rat_inverse(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    gauss_jordan(&mut m, n)?;
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Reduces the left `n` columns of `m` to the identity.
fn gauss_jordan(m: &mut [Vec<Rat>], n: usize) -> Option<()> {
    let width = m.first().map_or(0, Vec::len);
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let pivot = m[c][c].clone();
        for x in m[c][c..width].iter_mut() {
            *x /= &pivot;
        }
        let pivot_row = m[c].clone();
        for (r, row) in m.iter_mut().enumerate().take(n) {
            if r == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row[c..width].iter_mut().zip(&pivot_row[c..width]) {
                *x -= y * &f;
            }
        }
    }
    Some(())
}

// ---------------------------------------------------------------------------
// Normal forms
// ---------------------------------------------------------------------------

fn row_sub_mul(a: &mut [Vec<Int>], target: usize, src: usize, q: &Int) {
    if q.is_zero() {
        return;
    }
    let (t, s) = if target < src {
        let (lo, hi) = a.split_at_mut(src);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(target);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        *x -= q * y;
    }
}

fn row_negate(a: &mut [Vec<Int>], r: usize) {
    for x in a[r].iter_mut() {
        *x = -&*x;
    }
}

/// Row-style Hermite normal form: returns `(h, u)` with `h = u * m`,
/// `u` unimodular, and `h` in reduced row echelon form over the integers
/// (positive pivots, entries above each pivot reduced into `[0, pivot)`,
/// zero rows last).
pub fn hnf(m: &IntMat) -> (IntMat, IntMat) {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.to_nested();
    let mut u = IntMat::identity(rows).to_nested();
    let mut p = 0;
    for c in 0..cols {
        if p == rows {
            break;
        }
        loop {
            let pick = (p..rows)
                .filter(|&r| !h[r][c].is_zero())
                .min_by(|&a, &b| h[a][c].abs().cmp(&h[b][c].abs()));
            let Some(r) = pick else { break };
            h.swap(p, r);
            u.swap(p, r);
            let mut clean = true;
            for r in p + 1..rows {
                if h[r][c].is_zero() {
                    continue;
                }
                let q = h[r][c].div_floor(&h[p][c]);
                row_sub_mul(&mut h, r, p, &q);
                row_sub_mul(&mut u, r, p, &q);
                if !h[r][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h[p][c].is_zero() {
            continue;
        }
        if h[p][c].is_negative() {
            row_negate(&mut h, p);
            row_negate(&mut u, p);
        }
        for r in 0..p {
            let q = h[r][c].div_floor(&h[p][c]);
            row_sub_mul(&mut h, r, p, &q);
            row_sub_mul(&mut u, r, p, &q);
        }
        p += 1;
    }
    (IntMat::from_nested(h, cols), IntMat::from_nested(u, rows))
}

/// Elementary divisors `d1 | d2 | ...` of `m`; the list has length
/// `min(rows, cols)` and is padded with zeros when `m` is rank deficient.
pub fn snf_diagonal(m: &IntMat) -> Vec<Int> {
    let (rows, cols) = (m.rows(), m.cols());
    let k = rows.min(cols);
    let mut a = m.to_nested();
    let mut diag = Vec::with_capacity(k);

    let swap_cols = |a: &mut Vec<Vec<Int>>, i: usize, j: usize| {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    };

    for t in 0..k {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero()
                    && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        swap_cols(&mut a, t, bj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                row_sub_mul(&mut a, i, t, &q);
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                for row in a.iter_mut() {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                // move the smallest remaining entry of row/column t onto the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap(t, best.0);
                }
                if best.1 != t {
                    swap_cols(&mut a, t, best.1);
                }
                continue;
            }
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t]))
            });
            match offender {
                Some(i) => {
                    let (lo, hi) = a.split_at_mut(i);
                    for (x, y) in lo[t].iter_mut().zip(hi[0].iter()) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag.resize(k, Int::zero());
    diag
}

/// Z-basis of the integer kernel `{x : m x = 0}`.
pub fn integer_kernel(m: &IntMat) -> Vec<IntVec> {
    let (h, u) = hnf(&m.transpose());
    (0..h.rows())
        .filter(|&r| h.row(r).is_zero())
        .map(|r| u.row(r))
        .collect()
}

fn check_same_dim(vs: &[IntVec]) -> Result<usize> {
    let n = vs.first().map(IntVec::dim).ok_or(Error::DependentInput)?;
    for v in vs {
        if v.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: v.dim() });
        }
    }
    Ok(n)
}

fn check_independent(vs: &[IntVec], n: usize) -> Result<IntMat> {
    let m = IntMat::from_rows(vs, n);
    if m.rank() < vs.len() {
        return Err(Error::DependentInput);
    }
    Ok(m)
}

/// True iff the vectors form a Z-basis of `span_Q(vs) ∩ Zⁿ`.
pub fn is_saturated_basis(vs: &[IntVec]) -> Result<bool> {
    let n = check_same_dim(vs)?;
    let m = check_independent(vs, n)?;
    Ok(snf_diagonal(&m).iter().all(One::is_one))
}

/// Primitive integer generator of the orthogonal complement of `n − 1`
/// independent vectors in `Zⁿ`, with its first nonzero entry positive.
pub fn orthogonal_primitive(vs: &[IntVec]) -> Result<IntVec> {
    let n = check_same_dim(vs)?;
    if vs.len() + 1 != n {
        return Err(Error::DimensionMismatch { expected: n - 1, found: vs.len() });
    }
    let m = check_independent(vs, n)?;
    let mut ker = integer_kernel(&m);
    if ker.len() != 1 {
        return Err(Error::DependentInput);
    }
    Ok(ker.pop().unwrap().sign_normalized())
}

/// Z-basis of `span_Q(vs) ∩ Zⁿ`, in Hermite normal form.
pub fn saturate(vs: &[IntVec]) -> Result<Vec<IntVec>> {
    let n = check_same_dim(vs)?;
    let m = check_independent(vs, n)?;
    let ker = integer_kernel(&m);
    let sat = integer_kernel(&IntMat::from_rows(&ker, n));
    let (h, _) = hnf(&IntMat::from_rows(&sat, n));
    Ok(h.row_vecs().into_iter().filter(|r| !r.is_zero()).collect())
}

/// Gram matrix `[⟨vᵢ, vⱼ⟩]`.
pub fn gram_matrix(vs: &[IntVec]) -> IntMat {
    let k = vs.len();
    let mut g = IntMat::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            g.set(i, j, vs[i].dot(&vs[j]));
        }
    }
    g
}

/// Outcome of [`gram_identity_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GramCheck {
    /// `|det[p₁ ⋯ pₙ₋₁ q]|`
    #[serde(serialize_with = "serialize_int_field")]
    pub lhs: Int,
    /// `⟨q, q⟩`
    #[serde(serialize_with = "serialize_int_field")]
    pub rhs: Int,
    /// `det Gram(p₁, …, pₙ₋₁)`
    #[serde(serialize_with = "serialize_int_field")]
    pub gram_det: Int,
    pub ok: bool,
}

/// Checks `|det[p₁ ⋯ pₙ₋₁ q]| = ⟨q,q⟩ = det Gram(p)` for a saturated basis
/// and its primitive orthogonal vector.
pub fn gram_identity_check(basis: &[IntVec], q: &IntVec) -> Result<GramCheck> {
    if !is_saturated_basis(basis)? {
        return Err(Error::PreconditionViolated("basis is not saturated".into()));
    }
    let n = q.dim();
    if basis.len() + 1 != n || basis[0].dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: basis[0].dim() });
    }
    if !q.is_primitive() || basis.iter().any(|p| !p.dot(q).is_zero()) {
        return Err(Error::PreconditionViolated(
            "q is not a primitive orthogonal vector".into(),
        ));
    }
    let mut cols = basis.to_vec();
    cols.push(q.clone());
    let lhs = IntMat::from_cols(&cols, n).det().abs();
    let rhs = q.dot(q);
    let gram_det = gram_matrix(basis).det();
    let ok = lhs == rhs && gram_det == rhs;
    Ok(GramCheck { lhs, rhs, gram_det, ok })
}
