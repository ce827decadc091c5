//! Exact feasibility of `{x : A x = b, x ≥ 0}` over the rationals.
//!
//! Dense phase-I simplex with Bland's rule, so it always terminates. Sizes
//! here are tiny (a handful of rows, a few dozen columns), which keeps the
//! dense `BigRational` tableau cheap enough.

use num_traits::{Signed, Zero};

use crate::lattice::Rat;

/// Returns a basic feasible point of `{x : A x = b, x ≥ 0}`, or `None` if the
/// system is infeasible. `a` is given by rows; every row must have `nvars`
/// entries.
pub fn nonnegative_solution(a: &[Vec<Rat>], b: &[Rat], nvars: usize) -> Option<Vec<Rat>> {
    let m = a.len();
    assert_eq!(b.len(), m);
    if m == 0 {
        return Some(vec![Rat::zero(); nvars]);
    }
    let width = nvars + m + 1; // original | artificial | rhs
    let rhs = width - 1;

    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        assert_eq!(row.len(), nvars);
        let flip = bi.is_negative();
        let mut r = Vec::with_capacity(width);
        r.extend(row.iter().map(|x| if flip { -x } else { x.clone() }));
        r.extend((0..m).map(|k| if k == i { Rat::from_integer(1.into()) } else { Rat::zero() }));
        r.push(if flip { -bi } else { bi.clone() });
        t.push(r);
    }
    let mut basis: Vec<usize> = (nvars..nvars + m).collect();

    // reduced costs of "minimise the sum of artificials"
    let mut cost = vec![Rat::zero(); width];
    for row in &t {
        for j in 0..nvars {
            cost[j] -= &row[j];
        }
        cost[rhs] -= &row[rhs];
    }

    while let Some(enter) = (0..nvars + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            leave = match leave {
                None => Some(i),
                Some(l) => {
                    let ri = &t[i][rhs] / &t[i][enter];
                    let rl = &t[l][rhs] / &t[l][enter];
                    if ri < rl || (ri == rl && basis[i] < basis[l]) {
                        Some(i)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        // the phase-I objective is bounded below by 0, so a ratio always exists
        let l = leave.expect("phase-I simplex is bounded");
        pivot(&mut t, &mut cost, l, enter);
        basis[l] = enter;
    }

    if !cost[rhs].is_zero() {
        return None;
    }
    let mut x = vec![Rat::zero(); nvars];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < nvars {
            x[bv] = t[i][rhs].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<Rat>], cost: &mut [Rat], row: usize, col: usize) {
    let p = t[row][col].clone();
    for x in t[row].iter_mut() {
        *x /= &p;
    }
    let pivot_row = t[row].clone();
    for (i, r) in t.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let f = r[col].clone();
        for (x, y) in r.iter_mut().zip(&pivot_row) {
            *x -= &f * y;
        }
    }
    if !cost[col].is_zero() {
        let f = cost[col].clone();
        for (x, y) in cost.iter_mut().zip(&pivot_row) {
            *x -= &f * y;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::rat;

    fn rows(xs: &[&[i64]]) -> Vec<Vec<Rat>> {
        xs.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect()
    }

    #[test]
    fn simple_feasible() {
        // x + y = 1, x - y = 0
        let a = rows(&[&[1, 1], &[1, -1]]);
        let x = nonnegative_solution(&a, &[rat(1, 1), rat(0, 1)], 2).unwrap();
        assert_eq!(x, vec![rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn infeasible_sign() {
        // x + y = -1 with x, y >= 0
        let a = rows(&[&[1, 1]]);
        assert!(nonnegative_solution(&a, &[rat(-1, 1)], 2).is_none());
    }

    #[test]
    fn negative_rhs_feasible() {
        // -x = -2
        let a = rows(&[&[-1]]);
        assert_eq!(nonnegative_solution(&a, &[rat(-2, 1)], 1).unwrap(), vec![rat(2, 1)]);
    }

    #[test]
    fn redundant_rows() {
        let a = rows(&[&[1, 1, 0], &[2, 2, 0], &[0, 0, 1]]);
        let x = nonnegative_solution(&a, &[rat(1, 1), rat(2, 1), rat(3, 1)], 3).unwrap();
        assert_eq!(&x[0] + &x[1], rat(1, 1));
        assert_eq!(x[2], rat(3, 1));
    }
}
