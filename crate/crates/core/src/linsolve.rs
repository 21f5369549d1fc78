//! Exact Gaussian elimination over the rationals.

use num::Zero;

use crate::rational::Rational;

/// Outcome of solving `A x = b` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    /// Exactly one solution.
    Unique(Vec<Rational>),
    /// Solvable but rank-deficient; the particular solution sets every
    /// free variable to zero.
    Underdetermined(Vec<Rational>),
    /// No exact solution.
    Inconsistent,
}

/// Solve the (generally overdetermined) system given by `rows` and `rhs`.
pub fn solve(mut rows: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Solution {
    assert_eq!(rows.len(), rhs.len());
    let n_rows = rows.len();
    let n_cols = rows.first().map_or(0, Vec::len);
    debug_assert!(rows.iter().all(|r| r.len() == n_cols));

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n_cols];
    let mut rank = 0usize;
    for col in 0..n_cols {
        let Some(pivot) = (rank..n_rows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        rhs.swap(rank, pivot);
        let inv = rows[rank][col].clone();
        for v in rows[rank].iter_mut() {
            if !v.is_zero() {
                *v /= &inv;
            }
        }
        rhs[rank] /= &inv;
        for r in 0..n_rows {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                let pivot_row = rows[rank].clone();
                for (value, pivot_value) in rows[r].iter_mut().zip(&pivot_row).skip(col) {
                    let delta = pivot_value * &factor;
                    *value -= delta;
                }
                let delta = &rhs[rank] * &factor;
                rhs[r] -= delta;
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }

    if rhs.iter().skip(rank).any(|v| !v.is_zero()) {
        return Solution::Inconsistent;
    }

    let mut x = vec![Rational::zero(); n_cols];
    for (col, pivot) in pivot_of_col.iter().enumerate() {
        if let Some(row) = pivot {
            x[col] = rhs[*row].clone();
        }
    }
    if pivot_of_col.iter().all(Option::is_some) {
        Solution::Unique(x)
    } else {
        Solution::Underdetermined(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn unique_system() {
        // x + y = 3, x - y = 1, 2x = 4 (consistent, overdetermined)
        let rows = vec![
            vec![rat(1), rat(1)],
            vec![rat(1), rat(-1)],
            vec![rat(2), rat(0)],
        ];
        let rhs = vec![rat(3), rat(1), rat(4)];
        assert_eq!(solve(rows, rhs), Solution::Unique(vec![rat(2), rat(1)]));
    }

    #[test]
    fn inconsistent_system() {
        let rows = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        let rhs = vec![rat(1), rat(3)];
        assert_eq!(solve(rows, rhs), Solution::Inconsistent);
    }

    #[test]
    fn underdetermined_system() {
        let rows = vec![vec![rat(1), rat(1)]];
        let rhs = vec![rat(2)];
        match solve(rows, rhs) {
            Solution::Underdetermined(x) => assert_eq!(x, vec![rat(2), rat(0)]),
            other => panic!("expected underdetermined, got {other:?}"),
        }
    }

    #[test]
    fn fractional_pivots() {
        let rows = vec![vec![ratio(1, 2), rat(0)], vec![rat(0), ratio(3, 4)]];
        let rhs = vec![ratio(1, 4), rat(1)];
        assert_eq!(
            solve(rows, rhs),
            Solution::Unique(vec![ratio(1, 2), ratio(4, 3)])
        );
    }
}
