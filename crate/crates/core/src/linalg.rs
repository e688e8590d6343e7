// Small exact linear algebra for dimensions <= 4.

use num_traits::{Signed, Zero};

use crate::Q;

/// Solves `m * x = rhs` for square `m`; `None` when singular.
pub(crate) fn solve(m: &[Vec<Q>], rhs: &[Q]) -> Option<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(*b);
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for j in col..=n {
            a[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in col..=n {
                    let v = a[col][j] * f;
                    a[r][j] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n]).collect())
}

/// Rank of a list of integer vectors.
pub(crate) fn rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| Q::from_integer(v as i128)).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..a.len() {
            if !a[r][col].is_zero() {
                let f = a[r][col] / a[rank][col];
                for j in col..cols {
                    let v = a[rank][j] * f;
                    a[r][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Absolute value of the determinant of a square integer matrix.
pub(crate) fn abs_det(m: &[Vec<i64>]) -> Q {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .map(|r| r.iter().map(|&v| Q::from_integer(v as i128)).collect())
        .collect();
    let mut det = Q::from_integer(1);
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        a.swap(col, pivot);
        det *= a[col][col];
        for r in col + 1..n {
            if !a[r][col].is_zero() {
                let f = a[r][col] / a[col][col];
                for j in col..n {
                    let v = a[col][j] * f;
                    a[r][j] -= v;
                }
            }
        }
    }
    det.abs()
}
