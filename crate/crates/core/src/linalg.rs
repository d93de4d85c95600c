//! Small exact linear algebra over the rationals.

use crate::rootsys::Q;
use num::Zero;

/// Rank of a list of integer vectors.
pub fn rank(vectors: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<Q>> = vectors.iter().map(|v| v.iter().map(|&x| Q::from_integer(x)).collect()).collect();
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else { continue };
        rows.swap(r, p);
        for k in 0..rows.len() {
            if k != r && !rows[k][c].is_zero() {
                let f = rows[k][c] / rows[r][c];
                for j in c..cols {
                    let t = rows[r][j];
                    rows[k][j] -= f * t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Solve `sum_k x_k cols[k] = target` when `cols` are linearly independent.
/// Returns `None` if `target` is outside their span.
pub fn solve_independent(cols: &[&Vec<i64>], target: &[i64]) -> Option<Vec<Q>> {
    let n = cols.len();
    let m = target.len();
    // Augmented m x (n+1) system.
    let mut a: Vec<Vec<Q>> = (0..m)
        .map(|i| {
            let mut row: Vec<Q> = cols.iter().map(|c| Q::from_integer(c[i])).collect();
            row.push(Q::from_integer(target[i]));
            row
        })
        .collect();
    let mut r = 0;
    for c in 0..n {
        let p = (r..m).find(|&k| !a[k][c].is_zero())?;
        a.swap(r, p);
        let piv = a[r][c];
        for j in c..=n {
            a[r][j] /= piv;
        }
        for k in 0..m {
            if k != r && !a[k][c].is_zero() {
                let f = a[k][c];
                for j in c..=n {
                    let t = a[r][j];
                    a[k][j] -= f * t;
                }
            }
        }
        r += 1;
    }
    if (r..m).any(|k| !a[k][n].is_zero()) {
        return None;
    }
    Some((0..n).map(|k| a[k][n]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(rank(&[vec![1, 0], vec![0, 1], vec![1, 1]]), 2);
        assert_eq!(rank(&[vec![2, 4], vec![1, 2]]), 1);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn solves() {
        let (a, b) = (vec![1, 1, 0], vec![0, 1, 1]);
        let x = solve_independent(&[&a, &b], &[1, 3, 2]).unwrap();
        assert_eq!(x, vec![Q::from_integer(1), Q::from_integer(2)]);
        assert!(solve_independent(&[&a, &b], &[1, 0, 0]).is_none());
    }
}
