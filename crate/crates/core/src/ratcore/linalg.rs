//! Small dense exact linear algebra over the rationals.

use num_traits::{Signed, Zero};

use super::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Solves `m x = b` for every right-hand side in `rhs`. Returns `None` when
/// `m` is singular.
pub fn solve(m: &Matrix, rhs: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let k = rhs.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(rhs.iter().map(|b| b[i].clone()));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                *x -= &f * y;
            }
        }
    }
    Some(
        (0..k)
            .map(|j| (0..n).map(|i| a[i][n + j].clone()).collect())
            .collect(),
    )
}

/// Inertia `(positive, negative, zero)` of a symmetric matrix, computed by
/// congruence diagonalisation.
#[allow(clippy::needless_range_loop)]
pub fn inertia(m: &Matrix) -> (usize, usize, usize) {
    let n = m.len();
    let mut a = m.clone();
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // a[j][j] = 0 here, so the new pivot is 2 a[k][j] != 0.
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
            }
        }
        let p = a[k][k].clone();
        if p.is_zero() {
            diag.push(p);
            continue;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &p;
            for c in 0..n {
                let v = &f * &a[k][c];
                a[i][c] -= v;
            }
            for r in 0..n {
                let v = &f * &a[r][k];
                a[r][i] -= v;
            }
        }
        diag.push(p);
    }
    let pos = diag.iter().filter(|d| d.is_positive()).count();
    let neg = diag.iter().filter(|d| d.is_negative()).count();
    (pos, neg, n - pos - neg)
}

pub fn is_negative_definite(m: &Matrix) -> bool {
    let (_, neg, _) = inertia(m);
    neg == m.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::int;

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn solves_systems() {
        let m = mat(&[&[-2, 1], &[1, -1]]);
        let x = solve(&m, &[vec![int(0), int(1)]]).unwrap();
        assert_eq!(x[0], vec![int(-1), int(-2)]);
        assert!(solve(&mat(&[&[1, 2], &[2, 4]]), &[vec![int(1), int(1)]]).is_none());
    }

    #[test]
    fn inertia_of_forms() {
        assert_eq!(inertia(&mat(&[&[1, 0], &[0, -1]])), (1, 1, 0));
        assert_eq!(inertia(&mat(&[&[0, 1], &[1, 0]])), (1, 1, 0));
        assert_eq!(inertia(&mat(&[&[0, 0], &[0, 0]])), (0, 0, 2));
        // A2 chain of (-2)-curves
        assert!(is_negative_definite(&mat(&[&[-2, 1], &[1, -2]])));
        // two (-1)-curves meeting twice span a hyperbolic plane
        assert!(!is_negative_definite(&mat(&[&[-1, 2], &[2, -1]])));
        // A-tilde: (-2)-cycle of length 3 is semi-definite
        assert_eq!(inertia(&mat(&[&[-2, 1, 1], &[1, -2, 1], &[1, 1, -2]])), (0, 2, 1));
    }
}
