//! Exact Gaussian elimination over the rationals.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::Rational;

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// columns.
pub fn row_reduce(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>], cols: usize) -> usize {
    row_reduce(&mut rows.to_vec(), cols).len()
}

/// Unique solution of the square system `a x = b`, if `a` is nonsingular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.len();
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, v)| {
            let mut r = row.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug, m);
    (pivots.len() == m).then(|| {
        aug.into_iter()
            .map(|mut r| r.pop().expect("augmented"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hive::int;
    use num_traits::One;

    fn identity(m: usize) -> Vec<Vec<Rational>> {
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn rank_and_solve() {
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]]), 2), 1);
        assert_eq!(rank(&identity(3), 3), 3);
        assert_eq!(rank(&[], 3), 0);
        let x = solve(&mat(&[&[2, 1], &[1, 1]]), &[int(3), int(2)]).unwrap();
        assert_eq!(x, alloc::vec![int(1), int(1)]);
        let half = solve(&mat(&[&[2]]), &[int(1)]).unwrap();
        assert_eq!(half[0], Rational::new(1.into(), 2.into()));
        assert!(solve(&mat(&[&[1, 1], &[1, 1]]), &[int(0), int(0)]).is_none());
    }
}
