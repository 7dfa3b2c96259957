//! Exact dense linear algebra over a generic field.

use alloc::vec;
use alloc::vec::Vec;


use crate::field::Field;

pub type Mat<F> = Vec<Vec<F>>;

/// Row-reduces `m` in place to reduced row echelon form and returns the
/// pivot column of each pivot row.
pub fn rref<F: Field>(m: &mut Mat<F>) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pr) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pr);
        let inv = m[row][col].inv();
        for c in col..cols {
            m[row][c] = m[row][c].clone() * inv.clone();
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let sub = factor.clone() * m[row][c].clone();
                    m[r][c] = m[r][c].clone() - sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    pivots
}

pub fn rank<F: Field>(m: &Mat<F>) -> usize {
    let mut copy = m.clone();
    rref(&mut copy).len()
}

/// Solution set of `A x = b`.
pub enum SolveOutcome<F> {
    Inconsistent,
    Solved {
        particular: Vec<F>,
        /// Basis of the homogeneous solution space; empty means unique.
        nullspace: Vec<Vec<F>>,
    },
}

/// Solves `A x = b` exactly, reporting the full affine solution set.
pub fn solve<F: Field>(a: &Mat<F>, b: &[F]) -> SolveOutcome<F> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "row count mismatch");
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: Mat<F> = Vec::with_capacity(rows);
    for (r, row) in a.iter().enumerate() {
        let mut v = row.clone();
        v.push(b[r].clone());
        aug.push(v);
    }
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return SolveOutcome::Inconsistent;
    }
    let mut particular = vec![F::zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        particular[pc] = aug[r][cols].clone();
    }
    let mut nullspace = Vec::new();
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; cols];
        for &pc in &pivots {
            s[pc] = true;
        }
        s
    };
    for free in 0..cols {
        if pivot_set[free] {
            continue;
        }
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = aug[r][free].clone().neg();
        }
        nullspace.push(v);
    }
    SolveOutcome::Solved {
        particular,
        nullspace,
    }
}

/// Basis of the nullspace of `A`.
pub fn nullspace<F: Field>(a: &Mat<F>) -> Vec<Vec<F>> {
    let b = vec![F::zero(); a.len()];
    match solve(a, &b) {
        SolveOutcome::Solved { nullspace, .. } => nullspace,
        SolveOutcome::Inconsistent => unreachable!("homogeneous system is always consistent"),
    }
}

/// Exact inverse of a square matrix, or `None` when singular.
pub fn invert<F: Field>(a: &Mat<F>) -> Option<Mat<F>> {
    let n = a.len();
    let mut aug: Mat<F> = Vec::with_capacity(n);
    for (r, row) in a.iter().enumerate() {
        assert_eq!(row.len(), n, "invert requires a square matrix");
        let mut v = row.clone();
        for c in 0..n {
            v.push(if c == r { F::one() } else { F::zero() });
        }
        aug.push(v);
    }
    let pivots = rref(&mut aug);
    if pivots.iter().filter(|&&c| c < n).count() < n {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_mul<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    let n = a.len();
    let inner = if n == 0 { 0 } else { a[0].len() };
    let m = if b.is_empty() { 0 } else { b[0].len() };
    assert_eq!(inner, b.len(), "dimension mismatch");
    let mut out = vec![vec![F::zero(); m]; n];
    for i in 0..n {
        for (t, bt) in b.iter().enumerate() {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                if bt[j].is_zero() {
                    continue;
                }
                let add = a[i][t].clone() * bt[j].clone();
                out[i][j] = out[i][j].clone() + add;
            }
        }
    }
    out
}

pub fn mat_vec<F: Field>(a: &Mat<F>, x: &[F]) -> Vec<F> {
    a.iter()
        .map(|row| {
            let mut acc = F::zero();
            for (c, v) in row.iter().zip(x) {
                if !c.is_zero() && !v.is_zero() {
                    acc = acc + c.clone() * v.clone();
                }
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{frac, rat, Rat};
    use num_traits::Zero;

    fn m(rows: &[&[i64]]) -> Mat<Rat> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    #[test]
    fn unique_solution() {
        let a = m(&[&[2, 1], &[1, -1]]);
        let b = [rat(5), rat(1)];
        match solve(&a, &b) {
            SolveOutcome::Solved {
                particular,
                nullspace,
            } => {
                assert_eq!(particular, alloc::vec![rat(2), rat(1)]);
                assert!(nullspace.is_empty());
            }
            SolveOutcome::Inconsistent => panic!("consistent system reported inconsistent"),
        }
    }

    #[test]
    fn inconsistent_detected() {
        let a = m(&[&[1, 1], &[2, 2]]);
        let b = [rat(1), rat(3)];
        assert!(matches!(solve(&a, &b), SolveOutcome::Inconsistent));
    }

    #[test]
    fn underdetermined_nullspace() {
        let a = m(&[&[1, 2, -1]]);
        let b = [rat(3)];
        match solve(&a, &b) {
            SolveOutcome::Solved {
                particular,
                nullspace,
            } => {
                assert_eq!(nullspace.len(), 2);
                for v in &nullspace {
                    assert!(mat_vec(&a, v)[0].is_zero());
                }
                assert_eq!(mat_vec(&a, &particular)[0], rat(3));
            }
            SolveOutcome::Inconsistent => panic!("consistent system reported inconsistent"),
        }
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[1, 2, 0], &[0, 1, 3], &[4, 0, 1]]);
        let inv = invert(&a).unwrap();
        let prod = mat_mul(&a, &inv);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(prod[i][j], if i == j { rat(1) } else { rat(0) });
            }
        }
        assert!(invert(&m(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn rank_and_fractions() {
        let a: Mat<Rat> = alloc::vec![
            alloc::vec![frac(1, 2), frac(1, 3)],
            alloc::vec![frac(1, 4), frac(1, 6)],
        ];
        assert_eq!(rank(&a), 1);
    }
}
