//! Row reduction over a [`FieldSpec`], enough for fixed spaces and kernels of
//! bilinear forms.

use crate::scalars::{FieldSpec, Scalar};

/// Dense row-major matrix.
pub type Mat = Vec<Vec<Scalar>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce(rows: &mut Mat) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &(&factor * y);
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

pub fn rank(m: &Mat) -> usize {
    let mut m = m.clone();
    row_reduce(&mut m).len()
}

/// Basis of `{x : m·x = 0}`.
pub fn nullspace(m: &Mat, cols: usize, field: &FieldSpec) -> Vec<Vec<Scalar>> {
    let mut m = m.clone();
    let pivots = row_reduce(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![field.zero(); cols];
            x[f] = field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = -&m[row][f];
            }
            x
        })
        .collect()
}

pub fn transpose(m: &Mat) -> Mat {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel_over_f2() {
        let f = FieldSpec::with_char2_override(2).unwrap();
        // M - I for the unipotent matrix [[1,1],[0,1]].
        let m = vec![vec![f.zero(), f.one()], vec![f.zero(), f.zero()]];
        assert_eq!(rank(&m), 1);
        let ker = nullspace(&m, 2, &f);
        assert_eq!(ker, vec![vec![f.one(), f.zero()]]);
    }

    #[test]
    fn kernel_over_rationals() {
        let q = FieldSpec::rationals();
        let m = vec![vec![q.from_i64(1), q.from_i64(2), q.from_i64(3)]];
        let ker = nullspace(&m, 3, &q);
        assert_eq!(ker.len(), 2);
        for x in ker {
            let dot = &(&m[0][0] * &x[0]) + &(&(&m[0][1] * &x[1]) + &(&m[0][2] * &x[2]));
            assert!(dot.is_zero());
        }
    }
}
