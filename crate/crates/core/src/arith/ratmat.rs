//! Small dense rational matrices, only what the arithmetic stratum needs.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type RatMat = Vec<Vec<BigRational>>;

pub(crate) fn zeros(rows: usize, cols: usize) -> RatMat {
    vec![vec![BigRational::zero(); cols]; rows]
}

pub(crate) fn mul(a: &RatMat, b: &RatMat, inner: usize, cols: usize) -> RatMat {
    let mut out = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate().take(inner) {
            if x.is_zero() {
                continue;
            }
            for k in 0..cols {
                if !b[j][k].is_zero() {
                    out[i][k] += x * &b[j][k];
                }
            }
        }
    }
    out
}

/// Row-reduces `[a | b]` and returns the unique solution of `a x = b` when
/// `a` has full column rank and the system is consistent. `None` when
/// inconsistent; `Err(())` when `a` is rank deficient.
pub(crate) fn solve(a: &RatMat, cols: usize, b: &[BigRational]) -> Result<Option<Vec<BigRational>>, ()> {
    let rows = a.len();
    let mut m: RatMat = a
        .iter()
        .zip(b)
        .map(|(r, y)| {
            let mut r = r.clone();
            r.push(y.clone());
            r
        })
        .collect();
    let mut pivot_row = 0;
    for c in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][c].is_zero()) else {
            return Err(());
        };
        m.swap(pivot_row, p);
        let inv = BigRational::one() / &m[pivot_row][c];
        for x in m[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][c].is_zero() {
                let k = m[r][c].clone();
                for cc in 0..=cols {
                    let v = &m[pivot_row][cc] * &k;
                    m[r][cc] -= v;
                }
            }
        }
        pivot_row += 1;
    }
    if (pivot_row..rows).any(|r| !m[r][cols].is_zero()) {
        return Ok(None);
    }
    Ok(Some((0..cols).map(|r| m[r][cols].clone()).collect()))
}

/// Inverse of a square matrix, if it is nonsingular.
pub(crate) fn invert(a: &RatMat) -> Option<RatMat> {
    let n = a.len();
    let mut inv = vec![Vec::with_capacity(n); n];
    for j in 0..n {
        let mut e = vec![BigRational::zero(); n];
        e[j] = BigRational::one();
        let x = solve(a, n, &e).ok()??;
        for (i, v) in x.into_iter().enumerate() {
            inv[i].push(v);
        }
    }
    Some(inv)
}

/// Whether the columns are linearly independent.
pub(crate) fn full_column_rank(a: &RatMat, cols: usize) -> bool {
    let zero = vec![BigRational::zero(); a.len()];
    solve(a, cols, &zero).is_ok()
}

/// A basis of `{x : a x = 0}`, one vector per free column of the reduced
/// row echelon form.
pub(crate) fn nullspace(a: &RatMat, cols: usize) -> Vec<Vec<BigRational>> {
    let mut m = a.clone();
    let rows = m.len();
    let mut pivots = Vec::new();
    for c in 0..cols {
        let r0 = pivots.len();
        let Some(p) = (r0..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(r0, p);
        let inv = BigRational::one() / &m[r0][c];
        for x in m[r0].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r != r0 && !m[r][c].is_zero() {
                let k = m[r][c].clone();
                for cc in 0..cols {
                    let v = &m[r0][cc] * &k;
                    m[r][cc] -= v;
                }
            }
        }
        pivots.push(c);
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![BigRational::zero(); cols];
            x[free] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -m[r][free].clone();
            }
            x
        })
        .collect()
}
