use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Smith normal form `U · M · V = D` together with the inverses of `U` and
/// `V`.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    rank: usize,
}

impl SnfDecomposition {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Diagonal entries `d_1 | d_2 | ...`, including trailing zeros, of
    /// length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// The `i`-th diagonal entry, or zero past the end of the diagonal.
    pub fn diag(&self, i: usize) -> BigInt {
        if i < self.d.rows().min(self.d.cols()) {
            self.d.get(i, i).clone()
        } else {
            BigInt::zero()
        }
    }
}

/// Nearest-integer quotient: `a - q*b` has minimal absolute value.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_mod_floor(b);
    let twice: BigInt = r.abs() << 1;
    if twice > b.abs() {
        q += 1;
    }
    q
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    // row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
        self.u_inv.add_col_multiple(src, dst, &-k);
    }

    // col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
        self.v_inv.add_row_multiple(src, dst, &-k);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    fn min_abs_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                    let one = ax.is_one();
                    best = Some((i, j, ax));
                    if one {
                        return best.map(|(i, j, _)| (i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Clears row and column `t` outside the pivot, keeping the pivot minimal.
    fn clear_cross(&mut self, t: usize) {
        loop {
            let pivot = self.a.get(t, t).clone();
            for i in t + 1..self.a.rows() {
                if !self.a.get(i, t).is_zero() {
                    let q = round_div(self.a.get(i, t), &pivot);
                    self.add_row(i, t, &-q);
                }
            }
            for j in t + 1..self.a.cols() {
                if !self.a.get(t, j).is_zero() {
                    let q = round_div(self.a.get(t, j), &pivot);
                    self.add_col(j, t, &-q);
                }
            }
            // Any leftover is a remainder smaller than the pivot: promote it.
            let mut smaller: Option<(bool, usize, BigInt)> = None;
            for i in t + 1..self.a.rows() {
                let x = self.a.get(i, t);
                if !x.is_zero() && smaller.as_ref().is_none_or(|(_, _, b)| x.abs() < *b) {
                    smaller = Some((true, i, x.abs()));
                }
            }
            for j in t + 1..self.a.cols() {
                let x = self.a.get(t, j);
                if !x.is_zero() && smaller.as_ref().is_none_or(|(_, _, b)| x.abs() < *b) {
                    smaller = Some((false, j, x.abs()));
                }
            }
            match smaller {
                None => return,
                Some((true, i, _)) => self.swap_rows(t, i),
                Some((false, j, _)) => self.swap_cols(t, j),
            }
        }
    }

    fn find_non_multiple(&self, t: usize) -> Option<usize> {
        let pivot = self.a.get(t, t);
        for i in t + 1..self.a.rows() {
            for j in t + 1..self.a.cols() {
                let x = self.a.get(i, j);
                if !x.is_zero() && !x.is_multiple_of(pivot) {
                    return Some(i);
                }
            }
        }
        None
    }
}

/// Smith normal form of an arbitrary integer matrix.
///
/// Pivots are chosen with minimal absolute value to limit entry growth. The
/// diagonal is nonnegative with `d_i | d_{i+1}`; the trailing zeros of the
/// diagonal come last.
pub fn smith_normal_form(m: &IntMatrix) -> SnfDecomposition {
    let (rows, cols) = m.shape();
    let mut r = Reducer {
        a: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    let mut rank = 0;
    for t in 0..rows.min(cols) {
        let Some((i, j)) = r.min_abs_in_block(t) else {
            break;
        };
        r.swap_rows(t, i);
        r.swap_cols(t, j);
        loop {
            r.clear_cross(t);
            match r.find_non_multiple(t) {
                Some(i) => r.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if r.a.get(t, t).is_negative() {
            r.negate_row(t);
        }
        rank += 1;
    }
    SnfDecomposition {
        d: r.a,
        u: r.u,
        v: r.v,
        u_inv: r.u_inv,
        v_inv: r.v_inv,
        rank,
    }
}

/// Solves `M · x = b` over the integers, or returns `None` when no integer
/// solution exists.
pub fn solve_integer(m: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != m.rows() {
        return Err(Error::Shape(format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            m.rows()
        )));
    }
    Ok(solve_with(&smith_normal_form(m), b))
}

/// Solves `M · x = b` reusing a precomputed decomposition of `M`.
pub fn solve_with(snf: &SnfDecomposition, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let c = snf.u.mul_vec(b);
    let cols = snf.v.rows();
    let mut y = vec![BigInt::zero(); cols];
    for (i, ci) in c.iter().enumerate() {
        if i < snf.rank() {
            let (q, rem) = ci.div_rem(snf.d.get(i, i));
            if !rem.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// Columns generating the integer kernel `{x : M·x = 0}`; there are exactly
/// `cols - rank` of them and they form a basis.
pub fn kernel_generators(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    snf.v.select_cols(snf.rank()..m.cols())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn identity_is_its_own_normal_form() {
        let snf = smith_normal_form(&IntMatrix::identity(3));
        assert!(snf.d.is_identity());
        assert!(snf.u.is_identity());
        assert!(snf.v.is_identity());
    }

    #[test]
    fn coprime_diagonal_merges() {
        let snf = smith_normal_form(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(snf.diagonal(), ints(&[1, 6]));
    }

    #[test]
    fn gcd_and_determinant() {
        let m = IntMatrix::from_rows(&[[2, 4], [6, 8]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal(), ints(&[2, 4]));
        assert_eq!(&(&snf.u * &m) * &snf.v, snf.d);
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let snf = smith_normal_form(&IntMatrix::zeros(r, c));
            assert_eq!(snf.rank(), 0);
            assert_eq!(snf.u.shape(), (r, r));
            assert_eq!(snf.v.shape(), (c, c));
        }
    }

    #[test]
    fn inverses_are_tracked() {
        let m = IntMatrix::from_rows(&[[3, 5, 7], [11, 13, 17], [19, 23, 29]]);
        let snf = smith_normal_form(&m);
        assert!((&snf.u * &snf.u_inv).is_identity());
        assert!((&snf.v_inv * &snf.v).is_identity());
    }

    #[test]
    fn solve_examples() {
        let two = IntMatrix::from_rows(&[[2]]);
        assert_eq!(solve_integer(&two, &ints(&[4])).unwrap(), Some(ints(&[2])));
        assert_eq!(solve_integer(&two, &ints(&[3])).unwrap(), None);
        let m = IntMatrix::from_rows(&[[1, 2], [3, 4]]);
        assert_eq!(solve_integer(&m, &ints(&[5, 11])).unwrap(), Some(ints(&[1, 2])));
        assert!(matches!(solve_integer(&m, &ints(&[1])), Err(Error::Shape(_))));
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_generators(&IntMatrix::from_rows(&[[2, 3]]));
        assert_eq!(k.cols(), 1);
        let v = k.col(0);
        // (3, -2) up to sign
        assert!(v == ints(&[3, -2]) || v == ints(&[-3, 2]), "{v:?}");
        assert!(kernel_generators(&IntMatrix::zeros(2, 2)).cols() == 2);
        assert_eq!(kernel_generators(&IntMatrix::identity(2)).cols(), 0);
    }

    #[test]
    fn round_div_is_nearest() {
        let q = round_div(&BigInt::from(7), &BigInt::from(4));
        assert_eq!(q, BigInt::from(2));
        let q = round_div(&BigInt::from(-7), &BigInt::from(4));
        assert_eq!(q, BigInt::from(-2));
        let q = round_div(&BigInt::from(5), &BigInt::from(-3));
        assert_eq!(q, BigInt::from(-2));
    }
}
