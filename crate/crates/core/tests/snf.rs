//! Smith normal form against an independent determinantal-divisor oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use solidmon::intlinalg::{kernel_generators, smith_normal_form, solve_integer, IntMatrix};

/// Fraction-free Gaussian elimination (Bareiss).
fn bareiss_det(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all k×k minors.
fn determinantal_divisor(m: &IntMatrix, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rs in subsets(m.rows(), k) {
        for cs in subsets(m.cols(), k) {
            let minor: Vec<Vec<BigInt>> =
                rs.iter().map(|&r| cs.iter().map(|&c| m.get(r, c).clone()).collect()).collect();
            g = g.gcd(&bareiss_det(&minor));
        }
    }
    g
}

fn matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = (0..r).map(|i| v[i * c..(i + 1) * c].to_vec()).collect();
            IntMatrix::from_i64_rows(c, &rows)
        })
    })
}

fn is_unimodular(u: &IntMatrix) -> bool {
    bareiss_det(&u.to_rows()).abs().is_one()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn decomposition_is_valid(m in matrix(8, 100)) {
        let snf = smith_normal_form(&m);
        prop_assert_eq!(&(&snf.u * &m) * &snf.v, snf.d.clone());
        prop_assert!((&snf.u * &snf.u_inv).is_identity());
        prop_assert!((&snf.v * &snf.v_inv).is_identity());
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    prop_assert!(snf.d.get(i, j).is_zero());
                }
            }
        }
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }
    }

    #[test]
    fn diagonal_matches_determinantal_divisors(m in matrix(4, 12)) {
        let snf = smith_normal_form(&m);
        let mut prefix = BigInt::one();
        for k in 1..=m.rows().min(m.cols()) {
            prefix *= snf.diag(k - 1);
            prop_assert_eq!(&prefix, &determinantal_divisor(&m, k));
        }
    }

    #[test]
    fn transforms_are_unimodular(m in matrix(5, 30)) {
        let snf = smith_normal_form(&m);
        prop_assert!(is_unimodular(&snf.u));
        prop_assert!(is_unimodular(&snf.v));
    }

    #[test]
    fn solutions_and_kernels(m in matrix(5, 20), x in prop::collection::vec(-20i64..=20, 5)) {
        let x: Vec<BigInt> = x[..m.cols()].iter().map(|&v| BigInt::from(v)).collect();
        let b = m.mul_vec(&x);
        let y = solve_integer(&m, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
        let k = kernel_generators(&m);
        prop_assert!((&m * &k).is_zero());
        prop_assert_eq!(k.cols(), m.cols() - smith_normal_form(&m).rank());
    }
}

#[test]
fn bareiss_oracle_sanity() {
    let rows = |v: &[[i64; 3]]| -> Vec<Vec<BigInt>> {
        v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    };
    assert_eq!(bareiss_det(&rows(&[[2, 0, 1], [1, 3, 2], [1, 1, 2]])), BigInt::from(6));
    assert_eq!(bareiss_det(&rows(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]])), BigInt::from(-1));
    assert_eq!(bareiss_det(&rows(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]])), BigInt::from(0));
}
