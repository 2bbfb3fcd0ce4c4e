use num_bigint::BigInt;

use super::*;
use crate::category::ClosedMonoidal;

fn z() -> FgGroup {
    FgGroup::integers()
}

fn c(n: u64) -> FgGroup {
    FgGroup::cyclic(n)
}

fn sum(gs: &[&FgGroup]) -> FgGroup {
    FgGroup::direct_sum(gs)
}

#[test]
fn tensor_examples() {
    assert_eq!(tensor(&c(4), &c(6)).canonical().describe(), "Z/2");
    let t = tensor(&sum(&[&z(), &c(2)]), &c(4));
    assert!(t.isomorphic(&sum(&[&c(4), &c(2)])));
    assert!(tensor(&c(2), &c(3)).is_trivial());
}

#[test]
fn hom_examples() {
    let cat = FgAb::default();
    assert_eq!(cat.hom(&c(4), &c(6)).unwrap().describe(), "Z/2");
    assert_eq!(cat.hom(&sum(&[&c(2), &z()]), &z()).unwrap().describe(), "Z");
    assert_eq!(cat.hom(&c(2), &z()).unwrap().describe(), "0");
    assert_eq!(cat.hom(&z(), &c(5)).unwrap().describe(), "Z/5");
}

#[test]
fn hom_size_bound() {
    let cat = FgAb::new(3);
    let g = FgGroup::free(2);
    assert!(matches!(cat.hom(&g, &g), Err(Error::Resource { .. })));
}

#[test]
fn name_unname_round_trip() {
    let cat = FgAb::default();
    let (g, h) = (c(4), c(6));
    for f in cat.morphisms(&g, &h, 100).unwrap() {
        let back = cat.unname(&g, &h, &cat.name(&f).unwrap()).unwrap();
        assert!(back.equals(&f).unwrap());
    }
    assert_eq!(cat.morphisms(&g, &h, 100).unwrap().len(), 2);
}

#[test]
fn multiplication_of_z6_curries_to_iso() {
    let cat = FgAb::default();
    let r = c(6);
    let mu = Morphism::new(tensor(&r, &r), r.clone(), IntMatrix::from_rows(&[[1]])).unwrap();
    let phi = cat.curry(&mu, &r, &r).unwrap();
    assert!(phi.is_iso());
    let back = cat.uncurry(&phi, &r, &r).unwrap();
    assert!(back.equals(&mu).unwrap());
}

#[test]
fn braiding_laws() {
    let (g, h) = (sum(&[&z(), &c(2)]), c(4));
    let s = braiding(&g, &h);
    let ss = braiding(&h, &g).compose(&s).unwrap();
    assert!(ss.equals(&Morphism::identity(&tensor(&g, &h))).unwrap());
    // ρ ∘ σ = λ
    let lhs = right_unitor(&g).compose(&braiding(&z(), &g)).unwrap();
    assert!(lhs.equals(&left_unitor(&g)).unwrap());
}

#[test]
fn unit_hom_iso() {
    let cat = FgAb::default();
    for g in [c(4), sum(&[&z(), &c(6)]), FgGroup::zero()] {
        let e = cat.hom_unit_iso(&g).unwrap();
        assert!(e.is_iso());
    }
}

#[test]
fn hom_functoriality() {
    let cat = FgAb::default();
    let (x, y) = (c(4), c(8));
    let pre = Morphism::new(c(2), x.clone(), IntMatrix::from_rows(&[[2]])).unwrap();
    let post = Morphism::scalar(&y, 3);
    let hm = cat.hom_mor(&pre, &post).unwrap();
    for f in cat.morphisms(&x, &y, 100).unwrap() {
        let expected = post.compose(&f).unwrap().compose(&pre).unwrap();
        let via = cat
            .unname(&c(2), &y, &hm.compose(&cat.name(&f).unwrap()).unwrap())
            .unwrap();
        assert!(via.equals(&expected).unwrap());
    }
}

#[test]
fn torsion_quotients() {
    let cat = FgAb::default();
    let g = sum(&[&z(), &c(2), &c(9)]);
    let (q, p) = cat.torsion_quotient(&g, TorsionKind::All).unwrap();
    assert!(q.isomorphic(&z()));
    assert!(p.is_epi());
    let (q2, _) = cat.torsion_quotient(&g, TorsionKind::Prime(2)).unwrap();
    assert!(q2.isomorphic(&sum(&[&z(), &c(9)])));
}

#[test]
fn lift_and_equalizer() {
    let cat = FgAb::default();
    let f = Morphism::scalar(&z(), 2);
    let y = |k: i64| {
        Morphism::new_unchecked(z(), z(), IntMatrix::column_vector(&[BigInt::from(k)]))
    };
    assert!(cat.lift(&f, &y(4)).unwrap().is_some());
    assert!(cat.lift(&f, &y(3)).unwrap().is_none());
    let (e, _) = cat
        .equalizer(&Morphism::identity(&c(6)), &Morphism::scalar(&c(6), 3))
        .unwrap();
    assert_eq!(e.order(), Some(BigInt::from(2)));
}

mod props {
    use proptest::prelude::*;

    use super::*;

    fn small_group() -> impl Strategy<Value = FgGroup> {
        prop::collection::vec(prop_oneof![Just(0u64), 2u64..7], 0..3).prop_map(|ms| {
            FgGroup::from_moduli(&ms.iter().map(|&m| BigInt::from(m)).collect::<Vec<_>>())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn tensor_is_bifunctorial(g in small_group(), h in small_group(), a in -3i64..4, b in -3i64..4) {
            let f1 = Morphism::scalar(&g, a);
            let f2 = Morphism::scalar(&g, b);
            let k = Morphism::identity(&h);
            let lhs = tensor_mor(&f1.compose(&f2).unwrap(), &k);
            let rhs = tensor_mor(&f1, &k).compose(&tensor_mor(&f2, &k)).unwrap();
            prop_assert!(lhs.equals(&rhs).unwrap());
        }

        #[test]
        fn tensor_is_symmetric(g in small_group(), h in small_group()) {
            prop_assert!(tensor(&g, &h).isomorphic(&tensor(&h, &g)));
            prop_assert!(braiding(&g, &h).is_iso());
        }

        #[test]
        fn hom_count_matches_brute_force(g in small_group(), h in small_group()) {
            prop_assume!(g.is_finite() && h.is_finite());
            let cat = FgAb::default();
            let hom = cat.hom(&g, &h).unwrap();
            // independent count: assignments of generator images that respect relations
            let hs = h.elements(10_000).unwrap();
            let n = g.generators();
            let mut count = 0u64;
            let mut idx = vec![0usize; n];
            loop {
                let cols: Vec<Vec<BigInt>> = idx.iter().map(|&i| hs[i].clone()).collect();
                let m = IntMatrix::from_cols(h.generators(), &cols);
                if Morphism::new(g.clone(), h.clone(), m).is_ok() {
                    count += 1;
                }
                let mut p = 0;
                while p < n && idx[p] + 1 == hs.len() {
                    idx[p] = 0;
                    p += 1;
                }
                if p == n {
                    break;
                }
                idx[p] += 1;
            }
            prop_assert_eq!(hom.order(), Some(BigInt::from(count)));
        }
    }
}
