use num_bigint::BigInt;

use super::*;
use crate::arith::{Arith, ArithGroup, ArithMor, ArithRing};
use crate::catalog;
use crate::fgab::{FgAb, FgGroup, Morphism};
use crate::intlinalg::IntMatrix;
use crate::monoid::monoid_isomorphism;

fn z() -> FgGroup {
    FgGroup::integers()
}

fn zn(n: u64) -> FgGroup {
    FgGroup::cyclic(n)
}

fn map(s: FgGroup, t: FgGroup, rows: &[Vec<i64>]) -> Morphism {
    let cols = s.generators();
    Morphism::new(s, t, IntMatrix::from_i64_rows(cols, rows)).unwrap()
}

fn tensor_with(n: u64) -> FunctorExpr<FgAb> {
    FunctorExpr::TensorWith {
        object: zn(n),
        eta: map(z(), zn(n), &[vec![1]]),
    }
}

fn hom_from(n: u64) -> FunctorExpr<FgAb> {
    FunctorExpr::HomFrom {
        object: zn(n),
        eta: map(z(), zn(n), &[vec![1]]),
    }
}

fn universe(objs: Vec<FgGroup>) -> TestUniverse<FgAb> {
    TestUniverse::new("test", objs, Vec::new())
}

fn module_universe() -> TestUniverse<FgAb> {
    let z_z2 = FgGroup::from_moduli(&[BigInt::from(0), BigInt::from(2)]);
    universe(vec![FgGroup::zero(), z(), zn(2), zn(3), zn(4), zn(6), z_z2])
}

#[test]
fn tensor_with_z6_on_z_is_reduction() {
    let cat = FgAb::default();
    let f = tensor_with(6);
    assert!(cat.isomorphic(&evaluate(&cat, &f, &z()).unwrap(), &zn(6)).unwrap());
    let l = coaugmentation_at(&cat, &f, &z()).unwrap();
    assert!(l.is_epi());
    assert!(!cat.is_mono(&l).unwrap());
    assert_eq!(cat.hom(&z(), &cat.target(&l)).unwrap().order(), Some(BigInt::from(6)));
}

#[test]
fn torsion_free_quotient_projects() {
    let cat = FgAb::default();
    let x = FgGroup::from_moduli(&[BigInt::from(0), BigInt::from(2)]);
    let f: FunctorExpr<FgAb> = FunctorExpr::TorsionFreeQuotient;
    assert!(cat.isomorphic(&evaluate(&cat, &f, &x).unwrap(), &z()).unwrap());
    let l = coaugmentation_at(&cat, &f, &x).unwrap();
    assert!(!cat.is_mono(&l).unwrap());
    let id: FunctorExpr<FgAb> = FunctorExpr::Identity;
    assert!(cat.equal(&coaugmentation_at(&cat, &id, &x).unwrap(), &cat.identity(&x)).unwrap());
}

#[test]
fn idempotence_examples() {
    let cat = FgAb::default();
    let f = tensor_with(4);
    let u = universe(vec![z(), zn(2), zn(8)]).closure(&cat, &f, 2).unwrap();
    assert!(check_idempotent(&cat, &f, &u).unwrap().holds);

    let twice = FunctorExpr::TensorWith {
        object: z(),
        eta: map(z(), z(), &[vec![2]]),
    };
    let u = universe(vec![z()]);
    assert!(!check_idempotent(&cat, &twice, &u).unwrap().holds);

    let id: FunctorExpr<FgAb> = FunctorExpr::Identity;
    assert!(check_idempotent(&cat, &id, &universe(vec![z(), zn(3)])).unwrap().holds);
}

#[test]
fn unclosed_universe_is_reported() {
    let cat = FgAb::default();
    let err = check_idempotent(&cat, &tensor_with(4), &universe(vec![z()])).unwrap_err();
    assert!(matches!(err, Error::NotClosed(_)));
}

#[test]
fn naturality_is_checked_on_morphisms() {
    let cat = FgAb::default();
    let f = tensor_with(2);
    let red = map(z(), zn(4), &[vec![1]]);
    let u = TestUniverse::new("u", vec![z(), zn(4)], vec![red]).closure(&cat, &f, 2).unwrap();
    let v = check_idempotent(&cat, &f, &u).unwrap();
    assert!(v.holds, "{}", v.summary);
    assert!(v.recheck(&cat).unwrap());
}

#[test]
fn locality_examples() {
    let cat = FgAb::default();
    let f = tensor_with(2);
    assert!(is_local(&cat, &f, &zn(2)).unwrap().holds);
    assert!(!is_local(&cat, &f, &zn(3)).unwrap().holds);
    assert!(is_equivalence(&cat, &f, &cat.identity(&zn(5))).unwrap().holds);
}

#[test]
fn orthogonality_examples() {
    let cat = FgAb::default();
    let e = IdentityEnrichment;
    let red = map(z(), zn(2), &[vec![1]]);
    assert!(check_orthogonality(&cat, &red, &zn(2), &e).unwrap().holds);
    let twice = map(z(), z(), &[vec![2]]);
    assert!(!check_orthogonality(&cat, &twice, &z(), &e).unwrap().holds);
    assert!(check_orthogonality(&cat, &cat.identity(&zn(6)), &z(), &e).unwrap().holds);
    assert!(check_coorthogonality(&cat, &zn(2), &cat.identity(&zn(6)), &e).unwrap().holds);
}

#[test]
fn correspondence_examples() {
    let cat = FgAb::default();
    let z6 = catalog::zn(&cat, 6);
    let f = solid_to_smashing(&cat, &z6).unwrap();
    let u = universe(vec![z(), zn(2), zn(3)]).closure(&cat, &f, 2).unwrap();
    assert!(check_idempotent(&cat, &f, &u).unwrap().holds);
    let back = smashing_to_solid(&cat, &f).unwrap();
    assert!(monoid_isomorphism(&cat, &z6, &back).unwrap().is_some());

    let g = solid_to_mapping(&cat, &z6).unwrap();
    let back = mapping_to_solid(&cat, &g).unwrap();
    assert!(monoid_isomorphism(&cat, &z6, &back).unwrap().is_some());

    let zz = catalog::integers(&cat);
    let back = smashing_to_solid(&cat, &solid_to_smashing(&cat, &zz).unwrap()).unwrap();
    assert!(monoid_isomorphism(&cat, &zz, &back).unwrap().is_some());

    let err = solid_to_smashing(&cat, &catalog::gaussian(&cat)).unwrap_err();
    assert!(matches!(err, Error::NotSolid(_)));
}

#[test]
fn non_idempotent_functors_are_rejected() {
    let cat = FgAb::default();
    let twice = FunctorExpr::TensorWith {
        object: z(),
        eta: map(z(), z(), &[vec![2]]),
    };
    assert!(matches!(smashing_to_solid(&cat, &twice), Err(Error::NotIdempotent(_))));

    let z2 = FgGroup::free(2);
    let free = FunctorExpr::TensorWith {
        object: z2.clone(),
        eta: map(z(), z2, &[vec![1], vec![0]]),
    };
    assert!(matches!(smashing_to_solid(&cat, &free), Err(Error::NotIdempotent(_))));

    let a = FgGroup::from_moduli(&[BigInt::from(4), BigInt::from(4)]);
    let c = FunctorExpr::HomFrom {
        object: a.clone(),
        eta: map(z(), a, &[vec![1], vec![0]]),
    };
    assert!(matches!(mapping_to_solid(&cat, &c), Err(Error::NotIdempotent(_))));
    let x = zn(4);
    let cx = evaluate(&cat, &c, &x).unwrap();
    let ccx = evaluate(&cat, &c, &cx).unwrap();
    assert!(!cat.isomorphic(&cx, &ccx).unwrap());
}

#[test]
fn hom_from_z2_is_idempotent() {
    let cat = FgAb::default();
    let c = hom_from(2);
    let u = universe(vec![z(), zn(2), zn(4)]).closure(&cat, &c, 2).unwrap();
    assert!(check_idempotent(&cat, &c, &u).unwrap().holds);
    let m = mapping_to_solid(&cat, &c).unwrap();
    assert!(monoid_isomorphism(&cat, &catalog::zn(&cat, 2), &m).unwrap().is_some());
    let zz = FunctorExpr::HomFrom {
        object: z(),
        eta: cat.identity(&z()),
    };
    assert!(mapping_to_solid(&cat, &zz).unwrap().carrier.is_torsion_free());
}

#[test]
fn extend_monoid_examples() {
    let cat = FgAb::default();
    for f in [
        tensor_with(6),
        FunctorExpr::TorsionFreeQuotient,
        FunctorExpr::KillPTorsion(2),
        FunctorExpr::Identity,
    ] {
        let (m, v) = rigid_from_localization(&cat, &f).unwrap();
        assert!(m.commutative);
        assert!(v.holds, "{f:?}");
    }
    let (m, _) = rigid_from_localization(&cat, &tensor_with(6)).unwrap();
    assert!(monoid_isomorphism(&cat, &catalog::zn(&cat, 6), &m).unwrap().is_some());
    let (m, _) = rigid_from_localization(&cat, &FunctorExpr::TorsionFreeQuotient).unwrap();
    assert!(monoid_isomorphism(&cat, &catalog::integers(&cat), &m).unwrap().is_some());
}

#[test]
fn extension_along_a_non_epimorphism_is_not_unique() {
    let cat = FgAb::default();
    let f = FunctorExpr::TensorWith {
        object: z(),
        eta: map(z(), z(), &[vec![2]]),
    };
    assert!(matches!(
        extend_monoid(&cat, &f, &unit_monoid(&cat).unwrap()),
        Err(Error::NoSolution(_) | Error::NonUnique(_))
    ));
}

#[test]
fn rigid_certificates() {
    let cat = FgAb::default();
    let e = IdentityEnrichment;
    assert!(certify_rigid_as_localization(&cat, &catalog::zn(&cat, 6), &e).unwrap().holds);
    assert!(certify_rigid_as_localization(&cat, &catalog::integers(&cat), &e).unwrap().holds);
    assert!(!certify_rigid_as_localization(&cat, &catalog::gaussian(&cat), &e).unwrap().holds);
}

#[test]
fn smashing_matches_unit_localization() {
    let cat = FgAb::default();
    let f = tensor_with(2);
    let red = map(z(), zn(2), &[vec![1]]);
    let red4 = map(zn(4), zn(2), &[vec![1]]);
    let u = TestUniverse::new("u", vec![z(), zn(2), zn(3), zn(4)], vec![red, red4])
        .closure(&cat, &f, 2)
        .unwrap();
    let v = smashing_vs_unit_localization(&cat, &f, &u).unwrap();
    assert!(v.holds, "{}", v.summary);
    let id: FunctorExpr<FgAb> = FunctorExpr::Identity;
    assert!(smashing_vs_unit_localization(&cat, &id, &u).unwrap().holds);
}

#[test]
fn smashing_matches_unit_localization_in_arith() {
    let cat = Arith;
    let half = ArithGroup::local([2]).unwrap();
    let zz = ArithGroup::integers();
    let f = FunctorExpr::TensorWith {
        object: half.clone(),
        eta: ArithMor::from_integers(zz.clone(), half.clone(), &[vec![1]]).unwrap(),
    };
    let inc = ArithMor::from_integers(zz.clone(), half.clone(), &[vec![1]]).unwrap();
    let red = ArithMor::from_integers(zz.clone(), ArithGroup::cyclic(2), &[vec![1]]).unwrap();
    let u = TestUniverse::new("u", vec![zz, ArithGroup::cyclic(2), half], vec![inc, red])
        .closure(&cat, &f, 2)
        .unwrap();
    assert!(check_idempotent(&cat, &f, &u).unwrap().holds);
    let v = smashing_vs_unit_localization(&cat, &f, &u).unwrap();
    assert!(v.holds, "{}", v.summary);
    let r = ArithRing::local([2]).unwrap().monoid(&cat).unwrap();
    let back = smashing_to_solid(&cat, &solid_to_smashing(&cat, &r).unwrap()).unwrap();
    assert!(cat.isomorphic(&back.carrier, &r.carrier).unwrap());
}

#[test]
fn closure_properties_hold() {
    let cat = FgAb::default();
    for f in [tensor_with(2), tensor_with(6), FunctorExpr::TorsionFreeQuotient] {
        let red = map(z(), zn(2), &[vec![1]]);
        let u = TestUniverse::new("u", vec![z(), zn(2), zn(3)], vec![red])
            .closure(&cat, &f, 2)
            .unwrap();
        assert!(check_tensor_closure(&cat, &f, &u).unwrap().holds, "{f:?}");
    }
    for f in [tensor_with(2), tensor_with(6)] {
        let u = universe(vec![z(), zn(2), zn(3)]).closure(&cat, &f, 2).unwrap();
        assert!(check_hom_closure(&cat, &f, &u).unwrap().holds, "{f:?}");
    }
}

#[test]
fn torsion_free_quotient_is_not_smashing() {
    let cat = FgAb::default();
    let f: FunctorExpr<FgAb> = FunctorExpr::TorsionFreeQuotient;
    let u = universe(vec![z(), zn(2), zn(3), FgGroup::zero()]).closure(&cat, &f, 2).unwrap();
    assert!(check_idempotent(&cat, &f, &u).unwrap().holds);
    assert!(smashing_realization(&cat, &f, &u).unwrap().is_none());
    let g = tensor_with(2);
    assert!(smashing_realization(&cat, &g, &u).unwrap().is_some());
}

#[test]
fn modules_match_local_objects() {
    let cat = FgAb::default();
    for n in [2, 6] {
        let r = catalog::zn(&cat, n);
        let (rows, v) = module_correspondence(&cat, &r, &module_universe(), 1000).unwrap();
        assert!(v.holds, "{rows:?}");
        let existing = rows.iter().filter(|r| r.module_exists).count();
        assert!(existing >= 2);
    }
}

#[test]
fn composite_functors() {
    let cat = FgAb::default();
    let f = FunctorExpr::compose(FunctorExpr::TorsionFreeQuotient, FunctorExpr::KillPTorsion(2));
    let u = universe(vec![z(), zn(2), zn(12)]).closure(&cat, &f, 2).unwrap();
    assert!(check_idempotent(&cat, &f, &u).unwrap().holds);
    // Z ↦ Z/2 ↦ 0: the composite is not idempotent
    let g = FunctorExpr::compose(tensor_with(2), FunctorExpr::TorsionFreeQuotient);
    let u = universe(vec![z(), zn(2), FgGroup::zero()]).closure(&cat, &g, 2).unwrap();
    assert!(!check_idempotent(&cat, &g, &u).unwrap().holds);
    let mixed = FunctorExpr::compose(tensor_with(2), hom_from(2));
    assert!(mixed.variance().is_err());
}
