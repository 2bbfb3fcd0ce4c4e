use num_bigint::BigInt;
use solidmon::catalog;
use solidmon::category::{ClosedMonoidal, IdentityEnrichment};
use solidmon::fgab::{tensor, FgAb, FgGroup, Morphism};
use solidmon::intlinalg::IntMatrix;
use solidmon::monoid::*;


#[test]
fn validate_examples() {
    let cat = FgAb::default();
    let r = catalog::zn(&cat, 6);
    assert!(validate_monoid(&cat, &r.carrier, &r.mu, &r.eta).unwrap().holds);
    assert!(r.commutative);
    let zz = catalog::product(&cat, 0, 0);
    assert!(validate_monoid(&cat, &zz.carrier, &zz.mu, &zz.eta).unwrap().holds);

    let z4 = FgGroup::cyclic(4);
    let zero_mu = Morphism::zero(&tensor(&z4, &z4), &z4);
    let eta = Morphism::new(FgGroup::integers(), z4.clone(), IntMatrix::from_rows(&[[1]])).unwrap();
    let v = validate_monoid(&cat, &z4, &zero_mu, &eta).unwrap();
    assert!(!v.holds);
    assert!(v.recheck(&cat).unwrap());
}

#[test]
fn core_examples() {
    let cat = FgAb::default();
    for n in [2, 5, 12] {
        let r = catalog::zn(&cat, n);
        let (c, inc) = core(&cat, &r).unwrap();
        assert!(c.isomorphic(&r.carrier));
        assert!(inc.is_iso());
    }
    let (c, inc) = core(&cat, &catalog::gaussian(&cat)).unwrap();
    assert_eq!(c.describe(), "Z");
    // the image is spanned by 1
    assert!(inc.matrix().col(0) == vec![BigInt::from(1), BigInt::from(0)]
        || inc.matrix().col(0) == vec![BigInt::from(-1), BigInt::from(0)]);
    let (c, inc) = core(&cat, &catalog::product(&cat, 0, 0)).unwrap();
    assert_eq!(c.describe(), "Z");
    let v = inc.matrix().col(0);
    assert_eq!(v[0], v[1]);
}

#[test]
fn solid_and_rigid_examples() {
    let cat = FgAb::default();
    let id = IdentityEnrichment;
    for (name, r, expected) in catalog::fgab_rings(&cat) {
        let s = is_solid(&cat, &r).unwrap();
        let rg = is_rigid(&cat, &r, &id).unwrap();
        assert_eq!(s.holds, expected.solid, "{name} solid");
        assert_eq!(rg.holds, expected.rigid, "{name} rigid");
        assert!(s.recheck(&cat).unwrap(), "{name}");
        assert!(rg.recheck(&cat).unwrap(), "{name}");
        let ue = is_unit_epimorphism(&cat, &r).unwrap();
        assert_eq!(ue.holds, s.holds, "{name} unit epi");
        let rebuilt = solid_from_unit(&cat, &r.carrier, &r.eta).unwrap();
        assert_eq!(rebuilt.is_some(), s.holds, "{name} from unit");
        if let Some(m) = rebuilt {
            assert!(cat.equal(&m.mu, &r.mu).unwrap());
        }
    }
}

#[test]
fn solid_from_unit_examples() {
    let cat = FgAb::default();
    let z5 = FgGroup::cyclic(5);
    let eta = Morphism::new(FgGroup::integers(), z5.clone(), IntMatrix::from_rows(&[[1]])).unwrap();
    let m = solid_from_unit(&cat, &z5, &eta).unwrap().unwrap();
    assert!(cat.equal(&m.mu, &catalog::zn(&cat, 5).mu).unwrap());

    let z2 = FgGroup::free(2);
    let eta = Morphism::new(FgGroup::integers(), z2.clone(), IntMatrix::from_rows(&[[1], [1]])).unwrap();
    assert!(solid_from_unit(&cat, &z2, &eta).unwrap().is_none());
}

#[test]
fn module_examples() {
    let cat = FgAb::default();
    let r = catalog::zn(&cat, 2);
    let v = validate_module(&cat, &r, &r.carrier, &r.mu).unwrap();
    assert!(v.holds);

    // no action of Z/2 on Z/4
    let z4 = FgGroup::cyclic(4);
    let rx = tensor(&r.carrier, &z4);
    for act in cat.morphisms(&rx, &z4, 100).unwrap() {
        assert!(!validate_module(&cat, &r, &z4, &act).unwrap().holds);
    }
    assert!(induce_module(&cat, &r, &z4).unwrap().is_none());

    let v4 = FgGroup::direct_sum(&[&FgGroup::cyclic(2), &FgGroup::cyclic(2)]);
    assert!(induce_module(&cat, &r, &v4).unwrap().is_some());
    let zero = induce_module(&cat, &r, &FgGroup::zero()).unwrap().unwrap();
    assert!(zero.carrier.is_trivial());

    // Z[i] acting on itself
    let g = catalog::gaussian(&cat);
    assert!(validate_module(&cat, &g, &g.carrier, &g.mu).unwrap().holds);
}

#[test]
fn induce_module_requires_solid() {
    let cat = FgAb::default();
    let g = catalog::gaussian(&cat);
    assert!(induce_module(&cat, &g, &FgGroup::integers()).is_err());
}

#[test]
fn monoid_isomorphism_detects_relabeling() {
    let cat = FgAb::default();
    let a = catalog::product(&cat, 2, 3);
    let b = catalog::zn(&cat, 6);
    assert!(monoid_isomorphism(&cat, &a, &b).unwrap().is_some());
    assert!(monoid_isomorphism(&cat, &b, &catalog::zn(&cat, 3)).unwrap().is_none());
}
