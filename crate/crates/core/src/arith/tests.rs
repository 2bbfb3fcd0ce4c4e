
use super::*;
use crate::category::IdentityEnrichment;
use crate::fgab::{self, FgAb};
use crate::monoid::{is_rigid, is_unit_epimorphism, solid_from_unit};

fn loc(ps: &[u64]) -> ArithGroup {
    ArithGroup::local(ps.iter().copied()).unwrap()
}

#[test]
fn tensor_table() {
    assert_eq!(tensor_arith(&loc(&[2]), &loc(&[3])), loc(&[2, 3]));
    assert!(tensor_arith(&loc(&[2]), &ArithGroup::cyclic(2)).is_zero());
    let g = ArithGroup::direct_sum(&[&loc(&[5]), &ArithGroup::cyclic(12)]);
    assert_eq!(tensor_arith(&ArithGroup::integers(), &g), g);
    assert_eq!(loc(&[2, 3]).describe(), "Z[1/6]");
}

#[test]
fn hom_table() {
    assert!(hom_arith(&loc(&[2]), &ArithGroup::integers()).is_zero());
    assert_eq!(hom_arith(&loc(&[2]), &loc(&[2, 3])), loc(&[2, 3]));
    assert!(hom_arith(&ArithGroup::cyclic(4), &loc(&[2])).is_zero());
    assert_eq!(hom_arith(&ArithGroup::cyclic(4), &ArithGroup::cyclic(8)).describe(), "Z/4");
}

#[test]
fn ring_verdicts() {
    let cat = Arith;
    let id = IdentityEnrichment;
    let cases = [
        (ArithRing::local([2, 3]).unwrap(), true),
        (ArithRing::local_times_zn([2], 2).unwrap(), true),
        (ArithRing::local_times_zn([], 2).unwrap(), false),
        (ArithRing::zn(6), true),
        (ArithRing::product(vec![Atom::integers(), Atom::integers()]), false),
        (ArithRing::product(vec![Atom::local([2]).unwrap(), Atom::local([3]).unwrap()]), false),
    ];
    for (r, solid) in cases {
        let m = r.monoid(&cat).unwrap();
        let s = crate::monoid::is_solid(&cat, &m).unwrap();
        assert_eq!(s.holds, solid, "{r}");
        assert!(s.recheck(&cat).unwrap());
        assert_eq!(is_unit_epimorphism(&cat, &m).unwrap().holds, solid, "{r}");
        assert_eq!(solid_from_unit(&cat, &m.carrier, &m.eta).unwrap().is_some(), solid, "{r}");
        if solid {
            assert!(is_rigid(&cat, &m, &id).unwrap().holds, "{r}");
        }
    }
}

#[test]
fn rigid_without_being_solid() {
    // Z[1/2] x Z[1/3]: no maps between the factors, so Hom(R, R) = R, while
    // R ⊗ R has the extra summand Z[1/6]
    let cat = Arith;
    let r = ArithRing::product(vec![Atom::local([2]).unwrap(), Atom::local([3]).unwrap()]);
    let m = r.monoid(&cat).unwrap();
    assert!(is_rigid(&cat, &m, &IdentityEnrichment).unwrap().holds);
    assert!(!crate::monoid::is_solid(&cat, &m).unwrap().holds);
}

#[test]
fn catalog_is_solid_and_families_match() {
    let cat = solid_ring_catalog(3, 4);
    for r in &cat {
        assert!(ring::is_solid_arith(r).unwrap().holds, "{r}");
        assert!(r.family().is_some(), "{r}");
    }
    let names: Vec<String> = cat.iter().map(|r| r.describe()).collect();
    for expected in ["Z/4", "Z[1/2]", "Z[1/3]", "Z[1/6]", "Z[1/2] x Z/2", "Z[1/2] x Z/4", "Z[1/6] x Z/2", "Z"] {
        assert!(names.iter().any(|n| n == expected), "{expected} missing from {names:?}");
    }
}

#[test]
fn torsion_free_check() {
    assert_eq!(
        torsion_free_solid_check(&ArithRing::local([2, 3]).unwrap()).unwrap(),
        TorsionFreeCheck::Subring([2, 3].into())
    );
    assert_eq!(
        torsion_free_solid_check(&ArithRing::zn(0)).unwrap(),
        TorsionFreeCheck::Subring(Default::default())
    );
    let zz = ArithRing::product(vec![Atom::integers(), Atom::integers()]);
    assert!(matches!(torsion_free_solid_check(&zz), Err(Error::NotSolid(_))));
    assert!(matches!(
        torsion_free_solid_check(&ArithRing::zn(6)).unwrap(),
        TorsionFreeCheck::Excluded(_)
    ));
}

#[test]
fn inverse_with_mixed_blocks() {
    let cat = Arith;
    // (x, t) -> (x, t + x) on Z[1/3] + Z/2
    let g = ArithGroup::direct_sum(&[&loc(&[3]), &ArithGroup::cyclic(2)]);
    let f = ArithMor::from_integers(g.clone(), g.clone(), &[vec![1, 0], vec![1, 1]]).unwrap();
    let inv = cat.inverse(&f).unwrap().unwrap();
    assert!(cat.equal(&cat.compose(&inv, &f).unwrap(), &ArithMor::identity(&g)).unwrap());
    // x -> 3x is invertible on Z[1/3] but not on Z[1/2]
    let three = |h: &ArithGroup| ArithMor::from_integers(h.clone(), h.clone(), &[vec![3]]).unwrap();
    assert!(cat.is_iso(&three(&loc(&[3]))).unwrap());
    assert!(!cat.is_iso(&three(&loc(&[2]))).unwrap());
    assert!(cat.is_mono(&three(&loc(&[2]))).unwrap());
}

#[test]
fn rejects_ill_defined_maps() {
    assert!(ArithMor::from_integers(loc(&[2]), ArithGroup::integers(), &[vec![1]]).is_err());
    assert!(ArithMor::from_integers(ArithGroup::cyclic(2), ArithGroup::cyclic(4), &[vec![1]]).is_err());
    assert!(ArithMor::from_integers(ArithGroup::cyclic(2), ArithGroup::cyclic(4), &[vec![2]]).is_ok());
}

#[test]
fn name_unname_and_hom_mor() {
    let cat = Arith;
    let (x, y) = (ArithGroup::cyclic(4), ArithGroup::cyclic(8));
    for f in cat.morphisms(&x, &y, 100).unwrap() {
        let back = cat.unname(&x, &y, &cat.name(&f).unwrap()).unwrap();
        assert!(cat.equal(&back, &f).unwrap());
    }
    let pre = ArithMor::from_integers(loc(&[]), loc(&[2]), &[vec![1]]).unwrap();
    let hm = cat.hom_mor(&pre, &ArithMor::identity(&loc(&[2]))).unwrap();
    // Hom(Z[1/2], Z[1/2]) -> Hom(Z, Z[1/2]) is an isomorphism
    assert!(cat.is_iso(&hm).unwrap());
}

#[test]
fn core_of_z_times_z2_through_fgab() {
    let cat = Arith;
    let r = ArithRing::local_times_zn([], 2).unwrap().monoid(&cat).unwrap();
    let (c, inc) = crate::monoid::core(&cat, &r).unwrap();
    assert_eq!(c.describe(), "Z");
    assert!(cat.is_mono(&inc).unwrap());
}

fn atoms_small() -> Vec<Atom> {
    let mut out = vec![Atom::integers()];
    for p in [2, 3, 5, 7] {
        for k in 1..=3 {
            out.push(Atom::Cyclic { p, k });
        }
    }
    out
}

#[test]
fn agrees_with_fgab_on_finitely_generated_inputs() {
    let fg = FgAb::default();
    let atoms = atoms_small();
    for a in &atoms {
        for b in &atoms {
            let x = ArithGroup::new(vec![a.clone()]);
            let y = ArithGroup::new(vec![b.clone()]);
            let (gx, gy) = (x.to_fgab().unwrap(), y.to_fgab().unwrap());
            let t = tensor_arith(&x, &y).to_fgab().unwrap();
            assert!(t.isomorphic(&fgab::tensor(&gx, &gy)), "{x} ⊗ {y}");
            let h = hom_arith(&x, &y).to_fgab().unwrap();
            assert!(h.isomorphic(&fg.hom(&gx, &gy).unwrap()), "Hom({x}, {y})");
        }
    }
}

#[test]
fn atomwise_tensor_laws() {
    let mut atoms = atoms_small();
    for s in [vec![2], vec![3, 5], vec![2, 7]] {
        atoms.push(Atom::local(s).unwrap());
    }
    let t = |a: &Option<Atom>, b: &Atom| a.as_ref().and_then(|a| tensor_atom(a, b));
    for a in &atoms {
        assert_eq!(tensor_atom(&Atom::integers(), a).as_ref(), Some(a));
        for b in &atoms {
            assert_eq!(tensor_atom(a, b), tensor_atom(b, a));
            for c in &atoms {
                let left = t(&tensor_atom(a, b), c);
                let right = tensor_atom(b, c).and_then(|bc| tensor_atom(a, &bc));
                assert_eq!(left, right);
            }
        }
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn cores_of_torsion_free_products() {
    let cat = Arith;
    // Z[1/2] ∩ Z[1/3] = Z, on the diagonal
    let r = ArithRing::product(vec![Atom::local([2]).unwrap(), Atom::local([3]).unwrap()]);
    let (c, inc) = crate::monoid::core(&cat, &r.monoid(&cat).unwrap()).unwrap();
    assert_eq!(c, ArithGroup::integers());
    let col: Vec<BigRational> = inc.matrix().iter().map(|row| row[0].clone()).collect();
    assert!(col == vec![rat(1, 1), rat(1, 1)] || col == vec![rat(-1, 1), rat(-1, 1)]);

    let r = ArithRing::product(vec![Atom::local([2, 3]).unwrap(), Atom::local([2]).unwrap()]);
    let (c, _) = crate::monoid::core(&cat, &r.monoid(&cat).unwrap()).unwrap();
    assert_eq!(c, loc(&[2]));
}

#[test]
fn rank_one_kernels_match_membership() {
    // x·(3, -2) with x ∈ Z[1/2] ⊕ Z[1/3] coordinates: t·3 ∈ Z[1/2] and
    // t·2 ∈ Z[1/3] force t ∈ (1/6)Z
    let cat = Arith;
    let src = ArithGroup::new(vec![Atom::local([2]).unwrap(), Atom::local([3]).unwrap()]);
    let tgt = ArithGroup::local([2, 3]).unwrap();
    let f = ArithMor::new(src.clone(), tgt.clone(), vec![vec![rat(2, 1), rat(3, 1)]]).unwrap();
    let zero = ArithMor::new(src.clone(), tgt, vec![vec![rat(0, 1), rat(0, 1)]]).unwrap();
    let (k, inc) = cat.equalizer(&f, &zero).unwrap();
    assert_eq!(k, ArithGroup::integers());
    let col: Vec<BigRational> = inc.matrix().iter().map(|row| row[0].clone()).collect();
    assert!(col == vec![rat(1, 2), rat(-1, 3)] || col == vec![rat(-1, 2), rat(1, 3)], "{col:?}");
    // brute force: the kernel elements with small denominators are the
    // multiples of the generator
    for a in -12..=12 {
        for b in -12..=12 {
            let x = (rat(a, 4), rat(b, 9));
            let in_kernel = rat(2, 1) * &x.0 + rat(3, 1) * &x.1 == rat(0, 1);
            let multiple = (&x.0 / &col[0]).is_integer() && &x.0 / &col[0] == &x.1 / &col[1];
            assert_eq!(in_kernel, multiple || (a == 0 && b == 0), "{x:?}");
        }
    }
}
