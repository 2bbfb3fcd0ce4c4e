use super::*;
use crate::catalog;
use crate::monoid::{core, is_unit_epimorphism};

/// Counts monoid tables on `n` elements up to isomorphism by trying every
/// table, with no pruning and a separate notion of identity.
fn brute_force_count(n: usize) -> usize {
    let cells = n * n;
    let total = n.pow(cells as u32);
    let perms = permutations(&(0..n).collect::<Vec<_>>());
    let mut classes = HashSet::new();
    for code in 0..total {
        let mut x = code;
        let t: Vec<usize> = (0..cells)
            .map(|_| {
                let v = x % n;
                x /= n;
                v
            })
            .collect();
        let op = |a: usize, b: usize| t[a * n + b];
        let has_identity = (0..n).any(|e| (0..n).all(|a| op(e, a) == a && op(a, e) == a));
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| op(op(a, b), c) == op(a, op(b, c)))));
        if !(has_identity && assoc) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|s| {
                let mut out = vec![0; cells];
                for a in 0..n {
                    for b in 0..n {
                        out[s[a] * n + s[b]] = s[op(a, b)];
                    }
                }
                out
            })
            .min()
            .unwrap();
        classes.insert(canon);
    }
    classes.len()
}

#[test]
fn monoid_counts_match_brute_force() {
    for n in 1..=3 {
        assert_eq!(enumerate_monoids(n).unwrap().len(), brute_force_count(n), "n = {n}");
    }
}

#[test]
fn monoid_counts_match_known_sequence() {
    let counts: Vec<usize> = (1..=4).map(|n| enumerate_monoids(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 2, 7, 35]);
    assert!(enumerate_monoids(6).is_err());
}

#[test]
fn enumerated_tables_are_monoids() {
    let cat = FinSet::default();
    for m in enumerate_monoids(4).unwrap() {
        m.monoid(&cat).unwrap();
    }
}

#[test]
fn finset_monoids_are_degenerate() {
    let report = finset_solid_rigid_report(4).unwrap();
    assert_eq!(report.entries.len(), 1 + 2 + 7 + 35);
    assert!(report.degenerate());
}

#[test]
fn finset_core_of_a_monoid_is_a_point() {
    let cat = FinSet::default();
    for m in enumerate_monoids(3).unwrap() {
        let md = m.monoid(&cat).unwrap();
        let (c, _) = core(&cat, &md).unwrap();
        assert_eq!(c.0, 1);
        assert_eq!(is_unit_epimorphism(&cat, &md).unwrap().holds, m.size == 1);
    }
}

#[test]
fn product_algebras_are_solid_and_rigid_only_in_dimension_at_most_one() {
    for p in [2, 3, 5] {
        for d in 0..=3 {
            let (s, r) = finvect_solid_rigid(p, d).unwrap();
            assert_eq!(s.holds, d <= 1, "p = {p}, d = {d}");
            assert_eq!(r.holds, d <= 1, "p = {p}, d = {d}");
        }
    }
}

#[test]
fn exhaustive_algebras_agree_under_both_enrichments() {
    for p in [2, 3] {
        let cat = FinVect::new(p).unwrap();
        let e = FreeForget::new(p).unwrap();
        for d in 0..=3 {
            let algebras = enumerate_algebras(&cat, d).unwrap();
            assert!(!algebras.is_empty());
            for a in &algebras {
                let solid = is_solid(&cat, a).unwrap().holds;
                let rigid = is_rigid(&cat, a, &IdentityEnrichment).unwrap().holds;
                let rigid_ff = is_rigid(&cat, a, &e).unwrap().holds;
                assert_eq!(solid, d <= 1);
                assert_eq!(rigid, solid);
                assert_eq!(rigid_ff, solid);
            }
        }
    }
}

#[test]
fn algebra_counts_in_dimension_two() {
    // e1² = a e0 + b e1 is always associative
    assert_eq!(enumerate_algebras(&FinVect::new(2).unwrap(), 2).unwrap().len(), 4);
    assert_eq!(enumerate_algebras(&FinVect::new(3).unwrap(), 2).unwrap().len(), 9);
}

#[test]
fn free_functor_is_strong_monoidal() {
    let e = FreeForget::new(3).unwrap();
    let (s, v) = (FinSet::default(), e.category());
    let f = FinSetMap::new(2, 3, vec![2, 0]).unwrap();
    let g = FinSetMap::new(3, 2, vec![1, 1, 0]).unwrap();
    let lhs = e.free_map(&s.tensor_mor(&f, &g).unwrap());
    let rhs = v.tensor_mor(&e.free_map(&f), &e.free_map(&g)).unwrap();
    assert!(v.equal(&lhs, &rhs).unwrap());
    assert_eq!(e.free_obj(s.tensor(&FinSetObj(2), &FinSetObj(3))), v.tensor(&FinVectObj(2), &FinVectObj(3)));
    let c = v.compose(&e.free_map(&g), &e.free_map(&f)).unwrap();
    assert!(v.equal(&c, &e.free_map(&s.compose(&g, &f).unwrap())).unwrap());
}

#[test]
fn forget_detects_bijections() {
    let e = FreeForget::new(2).unwrap();
    let v = e.category();
    let swap = v.map(2, 2, vec![vec![0, 1], vec![1, 0]]).unwrap();
    let proj = v.map(2, 2, vec![vec![1, 0], vec![0, 0]]).unwrap();
    assert!(e.is_iso_underlying(&v, &swap).unwrap());
    assert!(!e.is_iso_underlying(&v, &proj).unwrap());
    assert_eq!(e.forget_obj(FinVectObj(3)).unwrap(), FinSetObj(8));
    assert!(e.is_iso_underlying(&FinVect::new(3).unwrap(), &swap).is_err());
}

#[test]
fn elementary_abelian_rings_convert() {
    let cat = crate::fgab::FgAb::default();
    let z2 = catalog::zn(&cat, 2);
    let a = fgab_ring_to_finvect(&z2, 2).unwrap().unwrap();
    let v = FinVect::new(2).unwrap();
    assert!(is_solid(&v, &a).unwrap().holds);
    let z2z2 = catalog::product(&cat, 2, 2);
    let b = fgab_ring_to_finvect(&z2z2, 2).unwrap().unwrap();
    assert!(!is_solid(&v, &b).unwrap().holds);
    assert!(!is_rigid(&v, &b, &FreeForget::new(2).unwrap()).unwrap().holds);
    assert!(fgab_ring_to_finvect(&catalog::zn(&cat, 4), 2).unwrap().is_none());
    assert!(fgab_ring_to_finvect(&z2, 3).unwrap().is_none());
}
