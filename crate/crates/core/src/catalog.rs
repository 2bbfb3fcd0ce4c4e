//! Standard example rings, with the verdicts they are expected to get.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::arith::{ArithRing, Atom};
use crate::document::{self, Document, Kind};
use crate::error::Result;
use crate::fgab::{FgAb, FgGroup};
use crate::intlinalg::IntMatrix;
use crate::monoid::MonoidData;

/// Expected answers for a catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expected {
    pub solid: bool,
    pub rigid: bool,
}

fn ring(cat: &FgAb, carrier: FgGroup, mu: &[Vec<i64>], eta: &[i64]) -> Result<MonoidData<FgAb>> {
    let n = carrier.generators();
    let mu = IntMatrix::from_i64_rows(n * n, mu);
    let eta = IntMatrix::from_i64_rows(1, &eta.iter().map(|&x| vec![x]).collect::<Vec<_>>());
    MonoidData::from_structure_constants(cat, carrier, mu, eta)
}

/// `Z/n`; `n = 0` gives `Z`.
pub fn zn(cat: &FgAb, n: u64) -> MonoidData<FgAb> {
    ring(cat, FgGroup::cyclic(n), &[vec![1]], &[1]).expect("Z/n is a ring")
}

pub fn integers(cat: &FgAb) -> MonoidData<FgAb> {
    zn(cat, 0)
}

/// `Z[i]` on the basis `1, i`.
pub fn gaussian(cat: &FgAb) -> MonoidData<FgAb> {
    ring(cat, FgGroup::free(2), &[vec![1, 0, 0, -1], vec![0, 1, 1, 0]], &[1, 0])
        .expect("Z[i] is a ring")
}

/// `Z[x]/(x²)` on the basis `1, x`.
pub fn dual_numbers(cat: &FgAb) -> MonoidData<FgAb> {
    ring(cat, FgGroup::free(2), &[vec![1, 0, 0, 0], vec![0, 1, 1, 0]], &[1, 0])
        .expect("dual numbers form a ring")
}

/// `Z/a × Z/b` with componentwise product (0 for `Z`).
pub fn product(cat: &FgAb, a: u64, b: u64) -> MonoidData<FgAb> {
    let carrier = FgGroup::from_moduli(&[BigInt::from(a), BigInt::from(b)]);
    ring(cat, carrier, &[vec![1, 0, 0, 0], vec![0, 0, 0, 1]], &[1, 1])
        .expect("products of rings are rings")
}

/// Named fgab rings with their expected verdicts.
pub fn fgab_rings(cat: &FgAb) -> Vec<(String, MonoidData<FgAb>, Expected)> {
    let yes = Expected { solid: true, rigid: true };
    let no = Expected { solid: false, rigid: false };
    let mut out = vec![("Z".to_string(), integers(cat), yes)];
    for n in 2..=12 {
        out.push((format!("Z/{n}"), zn(cat, n), yes));
    }
    out.push(("Z[i]".into(), gaussian(cat), no));
    out.push(("Z[x]/(x^2)".into(), dual_numbers(cat), no));
    out.push(("ZxZ".into(), product(cat, 0, 0), no));
    out.push(("ZxZ/2".into(), product(cat, 0, 2), no));
    // coprime factors: Z/2 x Z/3 = Z/6 is solid
    out.push(("Z/2xZ/3".into(), product(cat, 2, 3), yes));
    out.push(("Z/2xZ/2".into(), product(cat, 2, 2), no));
    out
}

fn expected_ring(solid: bool, rigid: bool, core: Option<&str>) -> Value {
    let mut v = json!({ "solid": solid, "rigid": rigid });
    if let Some(c) = core {
        v["core"] = json!(c);
    }
    v
}

/// Arithmetic rings shipped with the catalog, with expected verdicts.
pub fn arith_rings() -> Vec<(ArithRing, Expected)> {
    let yes = Expected { solid: true, rigid: true };
    let local = |ps: &[u64]| ArithRing::local(ps.iter().copied()).expect("primes");
    vec![
        (local(&[2]), yes),
        (local(&[2, 3]), yes),
        (ArithRing::local_times_zn([2], 2).expect("primes"), yes),
        (
            ArithRing::product(vec![Atom::integers(), Atom::cyclic(2, 1).expect("prime")]),
            Expected { solid: false, rigid: false },
        ),
        (
            ArithRing::product(vec![Atom::local([2]).expect("prime"), Atom::local([3]).expect("prime")]),
            Expected { solid: false, rigid: true },
        ),
    ]
}

fn tensor_with(moduli: &[u64]) -> Value {
    json!({ "op": "tensor_with", "object": document::moduli_body(moduli), "eta": vec!["1"; moduli.len()] })
}

fn functor_doc(name: &str, category: &str, expr: Value, expected: Value) -> Document {
    Document::new(Kind::Functor, name, json!({ "category": category, "expr": expr })).with_expected(expected)
}

fn localization_expected(smashing: bool, li: &str) -> Value {
    json!({ "localization": true, "smashing": smashing, "LI": li, "rigid": true })
}

fn fgab_morphism(s: &[u64], t: &[u64], rows: &[&[i64]]) -> Value {
    json!({
        "source": document::moduli_body(s),
        "target": document::moduli_body(t),
        "matrix": rows.iter().map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

/// The standard test universes.
pub fn universes() -> Vec<Document> {
    let objs = |ms: &[&[u64]]| ms.iter().map(|m| document::moduli_body(m)).collect::<Vec<_>>();
    let arith = |atoms: Value| json!({ "category": "arith", "atoms": atoms });
    vec![
        Document::new(
            Kind::Universe,
            "modules",
            json!({
                "category": "fgab",
                "objects": objs(&[&[], &[0], &[2], &[3], &[4], &[6], &[0, 2]]),
                "morphisms": [
                    fgab_morphism(&[0], &[2], &[&[1]]),
                    fgab_morphism(&[0], &[6], &[&[1]]),
                    fgab_morphism(&[6], &[2], &[&[1]]),
                    fgab_morphism(&[0, 2], &[0], &[&[1, 0]]),
                ],
            }),
        ),
        Document::new(
            Kind::Universe,
            "two-local",
            json!({
                "category": "fgab",
                "objects": objs(&[&[0], &[2], &[3], &[4]]),
                "morphisms": [
                    fgab_morphism(&[0], &[2], &[&[1]]),
                    fgab_morphism(&[4], &[2], &[&[1]]),
                    fgab_morphism(&[0], &[0], &[&[2]]),
                ],
            }),
        ),
        Document::new(
            Kind::Universe,
            "arith-two",
            json!({
                "category": "arith",
                "objects": [
                    arith(json!([{ "local": [] }])),
                    arith(json!([{ "cyclic": "2" }])),
                    arith(json!([{ "local": ["2"] }])),
                ],
                "morphisms": [
                    {
                        "source": arith(json!([{ "local": [] }])),
                        "target": arith(json!([{ "local": ["2"] }])),
                        "matrix": [["1"]],
                    },
                    {
                        "source": arith(json!([{ "local": [] }])),
                        "target": arith(json!([{ "cyclic": "2" }])),
                        "matrix": [["1"]],
                    },
                ],
            }),
        ),
    ]
}

/// The functors shipped with the catalog.
pub fn functors() -> Vec<Document> {
    let mut out = Vec::new();
    for n in [2u64, 3, 4, 6] {
        out.push(functor_doc(
            &format!("tensor-z{n}"),
            "fgab",
            tensor_with(&[n]),
            localization_expected(true, &format!("Z/{n}")),
        ));
    }
    for (name, primes, li) in [("tensor-z-half", vec!["2"], "Z[1/2]"), ("tensor-z-sixth", vec!["2", "3"], "Z[1/6]")] {
        out.push(functor_doc(
            name,
            "arith",
            json!({
                "op": "tensor_with",
                "object": { "category": "arith", "atoms": [{ "local": primes }] },
                "eta": ["1"],
            }),
            localization_expected(true, li),
        ));
    }
    for p in [2u64, 3] {
        out.push(functor_doc(
            &format!("hom-from-z{p}"),
            "fgab",
            json!({ "op": "hom_from", "object": document::moduli_body(&[p]), "eta": ["1"] }),
            json!({ "colocalization": true, "mapping": true, "solid": format!("Z/{p}") }),
        ));
    }
    out.push(functor_doc(
        "torsion-free-quotient",
        "fgab",
        json!({ "op": "torsion_free_quotient" }),
        localization_expected(false, "Z"),
    ));
    out.push(functor_doc(
        "kill-2-torsion",
        "fgab",
        json!({ "op": "kill_p_torsion", "p": "2" }),
        localization_expected(false, "Z"),
    ));
    out
}

/// Every catalog entry as a document: rings, functors and universes.
pub fn documents(cat: &FgAb) -> Vec<Document> {
    let mut out = Vec::new();
    for (name, m, e) in fgab_rings(cat) {
        let core = match name.as_str() {
            "Z[i]" => Some("Z"),
            "ZxZ" => Some("diagonal Z"),
            _ => None,
        };
        out.push(
            Document::new(Kind::Ring, name, document::fgab_ring_body(&m))
                .with_expected(expected_ring(e.solid, e.rigid, core)),
        );
    }
    for (r, e) in arith_rings() {
        out.push(
            Document::new(Kind::Ring, r.describe(), document::arith_ring_body(&r))
                .with_expected(expected_ring(e.solid, e.rigid, (!e.solid).then_some("Z"))),
        );
    }
    out.extend(functors());
    out.extend(universes());
    out
}

/// A file name for a catalog entry.
pub fn file_name(doc: &Document) -> String {
    let kind = format!("{:?}", doc.kind).to_lowercase();
    let slug: String = doc
        .label()
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c.to_ascii_lowercase() } else { '-' })
        .collect();
    let slug = slug.split('-').filter(|s| !s.is_empty()).collect::<Vec<_>>().join("-");
    format!("{kind}-{slug}.json")
}
