//! The JSON input format.
//!
//! Every document is an object
//! `{"schema_version": "1", "kind": ..., "name": ..., "body": ...}` where
//! `kind` is one of `group`, `ring`, `module`, `functor`, `universe`,
//! `suite`. Integers are decimal strings throughout; matrices are arrays of
//! rows. Ring multiplications are `n × n²` matrices on the lexicographic
//! basis `e_i ⊗ e_j ↦ column i·n + j`.

use std::collections::BTreeSet;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arith::{Arith, ArithGroup, ArithMor, ArithRing, Atom};
use crate::category::ClosedMonoidal;
use crate::error::{Error, Result};
use crate::fgab::{FgAb, FgGroup, Morphism};
use crate::finmodels::{FinSet, FinSetMap, FinSetObj, FinVect};
use crate::intlinalg::IntMatrix;
use crate::localization::{FunctorExpr, TestUniverse};
use crate::monoid::MonoidData;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Group,
    Ring,
    Module,
    Functor,
    Universe,
    Suite,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub schema_version: String,
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Free-form expected verdicts; informational.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
    pub body: Value,
}

impl Document {
    pub fn new(kind: Kind, name: impl Into<String>, body: Value) -> Self {
        Document {
            schema_version: SCHEMA_VERSION.into(),
            kind,
            name: Some(name.into()),
            expected: None,
            body,
        }
    }

    pub fn with_expected(mut self, expected: Value) -> Self {
        self.expected = Some(expected);
        self
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Document =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed document: {e}")))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::Input(format!(
                "unsupported schema_version {:?}, expected {SCHEMA_VERSION:?}",
                doc.schema_version
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("{:?}", self.kind).to_lowercase())
    }

    fn body<T: for<'de> Deserialize<'de>>(&self) -> Result<T> {
        serde_json::from_value(self.body.clone())
            .map_err(|e| Error::Input(format!("invalid {:?} body: {e}", self.kind)))
    }

    fn expect(&self, kind: Kind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::Input(format!("expected a {kind:?} document, found {:?}", self.kind)));
        }
        Ok(())
    }

    pub fn group(&self) -> Result<Group> {
        self.expect(Kind::Group)?;
        self.body::<GroupSpec>()?.build()
    }

    pub fn ring(&self, cat: &FgAb) -> Result<Ring> {
        self.expect(Kind::Ring)?;
        self.body::<RingSpec>()?.build(cat)
    }

    pub fn module(&self, cat: &FgAb) -> Result<ModuleInput> {
        self.expect(Kind::Module)?;
        self.body::<ModuleSpec>()?.build(cat)
    }

    pub fn functor(&self) -> Result<Functor> {
        self.expect(Kind::Functor)?;
        self.body::<FunctorSpec>()?.build()
    }

    pub fn universe(&self) -> Result<Universe> {
        self.expect(Kind::Universe)?;
        self.body::<UniverseSpec>()?.build()
    }

    pub fn suite(&self) -> Result<Suite> {
        self.expect(Kind::Suite)?;
        let spec: SuiteSpec = self.body()?;
        Ok(Suite {
            universe: spec.universe,
            checks: spec.checks,
        })
    }
}

fn int(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim()).map_err(|_| Error::Input(format!("{s:?} is not a decimal integer")))
}

fn small(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Input(format!("{s:?} is not a small non-negative integer")))
}

fn u64_of(s: &str) -> Result<u64> {
    s.trim()
        .parse()
        .map_err(|_| Error::Input(format!("{s:?} is not a non-negative 64-bit integer")))
}

fn rational(s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim()).map_err(|_| Error::Input(format!("{s:?} is not a rational number")))
}

/// Rows of decimal strings as a `rows × cols` matrix.
fn matrix(rows: &[Vec<String>], nrows: usize, ncols: usize, what: &str) -> Result<IntMatrix> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Input(format!("{what} must be {nrows} x {ncols}")));
    }
    let data = rows.iter().flatten().map(|s| int(s)).collect::<Result<Vec<_>>>()?;
    Ok(IntMatrix::from_vec(nrows, ncols, data))
}

pub fn strings(m: &IntMatrix) -> Vec<Vec<String>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.to_string()).collect())
        .collect()
}

/// A group presented either by moduli (`"0"` for `Z`) or by generators and
/// relation vectors.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FgabGroupSpec {
    #[serde(default)]
    moduli: Option<Vec<String>>,
    #[serde(default)]
    generators: Option<String>,
    #[serde(default)]
    relations: Option<Vec<Vec<String>>>,
}

impl FgabGroupSpec {
    fn build(&self) -> Result<FgGroup> {
        match (&self.moduli, &self.generators) {
            (Some(m), None) if self.relations.is_none() => {
                let moduli = m.iter().map(|s| int(s)).collect::<Result<Vec<_>>>()?;
                if moduli.iter().any(|d| d.sign() == num_bigint::Sign::Minus) {
                    return Err(Error::Input("moduli must be non-negative".into()));
                }
                Ok(FgGroup::from_moduli(&moduli))
            }
            (None, Some(g)) => {
                let n = small(g)?;
                let rels = self.relations.clone().unwrap_or_default();
                let cols = rels.len();
                let m = matrix(&rels, cols, n, "relations")?.transpose();
                FgGroup::from_presentation(n, m)
            }
            _ => Err(Error::Input(
                "a group needs either \"moduli\" or \"generators\" with optional \"relations\"".into(),
            )),
        }
    }
}

pub fn fgab_group_body(g: &FgGroup) -> Value {
    let rels = strings(&g.relations().transpose());
    json!({ "category": "fgab", "generators": g.generators().to_string(), "relations": rels })
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum AtomSpec {
    /// `Z[S⁻¹]` for the listed primes.
    Local(Vec<String>),
    /// `Z/n`, split into prime-power atoms; `"0"` is `Z`.
    Cyclic(String),
}

fn atoms(specs: &[AtomSpec]) -> Result<Vec<Atom>> {
    let mut out = Vec::new();
    for a in specs {
        match a {
            AtomSpec::Local(ps) => {
                let ps = ps.iter().map(|p| u64_of(p)).collect::<Result<Vec<_>>>()?;
                out.push(Atom::local(ps)?);
            }
            AtomSpec::Cyclic(n) => out.extend(ArithGroup::cyclic(u64_of(n)?).atoms().iter().cloned()),
        }
    }
    Ok(out)
}

pub fn atom_spec(a: &Atom) -> AtomSpec {
    match a {
        Atom::Local(s) => AtomSpec::Local(s.iter().map(u64::to_string).collect()),
        Atom::Cyclic { p, k } => AtomSpec::Cyclic(p.pow(*k).to_string()),
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "category", rename_all = "snake_case")]
pub enum GroupSpec {
    Fgab(FgabGroupSpec),
    Arith {
        atoms: Vec<AtomSpec>,
    },
}

#[derive(Clone, Debug)]
pub enum Group {
    Fgab(FgGroup),
    Arith(ArithGroup),
}

impl GroupSpec {
    fn build(&self) -> Result<Group> {
        Ok(match self {
            GroupSpec::Fgab(g) => Group::Fgab(g.build()?),
            GroupSpec::Arith { atoms: a } => Group::Arith(ArithGroup::new(atoms(a)?)),
        })
    }

    fn fgab(&self) -> Result<FgGroup> {
        match self.build()? {
            Group::Fgab(g) => Ok(g),
            Group::Arith(_) => Err(Error::Input("expected an fgab group".into())),
        }
    }

    fn arith(&self) -> Result<ArithGroup> {
        match self.build()? {
            Group::Arith(g) => Ok(g),
            Group::Fgab(_) => Err(Error::Input("expected an arith group".into())),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "category", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingSpec {
    Fgab {
        group: FgabGroupSpec,
        mu: Vec<Vec<String>>,
        eta: Vec<String>,
    },
    /// Componentwise product of the listed atom rings.
    Arith {
        factors: Vec<AtomSpec>,
    },
    Finvect {
        p: String,
        dim: String,
        mu: Vec<Vec<String>>,
        eta: Vec<String>,
    },
    /// `table[a·size + b] = a·b`.
    Finset {
        size: String,
        table: Vec<String>,
        unit: String,
    },
}

pub enum Ring {
    Fgab(MonoidData<FgAb>),
    Arith(ArithRing),
    FinVect(FinVect, MonoidData<FinVect>),
    FinSet(MonoidData<FinSet>),
}

impl RingSpec {
    fn build(&self, cat: &FgAb) -> Result<Ring> {
        Ok(match self {
            RingSpec::Fgab { group, mu, eta } => {
                let g = group.build()?;
                let n = g.generators();
                let mu = matrix(mu, n, n * n, "mu")?;
                let eta_rows: Vec<Vec<String>> = eta.iter().map(|s| vec![s.clone()]).collect();
                let eta = matrix(&eta_rows, n, 1, "eta")?;
                Ring::Fgab(MonoidData::from_structure_constants(cat, g, mu, eta)?)
            }
            RingSpec::Arith { factors } => Ring::Arith(ArithRing::product(atoms(factors)?)),
            RingSpec::Finvect { p, dim, mu, eta } => {
                let v = FinVect::new(u64_of(p)?)?;
                let d = small(dim)?;
                let parse = |rows: &[Vec<String>]| -> Result<Vec<Vec<u64>>> {
                    rows.iter()
                        .map(|r| r.iter().map(|s| residue(s, v.prime())).collect())
                        .collect()
                };
                let mu = parse(mu)?;
                let eta: Vec<Vec<u64>> = parse(std::slice::from_ref(eta))?;
                let eta = eta.into_iter().next().unwrap_or_default();
                if eta.len() != d {
                    return Err(Error::Input(format!("eta must have {d} entries")));
                }
                let m = crate::finmodels::finvect_monoid(&v, d, mu, eta)?;
                Ring::FinVect(v, m)
            }
            RingSpec::Finset { size, table, unit } => {
                let n = small(size)?;
                let t = table.iter().map(|s| small(s)).collect::<Result<Vec<_>>>()?;
                let s = FinSet::default();
                let mu = FinSetMap::new(n * n, n, t)?;
                let eta = FinSetMap::new(1, n, vec![small(unit)?])?;
                Ring::FinSet(MonoidData::new(&s, FinSetObj(n), mu, eta)?)
            }
        })
    }
}

fn residue(s: &str, p: u64) -> Result<u64> {
    let x = int(s)?;
    let r = ((x % p) + p) % p;
    Ok(r.try_into().expect("reduced below p"))
}

/// The body of an fgab ring document.
pub fn fgab_ring_body(m: &MonoidData<FgAb>) -> Value {
    let mut g = fgab_group_body(&m.carrier);
    g.as_object_mut().unwrap().remove("category");
    json!({
        "category": "fgab",
        "group": g,
        "mu": strings(m.mu.matrix()),
        "eta": m.eta.matrix().col(0).iter().map(|x| x.to_string()).collect::<Vec<_>>(),
    })
}

pub fn arith_ring_body(r: &ArithRing) -> Value {
    json!({ "category": "arith", "factors": r.factors().iter().map(atom_spec).collect::<Vec<_>>() })
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    ring: RingSpec,
    group: FgabGroupSpec,
    /// `X`-generators × (`R`-generators · `X`-generators).
    action: Vec<Vec<String>>,
}

pub struct ModuleInput {
    pub ring: MonoidData<FgAb>,
    pub carrier: FgGroup,
    pub action: Morphism,
}

impl ModuleSpec {
    fn build(&self, cat: &FgAb) -> Result<ModuleInput> {
        let Ring::Fgab(ring) = self.ring.build(cat)? else {
            return Err(Error::Input("modules are supported over fgab rings only".into()));
        };
        let x = self.group.build()?;
        let rx = cat.tensor(&ring.carrier, &x);
        let a = matrix(&self.action, x.generators(), rx.generators(), "action")?;
        let action = Morphism::new(rx, x.clone(), a)?;
        Ok(ModuleInput { ring, carrier: x, action })
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum ExprSpec {
    Identity,
    TensorWith { object: GroupSpec, eta: Vec<String> },
    HomFrom { object: GroupSpec, eta: Vec<String> },
    TorsionFreeQuotient,
    KillPTorsion { p: String },
    Compose { outer: Box<ExprSpec>, inner: Box<ExprSpec> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CategoryTag {
    Fgab,
    Arith,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorSpec {
    category: CategoryTag,
    expr: ExprSpec,
}

pub enum Functor {
    Fgab(FunctorExpr<FgAb>),
    Arith(FunctorExpr<Arith>),
}

fn fgab_expr(e: &ExprSpec) -> Result<FunctorExpr<FgAb>> {
    let unit = |g: &FgGroup, eta: &[String]| -> Result<Morphism> {
        let rows: Vec<Vec<String>> = eta.iter().map(|s| vec![s.clone()]).collect();
        Morphism::new(FgGroup::integers(), g.clone(), matrix(&rows, g.generators(), 1, "eta")?)
    };
    Ok(match e {
        ExprSpec::Identity => FunctorExpr::Identity,
        ExprSpec::TensorWith { object, eta } => {
            let g = object.fgab()?;
            FunctorExpr::TensorWith { eta: unit(&g, eta)?, object: g }
        }
        ExprSpec::HomFrom { object, eta } => {
            let g = object.fgab()?;
            FunctorExpr::HomFrom { eta: unit(&g, eta)?, object: g }
        }
        ExprSpec::TorsionFreeQuotient => FunctorExpr::TorsionFreeQuotient,
        ExprSpec::KillPTorsion { p } => {
            let p = u64_of(p)?;
            if !crate::arith::is_prime(p) {
                return Err(Error::Input(format!("{p} is not prime")));
            }
            FunctorExpr::KillPTorsion(p)
        }
        ExprSpec::Compose { outer, inner } => FunctorExpr::compose(fgab_expr(outer)?, fgab_expr(inner)?),
    })
}

fn arith_expr(e: &ExprSpec) -> Result<FunctorExpr<Arith>> {
    let unit = |g: &ArithGroup, eta: &[String]| -> Result<ArithMor> {
        let rows = eta.iter().map(|s| Ok(vec![rational(s)?])).collect::<Result<Vec<_>>>()?;
        ArithMor::new(ArithGroup::integers(), g.clone(), rows)
    };
    Ok(match e {
        ExprSpec::Identity => FunctorExpr::Identity,
        ExprSpec::TensorWith { object, eta } => {
            let g = object.arith()?;
            FunctorExpr::TensorWith { eta: unit(&g, eta)?, object: g }
        }
        ExprSpec::HomFrom { object, eta } => {
            let g = object.arith()?;
            FunctorExpr::HomFrom { eta: unit(&g, eta)?, object: g }
        }
        ExprSpec::Compose { outer, inner } => FunctorExpr::compose(arith_expr(outer)?, arith_expr(inner)?),
        _ => return Err(Error::Input("torsion quotients are available for fgab functors only".into())),
    })
}

impl FunctorSpec {
    fn build(&self) -> Result<Functor> {
        Ok(match self.category {
            CategoryTag::Fgab => Functor::Fgab(fgab_expr(&self.expr)?),
            CategoryTag::Arith => Functor::Arith(arith_expr(&self.expr)?),
        })
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    source: GroupSpec,
    target: GroupSpec,
    matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UniverseSpec {
    category: CategoryTag,
    objects: Vec<GroupSpec>,
    #[serde(default)]
    morphisms: Vec<MorphismSpec>,
}

pub enum Universe {
    Fgab(TestUniverse<FgAb>),
    Arith(TestUniverse<Arith>),
}

impl UniverseSpec {
    fn build(&self) -> Result<Universe> {
        let label = "declared universe";
        Ok(match self.category {
            CategoryTag::Fgab => {
                let objects = self.objects.iter().map(GroupSpec::fgab).collect::<Result<_>>()?;
                let mut mors = Vec::new();
                for m in &self.morphisms {
                    let (s, t) = (m.source.fgab()?, m.target.fgab()?);
                    let a = matrix(&m.matrix, t.generators(), s.generators(), "matrix")?;
                    mors.push(Morphism::new(s, t, a)?);
                }
                Universe::Fgab(TestUniverse::new(label, objects, mors))
            }
            CategoryTag::Arith => {
                let objects = self.objects.iter().map(GroupSpec::arith).collect::<Result<_>>()?;
                let mut mors = Vec::new();
                for m in &self.morphisms {
                    let (s, t) = (m.source.arith()?, m.target.arith()?);
                    let rows = m
                        .matrix
                        .iter()
                        .map(|r| r.iter().map(|x| rational(x)).collect::<Result<Vec<_>>>())
                        .collect::<Result<Vec<_>>>()?;
                    mors.push(ArithMor::new(s, t, rows)?);
                }
                Universe::Arith(TestUniverse::new(label, objects, mors))
            }
        })
    }
}

/// One entry of a suite: a command applied to an embedded document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteCheck {
    pub name: String,
    /// `check`, `core`, `solid`, `rigid`, `functor-check` or `correspond`.
    pub check: String,
    pub subject: Document,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enrichment: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SuiteSpec {
    #[serde(default)]
    universe: Option<Document>,
    checks: Vec<SuiteCheck>,
}

#[derive(Clone, Debug)]
pub struct Suite {
    /// Universe for the `functor-check` entries.
    pub universe: Option<Document>,
    pub checks: Vec<SuiteCheck>,
}

/// Body of an arith group with the given atoms.
pub fn arith_group_body(g: &ArithGroup) -> Value {
    json!({ "category": "arith", "atoms": g.atoms().iter().map(atom_spec).collect::<Vec<_>>() })
}

/// Body of a group given by moduli.
pub fn moduli_body(moduli: &[u64]) -> Value {
    json!({ "category": "fgab", "moduli": moduli.iter().map(u64::to_string).collect::<Vec<_>>() })
}

/// The primes of an arith `Local` atom list, for reporting.
pub fn prime_set(s: &BTreeSet<u64>) -> Vec<String> {
    s.iter().map(u64::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(v: Value) -> Result<Document> {
        Document::from_json(&v.to_string())
    }

    #[test]
    fn fgab_ring_round_trip() {
        let cat = FgAb::default();
        for (name, m, _) in crate::catalog::fgab_rings(&cat) {
            let doc = Document::new(Kind::Ring, name, fgab_ring_body(&m));
            let back = Document::from_json(&doc.to_json()).unwrap();
            let Ring::Fgab(r) = back.ring(&cat).unwrap() else { panic!() };
            assert!(cat.equal(&r.mu, &m.mu).unwrap());
        }
    }

    #[test]
    fn group_forms() {
        let d = parse(json!({"schema_version": "1", "kind": "group",
            "body": {"category": "fgab", "generators": "2", "relations": [["2", "4"]]}}))
        .unwrap();
        let Group::Fgab(g) = d.group().unwrap() else { panic!() };
        assert_eq!(g.order(), None);
        let d = parse(json!({"schema_version": "1", "kind": "group",
            "body": {"category": "arith", "atoms": [{"local": ["2"]}, {"cyclic": "12"}]}}))
        .unwrap();
        let Group::Arith(g) = d.group().unwrap() else { panic!() };
        assert_eq!(g.atoms().len(), 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Document::from_json("not json").is_err());
        let wrong_version = json!({"schema_version": "2", "kind": "group", "body": {}});
        assert!(parse(wrong_version).is_err());
        let bad_int = json!({"schema_version": "1", "kind": "group",
            "body": {"category": "fgab", "moduli": ["x"]}});
        assert!(parse(bad_int).unwrap().group().is_err());
        let bad_ring = json!({"schema_version": "1", "kind": "ring",
            "body": {"category": "fgab", "group": {"moduli": ["6"]}, "mu": [["2"]], "eta": ["1"]}});
        assert!(parse(bad_ring).unwrap().ring(&FgAb::default()).is_err());
        let extra = json!({"schema_version": "1", "kind": "group", "body": {}, "extra": 1});
        assert!(parse(extra).is_err());
    }

    #[test]
    fn functor_and_universe() {
        let f = parse(json!({"schema_version": "1", "kind": "functor", "body": {"category": "fgab",
            "expr": {"op": "compose", "outer": {"op": "torsion_free_quotient"},
                     "inner": {"op": "tensor_with", "object": {"category": "fgab", "moduli": ["6"]}, "eta": ["1"]}}}}))
        .unwrap();
        assert!(matches!(f.functor().unwrap(), Functor::Fgab(FunctorExpr::Compose(..))));
        let u = parse(json!({"schema_version": "1", "kind": "universe", "body": {"category": "arith",
            "objects": [{"category": "arith", "atoms": [{"local": []}]}],
            "morphisms": [{"source": {"category": "arith", "atoms": [{"local": []}]},
                           "target": {"category": "arith", "atoms": [{"local": ["2"]}]},
                           "matrix": [["1/2"]]}]}}))
        .unwrap();
        let Universe::Arith(u) = u.universe().unwrap() else { panic!() };
        assert_eq!(u.morphisms.len(), 1);
    }
}
