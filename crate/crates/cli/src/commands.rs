use std::path::Path;

use solidmon::arith::Arith;
use solidmon::category::{ClosedMonoidal, IdentityEnrichment};
use solidmon::document::{Document, Functor, Group, Kind, Ring, SuiteCheck, Universe};
use solidmon::fgab::FgAb;
use solidmon::finmodels::{fgab_ring_to_finvect, FinSet, FinVect, FreeForget};
use solidmon::localization::{
    certify_rigid_as_localization, check_hom_closure, check_idempotent, check_idempotent_at,
    check_tensor_closure, is_local, mapping_to_solid, rigid_from_localization, smashing_realization,
    smashing_to_solid, smashing_vs_unit_localization, solid_to_mapping, solid_to_smashing, FunctorExpr,
    TestUniverse, Variance,
};
use solidmon::monoid::{
    core, is_rigid, is_solid, is_unit_epimorphism, monoid_isomorphism, solid_from_unit, validate_module,
    validate_monoid, MonoidData,
};
use solidmon::verdict::Verdict;
use solidmon::{Error, Result};

use crate::report::{Outcome, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnrichmentArg {
    Identity,
    FreeForget(u64),
}

impl EnrichmentArg {
    pub fn parse(s: &str) -> Result<Self> {
        if s == "identity" {
            return Ok(EnrichmentArg::Identity);
        }
        if let Some(p) = s.strip_prefix("free-forget:") {
            let p = p
                .parse()
                .map_err(|_| Error::Input(format!("{p:?} is not a prime")))?;
            FreeForget::new(p)?;
            return Ok(EnrichmentArg::FreeForget(p));
        }
        Err(Error::Input(format!(
            "unknown enrichment {s:?}; use identity or free-forget:<p>"
        )))
    }
}

pub struct Ctx {
    pub fgab: FgAb,
    pub max_hom_size: usize,
}

impl Ctx {
    pub fn new(max_hom_size: usize) -> Self {
        Ctx {
            fgab: FgAb::new(max_hom_size),
            max_hom_size,
        }
    }

    fn finset(&self) -> FinSet {
        FinSet::new(self.max_hom_size.max(1 << 10))
    }
}

pub fn load(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    Document::from_json(&text)
}

/// Runs `body` with the category and monoid of a ring document.
macro_rules! on_ring {
    ($ctx:expr, $ring:expr, |$cat:ident, $m:ident| $body:expr) => {
        match $ring {
            Ring::Fgab(m) => {
                let $cat = &$ctx.fgab;
                let $m = &m;
                $body
            }
            Ring::Arith(r) => {
                let $cat = &Arith;
                let $m = &r.monoid($cat)?;
                $body
            }
            Ring::FinVect(v, m) => {
                let $cat = &v;
                let $m = &m;
                $body
            }
            Ring::FinSet(m) => {
                let $cat = &$ctx.finset();
                let $m = &m;
                $body
            }
        }
    };
}

/// Runs `command` on a loaded document.
pub fn run(
    ctx: &Ctx,
    command: &str,
    doc: &Document,
    universe: Option<&Document>,
    enrichment: EnrichmentArg,
) -> Outcome {
    let subject = doc.label();
    match dispatch(ctx, command, doc, universe, enrichment) {
        Ok(r) => Outcome::Done(r),
        Err(error) => Outcome::Failed {
            command: command.into(),
            subject,
            error,
        },
    }
}

fn dispatch(
    ctx: &Ctx,
    command: &str,
    doc: &Document,
    universe: Option<&Document>,
    enrichment: EnrichmentArg,
) -> Result<Report> {
    let subject = doc.label();
    match command {
        "check" => check(ctx, &subject, doc),
        "core" => on_ring!(ctx, doc.ring(&ctx.fgab)?, |cat, m| core_report(cat, &subject, m)),
        "solid" => on_ring!(ctx, doc.ring(&ctx.fgab)?, |cat, m| solid_report(cat, &subject, m)),
        "rigid" => rigid(ctx, &subject, doc, enrichment),
        "functor-check" => {
            let u = universe.ok_or_else(|| Error::Input("functor-check needs --universe".into()))?;
            functor_check(ctx, &subject, doc, u)
        }
        "correspond" => correspond(ctx, &subject, doc),
        other => Err(Error::Input(format!("unknown check {other:?}"))),
    }
}

fn check(ctx: &Ctx, subject: &str, doc: &Document) -> Result<Report> {
    match doc.kind {
        Kind::Group => {
            let mut r = Report::new("check", subject, "");
            match doc.group()? {
                Group::Fgab(g) => {
                    r.category = ctx.fgab.label();
                    r.fact("group", g.describe());
                }
                Group::Arith(g) => {
                    r.category = Arith.label();
                    r.fact("group", g.describe());
                }
            }
            Ok(r)
        }
        Kind::Ring => on_ring!(ctx, doc.ring(&ctx.fgab)?, |cat, m| {
            let mut r = Report::new("check", subject, cat.label());
            r.fact("carrier", cat.describe(&m.carrier));
            r.fact("commutative", m.commutative.to_string());
            r.verdict(cat, "monoid axioms", &validate_monoid(cat, &m.carrier, &m.mu, &m.eta)?)?;
            Ok(r)
        }),
        Kind::Module => {
            let cat = &ctx.fgab;
            let input = doc.module(cat)?;
            let mut r = Report::new("check", subject, cat.label());
            r.fact("ring", cat.describe(&input.ring.carrier));
            r.fact("carrier", cat.describe(&input.carrier));
            r.verdict(cat, "module axioms", &validate_module(cat, &input.ring, &input.carrier, &input.action)?)?;
            Ok(r)
        }
        Kind::Functor => {
            let mut r = Report::new("check", subject, "");
            let (label, desc, variance) = match doc.functor()? {
                Functor::Fgab(f) => (ctx.fgab.label(), f.describe(&ctx.fgab), f.variance()?),
                Functor::Arith(f) => (Arith.label(), f.describe(&Arith), f.variance()?),
            };
            r.category = label;
            r.fact("functor", desc);
            r.fact("structure map", format!("{variance:?}").to_lowercase());
            Ok(r)
        }
        Kind::Universe => {
            let mut r = Report::new("check", subject, "");
            match doc.universe()? {
                Universe::Fgab(u) => {
                    r.category = ctx.fgab.label();
                    r.universe = Some(u.describe(&ctx.fgab));
                }
                Universe::Arith(u) => {
                    r.category = Arith.label();
                    r.universe = Some(u.describe(&Arith));
                }
            }
            Ok(r)
        }
        Kind::Suite => {
            let suite = doc.suite()?;
            let mut r = Report::new("check", subject, "suite");
            for c in &suite.checks {
                r.children.push(run_suite_check(ctx, c, suite.universe.as_ref()));
            }
            Ok(r)
        }
    }
}

fn run_suite_check(ctx: &Ctx, c: &SuiteCheck, universe: Option<&Document>) -> Outcome {
    let enrichment = match c.enrichment.as_deref().map(EnrichmentArg::parse).transpose() {
        Ok(e) => e.unwrap_or(EnrichmentArg::Identity),
        Err(error) => {
            return Outcome::Failed {
                command: c.check.clone(),
                subject: c.name.clone(),
                error,
            }
        }
    };
    let mut out = run(ctx, &c.check, &c.subject, universe, enrichment);
    match &mut out {
        Outcome::Done(r) => r.subject = c.name.clone(),
        Outcome::Failed { subject, .. } => *subject = c.name.clone(),
    }
    out
}

fn core_report<C: ClosedMonoidal>(cat: &C, subject: &str, m: &MonoidData<C>) -> Result<Report> {
    let mut r = Report::new("core", subject, cat.label());
    let (c, incl) = core(cat, m)?;
    r.fact("carrier", cat.describe(&m.carrier));
    r.fact("core", cat.describe(&c));
    r.fact("inclusion", cat.describe_mor(&incl));
    r.info(cat, "core is all of R", &Verdict::invertibility(cat, "core inclusion", incl)?)?;
    Ok(r)
}

fn solid_report<C: ClosedMonoidal>(cat: &C, subject: &str, m: &MonoidData<C>) -> Result<Report> {
    let mut r = Report::new("solid", subject, cat.label());
    r.fact("carrier", cat.describe(&m.carrier));
    let solid = is_solid(cat, m)?;
    let epi = is_unit_epimorphism(cat, m)?;
    let from_unit = solid_from_unit(cat, &m.carrier, &m.eta)?.is_some();
    if solid.holds != epi.holds || solid.holds != from_unit {
        return Err(Error::Internal(format!(
            "deciders disagree: μ iso {}, unit epi {}, unit reconstruction {}",
            solid.holds, epi.holds, from_unit
        )));
    }
    r.verdict(cat, "solid", &solid)?;
    r.info(cat, "unit epimorphism", &epi)?;
    let text = if from_unit {
        "η ⊗ 1 and 1 ⊗ η are invertible"
    } else {
        "η ⊗ 1 or 1 ⊗ η is not invertible"
    };
    r.info(cat, "reconstruction from the unit", &Verdict::text(from_unit, text))?;
    Ok(r)
}

fn rigid_report<C, E>(cat: &C, subject: &str, m: &MonoidData<C>, e: &E) -> Result<Report>
where
    C: ClosedMonoidal,
    E: solidmon::category::Enrichment<C>,
{
    let mut r = Report::new("rigid", subject, cat.label());
    r.fact("carrier", cat.describe(&m.carrier));
    r.fact("enrichment", e.label());
    let rigid = is_rigid(cat, m, e)?;
    let solid = is_solid(cat, m)?;
    if solid.holds && !rigid.holds {
        return Err(Error::Internal("solid monoid is not rigid".into()));
    }
    r.verdict(cat, "rigid", &rigid)?;
    r.info(cat, "localization certificate", &certify_rigid_as_localization(cat, m, e)?)?;
    r.info(cat, "solid", &solid)?;
    Ok(r)
}

fn rigid(ctx: &Ctx, subject: &str, doc: &Document, enrichment: EnrichmentArg) -> Result<Report> {
    let ring = doc.ring(&ctx.fgab)?;
    match enrichment {
        EnrichmentArg::Identity => {
            on_ring!(ctx, ring, |cat, m| rigid_report(cat, subject, m, &IdentityEnrichment))
        }
        EnrichmentArg::FreeForget(p) => {
            let e = FreeForget::new(p)?;
            let (v, m) = match ring {
                Ring::FinVect(v, m) if v.prime() == p => (v, m),
                Ring::Fgab(m) => match fgab_ring_to_finvect(&m, p)? {
                    Some(a) => (FinVect::new(p)?, a),
                    None => {
                        return Err(Error::Input(format!(
                            "free-forget:{p} needs an F_{p}-algebra; the carrier is not elementary abelian of exponent {p}"
                        )))
                    }
                },
                _ => {
                    return Err(Error::Input(format!(
                        "free-forget:{p} applies to finvect rings over F_{p} and elementary abelian fgab rings"
                    )))
                }
            };
            rigid_report(&v, subject, &m, &e)
        }
    }
}

fn functor_report<C: ClosedMonoidal>(
    cat: &C,
    subject: &str,
    f: &FunctorExpr<C>,
    u: &TestUniverse<C>,
) -> Result<Report> {
    let mut r = Report::new("functor-check", subject, cat.label());
    r.fact("functor", f.describe(cat));
    r.universe = Some(u.describe(cat));
    for x in &u.objects {
        let v = check_idempotent_at(cat, f, x)?;
        if !v.holds {
            r.verdict(cat, "idempotent", &v)?;
            return Ok(r);
        }
    }
    let closed = u.closure(cat, f, 2)?;
    r.universe = Some(closed.describe(cat));
    let idem = check_idempotent(cat, f, &closed)?;
    r.verdict(cat, "idempotent", &idem)?;
    if !idem.holds {
        return Ok(r);
    }
    for x in &closed.objects {
        r.info(cat, &format!("local at {}", cat.describe(x)), &is_local(cat, f, x)?)?;
    }
    if f.variance()? == Variance::Coaugmented {
        // Smashing is a property of the localization, not a requirement.
        let smashing = smashing_vs_unit_localization(cat, f, &closed)?;
        r.fact("smashing", if smashing.holds { "yes" } else { "no" });
        r.info(cat, "agrees with localization at l_I", &smashing)?;
        r.info(cat, "tensor closure", &check_tensor_closure(cat, f, &closed)?)?;
        r.info(cat, "hom closure", &check_hom_closure(cat, f, &closed)?)?;
        let realization = match smashing_realization(cat, f, &closed)? {
            Some(a) => format!("- ⊗ {}", cat.describe(&a)),
            None => "none in this universe".into(),
        };
        r.fact("smashing realization", realization);
    }
    Ok(r)
}

fn functor_check(ctx: &Ctx, subject: &str, doc: &Document, universe: &Document) -> Result<Report> {
    match (doc.functor()?, universe.universe()?) {
        (Functor::Fgab(f), Universe::Fgab(u)) => functor_report(&ctx.fgab, subject, &f, &u),
        (Functor::Arith(f), Universe::Arith(u)) => functor_report(&Arith, subject, &f, &u),
        _ => Err(Error::Input("functor and universe live in different categories".into())),
    }
}

fn correspond_ring<C: ClosedMonoidal>(cat: &C, subject: &str, m: &MonoidData<C>) -> Result<Report> {
    let mut r = Report::new("correspond", subject, cat.label());
    r.fact("carrier", cat.describe(&m.carrier));
    let solid = is_solid(cat, m)?;
    r.verdict(cat, "solid", &solid)?;
    if !solid.holds {
        return Ok(r);
    }
    let smash = solid_to_smashing(cat, m)?;
    r.fact("smashing functor", smash.describe(cat));
    let back = smashing_to_solid(cat, &smash)?;
    r.fact("monoid on LI", cat.describe(&back.carrier));
    let iso = monoid_isomorphism(cat, m, &back)?;
    r.text_check("solid -> smashing -> solid", iso.is_some(), describe_iso(cat, &iso));

    let map = solid_to_mapping(cat, m)?;
    r.fact("mapping functor", map.describe(cat));
    let back = mapping_to_solid(cat, &map)?;
    let iso = monoid_isomorphism(cat, m, &back)?;
    r.text_check("solid -> mapping -> solid", iso.is_some(), describe_iso(cat, &iso));

    let (li, rigid) = rigid_from_localization(cat, &smash)?;
    r.verdict(cat, "LI is rigid", &rigid)?;
    let iso = monoid_isomorphism(cat, m, &li)?;
    r.text_check("extended monoid on LI", iso.is_some(), describe_iso(cat, &iso));
    r.verdict(cat, "L_η I ≅ R", &certify_rigid_as_localization(cat, m, &IdentityEnrichment)?)?;
    Ok(r)
}

fn describe_iso<C: ClosedMonoidal>(cat: &C, iso: &Option<C::Mor>) -> String {
    match iso {
        Some(f) => format!("monoid isomorphism {}", cat.describe_mor(f)),
        None => "no monoid isomorphism".into(),
    }
}

fn correspond_functor<C: ClosedMonoidal>(cat: &C, subject: &str, f: &FunctorExpr<C>) -> Result<Report> {
    let mut r = Report::new("correspond", subject, cat.label());
    r.fact("functor", f.describe(cat));
    match f.variance()? {
        Variance::Coaugmented => {
            let solid = smashing_to_solid(cat, f)?;
            r.fact("solid monoid on LI", cat.describe(&solid.carrier));
            r.verdict(cat, "monoid on LI is solid", &is_solid(cat, &solid)?)?;
            let (li, rigid) = rigid_from_localization(cat, f)?;
            r.fact("LI", cat.describe(&li.carrier));
            r.fact("LI commutative", li.commutative.to_string());
            r.verdict(cat, "LI is rigid", &rigid)?;
            let iso = monoid_isomorphism(cat, &solid, &li)?;
            r.text_check("extension agrees with the unit structure", iso.is_some(), describe_iso(cat, &iso));
        }
        Variance::Augmented => {
            let solid = mapping_to_solid(cat, f)?;
            r.fact("solid monoid", cat.describe(&solid.carrier));
            r.verdict(cat, "monoid is solid", &is_solid(cat, &solid)?)?;
            r.verdict(cat, "rigid", &is_rigid(cat, &solid, &IdentityEnrichment)?)?;
        }
    }
    Ok(r)
}

fn correspond(ctx: &Ctx, subject: &str, doc: &Document) -> Result<Report> {
    match doc.kind {
        Kind::Ring => on_ring!(ctx, doc.ring(&ctx.fgab)?, |cat, m| correspond_ring(cat, subject, m)),
        Kind::Functor => match doc.functor()? {
            Functor::Fgab(f) => correspond_functor(&ctx.fgab, subject, &f),
            Functor::Arith(f) => correspond_functor(&Arith, subject, &f),
        },
        k => Err(Error::Input(format!("correspond takes a ring or functor, not {k:?}"))),
    }
}
