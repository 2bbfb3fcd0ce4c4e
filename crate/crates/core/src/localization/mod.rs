//! Localization and colocalization functors as data, checked on finite
//! test universes, and the passage between solid monoids and smashing or
//! mapping functors.
//!
//! "For every object" is replaced by a [`TestUniverse`]; every verdict
//! produced here is relative to the universe it was computed on.

use std::fmt;

use crate::category::{ClosedMonoidal, Enrichment, IdentityEnrichment, TorsionKind};
use crate::error::{Error, Result};
use crate::monoid::{
    induce_module, is_rigid, is_solid, solid_from_unit, unit_map, validate_module, MonoidData,
};
use crate::verdict::Verdict;

/// An endofunctor built from the category's operations.
pub enum FunctorExpr<C: ClosedMonoidal> {
    Identity,
    /// `X ↦ X ⊗ A`, coaugmented by `η: I -> A`.
    TensorWith { object: C::Obj, eta: C::Mor },
    /// `X ↦ Hom(A, X)`, augmented by `η: I -> A`.
    HomFrom { object: C::Obj, eta: C::Mor },
    TorsionFreeQuotient,
    KillPTorsion(u64),
    /// `Compose(outer, inner)` is `outer ∘ inner`.
    Compose(Box<FunctorExpr<C>>, Box<FunctorExpr<C>>),
}

impl<C: ClosedMonoidal> Clone for FunctorExpr<C> {
    fn clone(&self) -> Self {
        match self {
            FunctorExpr::Identity => FunctorExpr::Identity,
            FunctorExpr::TensorWith { object, eta } => FunctorExpr::TensorWith {
                object: object.clone(),
                eta: eta.clone(),
            },
            FunctorExpr::HomFrom { object, eta } => FunctorExpr::HomFrom {
                object: object.clone(),
                eta: eta.clone(),
            },
            FunctorExpr::TorsionFreeQuotient => FunctorExpr::TorsionFreeQuotient,
            FunctorExpr::KillPTorsion(p) => FunctorExpr::KillPTorsion(*p),
            FunctorExpr::Compose(a, b) => FunctorExpr::Compose(a.clone(), b.clone()),
        }
    }
}

impl<C: ClosedMonoidal> fmt::Debug for FunctorExpr<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorExpr::Identity => f.write_str("Identity"),
            FunctorExpr::TensorWith { object, .. } => write!(f, "TensorWith({object:?})"),
            FunctorExpr::HomFrom { object, .. } => write!(f, "HomFrom({object:?})"),
            FunctorExpr::TorsionFreeQuotient => f.write_str("TorsionFreeQuotient"),
            FunctorExpr::KillPTorsion(p) => write!(f, "KillPTorsion({p})"),
            FunctorExpr::Compose(a, b) => write!(f, "Compose({a:?}, {b:?})"),
        }
    }
}

/// Direction of the structure map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variance {
    /// `l_X: X -> LX`.
    Coaugmented,
    /// `c_X: CX -> X`.
    Augmented,
}

impl<C: ClosedMonoidal> FunctorExpr<C> {
    pub fn compose(outer: FunctorExpr<C>, inner: FunctorExpr<C>) -> Self {
        FunctorExpr::Compose(Box::new(outer), Box::new(inner))
    }

    /// `Identity` counts as coaugmented.
    pub fn variance(&self) -> Result<Variance> {
        match self {
            FunctorExpr::HomFrom { .. } => Ok(Variance::Augmented),
            FunctorExpr::Compose(a, b) => {
                let (va, vb) = (a.variance()?, b.variance()?);
                match (a.as_ref(), b.as_ref()) {
                    (FunctorExpr::Identity, _) => Ok(vb),
                    (_, FunctorExpr::Identity) => Ok(va),
                    _ if va == vb => Ok(va),
                    _ => Err(Error::Input(format!(
                        "{self:?} mixes a coaugmented and an augmented functor"
                    ))),
                }
            }
            _ => Ok(Variance::Coaugmented),
        }
    }

    pub fn describe(&self, cat: &C) -> String {
        match self {
            FunctorExpr::Identity => "Id".into(),
            FunctorExpr::TensorWith { object, .. } => format!("- ⊗ {}", cat.describe(object)),
            FunctorExpr::HomFrom { object, .. } => format!("Hom({}, -)", cat.describe(object)),
            FunctorExpr::TorsionFreeQuotient => "torsion-free quotient".into(),
            FunctorExpr::KillPTorsion(p) => format!("kill {p}-torsion"),
            FunctorExpr::Compose(a, b) => format!("({}) ∘ ({})", a.describe(cat), b.describe(cat)),
        }
    }
}

/// `F(X)`.
pub fn evaluate<C: ClosedMonoidal>(cat: &C, f: &FunctorExpr<C>, x: &C::Obj) -> Result<C::Obj> {
    Ok(match f {
        FunctorExpr::Identity => x.clone(),
        FunctorExpr::TensorWith { object, .. } => cat.tensor(x, object),
        FunctorExpr::HomFrom { object, .. } => cat.hom(object, x)?,
        FunctorExpr::TorsionFreeQuotient => cat.torsion_quotient(x, TorsionKind::All)?.0,
        FunctorExpr::KillPTorsion(p) => cat.torsion_quotient(x, TorsionKind::Prime(*p))?.0,
        FunctorExpr::Compose(a, b) => evaluate(cat, a, &evaluate(cat, b, x)?)?,
    })
}

/// `F(g)`.
pub fn evaluate_mor<C: ClosedMonoidal>(cat: &C, f: &FunctorExpr<C>, g: &C::Mor) -> Result<C::Mor> {
    match f {
        FunctorExpr::Identity => Ok(g.clone()),
        FunctorExpr::TensorWith { object, .. } => cat.tensor_mor(g, &cat.identity(object)),
        FunctorExpr::HomFrom { object, .. } => cat.hom_mor(&cat.identity(object), g),
        FunctorExpr::TorsionFreeQuotient => cat.torsion_quotient_mor(g, TorsionKind::All),
        FunctorExpr::KillPTorsion(p) => cat.torsion_quotient_mor(g, TorsionKind::Prime(*p)),
        FunctorExpr::Compose(a, b) => evaluate_mor(cat, a, &evaluate_mor(cat, b, g)?),
    }
}

/// `l_X: X -> LX`.
pub fn coaugmentation_at<C: ClosedMonoidal>(cat: &C, f: &FunctorExpr<C>, x: &C::Obj) -> Result<C::Mor> {
    match f {
        FunctorExpr::Identity => Ok(cat.identity(x)),
        FunctorExpr::TensorWith { eta, .. } => cat.compose(
            &cat.tensor_mor(&cat.identity(x), eta)?,
            &cat.right_unitor_inv(x)?,
        ),
        FunctorExpr::TorsionFreeQuotient => Ok(cat.torsion_quotient(x, TorsionKind::All)?.1),
        FunctorExpr::KillPTorsion(p) => Ok(cat.torsion_quotient(x, TorsionKind::Prime(*p))?.1),
        FunctorExpr::HomFrom { .. } => Err(Error::Input(format!("{f:?} has an augmentation, not a coaugmentation"))),
        FunctorExpr::Compose(a, b) => {
            let lb = coaugmentation_at(cat, b, x)?;
            let la = coaugmentation_at(cat, a, &cat.target(&lb))?;
            cat.compose(&la, &lb)
        }
    }
}

/// `c_X: CX -> X`.
pub fn augmentation_at<C: ClosedMonoidal>(cat: &C, f: &FunctorExpr<C>, x: &C::Obj) -> Result<C::Mor> {
    match f {
        FunctorExpr::Identity => Ok(cat.identity(x)),
        FunctorExpr::HomFrom { eta, .. } => cat.compose(
            &cat.hom_unit_iso(x)?,
            &cat.hom_mor(eta, &cat.identity(x))?,
        ),
        FunctorExpr::Compose(a, b) => {
            let cb = augmentation_at(cat, b, x)?;
            let ca = augmentation_at(cat, a, &cat.source(&cb))?;
            cat.compose(&cb, &ca)
        }
        _ => Err(Error::Input(format!("{f:?} has a coaugmentation, not an augmentation"))),
    }
}

/// The structure map in whichever direction `f` carries it.
pub fn structure_map<C: ClosedMonoidal>(cat: &C, f: &FunctorExpr<C>, x: &C::Obj) -> Result<C::Mor> {
    match f.variance()? {
        Variance::Coaugmented => coaugmentation_at(cat, f, x),
        Variance::Augmented => augmentation_at(cat, f, x),
    }
}

/// A finite stand-in for "every object".
pub struct TestUniverse<C: ClosedMonoidal> {
    pub label: String,
    pub objects: Vec<C::Obj>,
    pub morphisms: Vec<C::Mor>,
}

impl<C: ClosedMonoidal> Clone for TestUniverse<C> {
    fn clone(&self) -> Self {
        TestUniverse {
            label: self.label.clone(),
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
        }
    }
}

impl<C: ClosedMonoidal> fmt::Debug for TestUniverse<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestUniverse")
            .field("label", &self.label)
            .field("objects", &self.objects)
            .field("morphisms", &self.morphisms.len())
            .finish()
    }
}

impl<C: ClosedMonoidal> TestUniverse<C> {
    pub fn new(label: impl Into<String>, objects: Vec<C::Obj>, morphisms: Vec<C::Mor>) -> Self {
        TestUniverse {
            label: label.into(),
            objects,
            morphisms,
        }
    }

    /// Adds `F^k X`, `F^k g` and the structure maps for `k ≤ depth`.
    /// Objects isomorphic to one already present are not duplicated.
    pub fn closure(&self, cat: &C, f: &FunctorExpr<C>, depth: usize) -> Result<Self> {
        let mut u = self.clone();
        let mut frontier_objs = self.objects.clone();
        let mut frontier_mors = self.morphisms.clone();
        for _ in 0..depth {
            let mut next_objs = Vec::new();
            let mut next_mors = Vec::new();
            for x in &frontier_objs {
                u.morphisms.push(structure_map(cat, f, x)?);
                let fx = evaluate(cat, f, x)?;
                if !u.contains(cat, &fx)? {
                    u.objects.push(fx.clone());
                }
                next_objs.push(fx);
            }
            for g in &frontier_mors {
                let fg = evaluate_mor(cat, f, g)?;
                u.morphisms.push(fg.clone());
                next_mors.push(fg);
            }
            frontier_objs = next_objs;
            frontier_mors = next_mors;
        }
        u.label = format!("{} closed under {} to depth {depth}", self.label, f.describe(cat));
        Ok(u)
    }

    pub fn contains(&self, cat: &C, x: &C::Obj) -> Result<bool> {
        for y in &self.objects {
            if cat.isomorphic(x, y)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Errors with [`Error::NotClosed`] unless `F(X)` and `F(F(X))` are
    /// in the universe up to isomorphism for every `X`.
    pub fn require_closed(&self, cat: &C, f: &FunctorExpr<C>) -> Result<()> {
        for x in &self.objects {
            let fx = evaluate(cat, f, x)?;
            let ffx = evaluate(cat, f, &fx)?;
            for y in [&fx, &ffx] {
                if !self.contains(cat, y)? {
                    return Err(Error::NotClosed(format!(
                        "{} sends {} to {}, which is not in {}",
                        f.describe(cat),
                        cat.describe(x),
                        cat.describe(y),
                        self.label
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn describe(&self, cat: &C) -> String {
        let objs: Vec<String> = self.objects.iter().map(|x| cat.describe(x)).collect();
        format!("{} {{{}}} with {} morphisms", self.label, objs.join(", "), self.morphisms.len())
    }
}

/// Idempotence at one object: `s_{FX} = F(s_X)` and `s_{FX}` invertible,
/// where `s` is the (co)augmentation.
pub fn check_idempotent_at<C: ClosedMonoidal>(
    cat: &C,
    f: &FunctorExpr<C>,
    x: &C::Obj,
) -> Result<Verdict<C::Mor>> {
    let fx = evaluate(cat, f, x)?;
    let s_fx = structure_map(cat, f, &fx)?;
    let f_s = evaluate_mor(cat, f, &structure_map(cat, f, x)?)?;
    let label = cat.describe(x);
    let parts = vec![
        Verdict::equality(cat, format!("s_FX = F(s_X) at {label}"), s_fx.clone(), f_s)?,
        Verdict::invertibility(cat, format!("s_FX at {label}"), s_fx)?,
    ];
    Ok(Verdict::all(format!("idempotence at {label}"), parts))
}

/// Naturality of the structure map along `g: X -> Y`.
pub fn check_natural<C: ClosedMonoidal>(cat: &C, f: &FunctorExpr<C>, g: &C::Mor) -> Result<Verdict<C::Mor>> {
    let (x, y) = (cat.source(g), cat.target(g));
    let (sx, sy) = (structure_map(cat, f, &x)?, structure_map(cat, f, &y)?);
    let fg = evaluate_mor(cat, f, g)?;
    let (left, right) = match f.variance()? {
        Variance::Coaugmented => (cat.compose(&fg, &sx)?, cat.compose(&sy, g)?),
        Variance::Augmented => (cat.compose(&sy, &fg)?, cat.compose(g, &sx)?),
    };
    Verdict::equality(cat, format!("naturality along {}", cat.describe_mor(g)), left, right)
}

/// Idempotence on every object and naturality on every morphism of a
/// closed universe.
pub fn check_idempotent<C: ClosedMonoidal>(
    cat: &C,
    f: &FunctorExpr<C>,
    u: &TestUniverse<C>,
) -> Result<Verdict<C::Mor>> {
    u.require_closed(cat, f)?;
    let mut parts = Vec::new();
    for x in &u.objects {
        parts.push(check_idempotent_at(cat, f, x)?);
    }
    for g in &u.morphisms {
        parts.push(check_natural(cat, f, g)?);
    }
    let mut v = Verdict::all(String::new(), parts);
    v.summary = format!(
        "{} {} idempotent on {}",
        f.describe(cat),
        if v.holds { "is" } else { "is not" },
        u.label
    );
    Ok(v)
}

/// `X` is local (colocal, for augmented functors): its structure map is
/// invertible.
pub fn is_local<C: ClosedMonoidal>(cat: &C, f: &FunctorExpr<C>, x: &C::Obj) -> Result<Verdict<C::Mor>> {
    Verdict::invertibility(cat, format!("s_X at {}", cat.describe(x)), structure_map(cat, f, x)?)
}

/// `F(g)` is invertible.
pub fn is_equivalence<C: ClosedMonoidal>(cat: &C, f: &FunctorExpr<C>, g: &C::Mor) -> Result<Verdict<C::Mor>> {
    Verdict::invertibility(cat, format!("F({})", cat.describe_mor(g)), evaluate_mor(cat, f, g)?)
}

fn enriched_iso<C, E>(cat: &C, label: String, map: C::Mor, e: &E) -> Result<Verdict<C::Mor>>
where
    C: ClosedMonoidal,
    E: Enrichment<C> + ?Sized,
{
    let holds = e.is_iso_underlying(cat, &map)?;
    let mut v = Verdict::invertibility(cat, label, map)?;
    if v.holds != holds {
        v = Verdict::text(holds, format!("{} [{} says {holds}]", v.summary, e.label()));
    } else {
        v.summary = format!("{} [enrichment {}]", v.summary, e.label());
    }
    Ok(v)
}

/// `g^*: Hom(Y, Z) -> Hom(X, Z)` is an isomorphism in the enriching
/// category, for `g: X -> Y`.
pub fn check_orthogonality<C, E>(cat: &C, g: &C::Mor, z: &C::Obj, e: &E) -> Result<Verdict<C::Mor>>
where
    C: ClosedMonoidal,
    E: Enrichment<C> + ?Sized,
{
    let pre = cat.hom_mor(g, &cat.identity(z))?;
    enriched_iso(cat, format!("Hom({}, {})", cat.describe_mor(g), cat.describe(z)), pre, e)
}

/// The dual check `g_*: Hom(Z, X) -> Hom(Z, Y)`.
pub fn check_coorthogonality<C, E>(cat: &C, z: &C::Obj, g: &C::Mor, e: &E) -> Result<Verdict<C::Mor>>
where
    C: ClosedMonoidal,
    E: Enrichment<C> + ?Sized,
{
    let post = cat.hom_mor(&cat.identity(z), g)?;
    enriched_iso(cat, format!("Hom({}, {})", cat.describe(z), cat.describe_mor(g)), post, e)
}

fn require_solid<C: ClosedMonoidal>(cat: &C, r: &MonoidData<C>) -> Result<()> {
    let v = is_solid(cat, r)?;
    if !v.holds {
        return Err(Error::NotSolid(format!("{}: {}", cat.describe(&r.carrier), v.summary)));
    }
    Ok(())
}

/// `- ⊗ R` with coaugmentation from `η`.
pub fn solid_to_smashing<C: ClosedMonoidal>(cat: &C, r: &MonoidData<C>) -> Result<FunctorExpr<C>> {
    require_solid(cat, r)?;
    Ok(FunctorExpr::TensorWith {
        object: r.carrier.clone(),
        eta: r.eta.clone(),
    })
}

/// `Hom(R, -)` with augmentation from `η`.
pub fn solid_to_mapping<C: ClosedMonoidal>(cat: &C, r: &MonoidData<C>) -> Result<FunctorExpr<C>> {
    require_solid(cat, r)?;
    Ok(FunctorExpr::HomFrom {
        object: r.carrier.clone(),
        eta: r.eta.clone(),
    })
}

/// The solid monoid on `LI` with unit `l_I`. Checks idempotence at `I`
/// and that `l_I ⊗ 1`, `1 ⊗ l_I` are invertible.
pub fn smashing_to_solid<C: ClosedMonoidal>(cat: &C, f: &FunctorExpr<C>) -> Result<MonoidData<C>> {
    if f.variance()? != Variance::Coaugmented {
        return Err(Error::Input(format!("{f:?} is not coaugmented")));
    }
    let i = cat.unit();
    let at_unit = check_idempotent_at(cat, f, &i)?;
    if !at_unit.holds {
        return Err(Error::NotIdempotent(at_unit.summary));
    }
    let l_i = coaugmentation_at(cat, f, &i)?;
    let li = cat.target(&l_i);
    solid_from_unit(cat, &li, &l_i)?.ok_or_else(|| {
        Error::NotIdempotent(format!(
            "l_I ⊗ 1 or 1 ⊗ l_I is not invertible on {}",
            cat.describe(&li)
        ))
    })
}

/// For `Hom(A, -)`: `η = c_A(id_A)`, and the solid monoid on `A` it
/// determines.
pub fn mapping_to_solid<C: ClosedMonoidal>(cat: &C, f: &FunctorExpr<C>) -> Result<MonoidData<C>> {
    let FunctorExpr::HomFrom { object: a, .. } = f else {
        return Err(Error::Input(format!("{f:?} is not of the form Hom(A, -)")));
    };
    let at_unit = check_idempotent_at(cat, f, &cat.unit())?;
    if !at_unit.holds {
        return Err(Error::NotIdempotent(at_unit.summary));
    }
    let eta = cat.compose(&augmentation_at(cat, f, a)?, &cat.name(&cat.identity(a))?)?;
    solid_from_unit(cat, a, &eta)?.ok_or_else(|| {
        Error::NotIdempotent(format!("η ⊗ 1 or 1 ⊗ η is not invertible on {}", cat.describe(a)))
    })
}

/// The trivial monoid structure on the unit.
pub fn unit_monoid<C: ClosedMonoidal>(cat: &C) -> Result<MonoidData<C>> {
    let i = cat.unit();
    MonoidData::new(cat, i.clone(), cat.left_unitor(&i), cat.identity(&i))
}

/// The unique monoid on `LI` making `l_I` a monoid map: solves
/// `μ̄ ∘ (l_I ⊗ l_I) = l_I ∘ μ` by lifting along `(l_I ⊗ l_I)^*`.
pub fn extend_monoid<C: ClosedMonoidal>(
    cat: &C,
    f: &FunctorExpr<C>,
    base: &MonoidData<C>,
) -> Result<MonoidData<C>> {
    let l = coaugmentation_at(cat, f, &base.carrier)?;
    let lr = cat.target(&l);
    let p = cat.tensor_mor(&l, &l)?;
    let p_star = cat.hom_mor(&p, &cat.identity(&lr))?;
    let q = cat.compose(&l, &base.mu)?;
    let Some(el) = cat.lift(&p_star, &cat.name(&q)?)? else {
        return Err(Error::NoSolution(format!(
            "no multiplication on {} is compatible with l",
            cat.describe(&lr)
        )));
    };
    if !cat.is_mono(&p_star)? {
        return Err(Error::NonUnique(format!(
            "(l ⊗ l)^* is not injective on {}",
            cat.describe(&lr)
        )));
    }
    let mu = cat.unname(&cat.tensor(&lr, &lr), &lr, &el)?;
    let eta = cat.compose(&l, &base.eta)?;
    let m = MonoidData::new(cat, lr, mu, eta)?;
    if base.commutative && !m.commutative {
        return Err(Error::Internal("extension of a commutative monoid is not commutative".into()));
    }
    Ok(m)
}

/// `LI` with its extended monoid structure and its rigidity verdict.
pub fn rigid_from_localization<C: ClosedMonoidal>(
    cat: &C,
    f: &FunctorExpr<C>,
) -> Result<(MonoidData<C>, Verdict<C::Mor>)> {
    let m = extend_monoid(cat, f, &unit_monoid(cat)?)?;
    let v = is_rigid(cat, &m, &IdentityEnrichment)?;
    Ok((m, v))
}

/// Certifies `L_η I ≅ R`: `R` is `η`-local, i.e. `η^*` is invertible, and
/// `η` itself is an `η`-equivalence.
pub fn certify_rigid_as_localization<C, E>(cat: &C, r: &MonoidData<C>, e: &E) -> Result<Verdict<C::Mor>>
where
    C: ClosedMonoidal,
    E: Enrichment<C> + ?Sized,
{
    let local = is_rigid(cat, r, e)?;
    let equivalence = Verdict::text(true, "η is an η-equivalence");
    let mut v = Verdict::all(String::new(), vec![local, equivalence]);
    v.summary = if v.holds {
        format!("L_η I ≅ {}", cat.describe(&r.carrier))
    } else {
        format!("{} is not η-local", cat.describe(&r.carrier))
    };
    Ok(v)
}

/// Compares `L` with localization at `l_I` on a universe: locality against
/// `l_I`-orthogonality, and `L`-equivalences against orthogonality to every
/// local object of the universe.
pub fn smashing_vs_unit_localization<C: ClosedMonoidal>(
    cat: &C,
    f: &FunctorExpr<C>,
    u: &TestUniverse<C>,
) -> Result<Verdict<C::Mor>> {
    let l_i = coaugmentation_at(cat, f, &cat.unit())?;
    let e = IdentityEnrichment;
    let mut parts = Vec::new();
    let mut locals = Vec::new();
    for x in &u.objects {
        let local = is_local(cat, f, x)?.holds;
        let orth = check_orthogonality(cat, &l_i, x, &e)?.holds;
        if local {
            locals.push(x.clone());
        }
        parts.push(Verdict::text(
            local == orth,
            format!("{}: local {local}, l_I-orthogonal {orth}", cat.describe(x)),
        ));
    }
    for g in &u.morphisms {
        let equiv = is_equivalence(cat, f, g)?.holds;
        let mut orth = true;
        for z in &locals {
            orth &= check_orthogonality(cat, g, z, &e)?.holds;
        }
        parts.push(Verdict::text(
            equiv == orth,
            format!("{}: equivalence {equiv}, orthogonal to locals {orth}", cat.describe_mor(g)),
        ));
    }
    let mut v = Verdict::all(String::new(), parts);
    v.summary = format!(
        "{} {} localization at l_I on {}",
        f.describe(cat),
        if v.holds { "agrees with" } else { "differs from" },
        u.label
    );
    Ok(v)
}

/// `A ⊗ h` is an `L`-equivalence whenever `h` is, for `A` and `h` in the
/// universe.
pub fn check_tensor_closure<C: ClosedMonoidal>(
    cat: &C,
    f: &FunctorExpr<C>,
    u: &TestUniverse<C>,
) -> Result<Verdict<C::Mor>> {
    let mut parts = Vec::new();
    for h in &u.morphisms {
        if !is_equivalence(cat, f, h)?.holds {
            continue;
        }
        for a in &u.objects {
            let ah = cat.tensor_mor(&cat.identity(a), h)?;
            parts.push(is_equivalence(cat, f, &ah)?);
        }
    }
    Ok(Verdict::all("tensoring preserves equivalences", parts))
}

/// `Hom(W, X)` is local whenever `X` is, for `W`, `X` in the universe.
/// Pairs whose hom object exceeds the resource bound are skipped.
pub fn check_hom_closure<C: ClosedMonoidal>(
    cat: &C,
    f: &FunctorExpr<C>,
    u: &TestUniverse<C>,
) -> Result<Verdict<C::Mor>> {
    let mut parts = Vec::new();
    for x in &u.objects {
        if !is_local(cat, f, x)?.holds {
            continue;
        }
        for w in &u.objects {
            let h = match cat.hom(w, x) {
                Ok(h) => h,
                Err(Error::Resource { .. } | Error::Unsupported(_)) => continue,
                Err(e) => return Err(e),
            };
            parts.push(is_local(cat, f, &h)?);
        }
    }
    Ok(Verdict::all("homs into local objects are local", parts))
}

/// An object `A` of the universe with `F(X) ≅ X ⊗ A` for every `X` in it.
pub fn smashing_realization<C: ClosedMonoidal>(
    cat: &C,
    f: &FunctorExpr<C>,
    u: &TestUniverse<C>,
) -> Result<Option<C::Obj>> {
    'outer: for a in &u.objects {
        for x in &u.objects {
            if !cat.isomorphic(&evaluate(cat, f, x)?, &cat.tensor(x, a))? {
                continue 'outer;
            }
        }
        return Ok(Some(a.clone()));
    }
    Ok(None)
}

/// Per-object outcome of [`module_correspondence`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRow {
    pub object: String,
    pub module_exists: bool,
    pub local: bool,
    pub colocal: bool,
    /// Actions `R ⊗ X -> X` satisfying the module axioms, found by
    /// exhausting the hom.
    pub actions: usize,
}

/// For solid `R`, on each object: a module structure exists iff `l_X` is
/// invertible iff `c_X` is invertible, and there is at most one.
pub fn module_correspondence<C: ClosedMonoidal>(
    cat: &C,
    r: &MonoidData<C>,
    u: &TestUniverse<C>,
    limit: usize,
) -> Result<(Vec<ModuleRow>, Verdict<C::Mor>)> {
    let smash = solid_to_smashing(cat, r)?;
    let map = solid_to_mapping(cat, r)?;
    let mut rows = Vec::new();
    let mut parts = Vec::new();
    for x in &u.objects {
        let module_exists = induce_module(cat, r, x)?.is_some();
        let local = is_local(cat, &smash, x)?.holds;
        let colocal = is_local(cat, &map, x)?.holds;
        let rx = cat.tensor(&r.carrier, x);
        let mut actions = 0;
        for act in cat.morphisms(&rx, x, limit)? {
            if validate_module(cat, r, x, &act)?.holds {
                actions += 1;
            }
        }
        let unit_iso = cat.is_iso(&unit_map(cat, r, x)?)?;
        let ok = module_exists == local
            && local == colocal
            && unit_iso == module_exists
            && actions == usize::from(module_exists);
        let row = ModuleRow {
            object: cat.describe(x),
            module_exists,
            local,
            colocal,
            actions,
        };
        parts.push(Verdict::text(ok, format!("{row:?}")));
        rows.push(row);
    }
    let mut v = Verdict::all(String::new(), parts);
    v.summary = format!(
        "modules over {} {} local objects on {}",
        cat.describe(&r.carrier),
        if v.holds { "match" } else { "do not match" },
        u.label
    );
    Ok((rows, v))
}

#[cfg(test)]
mod tests;
