//! Monoids and their modules in a closed symmetric monoidal category: the
//! core, and the solid and rigid deciders.
//!
//! Everything here is generic over [`ClosedMonoidal`], so the same code
//! runs on abelian groups, the arithmetic stratum and the finite models.

use std::fmt;

use crate::category::{ClosedMonoidal, Enrichment};
use crate::error::{Error, Result};
use crate::fgab::{tensor, FgAb, FgGroup, Morphism};
use crate::intlinalg::IntMatrix;
use crate::verdict::Verdict;

/// A validated monoid `(R, μ, η)`.
pub struct MonoidData<C: ClosedMonoidal> {
    pub carrier: C::Obj,
    pub mu: C::Mor,
    pub eta: C::Mor,
    /// Whether `μ ∘ σ = μ`. Recorded, not required.
    pub commutative: bool,
}

impl<C: ClosedMonoidal> Clone for MonoidData<C> {
    fn clone(&self) -> Self {
        MonoidData {
            carrier: self.carrier.clone(),
            mu: self.mu.clone(),
            eta: self.eta.clone(),
            commutative: self.commutative,
        }
    }
}

impl<C: ClosedMonoidal> fmt::Debug for MonoidData<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MonoidData")
            .field("carrier", &self.carrier)
            .field("mu", &self.mu)
            .field("eta", &self.eta)
            .field("commutative", &self.commutative)
            .finish()
    }
}

impl<C: ClosedMonoidal> MonoidData<C> {
    /// Validates the monoid axioms; fails with [`Error::NotMonoid`] when they do
    /// not hold.
    pub fn new(cat: &C, carrier: C::Obj, mu: C::Mor, eta: C::Mor) -> Result<Self> {
        let v = validate_monoid(cat, &carrier, &mu, &eta)?;
        if !v.holds {
            return Err(Error::NotMonoid(v.summary));
        }
        let commutative = is_commutative(cat, &carrier, &mu)?;
        Ok(MonoidData {
            carrier,
            mu,
            eta,
            commutative,
        })
    }
}

impl MonoidData<FgAb> {
    /// A ring on `carrier` from its structure constants: `mu` is
    /// `n × n²` on the lexicographic tensor basis, `eta` the image of `1`.
    pub fn from_structure_constants(
        cat: &FgAb,
        carrier: FgGroup,
        mu: IntMatrix,
        eta: IntMatrix,
    ) -> Result<Self> {
        let mu = Morphism::new(tensor(&carrier, &carrier), carrier.clone(), mu)?;
        let eta = Morphism::new(FgGroup::integers(), carrier.clone(), eta)?;
        MonoidData::new(cat, carrier, mu, eta)
    }
}

/// An `R`-module `(X, m)` with `m: R ⊗ X -> X`.
pub struct ModuleData<C: ClosedMonoidal> {
    pub monoid: MonoidData<C>,
    pub carrier: C::Obj,
    pub action: C::Mor,
}

impl<C: ClosedMonoidal> Clone for ModuleData<C> {
    fn clone(&self) -> Self {
        ModuleData {
            monoid: self.monoid.clone(),
            carrier: self.carrier.clone(),
            action: self.action.clone(),
        }
    }
}

impl<C: ClosedMonoidal> fmt::Debug for ModuleData<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleData")
            .field("carrier", &self.carrier)
            .field("action", &self.action)
            .finish()
    }
}

fn is_commutative<C: ClosedMonoidal>(cat: &C, r: &C::Obj, mu: &C::Mor) -> Result<bool> {
    cat.equal(&cat.compose(mu, &cat.braiding(r, r))?, mu)
}

/// Associativity square and both unit triangles.
pub fn validate_monoid<C: ClosedMonoidal>(
    cat: &C,
    r: &C::Obj,
    mu: &C::Mor,
    eta: &C::Mor,
) -> Result<Verdict<C::Mor>> {
    let id = cat.identity(r);
    let assoc_left = cat.compose(mu, &cat.tensor_mor(mu, &id)?)?;
    let assoc_right = cat.compose_chain(&[
        &cat.associator(r, r, r),
        &cat.tensor_mor(&id, mu)?,
        mu,
    ])?;
    let left_unit = cat.compose(mu, &cat.tensor_mor(eta, &id)?)?;
    let right_unit = cat.compose(mu, &cat.tensor_mor(&id, eta)?)?;
    let parts = vec![
        Verdict::equality(cat, "associativity", assoc_left, assoc_right)?,
        Verdict::equality(cat, "left unit", left_unit, cat.left_unitor(r))?,
        Verdict::equality(cat, "right unit", right_unit, cat.right_unitor(r))?,
    ];
    let mut v = Verdict::all("monoid axioms", parts);
    if v.holds {
        let comm = if is_commutative(cat, r, mu)? { "commutative" } else { "not commutative" };
        v.summary = format!("monoid axioms hold ({comm})");
    } else {
        v.summary = "monoid axioms fail".into();
    }
    Ok(v)
}

/// The two maps `R -> R ⊗ R`, `x ↦ 1 ⊗ x` and `x ↦ x ⊗ 1`.
pub fn unit_insertions<C: ClosedMonoidal>(cat: &C, m: &MonoidData<C>) -> Result<(C::Mor, C::Mor)> {
    let id = cat.identity(&m.carrier);
    let left = cat.compose(&cat.tensor_mor(&m.eta, &id)?, &cat.left_unitor_inv(&m.carrier)?)?;
    let right = cat.compose(&cat.tensor_mor(&id, &m.eta)?, &cat.right_unitor_inv(&m.carrier)?)?;
    Ok((left, right))
}

/// The core `cR = {x | 1⊗x = x⊗1}` with its inclusion into `R`.
pub fn core<C: ClosedMonoidal>(cat: &C, m: &MonoidData<C>) -> Result<(C::Obj, C::Mor)> {
    let (left, right) = unit_insertions(cat, m)?;
    cat.equalizer(&left, &right)
}

/// `μ` is an isomorphism.
pub fn is_solid<C: ClosedMonoidal>(cat: &C, m: &MonoidData<C>) -> Result<Verdict<C::Mor>> {
    Verdict::invertibility(cat, "μ", m.mu.clone())
}

/// The unit maps `x ↦ 1⊗x` and `x ↦ x⊗1` coincide.
pub fn is_unit_epimorphism<C: ClosedMonoidal>(
    cat: &C,
    m: &MonoidData<C>,
) -> Result<Verdict<C::Mor>> {
    let (left, right) = unit_insertions(cat, m)?;
    Verdict::equality(cat, "1⊗x = x⊗1", left, right)
}

/// Reconstructs the monoid on `G` from a unit `η: I -> G` when both
/// `η ⊗ 1` and `1 ⊗ η` are invertible.
///
/// The two candidate multiplications `λ ∘ (η⊗1)⁻¹` and `ρ ∘ (1⊗η)⁻¹` are
/// compared; a mismatch is reported as an internal error.
pub fn solid_from_unit<C: ClosedMonoidal>(
    cat: &C,
    g: &C::Obj,
    eta: &C::Mor,
) -> Result<Option<MonoidData<C>>> {
    let id = cat.identity(g);
    let Some(a) = cat.inverse(&cat.tensor_mor(eta, &id)?)? else {
        return Ok(None);
    };
    let Some(b) = cat.inverse(&cat.tensor_mor(&id, eta)?)? else {
        return Ok(None);
    };
    let mu1 = cat.compose(&cat.left_unitor(g), &a)?;
    let mu2 = cat.compose(&cat.right_unitor(g), &b)?;
    if !cat.equal(&mu1, &mu2)? {
        return Err(Error::Internal(format!(
            "the two multiplications on {} reconstructed from the unit differ",
            cat.describe(g)
        )));
    }
    MonoidData::new(cat, g.clone(), mu1, eta.clone()).map(Some)
}

/// `η*: Hom(R, R) -> Hom(I, R)` is an isomorphism after applying the
/// enrichment's right adjoint.
pub fn is_rigid<C, E>(cat: &C, m: &MonoidData<C>, enrichment: &E) -> Result<Verdict<C::Mor>>
where
    C: ClosedMonoidal,
    E: Enrichment<C> + ?Sized,
{
    let eta_star = cat.hom_mor(&m.eta, &cat.identity(&m.carrier))?;
    let holds = enrichment.is_iso_underlying(cat, &eta_star)?;
    let mut v = Verdict::invertibility(cat, "η*: Hom(R,R) -> Hom(I,R)", eta_star)?;
    if v.holds != holds {
        return Err(Error::Internal(format!(
            "enrichment {} disagrees with invertibility of η*",
            enrichment.label()
        )));
    }
    v.summary = format!("{} [enrichment {}]", v.summary, enrichment.label());
    Ok(v)
}

/// Both module diagrams for `act: R ⊗ X -> X`.
pub fn validate_module<C: ClosedMonoidal>(
    cat: &C,
    m: &MonoidData<C>,
    x: &C::Obj,
    act: &C::Mor,
) -> Result<Verdict<C::Mor>> {
    let r = &m.carrier;
    let id_r = cat.identity(r);
    let id_x = cat.identity(x);
    let assoc_left = cat.compose(act, &cat.tensor_mor(&m.mu, &id_x)?)?;
    let assoc_right = cat.compose_chain(&[
        &cat.associator(r, r, x),
        &cat.tensor_mor(&id_r, act)?,
        act,
    ])?;
    let unit = cat.compose(act, &cat.tensor_mor(&m.eta, &id_x)?)?;
    let parts = vec![
        Verdict::equality(cat, "action associativity", assoc_left, assoc_right)?,
        Verdict::equality(cat, "action unit", unit, cat.left_unitor(x))?,
    ];
    Ok(Verdict::all("module axioms", parts))
}

/// `x ↦ 1 ⊗ x`, the map `X -> R ⊗ X` whose invertibility decides whether
/// `X` carries a module structure over a solid `R`.
pub fn unit_map<C: ClosedMonoidal>(cat: &C, m: &MonoidData<C>, x: &C::Obj) -> Result<C::Mor> {
    cat.compose(
        &cat.tensor_mor(&m.eta, &cat.identity(x))?,
        &cat.left_unitor_inv(x)?,
    )
}

/// The unique module structure on `X` over a solid monoid, if any. The
/// action is the inverse of [`unit_map`].
pub fn induce_module<C: ClosedMonoidal>(
    cat: &C,
    m: &MonoidData<C>,
    x: &C::Obj,
) -> Result<Option<ModuleData<C>>> {
    if !is_solid(cat, m)?.holds {
        return Err(Error::NotSolid(format!("{} is not solid", cat.describe(&m.carrier))));
    }
    let Some(action) = cat.inverse(&unit_map(cat, m, x)?)? else {
        return Ok(None);
    };
    let v = validate_module(cat, m, x, &action)?;
    if !v.holds {
        return Err(Error::Internal(format!("induced action fails: {}", v.summary)));
    }
    Ok(Some(ModuleData {
        monoid: m.clone(),
        carrier: x.clone(),
        action,
    }))
}

/// A monoid isomorphism `a -> b`, if one exists.
///
/// Finds the map `f` with `f ∘ η_a = η_b` by lifting along
/// `η_a*: Hom(A, B) -> Hom(I, B)`, then checks that `f` is invertible and
/// multiplicative. Complete whenever `η_a*` is injective, which holds for
/// solid `a`.
pub fn monoid_isomorphism<C: ClosedMonoidal>(
    cat: &C,
    a: &MonoidData<C>,
    b: &MonoidData<C>,
) -> Result<Option<C::Mor>> {
    let eta_star = cat.hom_mor(&a.eta, &cat.identity(&b.carrier))?;
    let Some(el) = cat.lift(&eta_star, &cat.name(&b.eta)?)? else {
        return Ok(None);
    };
    let f = cat.unname(&a.carrier, &b.carrier, &el)?;
    if !cat.is_iso(&f)? {
        return Ok(None);
    }
    let lhs = cat.compose(&f, &a.mu)?;
    let rhs = cat.compose(&b.mu, &cat.tensor_mor(&f, &f)?)?;
    if !cat.equal(&lhs, &rhs)? || !cat.equal(&cat.compose(&f, &a.eta)?, &b.eta)? {
        return Ok(None);
    }
    Ok(Some(f))
}
