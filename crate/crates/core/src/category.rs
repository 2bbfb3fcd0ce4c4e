//! The interface every computable closed symmetric monoidal category in this
//! crate implements, and the enrichments rigidity is measured through.
//!
//! Elements of an object `X` are represented throughout as morphisms
//! `I -> X` out of the monoidal unit, so the same generic code covers
//! abelian groups, finite sets and vector spaces.

use std::fmt::Debug;

use serde_json::Value;

use crate::error::{Error, Result};

/// Which torsion a quotient functor kills.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorsionKind {
    All,
    Prime(u64),
}

pub trait ClosedMonoidal {
    type Obj: Clone + Debug;
    type Mor: Clone + Debug;

    /// Short name of the instance, e.g. `"fgab"`.
    fn label(&self) -> String;

    fn unit(&self) -> Self::Obj;
    fn source(&self, f: &Self::Mor) -> Self::Obj;
    fn target(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn equal(&self, f: &Self::Mor, g: &Self::Mor) -> Result<bool>;
    fn inverse(&self, f: &Self::Mor) -> Result<Option<Self::Mor>>;
    fn is_iso(&self, f: &Self::Mor) -> Result<bool> {
        Ok(self.inverse(f)?.is_some())
    }
    fn is_mono(&self, f: &Self::Mor) -> Result<bool>;
    fn isomorphic(&self, x: &Self::Obj, y: &Self::Obj) -> Result<bool>;

    fn tensor(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    /// `λ_X: I ⊗ X -> X`.
    fn left_unitor(&self, x: &Self::Obj) -> Self::Mor;
    /// `ρ_X: X ⊗ I -> X`.
    fn right_unitor(&self, x: &Self::Obj) -> Self::Mor;
    /// `(X ⊗ Y) ⊗ Z -> X ⊗ (Y ⊗ Z)`.
    fn associator(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Self::Mor;
    /// `σ_{X,Y}: X ⊗ Y -> Y ⊗ X`.
    fn braiding(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Mor;

    /// Internal hom object.
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Self::Obj>;
    /// `Hom(pre, post): Hom(X, Y) -> Hom(X', Y')` for `pre: X' -> X`,
    /// `post: Y -> Y'`.
    fn hom_mor(&self, pre: &Self::Mor, post: &Self::Mor) -> Result<Self::Mor>;
    /// The element `I -> Hom(X, Y)` naming `f: X -> Y`.
    fn name(&self, f: &Self::Mor) -> Result<Self::Mor>;
    /// Inverse of [`ClosedMonoidal::name`].
    fn unname(&self, x: &Self::Obj, y: &Self::Obj, element: &Self::Mor) -> Result<Self::Mor>;
    /// Evaluation at the unit, `Hom(I, X) -> X`.
    fn hom_unit_iso(&self, x: &Self::Obj) -> Result<Self::Mor>;

    /// Some element `x: I -> X` with `f ∘ x = y`, if one exists.
    fn lift(&self, f: &Self::Mor, y: &Self::Mor) -> Result<Option<Self::Mor>>;
    /// Equalizer of two parallel maps, with its inclusion.
    fn equalizer(&self, f: &Self::Mor, g: &Self::Mor) -> Result<(Self::Obj, Self::Mor)>;
    /// All elements `I -> X`, when there are at most `limit` of them.
    fn elements(&self, x: &Self::Obj, limit: usize) -> Result<Vec<Self::Mor>>;

    fn torsion_quotient(&self, x: &Self::Obj, kind: TorsionKind) -> Result<(Self::Obj, Self::Mor)> {
        let _ = (x, kind);
        Err(Error::Unsupported(format!("torsion quotients in {}", self.label())))
    }
    fn torsion_quotient_mor(&self, f: &Self::Mor, kind: TorsionKind) -> Result<Self::Mor> {
        let _ = (f, kind);
        Err(Error::Unsupported(format!("torsion quotients in {}", self.label())))
    }

    fn describe(&self, x: &Self::Obj) -> String;
    fn describe_mor(&self, f: &Self::Mor) -> String;
    fn mor_json(&self, f: &Self::Mor) -> Value;

    // Derived operations.

    fn left_unitor_inv(&self, x: &Self::Obj) -> Result<Self::Mor> {
        self.inverse(&self.left_unitor(x))?
            .ok_or_else(|| Error::Internal("left unitor is not invertible".into()))
    }

    fn right_unitor_inv(&self, x: &Self::Obj) -> Result<Self::Mor> {
        self.inverse(&self.right_unitor(x))?
            .ok_or_else(|| Error::Internal("right unitor is not invertible".into()))
    }

    fn associator_inv(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Result<Self::Mor> {
        self.inverse(&self.associator(x, y, z))?
            .ok_or_else(|| Error::Internal("associator is not invertible".into()))
    }

    /// Composite of a chain given in application order: `chain[0]` first.
    fn compose_chain(&self, chain: &[&Self::Mor]) -> Result<Self::Mor> {
        let (first, rest) = chain
            .split_first()
            .ok_or_else(|| Error::Internal("empty composite".into()))?;
        rest.iter()
            .try_fold((*first).clone(), |acc, g| self.compose(g, &acc))
    }

    /// All morphisms `X -> Y`, enumerated through the hom object.
    fn morphisms(&self, x: &Self::Obj, y: &Self::Obj, limit: usize) -> Result<Vec<Self::Mor>> {
        let h = self.hom(x, y)?;
        self.elements(&h, limit)?
            .iter()
            .map(|e| self.unname(x, y, e))
            .collect()
    }
}

/// A closed symmetric monoidal `V`-structure `(i, r)` on a category:
/// rigidity and enriched orthogonality ask for isomorphisms after applying
/// the right adjoint `r`.
pub trait Enrichment<C: ClosedMonoidal> {
    fn label(&self) -> String;
    /// Whether `r(f)` is an isomorphism in the enriching category.
    fn is_iso_underlying(&self, cat: &C, f: &C::Mor) -> Result<bool>;
}

/// `i = r = Id`: the category enriched over itself.
#[derive(Clone, Copy, Debug, Default)]
pub struct IdentityEnrichment;

impl<C: ClosedMonoidal> Enrichment<C> for IdentityEnrichment {
    fn label(&self) -> String {
        "identity".into()
    }

    fn is_iso_underlying(&self, cat: &C, f: &C::Mor) -> Result<bool> {
        cat.is_iso(f)
    }
}
