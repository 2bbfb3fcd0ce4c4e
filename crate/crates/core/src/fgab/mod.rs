//! Finitely generated abelian groups as a closed symmetric monoidal
//! category: tensor products, internal homs, kernels and cokernels, all
//! decided through Smith normal forms.
//!
//! Objects keep their presentation (generator order matters: tensor
//! generators are ordered `e_i ⊗ f_j` lexicographically), and morphisms are
//! integer matrices compared modulo the target relations.

mod group;
mod hom;
mod morphism;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use serde_json::{json, Value};

pub use group::FgGroup;
pub use hom::{
    associator, braiding, curry, hom_mor, left_unitor, right_unitor, tensor, tensor_mor, uncurry,
    HomStructure, DEFAULT_MAX_HOM_SIZE,
};
pub use morphism::{Morphism, MorphismPredicates};

use crate::category::{ClosedMonoidal, TorsionKind};
use crate::error::{Error, Result};
use crate::intlinalg::IntMatrix;

type HomKey = (usize, IntMatrix, usize, IntMatrix);

/// The category of finitely generated abelian groups.
///
/// Hom structures are cached per pair of presentations; the cache is shared
/// and safe to use from several threads.
#[derive(Debug)]
pub struct FgAb {
    max_hom_size: usize,
    cache: Mutex<HashMap<HomKey, Arc<HomStructure>>>,
}

impl Default for FgAb {
    fn default() -> Self {
        Self::new(DEFAULT_MAX_HOM_SIZE)
    }
}

impl FgAb {
    pub fn new(max_hom_size: usize) -> Self {
        FgAb {
            max_hom_size,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn max_hom_size(&self) -> usize {
        self.max_hom_size
    }

    pub fn hom_structure(&self, x: &FgGroup, y: &FgGroup) -> Result<Arc<HomStructure>> {
        let key = (
            x.generators(),
            x.relations().clone(),
            y.generators(),
            y.relations().clone(),
        );
        if let Some(h) = self.cache.lock().unwrap().get(&key) {
            return Ok(h.clone());
        }
        let h = Arc::new(HomStructure::new(x, y, self.max_hom_size)?);
        self.cache.lock().unwrap().insert(key, h.clone());
        Ok(h)
    }

    pub fn curry(&self, f: &Morphism, g: &FgGroup, h: &FgGroup) -> Result<Morphism> {
        let hk = self.hom_structure(h, f.target())?;
        curry(f, g, &hk)
    }

    pub fn uncurry(&self, phi: &Morphism, h: &FgGroup, k: &FgGroup) -> Result<Morphism> {
        let hk = self.hom_structure(h, k)?;
        uncurry(phi, &hk)
    }
}

fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

impl ClosedMonoidal for FgAb {
    type Obj = FgGroup;
    type Mor = Morphism;

    fn label(&self) -> String {
        "fgab".into()
    }

    fn unit(&self) -> FgGroup {
        FgGroup::integers()
    }

    fn source(&self, f: &Morphism) -> FgGroup {
        f.source().clone()
    }

    fn target(&self, f: &Morphism) -> FgGroup {
        f.target().clone()
    }

    fn identity(&self, x: &FgGroup) -> Morphism {
        Morphism::identity(x)
    }

    fn compose(&self, g: &Morphism, f: &Morphism) -> Result<Morphism> {
        g.compose(f)
    }

    fn equal(&self, f: &Morphism, g: &Morphism) -> Result<bool> {
        f.equals(g)
    }

    fn inverse(&self, f: &Morphism) -> Result<Option<Morphism>> {
        Ok(f.inverse())
    }

    fn is_iso(&self, f: &Morphism) -> Result<bool> {
        Ok(f.is_iso())
    }

    fn is_mono(&self, f: &Morphism) -> Result<bool> {
        Ok(f.is_mono())
    }

    fn isomorphic(&self, x: &FgGroup, y: &FgGroup) -> Result<bool> {
        Ok(x.isomorphic(y))
    }

    fn tensor(&self, x: &FgGroup, y: &FgGroup) -> FgGroup {
        tensor(x, y)
    }

    fn tensor_mor(&self, f: &Morphism, g: &Morphism) -> Result<Morphism> {
        Ok(tensor_mor(f, g))
    }

    fn left_unitor(&self, x: &FgGroup) -> Morphism {
        left_unitor(x)
    }

    fn right_unitor(&self, x: &FgGroup) -> Morphism {
        right_unitor(x)
    }

    fn associator(&self, x: &FgGroup, y: &FgGroup, z: &FgGroup) -> Morphism {
        associator(x, y, z)
    }

    fn braiding(&self, x: &FgGroup, y: &FgGroup) -> Morphism {
        braiding(x, y)
    }

    fn left_unitor_inv(&self, x: &FgGroup) -> Result<Morphism> {
        Ok(left_unitor(x).retarget(x, &tensor(&FgGroup::integers(), x)))
    }

    fn right_unitor_inv(&self, x: &FgGroup) -> Result<Morphism> {
        Ok(right_unitor(x).retarget(x, &tensor(x, &FgGroup::integers())))
    }

    fn hom(&self, x: &FgGroup, y: &FgGroup) -> Result<FgGroup> {
        Ok(self.hom_structure(x, y)?.group().clone())
    }

    fn hom_mor(&self, pre: &Morphism, post: &Morphism) -> Result<Morphism> {
        let from = self.hom_structure(pre.target(), post.source())?;
        let to = self.hom_structure(pre.source(), post.target())?;
        hom_mor(&from, &to, pre, post)
    }

    fn name(&self, f: &Morphism) -> Result<Morphism> {
        let hs = self.hom_structure(f.source(), f.target())?;
        let coords = hs.decompose(f.matrix())?;
        Ok(Morphism::new_unchecked(
            FgGroup::integers(),
            hs.group().clone(),
            IntMatrix::column_vector(&coords),
        ))
    }

    fn unname(&self, x: &FgGroup, y: &FgGroup, element: &Morphism) -> Result<Morphism> {
        let hs = self.hom_structure(x, y)?;
        if !element.target().same_presentation(hs.group()) || element.source().generators() != 1 {
            return Err(Error::Shape("element does not name a morphism of this hom".into()));
        }
        Ok(hs.morphism_from_coords(&element.matrix().col(0)))
    }

    fn hom_unit_iso(&self, x: &FgGroup) -> Result<Morphism> {
        let hs = self.hom_structure(&FgGroup::integers(), x)?;
        let cols: Vec<Vec<BigInt>> = hs.generator_matrices().iter().map(|m| m.col(0)).collect();
        Ok(Morphism::new_unchecked(
            hs.group().clone(),
            x.clone(),
            IntMatrix::from_cols(x.generators(), &cols),
        ))
    }

    fn lift(&self, f: &Morphism, y: &Morphism) -> Result<Option<Morphism>> {
        if !y.target().same_presentation(f.target()) || y.source().generators() != 1 {
            return Err(Error::Shape("lift: element does not live in the target".into()));
        }
        Ok(f.preimage(&y.matrix().col(0)).map(|x| {
            Morphism::new_unchecked(FgGroup::integers(), f.source().clone(), IntMatrix::column_vector(&x))
        }))
    }

    fn equalizer(&self, f: &Morphism, g: &Morphism) -> Result<(FgGroup, Morphism)> {
        Ok(f.sub(g)?.kernel())
    }

    fn elements(&self, x: &FgGroup, limit: usize) -> Result<Vec<Morphism>> {
        Ok(x.elements(limit)?
            .iter()
            .map(|e| Morphism::new_unchecked(FgGroup::integers(), x.clone(), IntMatrix::column_vector(e)))
            .collect())
    }

    fn torsion_quotient(&self, x: &FgGroup, kind: TorsionKind) -> Result<(FgGroup, Morphism)> {
        let prime = match kind {
            TorsionKind::All => None,
            TorsionKind::Prime(p) => Some(p),
        };
        let q = x.quotient(&x.torsion_generators(prime))?;
        let proj = Morphism::new_unchecked(x.clone(), q.clone(), IntMatrix::identity(x.generators()));
        Ok((q, proj))
    }

    fn torsion_quotient_mor(&self, f: &Morphism, kind: TorsionKind) -> Result<Morphism> {
        let (qs, _) = self.torsion_quotient(f.source(), kind)?;
        let (qt, _) = self.torsion_quotient(f.target(), kind)?;
        Morphism::new(qs, qt, f.matrix().clone())
    }

    fn describe(&self, x: &FgGroup) -> String {
        x.describe()
    }

    fn describe_mor(&self, f: &Morphism) -> String {
        format!("{} -> {} by {}", f.source(), f.target(), f.matrix())
    }

    fn mor_json(&self, f: &Morphism) -> Value {
        json!({
            "source": f.source().describe(),
            "target": f.target().describe(),
            "matrix": matrix_json(f.matrix()),
        })
    }
}

#[cfg(test)]
mod tests;
