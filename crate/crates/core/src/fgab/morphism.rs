use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::FgGroup;
use crate::error::{Error, Result};
use crate::intlinalg::{kernel_generators, smith_normal_form, solve_with, IntMatrix};

/// A homomorphism between presented groups, given by the images of the
/// source generators (one column per source generator).
///
/// Equality is semantic: two morphisms are equal when their matrices agree
/// modulo the target relations.
#[derive(Clone, Debug)]
pub struct Morphism {
    source: FgGroup,
    target: FgGroup,
    matrix: IntMatrix,
}

/// Which of the basic properties a morphism has.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MorphismPredicates {
    pub is_iso: bool,
    pub is_mono: bool,
    pub is_epi: bool,
}

impl Morphism {
    /// Checks the shape and that every source relation maps into the target
    /// relation lattice.
    pub fn new(source: FgGroup, target: FgGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.shape() != (target.generators(), source.generators()) {
            return Err(Error::Shape(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.generators(),
                source.generators()
            )));
        }
        let images = &matrix * source.relations();
        for (k, col) in images.columns().iter().enumerate() {
            if !target.is_zero_element(col) {
                return Err(Error::Input(format!(
                    "matrix does not respect relation {k} of the source"
                )));
            }
        }
        Ok(Morphism { source, target, matrix })
    }

    pub(crate) fn new_unchecked(source: FgGroup, target: FgGroup, matrix: IntMatrix) -> Self {
        debug_assert_eq!(matrix.shape(), (target.generators(), source.generators()));
        Morphism { source, target, matrix }
    }

    pub fn identity(g: &FgGroup) -> Self {
        Self::new_unchecked(g.clone(), g.clone(), IntMatrix::identity(g.generators()))
    }

    pub fn zero(source: &FgGroup, target: &FgGroup) -> Self {
        Self::new_unchecked(
            source.clone(),
            target.clone(),
            IntMatrix::zeros(target.generators(), source.generators()),
        )
    }

    /// Multiplication by `k` on `g`.
    pub fn scalar(g: &FgGroup, k: i64) -> Self {
        Self::new_unchecked(
            g.clone(),
            g.clone(),
            IntMatrix::identity(g.generators()).scale(&BigInt::from(k)),
        )
    }

    pub fn source(&self) -> &FgGroup {
        &self.source
    }

    pub fn target(&self) -> &FgGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Same matrix, reinterpreted between other presentations on the same
    /// generators. The caller guarantees well-definedness.
    pub(crate) fn retarget(&self, source: &FgGroup, target: &FgGroup) -> Self {
        Self::new_unchecked(source.clone(), target.clone(), self.matrix.clone())
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(x)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &Morphism) -> Result<Morphism> {
        if !first.target.same_presentation(&self.source) {
            return Err(Error::Shape(format!(
                "cannot compose: {:?} does not match {:?}",
                first.target, self.source
            )));
        }
        Ok(Self::new_unchecked(
            first.source.clone(),
            self.target.clone(),
            &self.matrix * &first.matrix,
        ))
    }

    fn check_parallel(&self, other: &Morphism) -> Result<()> {
        if self.source.generators() != other.source.generators()
            || !self.target.same_presentation(&other.target)
        {
            return Err(Error::Shape("morphisms are not parallel".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        self.check_parallel(other)?;
        Ok(Self::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            &self.matrix + &other.matrix,
        ))
    }

    pub fn sub(&self, other: &Morphism) -> Result<Morphism> {
        self.check_parallel(other)?;
        Ok(Self::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            &self.matrix - &other.matrix,
        ))
    }

    pub fn equals(&self, other: &Morphism) -> Result<bool> {
        self.check_parallel(other)?;
        Ok(self.sub(other)?.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.matrix
            .columns()
            .iter()
            .all(|c| self.target.is_zero_element(c))
    }

    /// Kernel with its inclusion. The kernel is returned in canonical
    /// presentation.
    pub fn kernel(&self) -> (FgGroup, Morphism) {
        let ns = self.source.generators();
        let b = self.target.relations();
        // x with F x in the span of the target relations
        let system = self.matrix.hstack(&-b);
        let k = kernel_generators(&system).select_rows(0..ns);
        let kx = k.without_zero_cols();
        // relations among those generators: c with Kx c in the source lattice
        let a = self.source.relations();
        let rel = kernel_generators(&kx.hstack(&-a)).select_rows(0..kx.cols());
        let raw = FgGroup::build(rel, (0..kx.cols()).map(|i| format!("k{i}")).collect());
        let canon = raw.canonical();
        let inclusion = &kx * &raw.from_canonical_matrix();
        let inc = Self::new_unchecked(canon.clone(), self.source.clone(), inclusion);
        (canon, inc)
    }

    /// Cokernel: the target presented with the image as extra relations.
    /// The projection is the identity on generators.
    pub fn cokernel(&self) -> (FgGroup, Morphism) {
        let q = FgGroup::build(
            self.target.relations().hstack(&self.matrix),
            self.target.labels().to_vec(),
        );
        let proj = Self::new_unchecked(
            self.target.clone(),
            q.clone(),
            IntMatrix::identity(self.target.generators()),
        );
        (q, proj)
    }

    pub fn is_mono(&self) -> bool {
        self.kernel().0.is_trivial()
    }

    pub fn is_epi(&self) -> bool {
        self.cokernel().0.is_trivial()
    }

    pub fn is_iso(&self) -> bool {
        self.is_epi() && self.is_mono()
    }

    pub fn predicates(&self) -> MorphismPredicates {
        let is_mono = self.is_mono();
        let is_epi = self.is_epi();
        MorphismPredicates {
            is_iso: is_mono && is_epi,
            is_mono,
            is_epi,
        }
    }

    /// Inverse, when this is an isomorphism.
    pub fn inverse(&self) -> Option<Morphism> {
        if !self.is_iso() {
            return None;
        }
        let nt = self.target.generators();
        let ns = self.source.generators();
        let snf = smith_normal_form(&self.matrix.hstack(self.target.relations()));
        let mut cols = Vec::with_capacity(nt);
        for j in 0..nt {
            let mut e = vec![BigInt::zero(); nt];
            e[j] = BigInt::one();
            let x = solve_with(&snf, &e)?;
            cols.push(x[..ns].to_vec());
        }
        Some(Self::new_unchecked(
            self.target.clone(),
            self.source.clone(),
            IntMatrix::from_cols(ns, &cols),
        ))
    }

    /// Some `x` with `f(x) = y` modulo the target relations.
    pub fn preimage(&self, y: &[BigInt]) -> Option<Vec<BigInt>> {
        let ns = self.source.generators();
        let snf = smith_normal_form(&self.matrix.hstack(self.target.relations()));
        solve_with(&snf, y).map(|x| x[..ns].to_vec())
    }
}
