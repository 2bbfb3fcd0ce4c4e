use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intlinalg::{smith_normal_form, IntMatrix, SnfDecomposition};

/// A finitely generated abelian group given by generators and relations.
///
/// The relation matrix has one row per generator and one column per
/// relation. The canonical form `Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` is computed once
/// on construction, along with the change of basis needed to reduce
/// elements to canonical coordinates. Cloning is cheap.
#[derive(Clone)]
pub struct FgGroup(Arc<GroupData>);

struct GroupData {
    generators: usize,
    relations: IntMatrix,
    labels: Vec<String>,
    snf: SnfDecomposition,
    // Rows of the SNF basis that carry a nontrivial summand: torsion first,
    // in divisibility order, then the free ones.
    summands: Vec<usize>,
    // Modulus of each summand; zero marks a free summand.
    moduli: Vec<BigInt>,
}

impl FgGroup {
    /// Group on `generators` generators subject to the columns of
    /// `relations`. All-zero relation columns are discarded.
    pub fn from_presentation(generators: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() != generators {
            return Err(Error::Shape(format!(
                "relation matrix has {} rows for {} generators",
                relations.rows(),
                generators
            )));
        }
        let labels = (0..generators).map(|i| format!("e{i}")).collect();
        Ok(Self::build(relations, labels))
    }

    pub(crate) fn build(relations: IntMatrix, labels: Vec<String>) -> Self {
        let relations = relations.without_zero_cols();
        let generators = relations.rows();
        debug_assert_eq!(labels.len(), generators);
        let snf = smith_normal_form(&relations);
        let mut summands = Vec::new();
        let mut moduli = Vec::new();
        for i in 0..generators {
            let d = snf.diag(i);
            if i < snf.rank() {
                if !d.is_one() {
                    summands.push(i);
                    moduli.push(d);
                }
            } else {
                summands.push(i);
                moduli.push(BigInt::zero());
            }
        }
        FgGroup(Arc::new(GroupData {
            generators,
            relations,
            labels,
            snf,
            summands,
            moduli,
        }))
    }

    /// Canonical diagonal presentation with the given moduli (0 for `Z`).
    pub fn from_moduli(moduli: &[BigInt]) -> Self {
        let n = moduli.len();
        let cols: Vec<Vec<BigInt>> = moduli
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_zero())
            .map(|(i, d)| {
                let mut c = vec![BigInt::zero(); n];
                c[i] = d.abs();
                c
            })
            .collect();
        let labels = (0..n).map(|i| format!("e{i}")).collect();
        Self::build(IntMatrix::from_cols(n, &cols), labels)
    }

    /// `Z^n`.
    pub fn free(n: usize) -> Self {
        Self::from_moduli(&vec![BigInt::zero(); n])
    }

    /// The monoidal unit `Z`.
    pub fn integers() -> Self {
        Self::free(1)
    }

    /// `Z/n` on a single generator; `n = 0` gives `Z` and `n = 1` the zero
    /// group (still with one generator).
    pub fn cyclic(n: u64) -> Self {
        Self::from_moduli(&[BigInt::from(n)])
    }

    /// The zero group on no generators.
    pub fn zero() -> Self {
        Self::build(IntMatrix::zeros(0, 0), Vec::new())
    }

    pub fn direct_sum(parts: &[&FgGroup]) -> Self {
        let rels: Vec<&IntMatrix> = parts.iter().map(|g| g.relations()).collect();
        let mut labels = Vec::new();
        for (k, g) in parts.iter().enumerate() {
            for l in g.labels() {
                labels.push(if parts.len() > 1 { format!("{l}.{k}") } else { l.clone() });
            }
        }
        Self::build(IntMatrix::block_diagonal(&rels), labels)
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.generators() {
            return Err(Error::Shape(format!(
                "{} labels for {} generators",
                labels.len(),
                self.generators()
            )));
        }
        Ok(Self::build(self.relations().clone(), labels))
    }

    pub fn generators(&self) -> usize {
        self.0.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.0.relations
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn free_rank(&self) -> usize {
        self.0.moduli.iter().filter(|d| d.is_zero()).count()
    }

    /// Invariant factors `d_i >= 2` with `d_i | d_{i+1}`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.0.moduli.iter().filter(|d| !d.is_zero()).cloned().collect()
    }

    /// Moduli of the canonical summands, torsion first; zero marks `Z`.
    pub fn summand_moduli(&self) -> &[BigInt] {
        &self.0.moduli
    }

    pub fn summand_count(&self) -> usize {
        self.0.summands.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.summands.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    pub fn is_torsion_free(&self) -> bool {
        self.0.moduli.iter().all(Zero::is_zero)
    }

    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.0.moduli.iter().fold(BigInt::one(), |acc, d| acc * d))
    }

    /// Same isomorphism class.
    pub fn isomorphic(&self, other: &FgGroup) -> bool {
        self.0.moduli == other.0.moduli
    }

    /// Both presentations use the same generators subject to the same
    /// relation lattice, so morphism matrices can be shared between them.
    pub fn same_presentation(&self, other: &FgGroup) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        if self.generators() != other.generators() {
            return false;
        }
        if self.relations() == other.relations() {
            return true;
        }
        other.relations().columns().iter().all(|c| self.is_zero_element(c))
            && self.relations().columns().iter().all(|c| other.is_zero_element(c))
    }

    /// Coordinates of `x` in the canonical decomposition, each reduced into
    /// `[0, d)` for torsion summands.
    pub fn canonical_coords(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.generators(), "element has wrong length");
        let c = self.0.snf.u.mul_vec(x);
        self.0
            .summands
            .iter()
            .zip(&self.0.moduli)
            .map(|(&i, d)| if d.is_zero() { c[i].clone() } else { c[i].mod_floor(d) })
            .collect()
    }

    pub fn is_zero_element(&self, x: &[BigInt]) -> bool {
        let c = self.0.snf.u.mul_vec(x);
        c.iter().enumerate().all(|(i, ci)| {
            if i < self.0.snf.rank() {
                ci.is_multiple_of(self.0.snf.d.get(i, i))
            } else {
                ci.is_zero()
            }
        })
    }

    pub fn elements_equal(&self, x: &[BigInt], y: &[BigInt]) -> bool {
        let diff: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.is_zero_element(&diff)
    }

    /// Element (in generator coordinates) of the `k`-th canonical summand
    /// generator.
    pub fn summand_generator(&self, k: usize) -> Vec<BigInt> {
        self.0.snf.u_inv.col(self.0.summands[k])
    }

    /// Element with the given canonical coordinates.
    pub fn element_from_coords(&self, coords: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(coords.len(), self.summand_count());
        self.from_canonical_matrix().mul_vec(coords)
    }

    /// Matrix sending generator coordinates to canonical coordinates
    /// (before reduction).
    pub fn to_canonical_matrix(&self) -> IntMatrix {
        self.0.snf.u.select_rows(self.0.summands.iter().copied())
    }

    /// Matrix whose columns are the canonical summand generators.
    pub fn from_canonical_matrix(&self) -> IntMatrix {
        self.0.snf.u_inv.select_cols(self.0.summands.iter().copied())
    }

    /// Canonical presentation: one generator per summand, diagonal relations.
    pub fn canonical(&self) -> FgGroup {
        Self::from_moduli(&self.0.moduli)
    }

    /// Enumerates all elements in generator coordinates, in lexicographic
    /// order of canonical coordinates. Fails for infinite groups or groups
    /// larger than `limit`.
    pub fn elements(&self, limit: usize) -> Result<Vec<Vec<BigInt>>> {
        let order = self.order().ok_or_else(|| {
            Error::Unsupported(format!("cannot enumerate the infinite group {self}"))
        })?;
        if order > BigInt::from(limit) {
            return Err(Error::Resource {
                what: format!("enumeration of {self}"),
                size: order.to_string(),
                limit,
            });
        }
        let moduli: Vec<u64> = self.0.moduli.iter().map(|d| d.to_u64().unwrap()).collect();
        let mut out = Vec::new();
        let mut coords = vec![0u64; moduli.len()];
        loop {
            let big: Vec<BigInt> = coords.iter().map(|&c| BigInt::from(c)).collect();
            out.push(self.element_from_coords(&big));
            let mut k = moduli.len();
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                coords[k] += 1;
                if coords[k] < moduli[k] {
                    break;
                }
                coords[k] = 0;
            }
        }
    }

    /// Cokernel-style quotient by extra relations; generators are kept.
    pub fn quotient(&self, extra: &IntMatrix) -> Result<FgGroup> {
        if extra.rows() != self.generators() {
            return Err(Error::Shape("extra relations have wrong length".into()));
        }
        Ok(Self::build(self.relations().hstack(extra), self.labels().to_vec()))
    }

    /// Generators of the torsion subgroup, or of its `p`-primary part.
    pub(crate) fn torsion_generators(&self, prime: Option<u64>) -> IntMatrix {
        let mut cols = Vec::new();
        for (k, d) in self.0.moduli.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let g = self.summand_generator(k);
            match prime {
                None => cols.push(g),
                Some(p) => {
                    let p = BigInt::from(p);
                    let mut m = d.clone();
                    while m.is_multiple_of(&p) {
                        m /= &p;
                    }
                    if &m != d {
                        cols.push(g.iter().map(|x| x * &m).collect());
                    }
                }
            }
        }
        IntMatrix::from_cols(self.generators(), &cols)
    }

    pub fn describe(&self) -> String {
        if self.is_trivial() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = self
            .invariant_factors()
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        match self.free_rank() {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.join(" + ")
    }
}

impl fmt::Display for FgGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl fmt::Debug for FgGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FgGroup({} on {} gens, rels {})",
            self.describe(),
            self.generators(),
            self.relations()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn canonical_examples() {
        let g = FgGroup::from_presentation(2, IntMatrix::zeros(2, 0)).unwrap();
        assert_eq!(g.free_rank(), 2);
        assert!(g.invariant_factors().is_empty());

        let g = FgGroup::from_presentation(2, IntMatrix::from_rows(&[[2, 0], [0, 0]])).unwrap();
        assert_eq!(g.free_rank(), 1);
        assert_eq!(g.invariant_factors(), big(&[2]));

        let g = FgGroup::from_presentation(2, IntMatrix::from_rows(&[[4, 2], [0, 2]])).unwrap();
        assert_eq!(g.free_rank(), 0);
        assert_eq!(g.invariant_factors(), big(&[2, 4]));
        assert_eq!(g.describe(), "Z/2 + Z/4");
    }

    #[test]
    fn canonical_form_matches_presentation_snf() {
        let rel = IntMatrix::from_rows(&[[6, 4, 0], [2, 8, 10], [0, 0, 0]]);
        let g = FgGroup::from_presentation(3, rel.clone()).unwrap();
        let snf = smith_normal_form(&rel);
        let nontrivial: Vec<BigInt> = snf.diagonal().into_iter().filter(|d| d > &BigInt::one()).collect();
        assert_eq!(g.invariant_factors(), nontrivial);
        assert_eq!(g.free_rank(), 3 - snf.rank());
    }

    #[test]
    fn zero_elements_and_coords() {
        let g = FgGroup::cyclic(6);
        assert!(g.is_zero_element(&big(&[12])));
        assert!(!g.is_zero_element(&big(&[4])));
        assert_eq!(g.canonical_coords(&big(&[-1])), big(&[5]));
        assert_eq!(g.elements(100).unwrap().len(), 6);
        assert!(FgGroup::integers().elements(100).is_err());
    }

    #[test]
    fn trivial_groups() {
        assert!(FgGroup::cyclic(1).is_trivial());
        assert!(FgGroup::zero().is_trivial());
        assert_eq!(FgGroup::zero().order(), Some(BigInt::one()));
        assert_eq!(FgGroup::zero().elements(10).unwrap(), vec![Vec::<BigInt>::new()]);
    }

    #[test]
    fn presentation_lattice_comparison() {
        let a = FgGroup::from_presentation(1, IntMatrix::from_rows(&[[4, 6]])).unwrap();
        let b = FgGroup::cyclic(2);
        assert!(a.same_presentation(&b));
        assert!(!b.same_presentation(&FgGroup::cyclic(4)));
    }

    #[test]
    fn torsion_parts() {
        let g = FgGroup::from_moduli(&big(&[12, 0]));
        let all = g.quotient(&g.torsion_generators(None)).unwrap();
        assert_eq!(all.describe(), "Z");
        let two = g.quotient(&g.torsion_generators(Some(2))).unwrap();
        assert_eq!(two.describe(), "Z/3 + Z");
    }
}
