use num_bigint::BigInt;
use num_traits::Zero;

use super::{FgGroup, Morphism};
use crate::error::{Error, Result};
use crate::intlinalg::{kernel_generators, smith_normal_form, solve_with, IntMatrix, SnfDecomposition};

/// Default bound on the number of matrix entries a hom object may have.
pub const DEFAULT_MAX_HOM_SIZE: usize = 10_000;

/// The internal hom `Hom(G, H)` together with the data needed to move
/// between its elements and morphisms `G -> H`.
///
/// The hom group is in canonical presentation; generator `k` corresponds to
/// the morphism with matrix `generator_matrices[k]`.
#[derive(Clone, Debug)]
pub struct HomStructure {
    source: FgGroup,
    target: FgGroup,
    group: FgGroup,
    generator_matrices: Vec<IntMatrix>,
    // Columns are flattened (row-major) well-defined matrices spanning all
    // morphisms; `raw` presents the group on those spanning columns.
    span: IntMatrix,
    raw: FgGroup,
    solver: SnfDecomposition,
}

fn flatten(m: &IntMatrix) -> Vec<BigInt> {
    m.entries().to_vec()
}

fn unflatten(rows: usize, cols: usize, v: &[BigInt]) -> IntMatrix {
    IntMatrix::from_vec(rows, cols, v.to_vec())
}

impl HomStructure {
    /// Solves `F · A = B · S` for all integer `F` (the well-defined
    /// matrices), then quotients by the matrices whose columns already lie
    /// in the target relation lattice.
    pub fn new(source: &FgGroup, target: &FgGroup, max_size: usize) -> Result<Self> {
        let ng = source.generators();
        let nh = target.generators();
        let size = ng * nh;
        if size > max_size {
            return Err(Error::Resource {
                what: format!("Hom({source}, {target})"),
                size: size.to_string(),
                limit: max_size,
            });
        }
        let a = source.relations();
        let b = target.relations();
        let ma = a.cols();

        // vec(F A) = (I_nh ⊗ Aᵀ) vec(F), vec(B S) = (B ⊗ I_ma) vec(S)
        let lhs = IntMatrix::identity(nh).kron(&a.transpose());
        let rhs = b.kron(&IntMatrix::identity(ma));
        let system = lhs.hstack(&-&rhs);
        let span = kernel_generators(&system)
            .select_rows(0..size)
            .without_zero_cols();

        // zero morphisms: every column of F in the lattice of B
        let zeros = b.kron(&IntMatrix::identity(ng));
        let k = span.cols();
        let rel = kernel_generators(&span.hstack(&-&zeros)).select_rows(0..k);
        let raw = FgGroup::build(rel, (0..k).map(|i| format!("w{i}")).collect());
        let group = raw
            .canonical()
            .with_labels((0..raw.summand_count()).map(|i| format!("h{i}")).collect())?;
        let from = raw.from_canonical_matrix();
        let generator_matrices = (0..from.cols())
            .map(|s| unflatten(nh, ng, &span.mul_vec(&from.col(s))))
            .collect();
        let solver = smith_normal_form(&span.hstack(&zeros));
        Ok(HomStructure {
            source: source.clone(),
            target: target.clone(),
            group,
            generator_matrices,
            span,
            raw,
            solver,
        })
    }

    pub fn source(&self) -> &FgGroup {
        &self.source
    }

    pub fn target(&self) -> &FgGroup {
        &self.target
    }

    pub fn group(&self) -> &FgGroup {
        &self.group
    }

    pub fn generator_matrices(&self) -> &[IntMatrix] {
        &self.generator_matrices
    }

    pub fn generator_morphism(&self, k: usize) -> Morphism {
        Morphism::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            self.generator_matrices[k].clone(),
        )
    }

    /// Canonical coordinates of a well-defined matrix `G -> H` in the hom
    /// group.
    pub fn decompose(&self, m: &IntMatrix) -> Result<Vec<BigInt>> {
        if m.shape() != (self.target.generators(), self.source.generators()) {
            return Err(Error::Shape(format!(
                "matrix {}x{} is not a map {} -> {}",
                m.rows(),
                m.cols(),
                self.source,
                self.target
            )));
        }
        let x = solve_with(&self.solver, &flatten(m)).ok_or_else(|| {
            Error::Internal(format!("matrix {m} is not a well-defined map {} -> {}", self.source, self.target))
        })?;
        Ok(self.raw.canonical_coords(&x[..self.span.cols()]))
    }

    /// Matrix of the morphism with the given hom-group coordinates.
    pub fn recombine(&self, coords: &[BigInt]) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.target.generators(), self.source.generators());
        for (c, g) in coords.iter().zip(&self.generator_matrices) {
            if !c.is_zero() {
                m = &m + &g.scale(c);
            }
        }
        m
    }

    pub fn morphism_from_coords(&self, coords: &[BigInt]) -> Morphism {
        Morphism::new_unchecked(self.source.clone(), self.target.clone(), self.recombine(coords))
    }
}

/// `G ⊗ H` on generators `e_i ⊗ f_j`, ordered lexicographically.
pub fn tensor(g: &FgGroup, h: &FgGroup) -> FgGroup {
    let a = g.relations();
    let b = h.relations();
    let rel = a
        .kron(&IntMatrix::identity(h.generators()))
        .hstack(&IntMatrix::identity(g.generators()).kron(b));
    let wrap = |s: &String| if s.contains('⊗') { format!("({s})") } else { s.clone() };
    let mut labels = Vec::with_capacity(g.generators() * h.generators());
    for x in g.labels() {
        for y in h.labels() {
            labels.push(format!("{}⊗{}", wrap(x), wrap(y)));
        }
    }
    FgGroup::build(rel, labels)
}

pub fn tensor_mor(f: &Morphism, g: &Morphism) -> Morphism {
    Morphism::new_unchecked(
        tensor(f.source(), g.source()),
        tensor(f.target(), g.target()),
        f.matrix().kron(g.matrix()),
    )
}

/// `λ_G: Z ⊗ G -> G`, which is the identity on generators.
pub fn left_unitor(g: &FgGroup) -> Morphism {
    Morphism::new_unchecked(
        tensor(&FgGroup::integers(), g),
        g.clone(),
        IntMatrix::identity(g.generators()),
    )
}

/// `ρ_G: G ⊗ Z -> G`.
pub fn right_unitor(g: &FgGroup) -> Morphism {
    Morphism::new_unchecked(
        tensor(g, &FgGroup::integers()),
        g.clone(),
        IntMatrix::identity(g.generators()),
    )
}

/// `σ_{G,H}: e_i ⊗ f_j ↦ f_j ⊗ e_i`.
pub fn braiding(g: &FgGroup, h: &FgGroup) -> Morphism {
    let (ng, nh) = (g.generators(), h.generators());
    let mut m = IntMatrix::zeros(ng * nh, ng * nh);
    for i in 0..ng {
        for j in 0..nh {
            m.set(j * ng + i, i * nh + j, BigInt::from(1));
        }
    }
    Morphism::new_unchecked(tensor(g, h), tensor(h, g), m)
}

/// `(G ⊗ H) ⊗ K -> G ⊗ (H ⊗ K)`; both sides share the generator order.
pub fn associator(g: &FgGroup, h: &FgGroup, k: &FgGroup) -> Morphism {
    let n = g.generators() * h.generators() * k.generators();
    Morphism::new_unchecked(
        tensor(&tensor(g, h), k),
        tensor(g, &tensor(h, k)),
        IntMatrix::identity(n),
    )
}

/// `Hom(pre, post): Hom(X, Y) -> Hom(X', Y')` for `pre: X' -> X` and
/// `post: Y -> Y'`, acting by `φ ↦ post ∘ φ ∘ pre`.
pub fn hom_mor(from: &HomStructure, to: &HomStructure, pre: &Morphism, post: &Morphism) -> Result<Morphism> {
    if !pre.target().same_presentation(from.source())
        || !post.source().same_presentation(from.target())
        || !pre.source().same_presentation(to.source())
        || !post.target().same_presentation(to.target())
    {
        return Err(Error::Shape("hom_mor arguments do not match the hom objects".into()));
    }
    let cols = from
        .generator_matrices()
        .iter()
        .map(|phi| to.decompose(&(&(post.matrix() * phi) * pre.matrix())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Morphism::new_unchecked(
        from.group().clone(),
        to.group().clone(),
        IntMatrix::from_cols(to.group().generators(), &cols),
    ))
}

/// `curry(f: G ⊗ H -> K) : G -> Hom(H, K)`.
pub fn curry(f: &Morphism, g: &FgGroup, hk: &HomStructure) -> Result<Morphism> {
    let nh = hk.source().generators();
    let ng = g.generators();
    if f.source().generators() != ng * nh || !f.target().same_presentation(hk.target()) {
        return Err(Error::Shape("curry: morphism is not G ⊗ H -> K".into()));
    }
    let cols = (0..ng)
        .map(|i| hk.decompose(&f.matrix().select_cols(i * nh..(i + 1) * nh)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Morphism::new_unchecked(
        g.clone(),
        hk.group().clone(),
        IntMatrix::from_cols(hk.group().generators(), &cols),
    ))
}

/// Inverse of [`curry`].
pub fn uncurry(phi: &Morphism, hk: &HomStructure) -> Result<Morphism> {
    if !phi.target().same_presentation(hk.group()) {
        return Err(Error::Shape("uncurry: morphism does not land in the hom group".into()));
    }
    let g = phi.source();
    let (nh, nk) = (hk.source().generators(), hk.target().generators());
    let mut m = IntMatrix::zeros(nk, g.generators() * nh);
    for i in 0..g.generators() {
        let block = hk.recombine(&phi.matrix().col(i));
        for r in 0..nk {
            for j in 0..nh {
                m.set(r, i * nh + j, block.get(r, j).clone());
            }
        }
    }
    Morphism::new(tensor(g, hk.source()), hk.target().clone(), m)
}
