//! The arithmetic stratum: finite direct sums of the atoms `Z[S⁻¹]` (for a
//! finite set of primes `S`) and `Z/pᵏ`, with tensor and hom computed by
//! closed-form tables.
//!
//! Every atom is a ring with generator `1`, and a map between atoms is
//! multiplication by the image of `1`. Morphisms are therefore rational
//! matrices, one entry per pair of atoms, reduced into the target atom:
//! exact rationals for `Z[S⁻¹]` targets, residues in `[0, pᵏ)` for cyclic
//! ones. Objects keep their atom order; [`ArithGroup::normal_form`] sorts.

mod ratmat;
mod ring;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

pub use ring::{
    solid_ring_catalog, torsion_free_solid_check, ArithRing, RingFamily, TorsionFreeCheck,
};

use crate::category::ClosedMonoidal;
use crate::error::{Error, Result};
use crate::fgab::{FgGroup, Morphism};
use crate::intlinalg::IntMatrix;
use ratmat::RatMat;

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division.
pub(crate) fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut k = 0;
        while n.is_multiple_of(d) {
            n /= d;
            k += 1;
        }
        if k > 0 {
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// An indecomposable summand.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    /// `Z[S⁻¹]`; the empty set gives `Z`.
    Local(BTreeSet<u64>),
    /// `Z/pᵏ` with `k ≥ 1`.
    Cyclic { p: u64, k: u32 },
}

impl Atom {
    pub fn integers() -> Atom {
        Atom::Local(BTreeSet::new())
    }

    pub fn local(primes: impl IntoIterator<Item = u64>) -> Result<Atom> {
        let s: BTreeSet<u64> = primes.into_iter().collect();
        if let Some(p) = s.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::Input(format!("{p} is not a prime")));
        }
        Ok(Atom::Local(s))
    }

    pub fn cyclic(p: u64, k: u32) -> Result<Atom> {
        if !is_prime(p) || k == 0 {
            return Err(Error::Input(format!("Z/{p}^{k} is not a cyclic prime-power atom")));
        }
        Ok(Atom::Cyclic { p, k })
    }

    pub fn is_local(&self) -> bool {
        matches!(self, Atom::Local(_))
    }

    /// `pᵏ` for a cyclic atom.
    pub fn modulus(&self) -> Option<BigInt> {
        match self {
            Atom::Local(_) => None,
            Atom::Cyclic { p, k } => Some(BigInt::from(*p).pow(*k)),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Atom::Local(s) if s.is_empty() => "Z".into(),
            Atom::Local(s) => format!("Z[1/{}]", s.iter().product::<u64>()),
            Atom::Cyclic { p, k: 1 } => format!("Z/{p}"),
            Atom::Cyclic { p, k } => format!("Z/{}", BigInt::from(*p).pow(*k)),
        }
    }
}

/// `a ⊗ b`, or `None` when it vanishes.
pub fn tensor_atom(a: &Atom, b: &Atom) -> Option<Atom> {
    match (a, b) {
        (Atom::Local(s), Atom::Local(t)) => Some(Atom::Local(s.union(t).copied().collect())),
        (Atom::Local(s), c @ Atom::Cyclic { p, .. }) | (c @ Atom::Cyclic { p, .. }, Atom::Local(s)) => {
            (!s.contains(p)).then(|| c.clone())
        }
        (Atom::Cyclic { p, k }, Atom::Cyclic { p: q, k: m }) => {
            (p == q).then(|| Atom::Cyclic { p: *p, k: (*k).min(*m) })
        }
    }
}

/// `Hom(a, b)` together with the image of `1` under its generator, or
/// `None` when it vanishes.
pub fn hom_atom(a: &Atom, b: &Atom) -> Option<(Atom, BigInt)> {
    match (a, b) {
        (Atom::Local(s), Atom::Local(t)) => s.is_subset(t).then(|| (b.clone(), BigInt::one())),
        (Atom::Local(s), Atom::Cyclic { p, .. }) => (!s.contains(p)).then(|| (b.clone(), BigInt::one())),
        (Atom::Cyclic { .. }, Atom::Local(_)) => None,
        (Atom::Cyclic { p, k }, Atom::Cyclic { p: q, k: m }) => (p == q).then(|| {
            let scale = BigInt::from(*p).pow(m.saturating_sub(*k));
            (Atom::Cyclic { p: *p, k: (*k).min(*m) }, scale)
        }),
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(m);
    g.gcd.is_one().then(|| g.x.mod_floor(m))
}

/// `x` as an element of `atom` (that is, of `Hom(Z, atom)`), reduced.
fn reduce_into(x: &BigRational, atom: &Atom) -> Option<BigRational> {
    match atom {
        Atom::Local(t) => {
            let mut d = x.denom().abs();
            for &p in t {
                let p = BigInt::from(p);
                while d.is_multiple_of(&p) {
                    d /= &p;
                }
            }
            d.is_one().then(|| x.clone())
        }
        Atom::Cyclic { .. } => {
            let m = atom.modulus().unwrap();
            let inv = mod_inverse(&x.denom().mod_floor(&m), &m)?;
            Some(BigRational::from_integer((x.numer() * inv).mod_floor(&m)))
        }
    }
}

/// `x` as the image of `1` under a map `from -> to`, reduced; `None` if no
/// such map exists.
fn hom_entry(x: &BigRational, from: &Atom, to: &Atom) -> Option<BigRational> {
    if x.is_zero() {
        return Some(BigRational::zero());
    }
    match (from, to) {
        (Atom::Local(s), Atom::Local(t)) => {
            if s.is_subset(t) {
                reduce_into(x, to)
            } else {
                None
            }
        }
        (Atom::Local(s), Atom::Cyclic { p, .. }) => {
            let r = reduce_into(x, to)?;
            (r.is_zero() || !s.contains(p)).then_some(r)
        }
        (Atom::Cyclic { .. }, Atom::Local(_)) => None,
        (Atom::Cyclic { p, k }, Atom::Cyclic { p: q, .. }) => {
            let r = reduce_into(x, to)?;
            if r.is_zero() {
                return Some(r);
            }
            let killed = BigInt::from(*p).pow(*k) * r.numer();
            (p == q && killed.is_multiple_of(&to.modulus().unwrap())).then_some(r)
        }
    }
}

/// A finite direct sum of atoms, in a fixed order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArithGroup {
    atoms: Vec<Atom>,
}

impl ArithGroup {
    pub fn new(atoms: Vec<Atom>) -> Self {
        ArithGroup { atoms }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn integers() -> Self {
        Self::new(vec![Atom::integers()])
    }

    /// `Z[S⁻¹]`.
    pub fn local(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        Ok(Self::new(vec![Atom::local(primes)?]))
    }

    /// `Z/n` split into its primary parts; `n = 0` gives `Z`.
    pub fn cyclic(n: u64) -> Self {
        if n == 0 {
            return Self::integers();
        }
        Self::new(
            factor(n)
                .into_iter()
                .map(|(p, k)| Atom::Cyclic { p, k })
                .collect(),
        )
    }

    pub fn direct_sum(parts: &[&ArithGroup]) -> Self {
        Self::new(parts.iter().flat_map(|g| g.atoms.iter().cloned()).collect())
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Atoms sorted; two groups are isomorphic exactly when their normal
    /// forms agree.
    pub fn normal_form(&self) -> ArithGroup {
        let mut atoms = self.atoms.clone();
        atoms.sort();
        Self::new(atoms)
    }

    pub fn is_zero(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.atoms.iter().all(Atom::is_local)
    }

    pub fn is_finite(&self) -> bool {
        !self.atoms.iter().any(Atom::is_local)
    }

    pub fn order(&self) -> Option<BigInt> {
        self.atoms.iter().map(Atom::modulus).product()
    }

    /// The same group as an fgab object, when no atom inverts a prime.
    /// Generator `i` is atom `i`.
    pub fn to_fgab(&self) -> Option<FgGroup> {
        let moduli = self
            .atoms
            .iter()
            .map(|a| match a {
                Atom::Local(s) if s.is_empty() => Some(BigInt::zero()),
                Atom::Local(_) => None,
                c => c.modulus(),
            })
            .collect::<Option<Vec<_>>>()?;
        Some(FgGroup::from_moduli(&moduli))
    }

    pub fn describe(&self) -> String {
        if self.atoms.is_empty() {
            return "0".into();
        }
        self.atoms
            .iter()
            .map(Atom::describe)
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn local_indices(&self) -> Vec<usize> {
        (0..self.atoms.len()).filter(|&i| self.atoms[i].is_local()).collect()
    }

    fn cyclic_indices(&self) -> Vec<usize> {
        (0..self.atoms.len()).filter(|&i| !self.atoms[i].is_local()).collect()
    }

    /// Torsion part as an fgab group, generator `k` being cyclic atom `k`.
    fn torsion_fgab(&self) -> FgGroup {
        let moduli: Vec<BigInt> = self
            .cyclic_indices()
            .iter()
            .map(|&i| self.atoms[i].modulus().unwrap())
            .collect();
        FgGroup::from_moduli(&moduli)
    }
}

impl fmt::Display for ArithGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl fmt::Debug for ArithGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Nonzero atoms of `x ⊗ y`, lexicographic in `(i, j)`.
fn tensor_index(x: &ArithGroup, y: &ArithGroup) -> Vec<(usize, usize, Atom)> {
    let mut out = Vec::new();
    for (i, a) in x.atoms.iter().enumerate() {
        for (j, b) in y.atoms.iter().enumerate() {
            if let Some(t) = tensor_atom(a, b) {
                out.push((i, j, t));
            }
        }
    }
    out
}

/// Nonzero atoms of `Hom(x, y)`, ordered by target atom `j`, then source
/// atom `i`, with the scale of each generator.
fn hom_index(x: &ArithGroup, y: &ArithGroup) -> Vec<(usize, usize, Atom, BigInt)> {
    let mut out = Vec::new();
    for (j, b) in y.atoms.iter().enumerate() {
        for (i, a) in x.atoms.iter().enumerate() {
            if let Some((h, scale)) = hom_atom(a, b) {
                out.push((j, i, h, scale));
            }
        }
    }
    out
}

/// `x ⊗ y`.
pub fn tensor_arith(x: &ArithGroup, y: &ArithGroup) -> ArithGroup {
    ArithGroup::new(tensor_index(x, y).into_iter().map(|(_, _, a)| a).collect())
}

/// The internal hom `Hom(x, y)`.
pub fn hom_arith(x: &ArithGroup, y: &ArithGroup) -> ArithGroup {
    ArithGroup::new(hom_index(x, y).into_iter().map(|(_, _, a, _)| a).collect())
}

/// A map between arithmetic groups: entry `(j, i)` is the image of `1` of
/// source atom `i` in target atom `j`.
#[derive(Clone)]
pub struct ArithMor {
    source: ArithGroup,
    target: ArithGroup,
    matrix: RatMat,
}

impl ArithMor {
    /// Checks shape and that every entry defines a map between its atoms.
    pub fn new(source: ArithGroup, target: ArithGroup, matrix: Vec<Vec<BigRational>>) -> Result<Self> {
        let (n, m) = (target.atoms.len(), source.atoms.len());
        if matrix.len() != n || matrix.iter().any(|r| r.len() != m) {
            return Err(Error::Shape(format!(
                "matrix shape does not match {} -> {}",
                source, target
            )));
        }
        let mut out = matrix;
        for (j, row) in out.iter_mut().enumerate() {
            for (i, x) in row.iter_mut().enumerate() {
                *x = hom_entry(x, &source.atoms[i], &target.atoms[j]).ok_or_else(|| {
                    Error::Input(format!(
                        "{x} does not define a map {} -> {}",
                        source.atoms[i].describe(),
                        target.atoms[j].describe()
                    ))
                })?;
            }
        }
        Ok(ArithMor {
            source,
            target,
            matrix: out,
        })
    }

    pub fn from_integers(source: ArithGroup, target: ArithGroup, rows: &[Vec<i64>]) -> Result<Self> {
        let m = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
            .collect();
        Self::new(source, target, m)
    }

    fn internal(source: ArithGroup, target: ArithGroup, matrix: RatMat) -> Result<Self> {
        Self::new(source, target, matrix)
            .map_err(|e| Error::Internal(format!("computed matrix is not a morphism: {e}")))
    }

    pub fn identity(x: &ArithGroup) -> Self {
        let n = x.atoms.len();
        let mut m = ratmat::zeros(n, n);
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = BigRational::one();
        }
        ArithMor {
            source: x.clone(),
            target: x.clone(),
            matrix: m,
        }
    }

    pub fn source(&self) -> &ArithGroup {
        &self.source
    }

    pub fn target(&self) -> &ArithGroup {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<BigRational>] {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(Zero::is_zero)
    }

    fn block(&self, rows: &[usize], cols: &[usize]) -> RatMat {
        rows.iter()
            .map(|&r| cols.iter().map(|&c| self.matrix[r][c].clone()).collect())
            .collect()
    }

    /// The torsion-to-torsion block as an fgab morphism.
    fn torsion_block(&self) -> Morphism {
        let rows = self.target.cyclic_indices();
        let cols = self.source.cyclic_indices();
        let m = IntMatrix::from_cols(
            rows.len(),
            &cols
                .iter()
                .map(|&c| rows.iter().map(|&r| self.matrix[r][c].to_integer()).collect())
                .collect::<Vec<_>>(),
        );
        Morphism::new_unchecked(self.source.torsion_fgab(), self.target.torsion_fgab(), m)
    }

    /// As an fgab morphism, when both ends are finitely generated.
    pub fn to_fgab(&self) -> Option<Morphism> {
        let s = self.source.to_fgab()?;
        let t = self.target.to_fgab()?;
        let cols: Vec<Vec<BigInt>> = (0..self.source.atoms.len())
            .map(|c| self.matrix.iter().map(|r| r[c].to_integer()).collect())
            .collect();
        Some(Morphism::new_unchecked(s, t, IntMatrix::from_cols(self.target.atoms.len(), &cols)))
    }
}

fn int_to_rat(m: &IntMatrix) -> RatMat {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect()
}

impl fmt::Debug for ArithMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} by {}", self.source, self.target, format_matrix(&self.matrix))
    }
}

fn format_matrix(m: &RatMat) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}

/// Decomposes the fgab group `k` (in canonical presentation) into atoms,
/// returning them with the matrix sending each atom generator into `k`.
/// Kernel of `f - g` when source and target are sums of `Z[S⁻¹]` and the
/// kernel has rational rank at most one. A primitive integer vector `v`
/// spans it over `Q`; `t·v` lies in the source exactly when `t` lies in
/// `(1/N)·Z[T⁻¹]`, `T` being the primes inverted in every coordinate where
/// `v` is nonzero, and `N` collecting the other primes at the smallest
/// valuation they reach in a coordinate that does not invert them.
fn torsion_free_kernel(f: &ArithMor, g: &ArithMor) -> Result<Option<(ArithGroup, ArithMor)>> {
    let all_local = |x: &ArithGroup| x.atoms.iter().all(Atom::is_local);
    if !all_local(&f.source) || !all_local(&f.target) {
        return Ok(None);
    }
    let n = f.source.atoms.len();
    let diff: RatMat = f
        .matrix
        .iter()
        .zip(&g.matrix)
        .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
        .collect();
    let basis = ratmat::nullspace(&diff, n);
    let v = match basis.as_slice() {
        [] => {
            let zero = ArithGroup::zero();
            return Ok(Some((zero.clone(), ArithMor::internal(zero, f.source.clone(), ratmat::zeros(n, 0))?)));
        }
        [v] => v,
        _ => return Ok(None),
    };
    let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |c, x| c.gcd(x));
    let ints: Vec<BigInt> = ints.iter().map(|x| x / &content).collect();
    let local_set = |i: usize| match &f.source.atoms[i] {
        Atom::Local(s) => s.clone(),
        Atom::Cyclic { .. } => unreachable!("source is torsion-free"),
    };
    let support: Vec<usize> = (0..n).filter(|&i| !ints[i].is_zero()).collect();
    let t: BTreeSet<u64> = support
        .iter()
        .map(|&i| local_set(i))
        .reduce(|a, b| a.intersection(&b).copied().collect())
        .unwrap_or_default();
    let mut primes = BTreeSet::new();
    for &i in &support {
        let Some(m) = ints[i].abs().to_u64() else {
            return Ok(None);
        };
        primes.extend(factor(m).into_iter().map(|(q, _)| q));
    }
    let mut big_n = BigInt::one();
    for q in primes.into_iter().filter(|q| !t.contains(q)) {
        let valuation = |x: &BigInt| {
            let (mut x, mut k) = (x.clone(), 0u32);
            while x.is_multiple_of(&BigInt::from(q)) {
                x /= q;
                k += 1;
            }
            k
        };
        let b = support
            .iter()
            .filter(|&&i| !local_set(i).contains(&q))
            .map(|&i| valuation(&ints[i]))
            .min()
            .unwrap_or(0);
        big_n *= BigInt::from(q).pow(b);
    }
    let column: RatMat = ints.iter().map(|x| vec![BigRational::new(x.clone(), big_n.clone())]).collect();
    let k = ArithGroup::new(vec![Atom::Local(t)]);
    Ok(Some((k.clone(), ArithMor::internal(k, f.source.clone(), column)?)))
}

fn atoms_of_canonical(k: &FgGroup) -> (ArithGroup, IntMatrix) {
    let mut atoms = Vec::new();
    let mut cols = Vec::new();
    let n = k.generators();
    for (s, d) in k.summand_moduli().iter().enumerate() {
        let mut e = vec![BigInt::zero(); n];
        if d.is_zero() {
            e[s] = BigInt::one();
            atoms.push(Atom::integers());
            cols.push(e);
            continue;
        }
        let d64 = d.to_u64().expect("small modulus");
        for (p, a) in factor(d64) {
            let q = BigInt::from(p).pow(a);
            let mut e = e.clone();
            e[s] = d / &q;
            atoms.push(Atom::Cyclic { p, k: a });
            cols.push(e);
        }
    }
    (ArithGroup::new(atoms), IntMatrix::from_cols(n, &cols))
}

/// The arithmetic stratum as a closed symmetric monoidal category.
#[derive(Clone, Copy, Debug, Default)]
pub struct Arith;

impl Arith {
    /// Hom-group coordinates of a map `x -> y`.
    pub fn coords(&self, f: &ArithMor) -> Result<Vec<BigRational>> {
        hom_index(&f.source, &f.target)
            .into_iter()
            .map(|(j, i, atom, scale)| {
                let y = &f.matrix[j][i];
                let c = y / BigRational::from_integer(scale.clone());
                if !c.is_integer() && !atom.is_local() {
                    return Err(Error::Internal(format!("{y} is not a multiple of {scale}")));
                }
                reduce_into(&c, &atom)
                    .ok_or_else(|| Error::Internal(format!("{c} does not lie in {}", atom.describe())))
            })
            .collect()
    }

    /// The map `x -> y` with the given hom-group coordinates.
    pub fn from_coords(&self, x: &ArithGroup, y: &ArithGroup, coords: &[BigRational]) -> Result<ArithMor> {
        let idx = hom_index(x, y);
        if idx.len() != coords.len() {
            return Err(Error::Shape("wrong number of hom coordinates".into()));
        }
        let mut m = ratmat::zeros(y.atoms.len(), x.atoms.len());
        for ((j, i, _, scale), c) in idx.into_iter().zip(coords) {
            m[j][i] = c * BigRational::from_integer(scale);
        }
        ArithMor::internal(x.clone(), y.clone(), m)
    }

    fn element(&self, x: &ArithGroup, v: Vec<BigRational>) -> Result<ArithMor> {
        ArithMor::internal(
            ArithGroup::integers(),
            x.clone(),
            v.into_iter().map(|c| vec![c]).collect(),
        )
    }

    fn check_composable(&self, g: &ArithMor, f: &ArithMor) -> Result<()> {
        if f.target != g.source {
            return Err(Error::Shape(format!(
                "cannot compose: {} does not match {}",
                f.target, g.source
            )));
        }
        Ok(())
    }
}

impl ClosedMonoidal for Arith {
    type Obj = ArithGroup;
    type Mor = ArithMor;

    fn label(&self) -> String {
        "arith".into()
    }

    fn unit(&self) -> ArithGroup {
        ArithGroup::integers()
    }

    fn source(&self, f: &ArithMor) -> ArithGroup {
        f.source.clone()
    }

    fn target(&self, f: &ArithMor) -> ArithGroup {
        f.target.clone()
    }

    fn identity(&self, x: &ArithGroup) -> ArithMor {
        ArithMor::identity(x)
    }

    fn compose(&self, g: &ArithMor, f: &ArithMor) -> Result<ArithMor> {
        self.check_composable(g, f)?;
        let m = ratmat::mul(&g.matrix, &f.matrix, f.target.atoms.len(), f.source.atoms.len());
        ArithMor::internal(f.source.clone(), g.target.clone(), m)
    }

    fn equal(&self, f: &ArithMor, g: &ArithMor) -> Result<bool> {
        if f.source != g.source || f.target != g.target {
            return Err(Error::Shape("morphisms are not parallel".into()));
        }
        Ok(f.matrix == g.matrix)
    }

    /// Block-triangular inversion: the torsion-free block must be invertible
    /// over `Q` with an inverse that is again a morphism, and the torsion
    /// block is inverted in fgab.
    fn inverse(&self, f: &ArithMor) -> Result<Option<ArithMor>> {
        let (sl, sc) = (f.source.local_indices(), f.source.cyclic_indices());
        let (tl, tc) = (f.target.local_indices(), f.target.cyclic_indices());
        if sl.len() != tl.len() {
            return Ok(None);
        }
        let Some(g_ll) = ratmat::invert(&f.block(&tl, &sl)) else {
            return Ok(None);
        };
        for (r, row) in g_ll.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                if hom_entry(x, &f.target.atoms[tl[c]], &f.source.atoms[sl[r]]).is_none() {
                    return Ok(None);
                }
            }
        }
        let Some(g_cc) = f.torsion_block().inverse() else {
            return Ok(None);
        };
        let g_cc = int_to_rat(g_cc.matrix());
        let f_cl = f.block(&tc, &sl);
        let tmp = ratmat::mul(&f_cl, &g_ll, sl.len(), tl.len());
        let g_cl = ratmat::mul(&g_cc, &tmp, tc.len(), tl.len());

        let mut m = ratmat::zeros(f.source.atoms.len(), f.target.atoms.len());
        for (r, &sr) in sl.iter().enumerate() {
            for (c, &tcol) in tl.iter().enumerate() {
                m[sr][tcol] = g_ll[r][c].clone();
            }
        }
        for (r, &sr) in sc.iter().enumerate() {
            for (c, &tcol) in tl.iter().enumerate() {
                m[sr][tcol] = -g_cl[r][c].clone();
            }
            for (c, &tcol) in tc.iter().enumerate() {
                m[sr][tcol] = g_cc[r][c].clone();
            }
        }
        let inv = ArithMor::internal(f.target.clone(), f.source.clone(), m)?;
        debug_assert!(self
            .equal(&self.compose(&inv, f)?, &ArithMor::identity(&f.source))
            .unwrap_or(false));
        Ok(Some(inv))
    }

    fn is_mono(&self, f: &ArithMor) -> Result<bool> {
        let sl = f.source.local_indices();
        let tl = f.target.local_indices();
        Ok(ratmat::full_column_rank(&f.block(&tl, &sl), sl.len()) && f.torsion_block().is_mono())
    }

    fn isomorphic(&self, x: &ArithGroup, y: &ArithGroup) -> Result<bool> {
        Ok(x.normal_form() == y.normal_form())
    }

    fn tensor(&self, x: &ArithGroup, y: &ArithGroup) -> ArithGroup {
        tensor_arith(x, y)
    }

    fn tensor_mor(&self, f: &ArithMor, g: &ArithMor) -> Result<ArithMor> {
        let src = tensor_index(&f.source, &g.source);
        let tgt = tensor_index(&f.target, &g.target);
        let m = tgt
            .iter()
            .map(|(i2, j2, _)| {
                src.iter()
                    .map(|(i, j, _)| &f.matrix[*i2][*i] * &g.matrix[*j2][*j])
                    .collect()
            })
            .collect();
        ArithMor::internal(tensor_arith(&f.source, &g.source), tensor_arith(&f.target, &g.target), m)
    }

    fn left_unitor(&self, x: &ArithGroup) -> ArithMor {
        let mut f = ArithMor::identity(x);
        f.source = tensor_arith(&ArithGroup::integers(), x);
        f
    }

    fn right_unitor(&self, x: &ArithGroup) -> ArithMor {
        let mut f = ArithMor::identity(x);
        f.source = tensor_arith(x, &ArithGroup::integers());
        f
    }

    fn associator(&self, x: &ArithGroup, y: &ArithGroup, z: &ArithGroup) -> ArithMor {
        let mut f = ArithMor::identity(&tensor_arith(&tensor_arith(x, y), z));
        f.target = tensor_arith(x, &tensor_arith(y, z));
        f
    }

    fn braiding(&self, x: &ArithGroup, y: &ArithGroup) -> ArithMor {
        let src = tensor_index(x, y);
        let tgt = tensor_index(y, x);
        let mut m = ratmat::zeros(tgt.len(), src.len());
        for (s, (i, j, _)) in src.iter().enumerate() {
            let t = tgt.iter().position(|(a, b, _)| a == j && b == i).expect("symmetric table");
            m[t][s] = BigRational::one();
        }
        ArithMor {
            source: tensor_arith(x, y),
            target: tensor_arith(y, x),
            matrix: m,
        }
    }

    fn hom(&self, x: &ArithGroup, y: &ArithGroup) -> Result<ArithGroup> {
        Ok(hom_arith(x, y))
    }

    fn hom_mor(&self, pre: &ArithMor, post: &ArithMor) -> Result<ArithMor> {
        let (x, y) = (&pre.target, &post.source);
        let (x2, y2) = (&pre.source, &post.target);
        let from = hom_index(x, y);
        let mut cols = Vec::with_capacity(from.len());
        for (j, i, _, scale) in &from {
            let mut e = ratmat::zeros(y.atoms.len(), x.atoms.len());
            e[*j][*i] = BigRational::from_integer(scale.clone());
            let e = ArithMor::internal(x.clone(), y.clone(), e)?;
            let image = self.compose(post, &self.compose(&e, pre)?)?;
            cols.push(self.coords(&image)?);
        }
        let rows = hom_index(x2, y2).len();
        let m = (0..rows)
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect();
        ArithMor::internal(hom_arith(x, y), hom_arith(x2, y2), m)
    }

    fn name(&self, f: &ArithMor) -> Result<ArithMor> {
        let h = hom_arith(&f.source, &f.target);
        self.element(&h, self.coords(f)?)
    }

    fn unname(&self, x: &ArithGroup, y: &ArithGroup, element: &ArithMor) -> Result<ArithMor> {
        if element.target != hom_arith(x, y) {
            return Err(Error::Shape("element does not name a morphism of this hom".into()));
        }
        let coords: Vec<BigRational> = element.matrix.iter().map(|r| r[0].clone()).collect();
        self.from_coords(x, y, &coords)
    }

    fn hom_unit_iso(&self, x: &ArithGroup) -> Result<ArithMor> {
        let mut f = ArithMor::identity(x);
        f.source = hom_arith(&ArithGroup::integers(), x);
        Ok(f)
    }

    /// Supported when the torsion-free block of `f` is injective; the
    /// torsion-free part of the preimage is then unique.
    fn lift(&self, f: &ArithMor, y: &ArithMor) -> Result<Option<ArithMor>> {
        if y.target != f.target {
            return Err(Error::Shape("lift: element does not live in the target".into()));
        }
        let (sl, sc) = (f.source.local_indices(), f.source.cyclic_indices());
        let (tl, tc) = (f.target.local_indices(), f.target.cyclic_indices());
        let yv: Vec<BigRational> = y.matrix.iter().map(|r| r[0].clone()).collect();
        let y_l: Vec<BigRational> = tl.iter().map(|&i| yv[i].clone()).collect();
        let x_l = match ratmat::solve(&f.block(&tl, &sl), sl.len(), &y_l) {
            Ok(Some(x)) => x,
            Ok(None) => return Ok(None),
            Err(()) => {
                return Err(Error::Unsupported(
                    "lifting along a map that is not injective on the torsion-free part".into(),
                ))
            }
        };
        let mut x = vec![BigRational::zero(); f.source.atoms.len()];
        for (k, &i) in sl.iter().enumerate() {
            match reduce_into(&x_l[k], &f.source.atoms[i]) {
                Some(v) => x[i] = v,
                None => return Ok(None),
            }
        }
        // remaining torsion equation f_CC x_C = y_C - f_CL x_L
        let partial = self.compose(f, &self.element(&f.source, x.clone())?)?;
        let residual: Vec<BigInt> = tc
            .iter()
            .map(|&j| (&yv[j] - &partial.matrix[j][0]).to_integer())
            .collect();
        let Some(x_c) = f.torsion_block().preimage(&residual) else {
            return Ok(None);
        };
        for (k, &i) in sc.iter().enumerate() {
            x[i] = BigRational::from_integer(x_c[k].clone());
        }
        Ok(Some(self.element(&f.source, x)?))
    }

    /// Computed through fgab when both ends are finitely generated,
    /// trivially when `f = g`, and directly when both ends are torsion-free
    /// and the kernel has rank at most one. Otherwise unsupported: a
    /// higher-rank subgroup of a sum of `Z[S⁻¹]` need not be a sum of atoms.
    fn equalizer(&self, f: &ArithMor, g: &ArithMor) -> Result<(ArithGroup, ArithMor)> {
        if self.equal(f, g)? {
            return Ok((f.source.clone(), ArithMor::identity(&f.source)));
        }
        let (Some(ff), Some(gg)) = (f.to_fgab(), g.to_fgab()) else {
            return torsion_free_kernel(f, g)?.ok_or_else(|| {
                Error::Unsupported(format!("equalizer of two different maps out of {}", f.source))
            });
        };
        let (k, inc) = ff.sub(&gg)?.kernel();
        let (atoms, split) = atoms_of_canonical(&k);
        let m = &inc.matrix().clone() * &split;
        let inc = ArithMor::internal(atoms.clone(), f.source.clone(), int_to_rat(&m))?;
        Ok((atoms, inc))
    }

    fn elements(&self, x: &ArithGroup, limit: usize) -> Result<Vec<ArithMor>> {
        let Some(order) = x.order() else {
            return Err(Error::Unsupported(format!("cannot enumerate the infinite group {x}")));
        };
        if order > BigInt::from(limit) {
            return Err(Error::Resource {
                what: format!("enumeration of {x}"),
                size: order.to_string(),
                limit,
            });
        }
        let g = x.torsion_fgab();
        g.elements(limit)?
            .into_iter()
            .map(|e| {
                let v = e.into_iter().map(BigRational::from_integer).collect();
                self.element(x, v)
            })
            .collect()
    }

    fn describe(&self, x: &ArithGroup) -> String {
        x.describe()
    }

    fn describe_mor(&self, f: &ArithMor) -> String {
        format!("{f:?}")
    }

    fn mor_json(&self, f: &ArithMor) -> Value {
        json!({
            "source": f.source.describe(),
            "target": f.target.describe(),
            "matrix": f.matrix.iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests;
