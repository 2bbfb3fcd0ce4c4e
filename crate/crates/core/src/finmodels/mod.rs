//! Finite models of the monoidal interface: finite sets under cartesian
//! product, finite-dimensional vector spaces over `F_p`, and the
//! free ⊣ forget pair between them used as an enrichment.

mod finset;
mod finvect;

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

pub use finset::{FinSet, FinSetMap, FinSetObj};
pub use finvect::{FinVect, FinVectMap, FinVectObj};

use crate::category::{ClosedMonoidal, Enrichment, IdentityEnrichment};
use crate::error::{Error, Result};
use crate::fgab::FgAb;
use crate::monoid::{is_rigid, is_solid, MonoidData};
use crate::verdict::Verdict;

/// `i`: free `F_p`-vector space on a finite set, `r`: underlying set.
#[derive(Clone, Copy, Debug)]
pub struct FreeForget {
    p: u64,
}

impl FreeForget {
    pub fn new(p: u64) -> Result<Self> {
        FinVect::new(p)?;
        Ok(FreeForget { p })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn category(&self) -> FinVect {
        FinVect::new(self.p).expect("checked in new")
    }

    pub fn free_obj(&self, a: FinSetObj) -> FinVectObj {
        FinVectObj(a.0)
    }

    pub fn free_map(&self, f: &FinSetMap) -> FinVectMap {
        let mut rows = vec![vec![0; f.source()]; f.target()];
        for (i, &v) in f.table().iter().enumerate() {
            rows[v][i] = 1;
        }
        self.category().map(f.source(), f.target(), rows).expect("shape")
    }

    pub fn forget_obj(&self, x: FinVectObj) -> Result<FinSetObj> {
        Ok(FinSetObj(self.category().cardinality(x.0)?))
    }

    /// The function table of a linear map on all vectors.
    pub fn forget_map(&self, f: &FinVectMap) -> Result<FinSetMap> {
        let v = self.category();
        let n = v.cardinality(f.source())?;
        let m = v.cardinality(f.target())?;
        let table = (0..n)
            .map(|c| v.vector_index(&f.apply(&v.vector(c, f.source()), self.p)))
            .collect();
        FinSetMap::new(n, m, table)
    }
}

impl Enrichment<FinVect> for FreeForget {
    fn label(&self) -> String {
        format!("free-forget:{}", self.p)
    }

    /// Bijectivity of the underlying function, decided on its table.
    fn is_iso_underlying(&self, cat: &FinVect, f: &FinVectMap) -> Result<bool> {
        if cat.prime() != self.p {
            return Err(Error::Input(format!(
                "enrichment over F_{} used on {}",
                self.p,
                cat.label()
            )));
        }
        Ok(self.forget_map(f)?.is_bijective())
    }
}

/// An associative multiplication table on `{0, …, size - 1}` with
/// identity `0`; `table[a * size + b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonoidTable {
    pub size: usize,
    pub table: Vec<usize>,
}

impl MonoidTable {
    pub fn monoid(&self, cat: &FinSet) -> Result<MonoidData<FinSet>> {
        let n = self.size;
        let mu = FinSetMap::new(n * n, n, self.table.clone())?;
        let eta = FinSetMap::new(1, n, vec![0])?;
        MonoidData::new(cat, FinSetObj(n), mu, eta)
    }
}

fn associative(n: usize, t: &[Option<usize>]) -> bool {
    for a in 0..n {
        for b in 0..n {
            let Some(ab) = t[a * n + b] else { continue };
            for c in 0..n {
                let (Some(l), Some(bc)) = (t[ab * n + c], t[b * n + c]) else { continue };
                if let Some(r) = t[a * n + bc] {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Smallest relabelling of a table under permutations fixing `0`.
fn canonical_table(n: usize, t: &[usize], perms: &[Vec<usize>]) -> Vec<usize> {
    perms
        .iter()
        .map(|p| {
            // sigma(0) = 0, sigma(k) = p[k - 1]
            let s = |k: usize| if k == 0 { 0 } else { p[k - 1] };
            let mut out = vec![0; n * n];
            for a in 0..n {
                for b in 0..n {
                    out[s(a) * n + s(b)] = s(t[a * n + b]);
                }
            }
            out
        })
        .min()
        .unwrap_or_default()
}

/// All monoids with `n ≤ 5` elements up to isomorphism, by backtracking
/// over the table with associativity pruning.
pub fn enumerate_monoids(n: usize) -> Result<Vec<MonoidTable>> {
    if n > 5 {
        return Err(Error::Resource {
            what: format!("monoid enumeration on {n} elements"),
            size: n.to_string(),
            limit: 5,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut t = vec![None; n * n];
    for a in 0..n {
        t[a] = Some(a);
        t[a * n] = Some(a);
    }
    let cells: Vec<usize> = (1..n).flat_map(|a| (1..n).map(move |b| a * n + b)).collect();
    let perms = permutations(&(1..n).collect::<Vec<_>>());
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    fn go(
        k: usize,
        n: usize,
        cells: &[usize],
        t: &mut Vec<Option<usize>>,
        perms: &[Vec<usize>],
        seen: &mut HashSet<Vec<usize>>,
        out: &mut Vec<MonoidTable>,
    ) {
        if k == cells.len() {
            let full: Vec<usize> = t.iter().map(|x| x.unwrap()).collect();
            if seen.insert(canonical_table(n, &full, perms)) {
                out.push(MonoidTable { size: n, table: full });
            }
            return;
        }
        for v in 0..n {
            t[cells[k]] = Some(v);
            if associative(n, t) {
                go(k + 1, n, cells, t, perms, seen, out);
            }
        }
        t[cells[k]] = None;
    }
    go(0, n, &cells, &mut t, &perms, &mut seen, &mut out);
    Ok(out)
}

/// Verdicts for one finite monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinsetReportEntry {
    pub monoid: MonoidTable,
    pub solid: bool,
    pub mu_bijective: bool,
    pub rigid: bool,
    pub evaluation_bijective: bool,
}

#[derive(Clone, Debug)]
pub struct FinsetReport {
    pub entries: Vec<FinsetReportEntry>,
}

impl FinsetReport {
    /// solid ⇔ μ bijective ⇔ rigid ⇔ evaluation bijective ⇔ one element,
    /// for every entry.
    pub fn degenerate(&self) -> bool {
        self.entries.iter().all(|e| {
            let trivial = e.monoid.size == 1;
            e.solid == trivial
                && e.mu_bijective == trivial
                && e.rigid == trivial
                && e.evaluation_bijective == trivial
        })
    }
}

/// Runs the generic deciders on every monoid with at most `n` elements and
/// compares them with direct counts.
pub fn finset_solid_rigid_report(n: usize) -> Result<FinsetReport> {
    let cat = FinSet::default();
    let mut entries = Vec::new();
    for size in 1..=n {
        for m in enumerate_monoids(size)? {
            let md = m.monoid(&cat)?;
            let solid = is_solid(&cat, &md)?.holds;
            let rigid = is_rigid(&cat, &md, &IdentityEnrichment)?.holds;
            let mu_bijective = {
                let mut hit = vec![false; size];
                m.table.iter().all(|&v| !std::mem::replace(&mut hit[v], true))
            };
            // φ ↦ φ(0) on all size^size functions
            let total = size.pow(size as u32);
            let mut hit = vec![0usize; size];
            for code in 0..total {
                hit[code % size] += 1;
            }
            let evaluation_bijective = hit.iter().all(|&c| c == 1);
            entries.push(FinsetReportEntry {
                monoid: m,
                solid,
                mu_bijective,
                rigid,
                evaluation_bijective,
            });
        }
    }
    Ok(FinsetReport { entries })
}

/// The monoid with product `mu` (`d × d²`) and unit `eta` in `FinVect`.
pub fn finvect_monoid(cat: &FinVect, d: usize, mu: Vec<Vec<u64>>, eta: Vec<u64>) -> Result<MonoidData<FinVect>> {
    let mu = cat.map(d * d, d, mu)?;
    let eta = cat.map(1, d, eta.into_iter().map(|x| vec![x]).collect())?;
    MonoidData::new(cat, FinVectObj(d), mu, eta)
}

/// `F_p^d` with componentwise product.
pub fn product_algebra(cat: &FinVect, d: usize) -> Result<MonoidData<FinVect>> {
    let mut mu = vec![vec![0; d * d]; d];
    for (i, row) in mu.iter_mut().enumerate() {
        row[i * d + i] = 1;
    }
    finvect_monoid(cat, d, mu, vec![1; d])
}

/// Solid and rigid verdicts for `F_p^d` with componentwise product.
pub fn finvect_solid_rigid(p: u64, d: usize) -> Result<(Verdict<FinVectMap>, Verdict<FinVectMap>)> {
    let cat = FinVect::new(p)?;
    let m = product_algebra(&cat, d)?;
    Ok((is_solid(&cat, &m)?, is_rigid(&cat, &m, &IdentityEnrichment)?))
}

/// Every unital associative algebra structure on `F_p^d` with unit `e_0`,
/// by exhausting the structure constants of the other basis vectors.
/// Dimension `0` gives the zero algebra.
pub fn enumerate_algebras(cat: &FinVect, d: usize) -> Result<Vec<MonoidData<FinVect>>> {
    let p = cat.prime();
    if d == 0 {
        return Ok(vec![finvect_monoid(cat, 0, Vec::new(), Vec::new())?]);
    }
    let pairs: Vec<(usize, usize)> = (1..d).flat_map(|a| (1..d).map(move |b| (a, b))).collect();
    let digits = pairs.len() * d;
    let total = p
        .checked_pow(digits as u32)
        .filter(|&t| t <= 1 << 21)
        .ok_or_else(|| Error::Resource {
            what: format!("algebra structures on F_{p}^{d}"),
            size: format!("{p}^{digits}"),
            limit: 1 << 21,
        })?;
    let mut out = Vec::new();
    let mut c = vec![vec![vec![0u64; d]; d]; d];
    for a in 0..d {
        c[0][a][a] = 1;
        c[a][0][a] = 1;
    }
    let mul = |c: &Vec<Vec<Vec<u64>>>, u: &[u64], v: &[u64]| -> Vec<u64> {
        let mut w = vec![0u64; d];
        for (i, &ui) in u.iter().enumerate().filter(|(_, &x)| x != 0) {
            for (j, &vj) in v.iter().enumerate().filter(|(_, &x)| x != 0) {
                let s = ui * vj % p;
                for (k, wk) in w.iter_mut().enumerate() {
                    *wk = (*wk + s * c[i][j][k]) % p;
                }
            }
        }
        w
    };
    for code in 0..total {
        let mut x = code;
        for &(a, b) in &pairs {
            for k in 0..d {
                c[a][b][k] = x % p;
                x /= p;
            }
        }
        let assoc = (1..d).all(|a| {
            (1..d).all(|b| {
                (1..d).all(|e| mul(&c, &c[a][b].clone(), &unit_vec(d, e)) == mul(&c, &unit_vec(d, a), &c[b][e].clone()))
            })
        });
        if !assoc {
            continue;
        }
        let mu = (0..d)
            .map(|k| (0..d * d).map(|ab| c[ab / d][ab % d][k]).collect())
            .collect();
        out.push(finvect_monoid(cat, d, mu, unit_vec(d, 0))?);
    }
    Ok(out)
}

fn unit_vec(d: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

/// An fgab ring whose additive group is `(Z/p)^d`, as an `F_p`-algebra.
/// `None` when the carrier is not elementary abelian of exponent `p`.
pub fn fgab_ring_to_finvect(m: &MonoidData<FgAb>, p: u64) -> Result<Option<MonoidData<FinVect>>> {
    let g = &m.carrier;
    let pb = BigInt::from(p);
    if g.summand_moduli().iter().any(|d| d != &pb) {
        return Ok(None);
    }
    let d = g.summand_count();
    let to = g.to_canonical_matrix();
    let from = g.from_canonical_matrix();
    let reduce = |v: Vec<BigInt>| -> Vec<u64> {
        to.mul_vec(&v)
            .iter()
            .map(|x| x.mod_floor(&pb).to_u64().unwrap())
            .collect()
    };
    let mut mu = vec![vec![0u64; d * d]; d];
    for a in 0..d {
        for b in 0..d {
            let (u, v) = (from.col(a), from.col(b));
            let uv: Vec<BigInt> = u.iter().flat_map(|x| v.iter().map(move |y| x * y)).collect();
            let image = reduce(m.mu.apply(&uv));
            for k in 0..d {
                mu[k][a * d + b] = image[k];
            }
        }
    }
    let eta = reduce(m.eta.matrix().col(0));
    let cat = FinVect::new(p)?;
    finvect_monoid(&cat, d, mu, eta).map(Some)
}

#[cfg(test)]
mod tests;
