use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{factor, is_prime, tensor_index, Arith, ArithGroup, ArithMor, Atom};
use crate::error::{Error, Result};
use crate::monoid::{is_solid, MonoidData};
use crate::verdict::Verdict;

/// The solid-ring families that are finitely describable here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingFamily {
    /// `Z/n`.
    Zn(u64),
    /// `Z[J⁻¹]`.
    ZJinv(BTreeSet<u64>),
    /// `Z[J⁻¹] × Z/n`, every prime of `n` in `J`.
    ZJinvTimesZn(BTreeSet<u64>, u64),
}

/// A finite product of atom rings `Z[S⁻¹]` and `Z/pᵏ`, with componentwise
/// multiplication.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArithRing {
    factors: Vec<Atom>,
}

impl ArithRing {
    pub fn product(factors: Vec<Atom>) -> Self {
        ArithRing { factors }
    }

    /// `Z/n`, split into primary factors; `n = 0` gives `Z`.
    pub fn zn(n: u64) -> Self {
        Self::product(ArithGroup::cyclic(n).atoms)
    }

    /// `Z[J⁻¹]`.
    pub fn local(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        Ok(Self::product(vec![Atom::local(primes)?]))
    }

    /// `Z[J⁻¹] × Z/n`.
    pub fn local_times_zn(primes: impl IntoIterator<Item = u64>, n: u64) -> Result<Self> {
        let mut f = vec![Atom::local(primes)?];
        f.extend(ArithGroup::cyclic(n).atoms);
        Ok(Self::product(f))
    }

    pub fn factors(&self) -> &[Atom] {
        &self.factors
    }

    pub fn carrier(&self) -> ArithGroup {
        ArithGroup::new(self.factors.clone())
    }

    /// Which classified family this ring belongs to, if any.
    pub fn family(&self) -> Option<RingFamily> {
        let locals: Vec<&BTreeSet<u64>> = self
            .factors
            .iter()
            .filter_map(|a| match a {
                Atom::Local(s) => Some(s),
                _ => None,
            })
            .collect();
        let cyclic: Vec<(u64, u32)> = self
            .factors
            .iter()
            .filter_map(|a| match a {
                Atom::Cyclic { p, k } => Some((*p, *k)),
                _ => None,
            })
            .collect();
        let primes: BTreeSet<u64> = cyclic.iter().map(|c| c.0).collect();
        if primes.len() != cyclic.len() {
            return None;
        }
        let n: u64 = cyclic.iter().map(|&(p, k)| p.pow(k)).product();
        match locals.as_slice() {
            [] => Some(RingFamily::Zn(n)),
            [s] if cyclic.is_empty() => Some(RingFamily::ZJinv((*s).clone())),
            [s] if primes.is_subset(s) => Some(RingFamily::ZJinvTimesZn((*s).clone(), n)),
            _ => None,
        }
    }

    /// The monoid `(R, μ, η)` in the arithmetic stratum.
    pub fn monoid(&self, cat: &Arith) -> Result<MonoidData<Arith>> {
        let r = self.carrier();
        let pairs = tensor_index(&r, &r);
        let mut mu = vec![vec![BigRational::zero(); pairs.len()]; r.atoms.len()];
        for (c, (i, j, _)) in pairs.iter().enumerate() {
            if i == j {
                mu[*i][c] = BigRational::one();
            }
        }
        let mu = ArithMor::new(super::tensor_arith(&r, &r), r.clone(), mu)?;
        let eta = ArithMor::new(
            ArithGroup::integers(),
            r.clone(),
            vec![vec![BigRational::one()]; r.atoms.len()],
        )?;
        MonoidData::new(cat, r, mu, eta)
    }

    pub fn describe(&self) -> String {
        match self.family() {
            Some(RingFamily::Zn(0 | 1)) if self.factors.is_empty() => "0".into(),
            Some(RingFamily::Zn(n)) => format!("Z/{n}"),
            Some(RingFamily::ZJinv(_)) => self.factors[0].describe(),
            Some(RingFamily::ZJinvTimesZn(_, n)) => format!("{} x Z/{n}", self.factors[0].describe()),
            None => self
                .factors
                .iter()
                .map(Atom::describe)
                .collect::<Vec<_>>()
                .join(" x "),
        }
    }
}

impl fmt::Display for ArithRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl fmt::Debug for ArithRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Whether `μ` is an isomorphism, evaluated through the tables.
pub fn is_solid_arith(r: &ArithRing) -> Result<Verdict<ArithMor>> {
    let cat = Arith;
    is_solid(&cat, &r.monoid(&cat)?)
}

fn subsets(primes: &[u64]) -> Vec<BTreeSet<u64>> {
    (0u32..1 << primes.len())
        .map(|mask| {
            primes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &p)| p)
                .collect()
        })
        .collect()
}

/// The rings `Z/n` (`2 ≤ n ≤ torsion_bound`), `Z[J⁻¹]` and `Z[J⁻¹] × Z/n`
/// for `J` a set of primes `≤ prime_bound` containing every prime of `n`.
pub fn solid_ring_catalog(prime_bound: u64, torsion_bound: u64) -> Vec<ArithRing> {
    let primes: Vec<u64> = (2..=prime_bound).filter(|&p| is_prime(p)).collect();
    let mut out: Vec<ArithRing> = (2..=torsion_bound).map(ArithRing::zn).collect();
    for j in subsets(&primes) {
        out.push(ArithRing::product(vec![Atom::Local(j.clone())]));
    }
    for j in subsets(&primes) {
        for n in 2..=torsion_bound {
            if factor(n).iter().all(|(p, _)| j.contains(p)) {
                let mut f = vec![Atom::Local(j.clone())];
                f.extend(ArithGroup::cyclic(n).atoms);
                out.push(ArithRing::product(f));
            }
        }
    }
    out
}

/// Outcome of [`torsion_free_solid_check`] on a solid ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorsionFreeCheck {
    /// `R ≅ Z[S⁻¹]`.
    Subring(BTreeSet<u64>),
    /// Solid, but not a subring of `Q`.
    Excluded(String),
}

/// For a solid ring, the prime set `S` with `R ≅ Z[S⁻¹]` when `R` is
/// torsion-free. Fails with [`Error::NotSolid`] otherwise.
pub fn torsion_free_solid_check(r: &ArithRing) -> Result<TorsionFreeCheck> {
    let v = is_solid_arith(r)?;
    if !v.holds {
        return Err(Error::NotSolid(format!("{r}: {}", v.summary)));
    }
    if r.factors.iter().any(|a| !a.is_local()) {
        let torsion: BigInt = r.factors.iter().filter_map(Atom::modulus).product();
        return Ok(TorsionFreeCheck::Excluded(format!("{r} has torsion of order {torsion}")));
    }
    match r.factors.as_slice() {
        [Atom::Local(s)] => Ok(TorsionFreeCheck::Subring(s.clone())),
        [] => Ok(TorsionFreeCheck::Excluded("the zero ring".into())),
        _ => Err(Error::Internal(format!(
            "{r} is solid and torsion-free but has several factors"
        ))),
    }
}
