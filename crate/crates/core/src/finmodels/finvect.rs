use serde_json::{json, Value};

use crate::category::ClosedMonoidal;
use crate::error::{Error, Result};

/// A finite-dimensional `F_p`-vector space, by its dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FinVectObj(pub usize);

/// A linear map, as a `target × source` matrix with entries in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinVectMap {
    source: usize,
    target: usize,
    rows: Vec<Vec<u64>>,
}

impl FinVectMap {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn apply(&self, v: &[u64], p: u64) -> Vec<u64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b % p).sum::<u64>() % p)
            .collect()
    }
}

/// Finite-dimensional vector spaces over `F_p` with the usual tensor
/// product; basis `e_i ⊗ f_j` ordered lexicographically.
#[derive(Clone, Copy, Debug)]
pub struct FinVect {
    p: u64,
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl FinVect {
    pub fn new(p: u64) -> Result<Self> {
        if !crate::arith::is_prime(p) || p > 1 << 20 {
            return Err(Error::Input(format!("{p} is not a supported prime")));
        }
        Ok(FinVect { p })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn map(&self, source: usize, target: usize, rows: Vec<Vec<u64>>) -> Result<FinVectMap> {
        if rows.len() != target || rows.iter().any(|r| r.len() != source) {
            return Err(Error::Shape(format!("matrix is not {target}x{source}")));
        }
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x % self.p).collect())
            .collect();
        Ok(FinVectMap { source, target, rows })
    }

    fn mk(&self, source: usize, target: usize, rows: Vec<Vec<u64>>) -> FinVectMap {
        FinVectMap { source, target, rows }
    }

    fn zero_map(&self, source: usize, target: usize) -> FinVectMap {
        self.mk(source, target, vec![vec![0; source]; target])
    }

    fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    /// Reduced row echelon form of `m` (with `cols` columns), returning the
    /// pivot columns.
    fn rref(&self, m: &mut [Vec<u64>], cols: usize) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(k) = (r..m.len()).find(|&k| m[k][c] != 0) else { continue };
            m.swap(r, k);
            let inv = self.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = *x * inv % p;
            }
            for k in 0..m.len() {
                if k != r && m[k][c] != 0 {
                    let f = m[k][c];
                    for j in 0..m[k].len() {
                        m[k][j] = (m[k][j] + (p - f) * m[r][j]) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &FinVectMap) -> usize {
        let mut m = f.rows.clone();
        self.rref(&mut m, f.source).len()
    }

    /// Some `x` with `f x = y`.
    fn solve(&self, f: &FinVectMap, y: &[u64]) -> Option<Vec<u64>> {
        let mut m: Vec<Vec<u64>> = f
            .rows
            .iter()
            .zip(y)
            .map(|(r, &b)| {
                let mut r = r.clone();
                r.push(b % self.p);
                r
            })
            .collect();
        let pivots = self.rref(&mut m, f.source + 1);
        if pivots.last() == Some(&f.source) {
            return None;
        }
        let mut x = vec![0; f.source];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = m[r][f.source];
        }
        Some(x)
    }

    /// Basis of the kernel, as columns.
    fn kernel(&self, f: &FinVectMap) -> Vec<Vec<u64>> {
        let mut m = f.rows.clone();
        let pivots = self.rref(&mut m, f.source);
        let free: Vec<usize> = (0..f.source).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0; f.source];
                v[fc] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = (self.p - m[r][fc]) % self.p;
                }
                v
            })
            .collect()
    }

    fn sub(&self, f: &FinVectMap, g: &FinVectMap) -> FinVectMap {
        let rows = f
            .rows
            .iter()
            .zip(&g.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x + self.p - y) % self.p).collect())
            .collect();
        self.mk(f.source, f.target, rows)
    }

    /// Number of vectors in a space of dimension `d`, guarded.
    pub fn cardinality(&self, d: usize) -> Result<usize> {
        self.p
            .checked_pow(d as u32)
            .filter(|&n| n <= 1 << 22)
            .map(|n| n as usize)
            .ok_or_else(|| Error::Resource {
                what: format!("underlying set of F_{}^{d}", self.p),
                size: format!("{}^{d}", self.p),
                limit: 1 << 22,
            })
    }

    /// Vector with the given index, digit `i` being coordinate `i`.
    pub fn vector(&self, mut code: usize, d: usize) -> Vec<u64> {
        (0..d)
            .map(|_| {
                let v = code as u64 % self.p;
                code /= self.p as usize;
                v
            })
            .collect()
    }

    pub fn vector_index(&self, v: &[u64]) -> usize {
        v.iter().rev().fold(0, |acc, &x| acc * self.p as usize + x as usize)
    }
}

impl ClosedMonoidal for FinVect {
    type Obj = FinVectObj;
    type Mor = FinVectMap;

    fn label(&self) -> String {
        format!("finvect(F_{})", self.p)
    }

    fn unit(&self) -> FinVectObj {
        FinVectObj(1)
    }

    fn source(&self, f: &FinVectMap) -> FinVectObj {
        FinVectObj(f.source)
    }

    fn target(&self, f: &FinVectMap) -> FinVectObj {
        FinVectObj(f.target)
    }

    fn identity(&self, x: &FinVectObj) -> FinVectMap {
        let mut m = self.zero_map(x.0, x.0);
        for i in 0..x.0 {
            m.rows[i][i] = 1;
        }
        m
    }

    fn compose(&self, g: &FinVectMap, f: &FinVectMap) -> Result<FinVectMap> {
        if f.target != g.source {
            return Err(Error::Shape(format!("cannot compose {}x{} after {}x{}", g.target, g.source, f.target, f.source)));
        }
        let mut out = self.zero_map(f.source, g.target);
        for i in 0..g.target {
            for j in 0..f.source {
                out.rows[i][j] = (0..f.target).map(|k| g.rows[i][k] * f.rows[k][j] % self.p).sum::<u64>() % self.p;
            }
        }
        Ok(out)
    }

    fn equal(&self, f: &FinVectMap, g: &FinVectMap) -> Result<bool> {
        if f.source != g.source || f.target != g.target {
            return Err(Error::Shape("maps are not parallel".into()));
        }
        Ok(f.rows == g.rows)
    }

    fn inverse(&self, f: &FinVectMap) -> Result<Option<FinVectMap>> {
        if f.source != f.target || self.rank(f) != f.source {
            return Ok(None);
        }
        let n = f.source;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            cols.push(self.solve(f, &e).expect("invertible"));
        }
        let rows = (0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
        Ok(Some(self.mk(n, n, rows)))
    }

    fn is_mono(&self, f: &FinVectMap) -> Result<bool> {
        Ok(self.rank(f) == f.source)
    }

    fn isomorphic(&self, x: &FinVectObj, y: &FinVectObj) -> Result<bool> {
        Ok(x == y)
    }

    fn tensor(&self, x: &FinVectObj, y: &FinVectObj) -> FinVectObj {
        FinVectObj(x.0 * y.0)
    }

    fn tensor_mor(&self, f: &FinVectMap, g: &FinVectMap) -> Result<FinVectMap> {
        let mut out = self.zero_map(f.source * g.source, f.target * g.target);
        for i in 0..f.target {
            for k in 0..g.target {
                for j in 0..f.source {
                    for l in 0..g.source {
                        out.rows[i * g.target + k][j * g.source + l] = f.rows[i][j] * g.rows[k][l] % self.p;
                    }
                }
            }
        }
        Ok(out)
    }

    fn left_unitor(&self, x: &FinVectObj) -> FinVectMap {
        self.identity(x)
    }

    fn right_unitor(&self, x: &FinVectObj) -> FinVectMap {
        self.identity(x)
    }

    fn associator(&self, x: &FinVectObj, y: &FinVectObj, z: &FinVectObj) -> FinVectMap {
        self.identity(&FinVectObj(x.0 * y.0 * z.0))
    }

    fn braiding(&self, x: &FinVectObj, y: &FinVectObj) -> FinVectMap {
        let n = x.0 * y.0;
        let mut m = self.zero_map(n, n);
        for i in 0..x.0 {
            for j in 0..y.0 {
                m.rows[j * x.0 + i][i * y.0 + j] = 1;
            }
        }
        m
    }

    /// `Hom(X, Y)` has basis the matrix units `E_{ji}`, ordered row-major.
    fn hom(&self, x: &FinVectObj, y: &FinVectObj) -> Result<FinVectObj> {
        Ok(FinVectObj(x.0 * y.0))
    }

    fn hom_mor(&self, pre: &FinVectMap, post: &FinVectMap) -> Result<FinVectMap> {
        let (x, y) = (pre.target, post.source);
        let (x2, y2) = (pre.source, post.target);
        let mut out = self.zero_map(x * y, x2 * y2);
        for j in 0..y {
            for i in 0..x {
                // post ∘ E_{ji} ∘ pre has entry (a, b) = post[a][j] · pre[i][b]
                for a in 0..y2 {
                    for b in 0..x2 {
                        out.rows[a * x2 + b][j * x + i] = post.rows[a][j] * pre.rows[i][b] % self.p;
                    }
                }
            }
        }
        Ok(out)
    }

    fn name(&self, f: &FinVectMap) -> Result<FinVectMap> {
        let rows = f.rows.iter().flatten().map(|&v| vec![v]).collect();
        Ok(self.mk(1, f.source * f.target, rows))
    }

    fn unname(&self, x: &FinVectObj, y: &FinVectObj, element: &FinVectMap) -> Result<FinVectMap> {
        if element.source != 1 || element.target != x.0 * y.0 {
            return Err(Error::Shape("element does not name a map of this hom".into()));
        }
        let rows = (0..y.0)
            .map(|j| (0..x.0).map(|i| element.rows[j * x.0 + i][0]).collect())
            .collect();
        Ok(self.mk(x.0, y.0, rows))
    }

    fn hom_unit_iso(&self, x: &FinVectObj) -> Result<FinVectMap> {
        Ok(self.identity(x))
    }

    fn lift(&self, f: &FinVectMap, y: &FinVectMap) -> Result<Option<FinVectMap>> {
        if y.source != 1 || y.target != f.target {
            return Err(Error::Shape("lift: element does not live in the target".into()));
        }
        let yv: Vec<u64> = y.rows.iter().map(|r| r[0]).collect();
        Ok(self
            .solve(f, &yv)
            .map(|x| self.mk(1, f.source, x.into_iter().map(|v| vec![v]).collect())))
    }

    fn equalizer(&self, f: &FinVectMap, g: &FinVectMap) -> Result<(FinVectObj, FinVectMap)> {
        self.equal(f, g)?;
        let basis = self.kernel(&self.sub(f, g));
        let k = basis.len();
        let rows = (0..f.source).map(|i| basis.iter().map(|v| v[i]).collect()).collect();
        Ok((FinVectObj(k), self.mk(k, f.source, rows)))
    }

    fn elements(&self, x: &FinVectObj, limit: usize) -> Result<Vec<FinVectMap>> {
        let n = self.cardinality(x.0)?;
        if n > limit {
            return Err(Error::Resource {
                what: format!("enumeration of F_{}^{}", self.p, x.0),
                size: n.to_string(),
                limit,
            });
        }
        Ok((0..n)
            .map(|c| {
                let v = self.vector(c, x.0);
                self.mk(1, x.0, v.into_iter().map(|a| vec![a]).collect())
            })
            .collect())
    }

    fn describe(&self, x: &FinVectObj) -> String {
        format!("F_{}^{}", self.p, x.0)
    }

    fn describe_mor(&self, f: &FinVectMap) -> String {
        format!("F_{}^{} -> F_{}^{} by {:?}", self.p, f.source, self.p, f.target, f.rows)
    }

    fn mor_json(&self, f: &FinVectMap) -> Value {
        let rows: Vec<Vec<String>> = f.rows.iter().map(|r| r.iter().map(u64::to_string).collect()).collect();
        json!({
            "prime": self.p.to_string(),
            "source": f.source.to_string(),
            "target": f.target.to_string(),
            "matrix": rows,
        })
    }
}
