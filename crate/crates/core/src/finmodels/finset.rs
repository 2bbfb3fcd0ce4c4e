use serde_json::{json, Value};

use crate::category::ClosedMonoidal;
use crate::error::{Error, Result};

/// A finite set `{0, …, size - 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FinSetObj(pub usize);

/// A function between finite sets, as its table of values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinSetMap {
    source: usize,
    target: usize,
    table: Vec<usize>,
}

impl FinSetMap {
    pub fn new(source: usize, target: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != source || table.iter().any(|&v| v >= target) {
            return Err(Error::Input(format!(
                "table {table:?} is not a function {source} -> {target}"
            )));
        }
        Ok(FinSetMap { source, target, table })
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_bijective(&self) -> bool {
        self.source == self.target && self.is_injective()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target];
        self.table.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }
}

/// Finite sets with the cartesian product; the internal hom is the set of
/// functions. `|X^∅| = 1`.
#[derive(Clone, Copy, Debug)]
pub struct FinSet {
    max_size: usize,
}

impl Default for FinSet {
    fn default() -> Self {
        FinSet { max_size: 1 << 20 }
    }
}

impl FinSet {
    pub fn new(max_size: usize) -> Self {
        FinSet { max_size }
    }

    /// `y^x`, guarded by the size bound.
    fn power(&self, y: usize, x: usize) -> Result<usize> {
        let n = (y as u64)
            .checked_pow(x as u32)
            .filter(|&n| n <= self.max_size as u64)
            .ok_or_else(|| Error::Resource {
                what: format!("function set {y}^{x}"),
                size: format!("{y}^{x}"),
                limit: self.max_size,
            })?;
        Ok(n as usize)
    }

    /// Index of a function table in `Hom(x, y)`; digit `i` is `f(i)`.
    fn encode(&self, table: &[usize], y: usize) -> usize {
        table.iter().rev().fold(0, |acc, &v| acc * y + v)
    }

    fn decode(&self, mut code: usize, x: usize, y: usize) -> Vec<usize> {
        (0..x)
            .map(|_| {
                let v = code % y;
                code /= y;
                v
            })
            .collect()
    }

    fn map(&self, source: usize, target: usize, table: Vec<usize>) -> FinSetMap {
        debug_assert!(table.len() == source && table.iter().all(|&v| v < target));
        FinSetMap { source, target, table }
    }
}

impl ClosedMonoidal for FinSet {
    type Obj = FinSetObj;
    type Mor = FinSetMap;

    fn label(&self) -> String {
        "finset".into()
    }

    fn unit(&self) -> FinSetObj {
        FinSetObj(1)
    }

    fn source(&self, f: &FinSetMap) -> FinSetObj {
        FinSetObj(f.source)
    }

    fn target(&self, f: &FinSetMap) -> FinSetObj {
        FinSetObj(f.target)
    }

    fn identity(&self, x: &FinSetObj) -> FinSetMap {
        self.map(x.0, x.0, (0..x.0).collect())
    }

    fn compose(&self, g: &FinSetMap, f: &FinSetMap) -> Result<FinSetMap> {
        if f.target != g.source {
            return Err(Error::Shape(format!("cannot compose {} -> {} after {} -> {}", g.source, g.target, f.source, f.target)));
        }
        Ok(self.map(f.source, g.target, f.table.iter().map(|&v| g.table[v]).collect()))
    }

    fn equal(&self, f: &FinSetMap, g: &FinSetMap) -> Result<bool> {
        if f.source != g.source || f.target != g.target {
            return Err(Error::Shape("maps are not parallel".into()));
        }
        Ok(f.table == g.table)
    }

    fn inverse(&self, f: &FinSetMap) -> Result<Option<FinSetMap>> {
        if !f.is_bijective() {
            return Ok(None);
        }
        let mut t = vec![0; f.source];
        for (i, &v) in f.table.iter().enumerate() {
            t[v] = i;
        }
        Ok(Some(self.map(f.target, f.source, t)))
    }

    fn is_mono(&self, f: &FinSetMap) -> Result<bool> {
        Ok(f.is_injective())
    }

    fn isomorphic(&self, x: &FinSetObj, y: &FinSetObj) -> Result<bool> {
        Ok(x == y)
    }

    fn tensor(&self, x: &FinSetObj, y: &FinSetObj) -> FinSetObj {
        FinSetObj(x.0 * y.0)
    }

    fn tensor_mor(&self, f: &FinSetMap, g: &FinSetMap) -> Result<FinSetMap> {
        let mut t = Vec::with_capacity(f.source * g.source);
        for &a in &f.table {
            for &b in &g.table {
                t.push(a * g.target + b);
            }
        }
        Ok(self.map(f.source * g.source, f.target * g.target, t))
    }

    fn left_unitor(&self, x: &FinSetObj) -> FinSetMap {
        self.identity(x)
    }

    fn right_unitor(&self, x: &FinSetObj) -> FinSetMap {
        self.identity(x)
    }

    fn associator(&self, x: &FinSetObj, y: &FinSetObj, z: &FinSetObj) -> FinSetMap {
        self.identity(&FinSetObj(x.0 * y.0 * z.0))
    }

    fn braiding(&self, x: &FinSetObj, y: &FinSetObj) -> FinSetMap {
        let mut t = Vec::with_capacity(x.0 * y.0);
        for i in 0..x.0 {
            for j in 0..y.0 {
                t.push(j * x.0 + i);
            }
        }
        self.map(x.0 * y.0, x.0 * y.0, t)
    }

    fn hom(&self, x: &FinSetObj, y: &FinSetObj) -> Result<FinSetObj> {
        Ok(FinSetObj(self.power(y.0, x.0)?))
    }

    fn hom_mor(&self, pre: &FinSetMap, post: &FinSetMap) -> Result<FinSetMap> {
        let (x, y) = (pre.target, post.source);
        let (x2, y2) = (pre.source, post.target);
        let n = self.power(y, x)?;
        let n2 = self.power(y2, x2)?;
        let t = (0..n)
            .map(|code| {
                let phi = self.decode(code, x, y);
                let image: Vec<usize> = pre.table.iter().map(|&a| post.table[phi[a]]).collect();
                self.encode(&image, y2)
            })
            .collect();
        Ok(self.map(n, n2, t))
    }

    fn name(&self, f: &FinSetMap) -> Result<FinSetMap> {
        let n = self.power(f.target, f.source)?;
        Ok(self.map(1, n, vec![self.encode(&f.table, f.target)]))
    }

    fn unname(&self, x: &FinSetObj, y: &FinSetObj, element: &FinSetMap) -> Result<FinSetMap> {
        let n = self.power(y.0, x.0)?;
        if element.source != 1 || element.target != n {
            return Err(Error::Shape("element does not name a function of this hom".into()));
        }
        Ok(self.map(x.0, y.0, self.decode(element.table[0], x.0, y.0)))
    }

    fn hom_unit_iso(&self, x: &FinSetObj) -> Result<FinSetMap> {
        Ok(self.identity(x))
    }

    fn lift(&self, f: &FinSetMap, y: &FinSetMap) -> Result<Option<FinSetMap>> {
        if y.source != 1 || y.target != f.target {
            return Err(Error::Shape("lift: element does not live in the target".into()));
        }
        Ok(f.table
            .iter()
            .position(|&v| v == y.table[0])
            .map(|i| self.map(1, f.source, vec![i])))
    }

    fn equalizer(&self, f: &FinSetMap, g: &FinSetMap) -> Result<(FinSetObj, FinSetMap)> {
        self.equal(f, g)?;
        let t: Vec<usize> = (0..f.source).filter(|&i| f.table[i] == g.table[i]).collect();
        Ok((FinSetObj(t.len()), self.map(t.len(), f.source, t)))
    }

    fn elements(&self, x: &FinSetObj, limit: usize) -> Result<Vec<FinSetMap>> {
        if x.0 > limit {
            return Err(Error::Resource {
                what: format!("enumeration of a {}-element set", x.0),
                size: x.0.to_string(),
                limit,
            });
        }
        Ok((0..x.0).map(|i| self.map(1, x.0, vec![i])).collect())
    }

    fn describe(&self, x: &FinSetObj) -> String {
        format!("{{{} elements}}", x.0)
    }

    fn describe_mor(&self, f: &FinSetMap) -> String {
        format!("{} -> {} by {:?}", f.source, f.target, f.table)
    }

    fn mor_json(&self, f: &FinSetMap) -> Value {
        json!({
            "source": f.source.to_string(),
            "target": f.target.to_string(),
            "table": f.table.iter().map(usize::to_string).collect::<Vec<_>>(),
        })
    }
}
