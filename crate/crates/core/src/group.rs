//! Cayley-table materialization for every group family, axiom verification,
//! structural analysis, and isomorphism search on small orders.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::{cyclic_law, direct_sum_law, mult_mod_law, DirectSumSpec};
use crate::digits::factorial;
use crate::error::{Axiom, Error, Result};
use crate::nonabelian::{
    dicyclic_law, dihedral_law, metacyclic_law, quaternion_label, MetacyclicSpec,
};
use crate::perms::{alternating_indices, compose, unrank};

/// Hard cap on materialized table order.
pub const ORDER_CAP: u64 = 10_080;
/// Orders up to this get the full associativity triple loop.
pub const FULL_ASSOC_LIMIT: usize = 64;
/// Sample count for seeded associativity checks above the limit.
pub const ASSOC_SAMPLES: usize = 1_000_000;
/// Isomorphism search cap.
pub const ISO_CAP: usize = 24;

/// Sentinel for a product that left the element set. Only multiplicative
/// tables over composite moduli produce it; the escaped value is always 0.
pub const NO_ENTRY: u32 = u32::MAX;

/// A parameterized descriptor of one group family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    DirectSum(Vec<u64>),
    MultMod(u64),
    Dihedral(u64),
    Dicyclic(u64),
    Metacyclic { q: u64, a: u64, c: u64, r: i64 },
    Sym(u32),
    Alt(u32),
}

impl GroupSpec {
    /// Group order, computable without building the table.
    pub fn order(&self) -> Result<u64> {
        let small = |what, value, min: u64| {
            if value < min {
                Err(Error::OutOfRange {
                    what,
                    value,
                    max: u64::MAX,
                })
            } else {
                Ok(value)
            }
        };
        match self {
            GroupSpec::Cyclic(p) => small("cyclic modulus", *p, 2),
            GroupSpec::DirectSum(radices) => Ok(DirectSumSpec::new(radices.clone())?.order()),
            GroupSpec::MultMod(p) => Ok(small("multiplicative modulus", *p, 2)? - 1),
            GroupSpec::Dihedral(q) => Ok(2 * small("dihedral parameter", *q, 1)?),
            GroupSpec::Dicyclic(q) => Ok(4 * small("dicyclic parameter", *q, 1)?),
            GroupSpec::Metacyclic { q, a, c, .. } => {
                small("metacyclic parameter", *q.min(a).min(c), 1)?;
                q.checked_mul(*a)
                    .and_then(|qa| qa.checked_mul(*c))
                    .ok_or(Error::OrderTooLarge {
                        order: u64::MAX,
                        cap: ORDER_CAP,
                    })
            }
            GroupSpec::Sym(p) => {
                small("symmetric degree", *p as u64, 1)?;
                factorial(*p).ok_or(Error::OutOfRange {
                    what: "symmetric degree",
                    value: *p as u64,
                    max: 20,
                })
            }
            GroupSpec::Alt(p) => {
                small("alternating degree", *p as u64, 2)?;
                factorial(*p).map(|f| f / 2).ok_or(Error::OutOfRange {
                    what: "alternating degree",
                    value: *p as u64,
                    max: 20,
                })
            }
        }
    }

    /// Canonical spec string in the CLI grammar.
    pub fn describe(&self) -> String {
        match self {
            GroupSpec::Cyclic(p) => format!("cyclic:{p}"),
            GroupSpec::DirectSum(radices) => {
                let parts: Vec<String> = radices.iter().map(|r| r.to_string()).collect();
                format!("dsum:{}", parts.join(","))
            }
            GroupSpec::MultMod(p) => format!("multmod:{p}"),
            GroupSpec::Dihedral(q) => format!("dihedral:{q}"),
            GroupSpec::Dicyclic(q) => format!("dicyclic:{q}"),
            GroupSpec::Metacyclic { q, a, c, r } => format!("metacyclic:q={q},a={a},c={c},r={r}"),
            GroupSpec::Sym(p) => format!("sym:{p}"),
            GroupSpec::Alt(p) => format!("alt:{p}"),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseSpec(s.to_string());
        let (family, args) = s.split_once(':').ok_or_else(bad)?;
        let parse_u64 = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        match family.trim() {
            "cyclic" => Ok(GroupSpec::Cyclic(parse_u64(args)?)),
            "dsum" => {
                let radices: Result<Vec<u64>> = args.split(',').map(parse_u64).collect();
                let radices = radices?;
                if radices.is_empty() {
                    return Err(bad());
                }
                Ok(GroupSpec::DirectSum(radices))
            }
            "multmod" => Ok(GroupSpec::MultMod(parse_u64(args)?)),
            "dihedral" => Ok(GroupSpec::Dihedral(parse_u64(args)?)),
            "dicyclic" => Ok(GroupSpec::Dicyclic(parse_u64(args)?)),
            "metacyclic" => {
                let mut q = None;
                let mut a = None;
                let mut c = None;
                let mut r = None;
                for part in args.split(',') {
                    let (key, value) = part.split_once('=').ok_or_else(bad)?;
                    match key.trim() {
                        "q" => q = Some(parse_u64(value)?),
                        "a" => a = Some(parse_u64(value)?),
                        "c" => c = Some(parse_u64(value)?),
                        "r" => r = Some(value.trim().parse::<i64>().map_err(|_| bad())?),
                        _ => return Err(bad()),
                    }
                }
                match (q, a, c, r) {
                    (Some(q), Some(a), Some(c), Some(r)) => {
                        Ok(GroupSpec::Metacyclic { q, a, c, r })
                    }
                    _ => Err(bad()),
                }
            }
            "sym" => Ok(GroupSpec::Sym(parse_u64(args)? as u32)),
            "alt" => Ok(GroupSpec::Alt(parse_u64(args)? as u32)),
            _ => Err(bad()),
        }
    }
}

/// A materialized composition table. Entries are element indices in
/// `[0, order)`; [`NO_ENTRY`] marks a product that escaped the element set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl CayleyTable {
    /// Evaluate a law over `[0, order)²`. The law must stay in range.
    pub fn from_law(order: u64, law: impl Fn(u64, u64) -> u64) -> Result<Self> {
        if order == 0 || order > ORDER_CAP {
            return Err(Error::OrderTooLarge {
                order,
                cap: ORDER_CAP,
            });
        }
        let n = order as usize;
        let mut entries = Vec::with_capacity(n * n);
        for m in 0..order {
            for k in 0..order {
                let v = law(m, k);
                debug_assert!(v < order, "law left the carrier at ({m},{k})");
                entries.push(v as u32);
            }
        }
        Ok(CayleyTable {
            order: n,
            entries,
            labels: None,
        })
    }

    /// Wrap raw entries; each must be an index below `order` or [`NO_ENTRY`].
    pub fn from_entries(
        order: usize,
        entries: Vec<u32>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if order == 0 || order as u64 > ORDER_CAP {
            return Err(Error::OrderTooLarge {
                order: order as u64,
                cap: ORDER_CAP,
            });
        }
        if entries.len() != order * order {
            return Err(Error::LengthMismatch {
                expected: order * order,
                got: entries.len(),
            });
        }
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(Error::LengthMismatch {
                    expected: order,
                    got: l.len(),
                });
            }
        }
        Ok(CayleyTable {
            order,
            entries,
            labels,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, m: usize, n: usize) -> u32 {
        self.entries[m * self.order + n]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    /// Label for an element index; indices print as themselves when the
    /// table carries no labels. An escaped product prints as the value 0
    /// it collapsed to.
    pub fn label_of(&self, index: u32) -> String {
        if index == NO_ENTRY {
            return "0".to_string();
        }
        match &self.labels {
            Some(labels) => labels[index as usize].clone(),
            None => index.to_string(),
        }
    }

    /// Tab-separated rows, one line per row, each line `\n`-terminated.
    pub fn to_tsv(&self, with_labels: bool) -> String {
        let mut out = String::new();
        for m in 0..self.order {
            for n in 0..self.order {
                if n > 0 {
                    out.push('\t');
                }
                let e = self.entry(m, n);
                if with_labels {
                    out.push_str(&self.label_of(e));
                } else if e == NO_ENTRY {
                    out.push('-');
                } else {
                    out.push_str(&e.to_string());
                }
            }
            out.push('\n');
        }
        out
    }

    /// Format a witness through the element labels, e.g. `(2,4)`.
    pub fn witness_labels(&self, witness: &[usize]) -> String {
        let parts: Vec<String> = witness.iter().map(|&w| self.label_of(w as u32)).collect();
        format!("({})", parts.join(","))
    }
}

/// Build the Cayley table for a spec. Law-defined families evaluate their
/// law pointwise; multiplicative tables over composite moduli are produced as
/// diagnostics with escaped products marked.
pub fn build_table(spec: &GroupSpec) -> Result<CayleyTable> {
    let order = spec.order()?;
    if order == 0 || order > ORDER_CAP {
        return Err(Error::OrderTooLarge {
            order,
            cap: ORDER_CAP,
        });
    }
    match spec {
        GroupSpec::Cyclic(p) => CayleyTable::from_law(order, |m, n| cyclic_law(*p, m, n)),
        GroupSpec::DirectSum(radices) => {
            let ds = DirectSumSpec::new(radices.clone())?;
            CayleyTable::from_law(order, |m, n| direct_sum_law(&ds, m, n))
        }
        GroupSpec::MultMod(p) => {
            let n = order as usize;
            let mut entries = Vec::with_capacity(n * n);
            for m in 1..*p {
                for k in 1..*p {
                    let v = mult_mod_law(*p, m, k);
                    entries.push(if v == 0 { NO_ENTRY } else { (v - 1) as u32 });
                }
            }
            let labels = (1..*p).map(|v| v.to_string()).collect();
            CayleyTable::from_entries(n, entries, Some(labels))
        }
        GroupSpec::Dihedral(q) => CayleyTable::from_law(order, |m, n| dihedral_law(*q, m, n)),
        GroupSpec::Dicyclic(q) => {
            let table = CayleyTable::from_law(order, |m, n| dicyclic_law(*q, m, n))?;
            if *q == 2 {
                let labels = (0..8)
                    .map(|i| quaternion_label(i).expect("index < 8").to_string())
                    .collect();
                Ok(table.with_labels(labels))
            } else {
                Ok(table)
            }
        }
        GroupSpec::Metacyclic { q, a, c, r } => {
            let ms = MetacyclicSpec::new(*q, *a, *c, *r)?;
            CayleyTable::from_law(order, |m, n| metacyclic_law(&ms, m, n))
        }
        GroupSpec::Sym(p) => {
            let total = factorial(*p).expect("guarded by order cap");
            let words: Vec<_> = (0..total)
                .map(|m| unrank(*p, m).expect("in range"))
                .collect();
            let rank_of: HashMap<u64, u32> = words
                .iter()
                .enumerate()
                .map(|(i, w)| (w.code(), i as u32))
                .collect();
            let n = order as usize;
            let mut entries = Vec::with_capacity(n * n);
            for a in &words {
                for b in &words {
                    let c = compose(a, b).expect("same degree");
                    entries.push(rank_of[&c.code()]);
                }
            }
            let labels = words.iter().map(|w| w.word_string()).collect();
            CayleyTable::from_entries(n, entries, Some(labels))
        }
        GroupSpec::Alt(p) => {
            let even = alternating_indices(*p)?;
            let words: Vec<_> = even
                .iter()
                .map(|&m| unrank(*p, m).expect("in range"))
                .collect();
            let position: HashMap<u64, u32> = words
                .iter()
                .enumerate()
                .map(|(i, w)| (w.code(), i as u32))
                .collect();
            let n = order as usize;
            let mut entries = Vec::with_capacity(n * n);
            for a in &words {
                for b in &words {
                    let c = compose(a, b).expect("same degree");
                    entries.push(position[&c.code()]);
                }
            }
            let labels = words.iter().map(|w| w.word_string()).collect();
            CayleyTable::from_entries(n, entries, Some(labels))
        }
    }
}

/// Outcome of axiom verification. A failure carries the first witness in
/// row-major scan order for the failing axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { axiom: Axiom, witness: Vec<usize> },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// Check closure, identity, the latin-square property, two-sided inverses,
/// and associativity (full triple loop for order ≤ 64, seeded uniform
/// sampling above).
pub fn verify_group(table: &CayleyTable, seed: u64) -> Verdict {
    let n = table.order;

    // closure
    for m in 0..n {
        for k in 0..n {
            if table.entry(m, k) as usize >= n {
                return Verdict::Fail {
                    axiom: Axiom::Closure,
                    witness: vec![m, k],
                };
            }
        }
    }

    // two-sided identity
    let identity = (0..n).find(|&e| {
        (0..n).all(|x| table.entry(e, x) as usize == x && table.entry(x, e) as usize == x)
    });
    let Some(e) = identity else {
        return Verdict::Fail {
            axiom: Axiom::Identity,
            witness: vec![],
        };
    };

    // two-sided inverses
    for x in 0..n {
        let ok = (0..n).any(|y| table.entry(x, y) as usize == e && table.entry(y, x) as usize == e);
        if !ok {
            return Verdict::Fail {
                axiom: Axiom::Inverses,
                witness: vec![x],
            };
        }
    }

    // latin rows and columns
    let mut seen = vec![false; n];
    for m in 0..n {
        seen.fill(false);
        for k in 0..n {
            let v = table.entry(m, k) as usize;
            if seen[v] {
                return Verdict::Fail {
                    axiom: Axiom::LatinRows,
                    witness: vec![m, k],
                };
            }
            seen[v] = true;
        }
    }
    for k in 0..n {
        seen.fill(false);
        for m in 0..n {
            let v = table.entry(m, k) as usize;
            if seen[v] {
                return Verdict::Fail {
                    axiom: Axiom::LatinColumns,
                    witness: vec![m, k],
                };
            }
            seen[v] = true;
        }
    }

    // associativity
    let check = |x: usize, y: usize, z: usize| {
        table.entry(table.entry(x, y) as usize, z) == table.entry(x, table.entry(y, z) as usize)
    };
    if n <= FULL_ASSOC_LIMIT {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if !check(x, y, z) {
                        return Verdict::Fail {
                            axiom: Axiom::Associativity,
                            witness: vec![x, y, z],
                        };
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..ASSOC_SAMPLES {
            let x = rng.gen_range(0..n);
            let y = rng.gen_range(0..n);
            let z = rng.gen_range(0..n);
            if !check(x, y, z) {
                return Verdict::Fail {
                    axiom: Axiom::Associativity,
                    witness: vec![x, y, z],
                };
            }
        }
    }

    Verdict::Pass
}

/// True iff the table is symmetric.
pub fn is_abelian(table: &CayleyTable) -> bool {
    let n = table.order;
    (0..n).all(|m| (m + 1..n).all(|k| table.entry(m, k) == table.entry(k, m)))
}

/// Structure report: identity index, per-element orders, and the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub identity: usize,
    pub orders: Vec<u64>,
    pub center: Vec<usize>,
}

/// Requires a verified table (products must stay in range and an identity
/// must exist).
pub fn analyze(table: &CayleyTable) -> Result<Analysis> {
    let n = table.order;
    let identity = (0..n)
        .find(|&e| {
            (0..n).all(|x| table.entry(e, x) as usize == x && table.entry(x, e) as usize == x)
        })
        .ok_or(Error::AxiomFailure {
            axiom: Axiom::Identity,
            witness: vec![],
        })?;
    let mut orders = Vec::with_capacity(n);
    for x in 0..n {
        let mut power = x;
        let mut k: u64 = 1;
        while power != identity {
            power = table.entry(power, x) as usize;
            k += 1;
            if k as usize > n {
                return Err(Error::AxiomFailure {
                    axiom: Axiom::Inverses,
                    witness: vec![x],
                });
            }
        }
        orders.push(k);
    }
    let center = (0..n)
        .filter(|&x| (0..n).all(|y| table.entry(x, y) == table.entry(y, x)))
        .collect();
    Ok(Analysis {
        identity,
        orders,
        center,
    })
}

/// Backtracking isomorphism search, identity mapped to identity, candidates
/// pruned by element order. Returns a witness bijection (a-index → b-index)
/// or `None`.
pub fn find_isomorphism(a: &CayleyTable, b: &CayleyTable) -> Result<Option<Vec<usize>>> {
    if a.order != b.order {
        return Ok(None);
    }
    let n = a.order;
    if n > ISO_CAP {
        return Err(Error::OrderTooLarge {
            order: n as u64,
            cap: ISO_CAP as u64,
        });
    }
    for t in [a, b] {
        if let Verdict::Fail { axiom, witness } = verify_group(t, 0) {
            return Err(Error::AxiomFailure { axiom, witness });
        }
    }
    let oa = analyze(a)?;
    let ob = analyze(b)?;
    let mut sa = oa.orders.clone();
    let mut sb = ob.orders.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(None);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[oa.identity] = ob.identity;
    used[ob.identity] = true;

    let search = Search {
        a,
        b,
        orders_a: oa.orders,
        orders_b: ob.orders,
        pending: (0..n).filter(|&x| x != oa.identity).collect(),
    };
    if search.dfs(0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

struct Search<'t> {
    a: &'t CayleyTable,
    b: &'t CayleyTable,
    orders_a: Vec<u64>,
    orders_b: Vec<u64>,
    pending: Vec<usize>,
}

impl Search<'_> {
    /// Forward check after assigning `u`: every already-mapped product must
    /// agree, and an unmapped product may not point at a taken image.
    fn consistent(&self, map: &[usize], used: &[bool], u: usize) -> bool {
        for x in 0..self.a.order() {
            if map[x] == usize::MAX {
                continue;
            }
            for (p, q) in [(u, x), (x, u)] {
                let w = self.a.entry(p, q) as usize;
                let target = self.b.entry(map[p], map[q]) as usize;
                if map[w] != usize::MAX {
                    if map[w] != target {
                        return false;
                    }
                } else if used[target] {
                    return false;
                }
            }
        }
        true
    }

    fn dfs(&self, depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if depth == self.pending.len() {
            let n = self.a.order();
            return (0..n).all(|x| {
                (0..n).all(|y| {
                    map[self.a.entry(x, y) as usize] == self.b.entry(map[x], map[y]) as usize
                })
            });
        }
        let u = self.pending[depth];
        for v in 0..self.a.order() {
            if used[v] || self.orders_b[v] != self.orders_a[u] {
                continue;
            }
            map[u] = v;
            used[v] = true;
            if self.consistent(map, used, u) && self.dfs(depth + 1, map, used) {
                return true;
            }
            map[u] = usize::MAX;
            used[v] = false;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(spec: &str) -> CayleyTable {
        build_table(&spec.parse().unwrap()).unwrap()
    }

    #[test]
    fn parse_grammar() {
        assert_eq!(
            "cyclic:4".parse::<GroupSpec>().unwrap(),
            GroupSpec::Cyclic(4)
        );
        assert_eq!(
            "dsum:2,2,3".parse::<GroupSpec>().unwrap(),
            GroupSpec::DirectSum(vec![2, 2, 3])
        );
        assert_eq!(
            "multmod:7".parse::<GroupSpec>().unwrap(),
            GroupSpec::MultMod(7)
        );
        assert_eq!(
            "metacyclic:q=17,a=2,c=5,r=3".parse::<GroupSpec>().unwrap(),
            GroupSpec::Metacyclic {
                q: 17,
                a: 2,
                c: 5,
                r: 3
            }
        );
        assert_eq!(
            "metacyclic:q=4,a=1,c=2,r=-1".parse::<GroupSpec>().unwrap(),
            GroupSpec::Metacyclic {
                q: 4,
                a: 1,
                c: 2,
                r: -1
            }
        );
        assert_eq!("sym:4".parse::<GroupSpec>().unwrap(), GroupSpec::Sym(4));
        for bad in [
            "",
            "cyclic",
            "cyclic:x",
            "weird:3",
            "metacyclic:q=2",
            "dsum:",
        ] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad} should not parse");
        }
        let spec: GroupSpec = "metacyclic:q=8,a=1,c=2,r=5".parse().unwrap();
        assert_eq!(spec.describe().parse::<GroupSpec>().unwrap(), spec);
    }

    #[test]
    fn orders_without_building() {
        assert_eq!(
            "cyclic:12".parse::<GroupSpec>().unwrap().order().unwrap(),
            12
        );
        assert_eq!(
            "dsum:2,6".parse::<GroupSpec>().unwrap().order().unwrap(),
            12
        );
        assert_eq!(
            "multmod:7".parse::<GroupSpec>().unwrap().order().unwrap(),
            6
        );
        assert_eq!(
            "dihedral:3".parse::<GroupSpec>().unwrap().order().unwrap(),
            6
        );
        assert_eq!(
            "dicyclic:3".parse::<GroupSpec>().unwrap().order().unwrap(),
            12
        );
        assert_eq!("sym:5".parse::<GroupSpec>().unwrap().order().unwrap(), 120);
        assert_eq!("alt:5".parse::<GroupSpec>().unwrap().order().unwrap(), 60);
        assert!("cyclic:1".parse::<GroupSpec>().unwrap().order().is_err());
    }

    #[test]
    fn cyclic_four_table_golden() {
        let t = table("cyclic:4");
        let expected = [[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]];
        for (m, row) in expected.iter().enumerate() {
            for (n, &want) in row.iter().enumerate() {
                assert_eq!(t.entry(m, n), want);
            }
        }
        assert_eq!(
            t.to_tsv(false),
            "0\t1\t2\t3\n1\t2\t3\t0\n2\t3\t0\t1\n3\t0\t1\t2\n"
        );
    }

    #[test]
    fn klein_table_golden() {
        let t = table("dsum:2,2");
        let expected = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
        for (m, row) in expected.iter().enumerate() {
            for (n, &want) in row.iter().enumerate() {
                assert_eq!(t.entry(m, n), want);
            }
        }
    }

    #[test]
    fn family_tables_verify() {
        for spec in [
            "cyclic:12",
            "dsum:2,6",
            "dsum:3,4",
            "dsum:2,2,3",
            "dihedral:3",
            "dicyclic:2",
            "metacyclic:q=8,a=1,c=2,r=5",
            "sym:3",
            "alt:4",
            "multmod:7",
        ] {
            let t = table(spec);
            assert_eq!(verify_group(&t, 0), Verdict::Pass, "{spec}");
        }
    }

    #[test]
    fn abelian_flags() {
        assert!(is_abelian(&table("cyclic:9")));
        assert!(is_abelian(&table("dsum:2,2,3")));
        assert!(!is_abelian(&table("dihedral:3")));
        assert!(!is_abelian(&table("sym:3")));
    }

    #[test]
    fn composite_multmod_fails_at_the_first_zero_product() {
        let t = table("multmod:8");
        match verify_group(&t, 0) {
            Verdict::Fail { axiom, witness } => {
                assert_eq!(axiom, Axiom::Closure);
                assert_eq!(witness, vec![1, 3]); // element values 2 and 4
                assert_eq!(t.witness_labels(&witness), "(2,4)");
            }
            Verdict::Pass => panic!("multmod:8 must not verify"),
        }
    }

    #[test]
    fn quaternion_table_is_labeled() {
        let t = table("dicyclic:2");
        let labels = t.labels().unwrap();
        assert_eq!(labels, &["1", "i", "-1", "-i", "j", "ij", "-j", "-ij"]);
        assert_eq!(t.label_of(t.entry(1, 1)), "-1");
    }

    #[test]
    fn analyze_small_groups() {
        let c5 = analyze(&table("cyclic:5")).unwrap();
        assert_eq!(c5.identity, 0);
        assert_eq!(c5.center, vec![0, 1, 2, 3, 4]);

        let q8 = analyze(&table("dicyclic:2")).unwrap();
        assert_eq!(q8.center, vec![0, 2]);
        assert_eq!(q8.orders, vec![1, 4, 2, 4, 4, 4, 4, 4]);

        let d6 = analyze(&table("dihedral:3")).unwrap();
        assert_eq!(d6.orders[1], 3);
        assert_eq!(d6.orders, vec![1, 3, 3, 2, 2, 2]);
    }

    #[test]
    fn isomorphism_claims() {
        let witness = find_isomorphism(&table("sym:3"), &table("dihedral:3")).unwrap();
        assert!(witness.is_some());

        assert_eq!(
            find_isomorphism(&table("cyclic:4"), &table("dsum:2,2")).unwrap(),
            None
        );
        assert_eq!(
            find_isomorphism(&table("dsum:2,2"), &table("cyclic:4")).unwrap(),
            None
        );

        // The order-4 dicyclic table has an order-4 element, so it is the
        // cyclic group, not the Klein group.
        assert!(find_isomorphism(&table("dicyclic:1"), &table("cyclic:4"))
            .unwrap()
            .is_some());
        assert_eq!(
            find_isomorphism(&table("dicyclic:1"), &table("dsum:2,2")).unwrap(),
            None
        );
    }

    #[test]
    fn isomorphism_is_symmetric_and_reflexive() {
        let a = table("dihedral:4");
        let b = table("metacyclic:q=4,a=1,c=2,r=-1");
        let ab = find_isomorphism(&a, &b).unwrap();
        let ba = find_isomorphism(&b, &a).unwrap();
        assert!(ab.is_some() && ba.is_some());
        let self_map = find_isomorphism(&a, &a).unwrap().unwrap();
        // the witness must be a homomorphic bijection; identity qualifies
        assert_eq!(self_map.len(), a.order());
    }

    #[test]
    fn isomorphism_witness_is_homomorphic() {
        let a = table("sym:3");
        let b = table("dihedral:3");
        let phi = find_isomorphism(&a, &b).unwrap().unwrap();
        for x in 0..a.order() {
            for y in 0..a.order() {
                assert_eq!(
                    phi[a.entry(x, y) as usize],
                    b.entry(phi[x], phi[y]) as usize
                );
            }
        }
    }

    #[test]
    fn iso_cap_enforced() {
        let a = table("cyclic:25");
        assert!(matches!(
            find_isomorphism(&a, &a),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn order_cap_enforced() {
        assert!(matches!(
            build_table(&GroupSpec::Sym(8)),
            Err(Error::OrderTooLarge { .. })
        ));
        assert!(matches!(
            build_table(&GroupSpec::Cyclic(20_000)),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn metacyclic_rejection_propagates() {
        let err = build_table(&"metacyclic:q=17,a=2,c=5,r=3".parse().unwrap()).unwrap_err();
        assert!(matches!(
            err,
            Error::AxiomFailure {
                axiom: Axiom::Associativity,
                ..
            }
        ));
    }

    #[test]
    fn sym3_index_table_golden() {
        let t = table("sym:3");
        let expected = [
            [0, 1, 2, 3, 4, 5],
            [1, 0, 3, 2, 5, 4],
            [2, 5, 4, 1, 0, 3],
            [3, 4, 5, 0, 1, 2],
            [4, 3, 0, 5, 2, 1],
            [5, 2, 1, 4, 3, 0],
        ];
        for (m, row) in expected.iter().enumerate() {
            for (n, &want) in row.iter().enumerate() {
                assert_eq!(t.entry(m, n), want);
            }
        }
    }

    #[test]
    fn element_orders_divide_the_group_order() {
        for spec in [
            "cyclic:12",
            "dihedral:6",
            "dicyclic:4",
            "sym:4",
            "alt:4",
            "dsum:2,6",
        ] {
            let t = table(spec);
            let report = analyze(&t).unwrap();
            for (x, order) in report.orders.iter().enumerate() {
                assert_eq!(
                    t.order() as u64 % order,
                    0,
                    "{spec}: element {x} has order {order}"
                );
            }
        }
    }

    #[test]
    fn row_identities_on_verified_tables() {
        for spec in ["cyclic:7", "dihedral:5", "dicyclic:3", "sym:4"] {
            let t = table(spec);
            assert!(verify_group(&t, 0).is_pass());
            let p = t.order() as u64;
            for m in 0..t.order() {
                let sum: u64 = (0..t.order()).map(|n| t.entry(m, n) as u64).sum();
                assert_eq!(sum, p * (p - 1) / 2);
            }
        }
    }
}
