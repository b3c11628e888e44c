//! Enumeration of residuated lattices of a given size, by exhaustive search over monoid tables
//! and by generation from ordinal and direct products.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::canonical::canonicalize;
use super::skeleton::enumerate_lattice_skeletons;
use super::ClassifyError;
use crate::algebra::{check_properties, validate_residuated, FiniteLattice, PropertyReport, ResiduatedLattice};
use crate::io::LatticeFile;
use crate::ordinal::{direct_product, evaluate_expr, ordinal_product, AlgebraExpr};

/// Largest size the exhaustive search runs without an explicit override.
pub const BRUTE_GUARD: usize = 6;
/// Largest size the exhaustive search runs at all.
pub const BRUTE_HARD_LIMIT: usize = 8;
/// Largest size the generator runs.
pub const GENERATE_GUARD: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassFilter {
    Residuated,
    Mtl,
    Divisible,
    Bl,
    Mv,
    Heyting,
    DivisibleNotBl,
    DivisibleChain,
    BlChain,
}

impl ClassFilter {
    pub const ALL: [ClassFilter; 9] = [
        ClassFilter::Residuated,
        ClassFilter::Mtl,
        ClassFilter::Divisible,
        ClassFilter::Bl,
        ClassFilter::Mv,
        ClassFilter::Heyting,
        ClassFilter::DivisibleNotBl,
        ClassFilter::DivisibleChain,
        ClassFilter::BlChain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassFilter::Residuated => "residuated",
            ClassFilter::Mtl => "mtl",
            ClassFilter::Divisible => "divisible",
            ClassFilter::Bl => "bl",
            ClassFilter::Mv => "mv",
            ClassFilter::Heyting => "heyting",
            ClassFilter::DivisibleNotBl => "divisible-not-bl",
            ClassFilter::DivisibleChain => "divisible-chain",
            ClassFilter::BlChain => "bl-chain",
        }
    }

    pub fn matches(self, r: &PropertyReport) -> bool {
        match self {
            ClassFilter::Residuated => true,
            ClassFilter::Mtl => r.is_prelinear(),
            ClassFilter::Divisible => r.is_divisible(),
            ClassFilter::Bl => r.is_bl(),
            ClassFilter::Mv => r.is_mv(),
            ClassFilter::Heyting => r.is_heyting(),
            ClassFilter::DivisibleNotBl => r.is_divisible() && !r.is_bl(),
            ClassFilter::DivisibleChain => r.is_divisible() && r.is_chain(),
            ClassFilter::BlChain => r.is_bl() && r.is_chain(),
        }
    }

    /// Whether every member of the class is divisible, so the generator covers it.
    pub fn within_divisible(self) -> bool {
        !matches!(self, ClassFilter::Residuated | ClassFilter::Mtl)
    }
}

impl fmt::Display for ClassFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassFilter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.to_ascii_lowercase().replace('_', "-");
        let alias = match s.as_str() {
            "div" => "divisible",
            "prel" | "prelinear" => "mtl",
            "div-not-bl" => "divisible-not-bl",
            "div-chain" => "divisible-chain",
            other => other,
        };
        ClassFilter::ALL.into_iter().find(|c| c.name() == alias).ok_or_else(|| format!("unknown class filter `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Generate,
    /// Run both and fail on any disagreement.
    Both,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "brute" => Ok(Method::Brute),
            "generate" => Ok(Method::Generate),
            "both" => Ok(Method::Both),
            _ => Err(format!("unknown method `{s}`")),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::Generate => "generate",
            Method::Both => "both",
        })
    }
}

/// One isomorphism class: a representative labelled bottom-up and its canonical key.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: Vec<u16>,
    pub algebra: ResiduatedLattice,
    pub report: PropertyReport,
}

impl CatalogEntry {
    fn new(l: &ResiduatedLattice) -> Self {
        let (canon, key) = canonicalize(l);
        let algebra = bottom_up(&canon);
        let report = check_properties(&algebra);
        CatalogEntry { key, algebra, report }
    }

    pub fn expr(&self) -> Option<&AlgebraExpr> {
        self.algebra.provenance()
    }
}

/// Relabel along a linear extension: by down-set size, ties by current index. Deterministic on
/// canonical input, and puts the bottom at 0 and the top last.
fn bottom_up(l: &ResiduatedLattice) -> ResiduatedLattice {
    let n = l.size();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| ((0..n).filter(|&y| l.leq(y, x)).count(), x));
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    l.permuted(&perm)
}

fn guard_brute(n: usize, allow_large: bool) -> Result<(), ClassifyError> {
    let max = if allow_large { BRUTE_HARD_LIMIT } else { BRUTE_GUARD };
    if n > max {
        return Err(ClassifyError::SizeGuardExceeded { n, max });
    }
    Ok(())
}

/// Every residuated lattice with `n` elements, one per isomorphism class, sorted by key.
pub fn brute_catalog(n: usize, allow_large: bool) -> Result<Vec<CatalogEntry>, ClassifyError> {
    guard_brute(n, allow_large)?;
    let skeletons = enumerate_lattice_skeletons(n)?;
    let found: Vec<ResiduatedLattice> = skeletons.par_iter().flat_map_iter(monoids_on).collect();
    let mut classes: BTreeMap<Vec<u16>, CatalogEntry> = BTreeMap::new();
    for l in &found {
        let e = CatalogEntry::new(l);
        classes.entry(e.key.clone()).or_insert(e);
    }
    Ok(classes.into_values().collect())
}

const UNSET: u8 = u8::MAX;

struct Search<'a> {
    lattice: &'a FiniteLattice,
    n: usize,
    table: Vec<u8>,
    pairs: Vec<(usize, usize)>,
    out: Vec<ResiduatedLattice>,
}

/// All residuated commutative monoids on `lattice`. Bottom absorbs and top is the unit, so
/// only products of middle elements are searched; each is bounded by the meet.
pub fn monoids_on(lattice: &FiniteLattice) -> Vec<ResiduatedLattice> {
    let n = lattice.size();
    let (bot, top) = (lattice.bottom(), lattice.top());
    let mut table = vec![UNSET; n * n];
    for x in 0..n {
        table[bot * n + x] = bot as u8;
        table[x * n + bot] = bot as u8;
        table[top * n + x] = x as u8;
        table[x * n + top] = x as u8;
    }
    let middle: Vec<usize> = (0..n).filter(|&x| x != bot && x != top).collect();
    let pairs = middle.iter().enumerate().flat_map(|(i, &x)| middle[i..].iter().map(move |&y| (x, y))).collect();
    let mut s = Search { lattice, n, table, pairs, out: Vec::new() };
    s.run(0);
    s.out
}

impl Search<'_> {
    fn get(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.table[x * self.n + y];
        (v != UNSET).then_some(v as usize)
    }

    fn set(&mut self, x: usize, y: usize, v: u8) {
        let n = self.n;
        self.table[x * n + y] = v;
        self.table[y * n + x] = v;
    }

    fn run(&mut self, k: usize) {
        let Some(&(x, y)) = self.pairs.get(k) else {
            self.leaf();
            return;
        };
        let bound = self.lattice.meet(x, y);
        for v in 0..self.n {
            if !self.lattice.leq(v, bound) {
                continue;
            }
            self.set(x, y, v as u8);
            if self.monotone_at(x, y, v) && self.associative() {
                self.run(k + 1);
            }
        }
        self.set(x, y, UNSET);
    }

    fn monotone_at(&self, x: usize, y: usize, v: usize) -> bool {
        let l = self.lattice;
        (0..self.n).all(|a| {
            (0..self.n).all(|b| match self.get(a, b) {
                None => true,
                Some(w) => {
                    (!(l.leq(a, x) && l.leq(b, y)) || l.leq(w, v)) && (!(l.leq(x, a) && l.leq(y, b)) || l.leq(v, w))
                }
            })
        })
    }

    fn associative(&self) -> bool {
        let n = self.n;
        for p in 0..n {
            for q in 0..n {
                let Some(pq) = self.get(p, q) else { continue };
                for r in 0..n {
                    let (Some(left), Some(qr)) = (self.get(pq, r), self.get(q, r)) else { continue };
                    if let Some(right) = self.get(p, qr) {
                        if left != right {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn leaf(&mut self) {
        let n = self.n;
        let rows = (0..n).map(|x| (0..n).map(|y| self.table[x * n + y] as usize).collect()).collect();
        if let Ok(l) = validate_residuated(self.lattice.clone(), rows, None) {
            self.out.push(l);
        }
    }
}

/// BL-algebras of sizes `0..=max`, indexed by size, generated from finite MV-algebras, ordinal
/// products with a chain on the left, and direct products.
pub fn bl_catalogs(max: usize) -> Result<Vec<Vec<CatalogEntry>>, ClassifyError> {
    if max > GENERATE_GUARD {
        return Err(ClassifyError::SizeGuardExceeded { n: max, max: GENERATE_GUARD });
    }
    let mut by_size: Vec<Vec<CatalogEntry>> = vec![Vec::new(); max + 1];
    for n in 2..=max {
        let mut found: Vec<ResiduatedLattice> = Vec::new();
        for factors in factorizations(n) {
            let ks: Vec<usize> = factors.iter().map(|&f| 1 << (f - 1)).collect();
            let e = if ks.len() == 1 { AlgebraExpr::zn(ks[0]) } else { AlgebraExpr::zn_product(&ks) };
            found.push(evaluate_expr(&e).expect("ideal lattice of a ring is residuated"));
        }
        for i in 2..n {
            let j = n + 1 - i;
            for lower in by_size[i].iter().filter(|e| e.report.is_chain()) {
                for upper in &by_size[j] {
                    found.push(ordinal_product(&lower.algebra, &upper.algebra).expect("catalog entries are BL"));
                }
            }
        }
        for a in 2..n {
            if n % a != 0 || a > n / a {
                continue;
            }
            for l in &by_size[a] {
                for r in &by_size[n / a] {
                    found.push(direct_product(&l.algebra, &r.algebra));
                }
            }
        }
        by_size[n] = dedup(&found);
        debug_assert!(by_size[n].iter().all(|e| e.report.is_bl()));
    }
    Ok(by_size)
}

/// Divisible residuated lattices with `n` elements: the BL-algebras plus ordinal products with
/// a non-chain BL-algebra on the left.
pub fn generate_catalog(n: usize) -> Result<Vec<CatalogEntry>, ClassifyError> {
    let bl = bl_catalogs(n)?;
    let mut found: Vec<ResiduatedLattice> = bl[n].iter().map(|e| e.algebra.clone()).collect();
    for i in 2..n {
        let j = n + 1 - i;
        for lower in bl[i].iter().filter(|e| !e.report.is_chain()) {
            for upper in &bl[j] {
                found.push(ordinal_product(&lower.algebra, &upper.algebra).expect("catalog entries are BL"));
            }
        }
    }
    let mut out = dedup(&found);
    out.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(out)
}

/// First representative of each class, in input order.
fn dedup(found: &[ResiduatedLattice]) -> Vec<CatalogEntry> {
    let mut seen = std::collections::HashSet::new();
    found
        .iter()
        .filter_map(|l| {
            let e = CatalogEntry::new(l);
            seen.insert(e.key.clone()).then_some(e)
        })
        .collect()
}

/// Multisets of factors `>= 2` with product `n`, non-decreasing.
fn factorizations(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 1 {
            out.push(cur.clone());
            return;
        }
        for f in min..=n {
            if n.is_multiple_of(f) {
                cur.push(f);
                go(n / f, f, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, 2, &mut Vec::new(), &mut out);
    out.sort_by_key(|f| f.len());
    out
}

#[derive(Clone, Debug)]
pub struct Representative {
    pub algebra: ResiduatedLattice,
    pub report: PropertyReport,
}

impl Representative {
    pub fn expr(&self) -> Option<&AlgebraExpr> {
        self.algebra.provenance()
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub n: usize,
    pub filter: ClassFilter,
    pub method: Method,
    pub count: usize,
    pub representatives: Vec<Representative>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumerateOptions {
    /// Lift the exhaustive-search guard from `BRUTE_GUARD` to `BRUTE_HARD_LIMIT`.
    pub allow_large: bool,
    /// Worker threads for the exhaustive search; `None` uses the global pool.
    pub threads: Option<usize>,
}

pub fn enumerate_algebras(
    n: usize,
    filter: ClassFilter,
    method: Method,
    opts: EnumerateOptions,
) -> Result<ClassificationReport, ClassifyError> {
    match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| ClassifyError::ThreadPool(e.to_string()))?
            .install(|| enumerate_inner(n, filter, method, opts)),
        None => enumerate_inner(n, filter, method, opts),
    }
}

fn enumerate_inner(
    n: usize,
    filter: ClassFilter,
    method: Method,
    opts: EnumerateOptions,
) -> Result<ClassificationReport, ClassifyError> {
    if n < 2 {
        return Err(ClassifyError::SizeTooSmall { n });
    }
    let entries = match method {
        Method::Brute => {
            let brute = brute_catalog(n, opts.allow_large)?;
            let generated = if n <= GENERATE_GUARD { generate_catalog(n)? } else { Vec::new() };
            with_provenance(filter_entries(brute, filter), &generated)
        }
        Method::Generate => {
            if !filter.within_divisible() {
                return Err(ClassifyError::UnsupportedFilter { filter, method });
            }
            filter_entries(generate_catalog(n)?, filter)
        }
        Method::Both => {
            let brute = filter_entries(brute_catalog(n, opts.allow_large)?, filter);
            if !filter.within_divisible() {
                return Err(ClassifyError::UnsupportedFilter { filter, method });
            }
            let generated = filter_entries(generate_catalog(n)?, filter);
            cross_check(n, filter, &brute, &generated)?;
            with_provenance(brute, &generated)
        }
    };
    let representatives: Vec<Representative> =
        entries.into_iter().map(|e| Representative { algebra: e.algebra, report: e.report }).collect();
    Ok(ClassificationReport { n, filter, method, count: representatives.len(), representatives })
}

fn filter_entries(entries: Vec<CatalogEntry>, filter: ClassFilter) -> Vec<CatalogEntry> {
    entries.into_iter().filter(|e| filter.matches(&e.report)).collect()
}

/// Copy expression provenance onto brute-force classes from generated classes with the same key.
pub fn with_provenance(mut brute: Vec<CatalogEntry>, generated: &[CatalogEntry]) -> Vec<CatalogEntry> {
    let by_key: BTreeMap<&[u16], &CatalogEntry> = generated.iter().map(|e| (e.key.as_slice(), e)).collect();
    for e in &mut brute {
        if let Some(g) = by_key.get(e.key.as_slice()) {
            e.algebra = e.algebra.clone().with_provenance(g.expr().cloned());
        }
    }
    brute
}

/// `MethodMismatch` unless both lists hold the same classes.
pub fn cross_check(
    n: usize,
    filter: ClassFilter,
    brute: &[CatalogEntry],
    generated: &[CatalogEntry],
) -> Result<(), ClassifyError> {
    let a: Vec<&[u16]> = brute.iter().map(|e| e.key.as_slice()).collect();
    let mut b: Vec<&[u16]> = generated.iter().map(|e| e.key.as_slice()).collect();
    b.sort();
    if a != b {
        return Err(ClassifyError::MethodMismatch { n, filter, brute: a.len(), generate: b.len() });
    }
    Ok(())
}

#[derive(Serialize)]
struct RepresentativeRecord {
    expr: Option<String>,
    lattice: LatticeFile,
}

#[derive(Serialize)]
struct ReportRecord {
    n: usize,
    class: String,
    method: String,
    count: usize,
    representatives: Vec<RepresentativeRecord>,
}

impl ClassificationReport {
    pub fn to_json(&self) -> serde_json::Value {
        let rec = ReportRecord {
            n: self.n,
            class: self.filter.to_string(),
            method: self.method.to_string(),
            count: self.count,
            representatives: self
                .representatives
                .iter()
                .map(|r| RepresentativeRecord {
                    expr: r.expr().map(|e| e.to_string()),
                    lattice: LatticeFile::from_algebra(&r.algebra),
                })
                .collect(),
        };
        serde_json::to_value(rec).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let noun = if self.count == 1 { "class" } else { "classes" };
        let mut s =
            format!("n = {}, class = {}, method = {}: {} {noun}\n", self.n, self.filter, self.method, self.count);
        for (i, r) in self.representatives.iter().enumerate() {
            let expr = r.expr().map_or("no expression provenance".to_string(), |e| e.to_string());
            let mut flags = vec![];
            for (on, name) in [
                (r.report.is_chain(), "chain"),
                (r.report.is_bl(), "BL"),
                (r.report.is_mv(), "MV"),
                (r.report.is_heyting(), "Heyting"),
                (r.report.is_divisible(), "div"),
                (r.report.is_prelinear(), "prel"),
            ] {
                if on {
                    flags.push(name);
                }
            }
            s.push_str(&format!("{:>4}  {}  [{}]\n", i + 1, expr, flags.join(", ")));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lattice::chain;
    use crate::classify::are_isomorphic;
    use crate::corpus;

    #[test]
    fn factorizations_of_twelve() {
        assert_eq!(factorizations(12), vec![vec![12], vec![2, 6], vec![3, 4], vec![2, 2, 3]]);
    }

    #[test]
    fn three_chain_has_two_monoids() {
        // Lukasiewicz and Goedel 3-chains.
        assert_eq!(monoids_on(&chain(3)).len(), 2);
    }

    #[test]
    fn brute_finds_the_non_bl_class() {
        let cat = brute_catalog(5, false).unwrap();
        let div: Vec<_> = cat.iter().filter(|e| ClassFilter::DivisibleNotBl.matches(&e.report)).collect();
        assert_eq!(div.len(), 1);
        assert!(are_isomorphic(&div[0].algebra, &corpus::non_bl_divisible()).is_some());
    }

    #[test]
    fn generated_bl_counts() {
        let bl = bl_catalogs(6).unwrap();
        let counts: Vec<usize> = (2..=6).map(|n| bl[n].len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 9, 20]);
        let chains: Vec<usize> = (2..=6).map(|n| bl[n].iter().filter(|e| e.report.is_chain()).count()).collect();
        assert_eq!(chains, vec![1, 2, 4, 8, 16]);
    }

    #[test]
    fn generate_rejects_non_divisible_filter() {
        let err = enumerate_algebras(4, ClassFilter::Mtl, Method::Generate, EnumerateOptions::default());
        assert!(matches!(err, Err(ClassifyError::UnsupportedFilter { .. })));
    }

    #[test]
    fn brute_guard() {
        let err = enumerate_algebras(7, ClassFilter::Bl, Method::Brute, EnumerateOptions::default());
        assert!(matches!(err, Err(ClassifyError::SizeGuardExceeded { n: 7, max: 6 })));
    }

    #[test]
    fn filter_names_parse() {
        for f in ClassFilter::ALL {
            assert_eq!(f.name().parse::<ClassFilter>().unwrap(), f);
        }
        assert_eq!("div".parse::<ClassFilter>().unwrap(), ClassFilter::Divisible);
    }
}
