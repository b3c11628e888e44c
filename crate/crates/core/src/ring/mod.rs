//! Finite rings given by operation tables, their ideals and ideal statistics.

mod elemset;
pub mod ideal;

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use elemset::ElemSet;
pub use ideal::{classify_ideals, enumerate_ideals, Ideal, IdealError, IdealStats, Sidedness};

/// Largest carrier accepted by [`build_ring`].
pub const MAX_RING_SIZE: usize = 1024;

/// How a ring is built.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RingSpec {
    /// Integers mod `k`.
    #[serde(rename = "Zn")]
    Zn { k: usize },
    /// Direct product with componentwise operations.
    #[serde(rename = "product")]
    Product { factors: Vec<RingSpec> },
    /// `Z_p[X]/(f)`, `f` given as coefficients, constant term first.
    #[serde(rename = "polyquot")]
    PolyQuot { p: usize, f: Vec<usize> },
    #[serde(rename = "table")]
    Table {
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

impl RingSpec {
    pub fn zn(k: usize) -> Self {
        RingSpec::Zn { k }
    }

    pub fn product(factors: impl IntoIterator<Item = RingSpec>) -> Self {
        RingSpec::Product { factors: factors.into_iter().collect() }
    }

    pub fn polyquot(p: usize, f: impl Into<Vec<usize>>) -> Self {
        RingSpec::PolyQuot { p, f: f.into() }
    }

    /// Short ASCII name, e.g. `Z2xZ4` or `Z2[X]/(X^2)`.
    pub fn name(&self) -> String {
        match self {
            RingSpec::Zn { k } => format!("Z{k}"),
            RingSpec::Product { factors } => factors
                .iter()
                .map(|f| match f {
                    RingSpec::Product { .. } => format!("({})", f.name()),
                    _ => f.name(),
                })
                .collect::<Vec<_>>()
                .join("x"),
            RingSpec::PolyQuot { p, f } => format!("Z{p}[X]/({})", poly_string(f, "X")),
            RingSpec::Table { name: Some(name), .. } => name.clone(),
            RingSpec::Table { add, .. } => format!("T{}", add.len()),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RingLaw {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    AddInverse,
    MulAssociative,
    MulIdentity,
    LeftDistributive,
    RightDistributive,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("invalid ring spec: {0}")]
    InvalidSpec(String),
    #[error("ring axiom {law:?} fails at {witness:?}")]
    RingAxiomViolation { law: RingLaw, witness: Vec<usize> },
}

/// A finite unital ring on the carrier `0..size`.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
    commutative: bool,
    spec: RingSpec,
    labels: Vec<String>,
    id: u64,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id && self.add == other.add && self.mul == other.mul
    }
}

impl Eq for FiniteRing {}

impl FiniteRing {
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size + y]
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.size + y]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn name(&self) -> String {
        self.spec.name()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// Fingerprint of the operation tables; ideals remember the ring they belong to by it.
    pub fn id(&self) -> u64 {
        self.id
    }

    fn from_tables(
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
        spec: RingSpec,
        labels: Vec<String>,
    ) -> Self {
        let size = labels.len();
        let commutative = (0..size).all(|x| (0..size).all(|y| mul[x * size + y] == mul[y * size + x]));
        let mut h = DefaultHasher::new();
        add.hash(&mut h);
        mul.hash(&mut h);
        zero.hash(&mut h);
        one.hash(&mut h);
        FiniteRing { size, add, mul, zero, one, commutative, spec, labels, id: h.finish() }
    }

    /// Exhaustive check of the ring axioms.
    pub fn check_axioms(&self) -> Result<(), RingError> {
        check_ring_axioms(self.size, &self.add, &self.mul, self.zero, self.one)
    }
}

pub fn build_ring(spec: &RingSpec) -> Result<FiniteRing, RingError> {
    match spec {
        RingSpec::Zn { k } => {
            let k = *k;
            if k < 2 {
                return Err(RingError::InvalidSpec(format!("Zn needs k >= 2, got {k}")));
            }
            if k > MAX_RING_SIZE {
                return Err(RingError::InvalidSpec(format!("Z{k} exceeds {MAX_RING_SIZE} elements")));
            }
            let add = (0..k * k).map(|i| (i / k + i % k) % k).collect();
            let mul = (0..k * k).map(|i| (i / k) * (i % k) % k).collect();
            let labels = (0..k).map(|i| i.to_string()).collect();
            Ok(FiniteRing::from_tables(add, mul, 0, 1 % k, spec.clone(), labels))
        }
        RingSpec::Product { factors } => {
            if factors.is_empty() {
                return Err(RingError::InvalidSpec("empty product".into()));
            }
            let rings = factors.iter().map(build_ring).collect::<Result<Vec<_>, _>>()?;
            let size = rings.iter().try_fold(1usize, |acc, r| acc.checked_mul(r.size)).unwrap_or(usize::MAX);
            if size > MAX_RING_SIZE {
                return Err(RingError::InvalidSpec(format!("product has {size} > {MAX_RING_SIZE} elements")));
            }
            Ok(product_ring(&rings, spec.clone()))
        }
        RingSpec::PolyQuot { p, f } => poly_quotient(*p, f, spec.clone()),
        RingSpec::Table { add, mul, zero, one, labels, .. } => {
            let n = add.len();
            if n == 0 {
                return Err(RingError::InvalidSpec("empty table".into()));
            }
            if n > MAX_RING_SIZE {
                return Err(RingError::InvalidSpec(format!("table has {n} > {MAX_RING_SIZE} elements")));
            }
            for (what, t) in [("add", add), ("mul", mul)] {
                if t.len() != n || t.iter().any(|r| r.len() != n) {
                    return Err(RingError::InvalidSpec(format!("{what} table is not {n}x{n}")));
                }
                if let Some(v) = t.iter().flatten().find(|&&v| v >= n) {
                    return Err(RingError::InvalidSpec(format!("{what} entry {v} out of range")));
                }
            }
            if *zero >= n || *one >= n {
                return Err(RingError::InvalidSpec("zero/one out of range".into()));
            }
            let labels = match labels {
                Some(l) if l.len() == n => l.clone(),
                Some(l) => return Err(RingError::InvalidSpec(format!("{} labels for {n} elements", l.len()))),
                None => (0..n).map(|i| i.to_string()).collect(),
            };
            let add: Vec<usize> = add.iter().flatten().copied().collect();
            let mul: Vec<usize> = mul.iter().flatten().copied().collect();
            check_ring_axioms(n, &add, &mul, *zero, *one)?;
            Ok(FiniteRing::from_tables(add, mul, *zero, *one, spec.clone(), labels))
        }
    }
}

/// Mixed-radix product: the first factor is the most significant digit.
fn product_ring(rings: &[FiniteRing], spec: RingSpec) -> FiniteRing {
    let sizes: Vec<usize> = rings.iter().map(|r| r.size).collect();
    let size: usize = sizes.iter().product();
    let digits = |mut x: usize| {
        let mut d = vec![0; sizes.len()];
        for i in (0..sizes.len()).rev() {
            d[i] = x % sizes[i];
            x /= sizes[i];
        }
        d
    };
    let compose = |d: &[usize]| d.iter().zip(&sizes).fold(0, |acc, (&di, &s)| acc * s + di);
    let all: Vec<Vec<usize>> = (0..size).map(digits).collect();
    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    for x in 0..size {
        for y in 0..size {
            let (dx, dy) = (&all[x], &all[y]);
            let s: Vec<usize> = rings.iter().enumerate().map(|(i, r)| r.add(dx[i], dy[i])).collect();
            let m: Vec<usize> = rings.iter().enumerate().map(|(i, r)| r.mul(dx[i], dy[i])).collect();
            add[x * size + y] = compose(&s);
            mul[x * size + y] = compose(&m);
        }
    }
    let zero = compose(&rings.iter().map(|r| r.zero).collect::<Vec<_>>());
    let one = compose(&rings.iter().map(|r| r.one).collect::<Vec<_>>());
    let labels = all
        .iter()
        .map(|d| {
            let parts: Vec<&str> = d.iter().enumerate().map(|(i, &di)| rings[i].label(di)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    FiniteRing::from_tables(add, mul, zero, one, spec, labels)
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn inverse_mod(a: usize, p: usize) -> usize {
    (1..p).find(|&b| a * b % p == 1).expect("nonzero element of a prime field is invertible")
}

/// `Z_p[X]/(f)`; elements are coefficient vectors, little-endian, indexed as `sum c_i p^i`.
fn poly_quotient(p: usize, f: &[usize], spec: RingSpec) -> Result<FiniteRing, RingError> {
    if !is_prime(p) {
        return Err(RingError::InvalidSpec(format!("{p} is not prime")));
    }
    let mut f: Vec<usize> = f.iter().map(|c| c % p).collect();
    while f.last() == Some(&0) {
        f.pop();
    }
    if f.len() < 2 {
        return Err(RingError::InvalidSpec("modulus must have degree >= 1".into()));
    }
    let deg = f.len() - 1;
    let size = p
        .checked_pow(deg as u32)
        .filter(|&s| s <= MAX_RING_SIZE)
        .ok_or_else(|| RingError::InvalidSpec(format!("Z{p}[X]/(f) exceeds {MAX_RING_SIZE} elements")))?;
    let lead_inv = inverse_mod(f[deg], p);
    let monic: Vec<usize> = f.iter().map(|c| c * lead_inv % p).collect();

    let coeffs = |mut x: usize| {
        let mut c = vec![0; deg];
        for ci in c.iter_mut() {
            *ci = x % p;
            x /= p;
        }
        c
    };
    let index = |c: &[usize]| c.iter().rev().fold(0, |acc, &ci| acc * p + ci);
    let all: Vec<Vec<usize>> = (0..size).map(coeffs).collect();

    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    for x in 0..size {
        for y in 0..size {
            let (a, b) = (&all[x], &all[y]);
            let s: Vec<usize> = a.iter().zip(b).map(|(u, v)| (u + v) % p).collect();
            add[x * size + y] = index(&s);
            let mut prod = vec![0; 2 * deg];
            for (i, &ai) in a.iter().enumerate() {
                for (j, &bj) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + ai * bj) % p;
                }
            }
            for k in (deg..prod.len()).rev() {
                let c = prod[k];
                if c == 0 {
                    continue;
                }
                for (i, &mi) in monic.iter().enumerate() {
                    let t = k - deg + i;
                    prod[t] = (prod[t] + p * p - c * mi % p) % p;
                }
            }
            mul[x * size + y] = index(&prod[..deg]);
        }
    }
    let labels = all.iter().map(|c| poly_string(c, "x")).collect();
    Ok(FiniteRing::from_tables(add, mul, 0, if deg >= 1 { 1 } else { 0 }, spec, labels))
}

/// Render little-endian coefficients as `1+x^2`-style text.
fn poly_string(c: &[usize], var: &str) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|(_, &ci)| ci != 0)
        .map(|(i, &ci)| {
            let coeff = if ci == 1 && i > 0 { String::new() } else { ci.to_string() };
            match i {
                0 => coeff,
                1 => format!("{coeff}{var}"),
                _ => format!("{coeff}{var}^{i}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn check_ring_axioms(n: usize, add: &[usize], mul: &[usize], zero: usize, one: usize) -> Result<(), RingError> {
    let a = |x: usize, y: usize| add[x * n + y];
    let m = |x: usize, y: usize| mul[x * n + y];
    let fail = |law, witness| Err(RingError::RingAxiomViolation { law, witness });
    for x in 0..n {
        if a(zero, x) != x || a(x, zero) != x {
            return fail(RingLaw::AddIdentity, vec![x]);
        }
        if !(0..n).any(|y| a(x, y) == zero) {
            return fail(RingLaw::AddInverse, vec![x]);
        }
        if m(one, x) != x || m(x, one) != x {
            return fail(RingLaw::MulIdentity, vec![x]);
        }
    }
    for x in 0..n {
        for y in 0..n {
            if a(x, y) != a(y, x) {
                return fail(RingLaw::AddCommutative, vec![x, y]);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if a(a(x, y), z) != a(x, a(y, z)) {
                    return fail(RingLaw::AddAssociative, vec![x, y, z]);
                }
                if m(m(x, y), z) != m(x, m(y, z)) {
                    return fail(RingLaw::MulAssociative, vec![x, y, z]);
                }
                if m(x, a(y, z)) != a(m(x, y), m(x, z)) {
                    return fail(RingLaw::LeftDistributive, vec![x, y, z]);
                }
                if m(a(y, z), x) != a(m(y, x), m(z, x)) {
                    return fail(RingLaw::RightDistributive, vec![x, y, z]);
                }
            }
        }
    }
    Ok(())
}

/// Tables of a spec-built ring, e.g. to re-enter it as a `Table` spec.
pub fn to_table_spec(r: &FiniteRing, name: Option<String>) -> RingSpec {
    let n = r.size;
    RingSpec::Table {
        add: r.add.chunks(n).map(|c| c.to_vec()).collect(),
        mul: r.mul.chunks(n).map(|c| c.to_vec()).collect(),
        zero: r.zero,
        one: r.one,
        name,
        labels: Some(r.labels.clone()),
    }
}
