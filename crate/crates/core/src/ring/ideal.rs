use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{ElemSet, FiniteRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Sidedness {
    Left,
    Right,
    #[default]
    #[serde(alias = "two-sided", alias = "two_sided")]
    Two,
}

impl std::fmt::Display for Sidedness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sidedness::Left => "left",
            Sidedness::Right => "right",
            Sidedness::Two => "two-sided",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("ideals belong to different rings")]
    MixedRings,
    #[error("operation needs a commutative ring; {ring} is not commutative")]
    NonCommutativeRing { ring: String },
}

/// A subset of a ring carrier closed under the ideal axioms of some sidedness.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    members: ElemSet,
    ring: u64,
}

impl Ideal {
    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn ring_id(&self) -> u64 {
        self.ring
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.iter().collect()
    }

    /// Wrap a member set without checking closure; callers guarantee it is an ideal of `r`.
    pub(crate) fn from_members(r: &FiniteRing, members: ElemSet) -> Ideal {
        Ideal { members, ring: r.id() }
    }
}

impl FiniteRing {
    pub fn zero_ideal(&self) -> Ideal {
        Ideal::from_members(self, ElemSet::from_iter(self.size(), [self.zero()]))
    }

    pub fn unit_ideal(&self) -> Ideal {
        Ideal::from_members(self, ElemSet::full(self.size()))
    }

    /// Additive closure of `seed` that is also closed under multiplication by ring elements on
    /// the requested side(s).
    pub fn ideal_generated(&self, seed: impl IntoIterator<Item = usize>, side: Sidedness) -> Ideal {
        let n = self.size();
        let mut set = ElemSet::from_iter(n, [self.zero()]);
        let mut members = vec![self.zero()];
        let mut queue: VecDeque<usize> = seed.into_iter().collect();
        while let Some(e) = queue.pop_front() {
            if !set.insert(e) {
                continue;
            }
            members.push(e);
            for &m in &members {
                queue.push_back(self.add(e, m));
            }
            for r in 0..n {
                if side != Sidedness::Right {
                    queue.push_back(self.mul(r, e));
                }
                if side != Sidedness::Left {
                    queue.push_back(self.mul(e, r));
                }
            }
        }
        Ideal::from_members(self, set)
    }

    pub fn principal_ideal(&self, a: usize) -> Ideal {
        Ideal::from_members(self, self.span(&[a], Sidedness::Two))
    }

    /// Members of the ideal generated by `gens`. With a unit, `R g` is the left ideal generated
    /// by `g`, so one-sided ideals and ideals of commutative rings are sums of such sets.
    fn span(&self, gens: &[usize], side: Sidedness) -> ElemSet {
        let n = self.size();
        let cyclic = |g: usize| match side {
            Sidedness::Right => ElemSet::from_iter(n, (0..n).map(|a| self.mul(g, a))),
            _ => ElemSet::from_iter(n, (0..n).map(|a| self.mul(a, g))),
        };
        if side == Sidedness::Two && !self.is_commutative() {
            return self.ideal_generated(gens.iter().copied(), side).members;
        }
        let mut acc = ElemSet::from_iter(n, [self.zero()]);
        for &g in gens {
            let c = cyclic(g);
            let mut next = ElemSet::empty(n);
            for a in acc.iter() {
                for b in c.iter() {
                    next.insert(self.add(a, b));
                }
            }
            acc = next;
        }
        acc
    }

    /// Whether `set` is closed under multiplication by ring elements on the given side(s).
    /// Assumes `set` is an additive subgroup.
    pub fn is_ideal(&self, set: &ElemSet, side: Sidedness) -> bool {
        set.iter().all(|x| {
            (0..self.size()).all(|r| {
                (side == Sidedness::Right || set.contains(self.mul(r, x)))
                    && (side == Sidedness::Left || set.contains(self.mul(x, r)))
            })
        })
    }

    fn same_ring(&self, ideals: &[&Ideal]) -> Result<(), IdealError> {
        if ideals.iter().all(|i| i.ring == self.id() && i.members.universe() == self.size()) {
            Ok(())
        } else {
            Err(IdealError::MixedRings)
        }
    }

    fn require_commutative(&self) -> Result<(), IdealError> {
        if self.is_commutative() {
            Ok(())
        } else {
            Err(IdealError::NonCommutativeRing { ring: self.name() })
        }
    }

    /// `I + J = {i + j}`.
    pub fn ideal_sum(&self, i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
        self.same_ring(&[i, j])?;
        self.require_commutative()?;
        let mut out = ElemSet::empty(self.size());
        for a in i.members.iter() {
            for b in j.members.iter() {
                out.insert(self.add(a, b));
            }
        }
        Ok(Ideal::from_members(self, out))
    }

    /// `I (x) J`: the ideal generated by all products `i j`.
    pub fn ideal_product(&self, i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
        self.same_ring(&[i, j])?;
        self.require_commutative()?;
        Ok(self.product_closure(i, j, Sidedness::Two))
    }

    /// Product of one-sided ideals: the `side` ideal generated by all `i j`.
    /// Accepted on noncommutative rings.
    pub fn one_sided_product(&self, i: &Ideal, j: &Ideal, side: Sidedness) -> Result<Ideal, IdealError> {
        self.same_ring(&[i, j])?;
        Ok(self.product_closure(i, j, side))
    }

    /// The products `i j` are already closed under multiplication by ring elements on the
    /// side(s) both factors absorb, so their additive closure is the product ideal.
    fn product_closure(&self, i: &Ideal, j: &Ideal, _side: Sidedness) -> Ideal {
        let mut prods = ElemSet::empty(self.size());
        for a in i.members.iter() {
            for b in j.members.iter() {
                prods.insert(self.mul(a, b));
            }
        }
        Ideal::from_members(self, self.additive_closure(&prods))
    }

    fn additive_closure(&self, set: &ElemSet) -> ElemSet {
        let n = self.size();
        let mut acc = ElemSet::from_iter(n, [self.zero()]);
        for g in set.iter() {
            if acc.contains(g) {
                continue;
            }
            let mut next = acc.clone();
            let mut m = g;
            while m != self.zero() {
                for a in acc.iter() {
                    next.insert(self.add(a, m));
                }
                m = self.add(m, g);
            }
            acc = next;
        }
        acc
    }

    /// `(J : I) = {x : x I is contained in J}`.
    pub fn ideal_quotient(&self, j: &Ideal, i: &Ideal) -> Result<Ideal, IdealError> {
        self.same_ring(&[i, j])?;
        self.require_commutative()?;
        let members = ElemSet::from_iter(
            self.size(),
            (0..self.size()).filter(|&x| i.members.iter().all(|a| j.members.contains(self.mul(x, a)))),
        );
        Ok(Ideal::from_members(self, members))
    }

    /// `Ann(I) = (0 : I)`.
    pub fn annihilator(&self, i: &Ideal) -> Result<Ideal, IdealError> {
        self.ideal_quotient(&self.zero_ideal(), i)
    }

    pub fn ideal_intersection(&self, i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
        self.same_ring(&[i, j])?;
        Ok(Ideal::from_members(self, i.members.intersection(&j.members)))
    }

    /// Generator description: `(0)`, `A`, `(g)` or `(g1,g2,...)` with the fewest generators,
    /// lowest indices first.
    pub fn describe_ideal(&self, ideal: &Ideal) -> String {
        self.describe_ideal_on(ideal, Sidedness::Two)
    }

    /// As [`FiniteRing::describe_ideal`], with generators taken on the given side.
    pub fn describe_ideal_on(&self, ideal: &Ideal, side: Sidedness) -> String {
        if ideal.len() == 1 {
            return "(0)".into();
        }
        if ideal.len() == self.size() {
            return "A".into();
        }
        let elems: Vec<usize> = ideal.members.iter().filter(|&x| x != self.zero()).collect();
        let generated = |gens: &[usize]| self.span(gens, side) == ideal.members;
        let show = |gens: &[usize]| {
            let names: Vec<&str> = gens.iter().map(|&g| self.label(g)).collect();
            format!("({})", names.join(","))
        };
        for &a in &elems {
            if generated(&[a]) {
                return show(&[a]);
            }
        }
        for (ia, &a) in elems.iter().enumerate() {
            for &b in &elems[ia + 1..] {
                if generated(&[a, b]) {
                    return show(&[a, b]);
                }
            }
        }
        for (ia, &a) in elems.iter().enumerate() {
            for (ib, &b) in elems.iter().enumerate().skip(ia + 1) {
                for &c in &elems[ib + 1..] {
                    if generated(&[a, b, c]) {
                        return show(&[a, b, c]);
                    }
                }
            }
        }
        show(&elems)
    }
}

/// All ideals of the given sidedness, sorted by cardinality then member list.
///
/// Every ideal is a sum of the principal ideals of its elements, so the ideals are the closure
/// of the principal ones under sums, explored breadth-first from the zero ideal.
pub fn enumerate_ideals(r: &FiniteRing, side: Sidedness) -> Vec<Ideal> {
    let n = r.size();
    let mut principal: Vec<ElemSet> = (0..n).map(|x| r.span(&[x], side)).collect();
    principal.sort();
    principal.dedup();

    let start = ElemSet::from_iter(n, [r.zero()]);
    let mut seen: HashSet<ElemSet> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(h) = queue.pop_front() {
        for p in &principal {
            if p.is_subset(&h) {
                continue;
            }
            let mut next = ElemSet::empty(n);
            for a in h.iter() {
                for b in p.iter() {
                    next.insert(r.add(a, b));
                }
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut ideals: Vec<Ideal> = seen.into_iter().map(|s| Ideal::from_members(r, s)).collect();
    ideals.sort_by(|a, b| a.members.cmp(&b.members));
    ideals
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealStats {
    pub n_ideals: usize,
    pub n_maximal: usize,
    pub n_prime: usize,
    pub is_local: bool,
    pub is_principal_ring: bool,
    /// Indices (into [`enumerate_ideals`] order) of maximal and prime ideals.
    pub maximal: Vec<usize>,
    pub prime: Vec<usize>,
    /// First ideal, in enumeration order, that no single element generates.
    pub non_principal: Option<usize>,
}

pub fn classify_ideals(r: &FiniteRing) -> Result<IdealStats, IdealError> {
    r.require_commutative()?;
    let ideals = enumerate_ideals(r, Sidedness::Two);
    let n = r.size();
    let proper: Vec<usize> = (0..ideals.len()).filter(|&k| ideals[k].len() < n).collect();
    let maximal: Vec<usize> = proper
        .iter()
        .copied()
        .filter(|&k| !proper.iter().any(|&l| l != k && ideals[k].is_subset(&ideals[l])))
        .collect();
    let prime: Vec<usize> = proper
        .iter()
        .copied()
        .filter(|&k| {
            let p = &ideals[k];
            (0..n).all(|a| (0..n).all(|b| !p.contains(r.mul(a, b)) || p.contains(a) || p.contains(b)))
        })
        .collect();
    let principal: HashSet<Ideal> = (0..n).map(|a| r.principal_ideal(a)).collect();
    let non_principal = (0..ideals.len()).find(|&k| !principal.contains(&ideals[k]));
    Ok(IdealStats {
        n_ideals: ideals.len(),
        n_maximal: maximal.len(),
        n_prime: prime.len(),
        is_local: maximal.len() == 1,
        is_principal_ring: non_principal.is_none(),
        maximal,
        prime,
        non_principal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::ring::{build_ring, RingSpec};

    fn ring(spec: RingSpec) -> FiniteRing {
        build_ring(&spec).unwrap()
    }

    /// Ideals of Z_k are the subgroups (d) for d | k.
    #[test]
    fn zn_ideals_match_divisors() {
        for k in 2..=32 {
            let r = ring(RingSpec::zn(k));
            let divisors = (1..=k).filter(|d| k % d == 0).count();
            assert_eq!(enumerate_ideals(&r, Sidedness::Two).len(), divisors, "Z{k}");
        }
    }

    #[test]
    fn z8_ideals_in_order() {
        let r = ring(RingSpec::zn(8));
        let ideals = enumerate_ideals(&r, Sidedness::Two);
        let members: Vec<Vec<usize>> = ideals.iter().map(|i| i.elements()).collect();
        assert_eq!(members, vec![vec![0], vec![0, 4], vec![0, 2, 4, 6], (0..8).collect::<Vec<_>>()]);
        let names: Vec<String> = ideals.iter().map(|i| r.describe_ideal(i)).collect();
        assert_eq!(names, vec!["(0)", "(4)", "(2)", "A"]);
    }

    #[test]
    fn z2xz2_ideals() {
        let r = ring(RingSpec::product([RingSpec::zn(2), RingSpec::zn(2)]));
        let ideals = enumerate_ideals(&r, Sidedness::Two);
        let members: Vec<Vec<usize>> = ideals.iter().map(|i| i.elements()).collect();
        assert_eq!(members, vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 1, 2, 3]]);
        let (c, b, e) = (&ideals[1], &ideals[2], &ideals[3]);
        assert_eq!(r.ideal_product(c, b).unwrap(), r.zero_ideal());
        assert_eq!(r.ideal_sum(c, b).unwrap(), *e);
    }

    #[test]
    fn z8_product_of_2_and_4_is_zero() {
        let r = ring(RingSpec::zn(8));
        let two = r.principal_ideal(2);
        let four = r.principal_ideal(4);
        assert_eq!(r.ideal_product(&two, &four).unwrap(), r.zero_ideal());
        assert_eq!(r.ideal_quotient(&four, &two).unwrap(), two);
    }

    #[test]
    fn annihilator_of_trivial_ideals() {
        for spec in [RingSpec::zn(12), RingSpec::polyquot(3, [0, 0, 1])] {
            let r = ring(spec);
            assert_eq!(r.annihilator(&r.zero_ideal()).unwrap(), r.unit_ideal());
            assert_eq!(r.annihilator(&r.unit_ideal()).unwrap(), r.zero_ideal());
        }
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let a = ring(RingSpec::zn(4));
        let b = ring(RingSpec::zn(6));
        assert_eq!(a.ideal_sum(&a.zero_ideal(), &b.zero_ideal()), Err(IdealError::MixedRings));
    }

    #[test]
    fn z12_statistics() {
        let s = classify_ideals(&ring(RingSpec::zn(12))).unwrap();
        assert_eq!((s.n_ideals, s.n_maximal, s.n_prime), (6, 2, 2));
        assert!(!s.is_local);
        assert!(s.is_principal_ring);
    }

    #[test]
    fn z8_is_local() {
        let s = classify_ideals(&ring(RingSpec::zn(8))).unwrap();
        assert_eq!((s.n_maximal, s.n_prime), (1, 1));
        assert!(s.is_local);
    }

    #[test]
    fn three_dimensional_local_ring_is_not_principal() {
        let r = ring(corpus::non_multiplication_ring());
        let s = classify_ideals(&r).unwrap();
        assert_eq!(s.n_ideals, 6);
        assert!(!s.is_principal_ring);
        let ideals = enumerate_ideals(&r, Sidedness::Two);
        let witness = &ideals[s.non_principal.unwrap()];
        assert_eq!(witness.len(), 4);
        assert_eq!(r.describe_ideal(witness), "(x,y)");
        for a in 0..r.size() {
            assert!([1, 2, 8].contains(&r.principal_ideal(a).len()));
        }
    }

    #[test]
    fn m2z2_has_five_left_ideals() {
        let r = ring(corpus::m2z2());
        assert!(!r.is_commutative());
        assert_eq!(enumerate_ideals(&r, Sidedness::Left).len(), 5);
        // M2(Z2) is simple: only the trivial two-sided ideals.
        assert_eq!(enumerate_ideals(&r, Sidedness::Two).len(), 2);
        assert!(matches!(classify_ideals(&r), Err(IdealError::NonCommutativeRing { .. })));
        let l = enumerate_ideals(&r, Sidedness::Left);
        assert!(matches!(r.ideal_product(&l[1], &l[2]), Err(IdealError::NonCommutativeRing { .. })));
    }
}
