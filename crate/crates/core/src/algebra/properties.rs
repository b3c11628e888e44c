use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::residuated::ResiduatedLattice;

/// Outcome of one identity check: `witness` is the first violating tuple in index order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { holds: true, witness: None }
    }

    pub fn fail(witness: Vec<usize>) -> Self {
        Verdict { holds: false, witness: Some(witness) }
    }

    pub fn from_witness(witness: Option<Vec<usize>>) -> Self {
        match witness {
            None => Verdict::pass(),
            Some(w) => Verdict::fail(w),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Residuated,
    #[serde(alias = "div")]
    Divisible,
    #[serde(alias = "prel", alias = "mtl")]
    Prelinear,
    Bl,
    Mv,
    Heyting,
    Chain,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::Residuated,
        Property::Divisible,
        Property::Prelinear,
        Property::Bl,
        Property::Mv,
        Property::Heyting,
        Property::Chain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Residuated => "residuated",
            Property::Divisible => "divisible",
            Property::Prelinear => "prelinear",
            Property::Bl => "bl",
            Property::Mv => "mv",
            Property::Heyting => "heyting",
            Property::Chain => "chain",
        }
    }

    pub fn parse(s: &str) -> Option<Property> {
        match s.to_ascii_lowercase().as_str() {
            "residuated" => Some(Property::Residuated),
            "div" | "divisible" => Some(Property::Divisible),
            "prel" | "prelinear" | "mtl" => Some(Property::Prelinear),
            "bl" => Some(Property::Bl),
            "mv" => Some(Property::Mv),
            "heyting" => Some(Property::Heyting),
            "chain" => Some(Property::Chain),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub residuated: Verdict,
    pub divisible: Verdict,
    pub prelinear: Verdict,
    pub bl: Verdict,
    pub mv: Verdict,
    pub heyting: Verdict,
    pub chain: Verdict,
}

impl PropertyReport {
    pub fn get(&self, p: Property) -> &Verdict {
        match p {
            Property::Residuated => &self.residuated,
            Property::Divisible => &self.divisible,
            Property::Prelinear => &self.prelinear,
            Property::Bl => &self.bl,
            Property::Mv => &self.mv,
            Property::Heyting => &self.heyting,
            Property::Chain => &self.chain,
        }
    }

    pub fn is_divisible(&self) -> bool {
        self.divisible.holds
    }

    pub fn is_prelinear(&self) -> bool {
        self.prelinear.holds
    }

    pub fn is_bl(&self) -> bool {
        self.bl.holds
    }

    pub fn is_mv(&self) -> bool {
        self.mv.holds
    }

    pub fn is_heyting(&self) -> bool {
        self.heyting.holds
    }

    pub fn is_chain(&self) -> bool {
        self.chain.holds
    }
}

fn first_pair(n: usize, bad: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| bad(x, y)).map(|(x, y)| vec![x, y])
}

fn first_triple(n: usize, bad: impl Fn(usize, usize, usize) -> bool) -> Option<Vec<usize>> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if bad(x, y, z) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

/// `x * (x -> y) = x ^ y`; witness `(x, y)`.
pub fn divisibility_witness(l: &ResiduatedLattice) -> Option<Vec<usize>> {
    first_pair(l.size(), |x, y| l.odot(x, l.arrow(x, y)) != l.meet(x, y))
}

/// `(x -> y) v (y -> x) = 1`; witness `(x, y)`.
pub fn prelinearity_witness(l: &ResiduatedLattice) -> Option<Vec<usize>> {
    first_pair(l.size(), |x, y| l.join(l.arrow(x, y), l.arrow(y, x)) != l.top())
}

pub fn check_properties(l: &ResiduatedLattice) -> PropertyReport {
    let n = l.size();
    let divisible = Verdict::from_witness(divisibility_witness(l));
    let prelinear = Verdict::from_witness(prelinearity_witness(l));
    let bl = if !divisible.holds { divisible.clone() } else { prelinear.clone() };
    let mv = if !bl.holds {
        bl.clone()
    } else {
        Verdict::from_witness((0..n).find(|&x| l.neg(l.neg(x)) != x).map(|x| vec![x]))
    };
    let heyting = Verdict::from_witness((0..n).find(|&x| l.odot(x, x) != x).map(|x| vec![x]));
    let chain = Verdict::from_witness(l.lattice().incomparable_pair().map(|(x, y)| vec![x, y]));
    PropertyReport { residuated: Verdict::pass(), divisible, prelinear, bl, mv, heyting, chain }
}

/// The three divisibility criteria evaluated independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityCriteria {
    /// `x * (x -> y) = x ^ y`.
    pub identity: Verdict,
    /// every `y <= x` factors as `y = z * x`; witness `(x, y)`.
    pub factorization: Verdict,
    /// `z -> (x * (x -> y)) = z -> (x ^ y)`; witness `(x, y, z)`.
    pub residuum_identity: Verdict,
}

impl DivisibilityCriteria {
    pub fn agree(&self) -> bool {
        self.identity.holds == self.factorization.holds && self.factorization.holds == self.residuum_identity.holds
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("divisibility criteria disagree: {0:?}")]
pub struct EquivalenceBroken(pub DivisibilityCriteria);

pub fn divisibility_criteria(l: &ResiduatedLattice) -> DivisibilityCriteria {
    let n = l.size();
    let identity = Verdict::from_witness(divisibility_witness(l));
    let factorization = Verdict::from_witness(first_pair(n, |x, y| l.leq(y, x) && !(0..n).any(|z| l.odot(z, x) == y)));
    let residuum_identity = Verdict::from_witness(first_triple(n, |x, y, z| {
        l.arrow(z, l.odot(x, l.arrow(x, y))) != l.arrow(z, l.meet(x, y))
    }));
    DivisibilityCriteria { identity, factorization, residuum_identity }
}

/// Shared truth value of the three divisibility criteria; an error if they ever disagree.
pub fn check_divisibility_equivalences(l: &ResiduatedLattice) -> Result<bool, EquivalenceBroken> {
    let c = divisibility_criteria(l);
    if c.agree() {
        Ok(c.identity.holds)
    } else {
        Err(EquivalenceBroken(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lattice::{chain, pentagon};
    use crate::algebra::residuated::meet_monoid;
    use crate::corpus;

    #[test]
    fn non_bl_divisible_is_divisible_not_prelinear() {
        let r = check_properties(&corpus::non_bl_divisible());
        assert!(r.is_divisible());
        assert!(!r.is_prelinear());
        // (a, b): (a -> b) v (b -> a) = c
        assert_eq!(r.prelinear.witness, Some(vec![1, 2]));
        let e = corpus::non_bl_divisible();
        assert_eq!(e.join(e.arrow(1, 2), e.arrow(2, 1)), 3);
        assert!(!r.is_bl());
        assert!(!r.is_mv());
    }

    #[test]
    fn goedel_three_chain() {
        let g = meet_monoid(chain(3)).unwrap();
        let r = check_properties(&g);
        assert!(r.is_heyting());
        assert!(r.is_bl());
        assert!(!r.is_mv());
        assert_eq!(r.mv.witness, Some(vec![1]));
        assert!(r.is_chain());
    }

    #[test]
    fn non_bl_divisible_divisibility_criteria_all_hold() {
        let c = divisibility_criteria(&corpus::non_bl_divisible());
        assert!(c.identity.holds && c.factorization.holds && c.residuum_identity.holds);
        assert_eq!(check_divisibility_equivalences(&corpus::non_bl_divisible()), Ok(true));
    }

    #[test]
    fn pentagon_meet_is_not_residuated() {
        // N5 is not distributive, so meet has no residuum on it.
        assert!(meet_monoid(pentagon()).is_err());
    }

    #[test]
    fn pentagon_carries_no_residuated_monoid() {
        // With 0 < a < b < 1 and c beside them, b = b*(a v c) = b*a v b*c forces b*a = b > a.
        assert!(crate::classify::enumerate::monoids_on(&pentagon()).is_empty());
    }

    #[test]
    fn non_divisible_algebras_fail_all_three_criteria() {
        for n in 2..=5 {
            for e in crate::classify::brute_catalog(n, false).unwrap() {
                let c = divisibility_criteria(&e.algebra);
                assert!(c.agree());
                assert_eq!(c.identity.holds, e.report.is_divisible());
            }
        }
    }

    #[test]
    fn two_chain_is_divisible() {
        let b = meet_monoid(chain(2)).unwrap();
        assert_eq!(check_divisibility_equivalences(&b), Ok(true));
    }
}
