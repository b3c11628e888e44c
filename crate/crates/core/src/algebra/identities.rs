//! Annihilator identities of multiplication rings, read in an abstract residuated lattice
//! with `Ann(u) = u*` and the ideal product as the monoid operation.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::properties::{divisibility_witness, Verdict};
use super::residuated::ResiduatedLattice;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub name: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub results: Vec<IdentityResult>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|r| r.verdict.holds)
    }

    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.results.iter().find(|r| r.name == name).map(|r| &r.verdict)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("identities need a divisible algebra; (div) fails at {witness:?}")]
pub struct PreconditionNotDivisible {
    pub witness: Vec<usize>,
}

/// Evaluate c1..c5 over all tuples.
///
/// * c1: `(x** -> x)* = 0`
/// * c2: `(x -> y)** = x** -> y**`
/// * c3: `(x * y)** = x** * (x** ^ y*)*`
/// * c4: `(x ^ y)** = x** ^ y**`
/// * c5: `y* <= x` implies `x -> (x * y)** = y**`
pub fn check_identities_c1_c5(l: &ResiduatedLattice) -> Result<IdentityReport, PreconditionNotDivisible> {
    if let Some(witness) = divisibility_witness(l) {
        return Err(PreconditionNotDivisible { witness });
    }
    let n = l.size();
    let nn = |x: usize| l.neg(l.neg(x));
    let unary = |bad: &dyn Fn(usize) -> bool| Verdict::from_witness((0..n).find(|&x| bad(x)).map(|x| vec![x]));
    let binary = |bad: &dyn Fn(usize, usize) -> bool| {
        Verdict::from_witness(
            (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| bad(x, y)).map(|(x, y)| vec![x, y]),
        )
    };

    let c1 = unary(&|x| l.neg(l.arrow(nn(x), x)) != l.bottom());
    let c2 = binary(&|x, y| nn(l.arrow(x, y)) != l.arrow(nn(x), nn(y)));
    let c3 = binary(&|x, y| nn(l.odot(x, y)) != l.odot(nn(x), l.neg(l.meet(nn(x), l.neg(y)))));
    let c4 = binary(&|x, y| nn(l.meet(x, y)) != l.meet(nn(x), nn(y)));
    let c5 = binary(&|x, y| l.leq(l.neg(y), x) && l.arrow(x, nn(l.odot(x, y))) != nn(y));

    let results = [("c1", c1), ("c2", c2), ("c3", c3), ("c4", c4), ("c5", c5)]
        .into_iter()
        .map(|(name, verdict)| IdentityResult { name: name.to_string(), verdict })
        .collect();
    Ok(IdentityReport { results })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lattice::chain;
    use crate::algebra::residuated::validate_residuated;
    use crate::corpus;

    #[test]
    fn non_bl_divisible_passes_c1_to_c5() {
        let r = check_identities_c1_c5(&corpus::non_bl_divisible()).unwrap();
        assert!(r.all_hold(), "{r:?}");
        assert_eq!(r.results.len(), 5);
    }

    #[test]
    fn non_divisible_input_is_rejected() {
        // drastic product on the 4-chain: x*y = 0 unless one side is the top
        let l = chain(4);
        let odot = vec![vec![0, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 0, 2], vec![0, 1, 2, 3]];
        let r = validate_residuated(l, odot, None).unwrap();
        let err = check_identities_c1_c5(&r).unwrap_err();
        assert_eq!(err.witness, vec![2, 1]);
    }
}
