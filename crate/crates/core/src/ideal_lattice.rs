//! The residuated lattice of ideals of a finite commutative ring and the ring-theoretic
//! properties decided through it.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::identities::IdentityResult;
use crate::algebra::{
    check_properties, validate_lattice, validate_residuated, RawLattice, ResiduatedError, ResiduatedLattice, Verdict,
};
use crate::ordinal::AlgebraExpr;
use crate::ring::{enumerate_ideals, FiniteRing, Ideal, IdealError, Sidedness};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IdealLatticeError {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("ideal lattice failed validation: {0}")]
    ValidationFailed(String),
    #[error("multiplication-ring criteria disagree: {0:?}")]
    CriteriaDisagree(MultiplicationCriteria),
    #[error("one-sided ideal structure is not residuated: {0}")]
    NotResiduated(ResiduatedError),
    #[error("{ring} is not a multiplication ring; (I,J) = {witness:?} violates I(J:I) = I^J")]
    PreconditionNotMultiplication { ring: String, witness: Vec<usize> },
}

/// `Id(A)` with `order = subset`, `meet = intersection`, `join = +`, `odot = product`,
/// `arrow = (J:I)`.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    ring: FiniteRing,
    ideals: Vec<Ideal>,
    algebra: ResiduatedLattice,
}

impl IdealLattice {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    /// Ideals in [`enumerate_ideals`] order; index `k` is carrier element `k` of the algebra.
    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn algebra(&self) -> &ResiduatedLattice {
        &self.algebra
    }

    pub fn into_algebra(self) -> ResiduatedLattice {
        self.algebra
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn index_of(&self, ideal: &Ideal) -> Option<usize> {
        self.ideals.iter().position(|i| i == ideal)
    }
}

pub fn build_ideal_lattice(ring: &FiniteRing) -> Result<IdealLattice, IdealLatticeError> {
    if !ring.is_commutative() {
        return Err(IdealError::NonCommutativeRing { ring: ring.name() }.into());
    }
    let ideals = enumerate_ideals(ring, Sidedness::Two);
    let index: HashMap<&Ideal, usize> = ideals.iter().enumerate().map(|(k, i)| (i, k)).collect();
    let lookup = |i: Ideal| -> Result<usize, IdealLatticeError> {
        index
            .get(&i)
            .copied()
            .ok_or_else(|| IdealLatticeError::ValidationFailed(format!("{i:?} missing from enumeration")))
    };
    let m = ideals.len();
    let leq = ideals.iter().map(|a| ideals.iter().map(|b| a.is_subset(b)).collect()).collect();
    let mut meet = vec![vec![0; m]; m];
    let mut join = vec![vec![0; m]; m];
    let mut odot = vec![vec![0; m]; m];
    let mut arrow = vec![vec![0; m]; m];
    for (x, a) in ideals.iter().enumerate() {
        for (y, b) in ideals.iter().enumerate() {
            meet[x][y] = lookup(ring.ideal_intersection(a, b)?)?;
            join[x][y] = lookup(ring.ideal_sum(a, b)?)?;
            odot[x][y] = lookup(ring.ideal_product(a, b)?)?;
            arrow[x][y] = lookup(ring.ideal_quotient(b, a)?)?;
        }
    }
    let labels: Vec<String> = ideals.iter().map(|i| ring.describe_ideal(i)).collect();
    let raw = RawLattice { size: m, leq, meet: Some(meet), join: Some(join), labels: Some(labels) };
    let lattice = validate_lattice(raw).map_err(|e| IdealLatticeError::ValidationFailed(e.to_string()))?;
    let algebra = validate_residuated(lattice, odot, Some(arrow))
        .map_err(|e| IdealLatticeError::ValidationFailed(e.to_string()))?
        .with_provenance(Some(AlgebraExpr::ring(ring.spec().clone())));
    Ok(IdealLattice { ring: ring.clone(), ideals, algebra })
}

/// The three multiplication-ring tests, each with the first failing ideal tuple (indices).
/// The one-sided ideals of a possibly noncommutative ring under inclusion, with the
/// one-sided ideal product as monoid, checked against the residuated-lattice axioms. The
/// lattice itself always exists; the error reports the first axiom that fails.
pub fn one_sided_ideal_structure(ring: &FiniteRing, side: Sidedness) -> Result<ResiduatedLattice, IdealLatticeError> {
    let ideals = enumerate_ideals(ring, side);
    let index: HashMap<&Ideal, usize> = ideals.iter().enumerate().map(|(k, i)| (i, k)).collect();
    let m = ideals.len();
    let leq = ideals.iter().map(|a| ideals.iter().map(|b| a.is_subset(b)).collect()).collect();
    let labels: Vec<String> = ideals.iter().map(|i| ring.describe_ideal(i)).collect();
    let raw = RawLattice { size: m, leq, meet: None, join: None, labels: Some(labels) };
    let lattice = validate_lattice(raw).map_err(|e| IdealLatticeError::ValidationFailed(e.to_string()))?;
    let mut odot = vec![vec![0; m]; m];
    for (x, a) in ideals.iter().enumerate() {
        for (y, b) in ideals.iter().enumerate() {
            odot[x][y] = index[&ring.one_sided_product(a, b, side)?];
        }
    }
    validate_residuated(lattice, odot, None).map_err(IdealLatticeError::NotResiduated)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicationCriteria {
    /// For every `J <= I` some `K` has `J = I K`; witness `(I, J)`.
    pub factorization: Verdict,
    /// `I (J:I) = I ^ J` for all `I, J`; witness `(I, J)`.
    pub quotient_identity: Verdict,
    /// `Id(A)` is divisible; witness `(x, y)` of the algebra.
    pub divisible: Verdict,
}

impl MultiplicationCriteria {
    pub fn agree(&self) -> bool {
        self.factorization.holds == self.quotient_identity.holds && self.quotient_identity.holds == self.divisible.holds
    }
}

pub fn multiplication_criteria(id: &IdealLattice) -> MultiplicationCriteria {
    let ring = &id.ring;
    let ideals = &id.ideals;
    let m = ideals.len();
    let prod = |a: &Ideal, b: &Ideal| ring.ideal_product(a, b).expect("commutative ring");

    let mut factorization = Verdict::pass();
    'outer: for (i, a) in ideals.iter().enumerate() {
        for (j, b) in ideals.iter().enumerate() {
            if b.is_subset(a) && !ideals.iter().any(|k| prod(a, k) == *b) {
                factorization = Verdict::fail(vec![i, j]);
                break 'outer;
            }
        }
    }

    let mut quotient_identity = Verdict::pass();
    'outer2: for i in 0..m {
        for j in 0..m {
            let (a, b) = (&ideals[i], &ideals[j]);
            let q = ring.ideal_quotient(b, a).expect("commutative ring");
            let lhs = prod(a, &q);
            let rhs = ring.ideal_intersection(a, b).expect("same ring");
            if lhs != rhs {
                quotient_identity = Verdict::fail(vec![i, j]);
                break 'outer2;
            }
        }
    }

    let divisible = check_properties(&id.algebra).divisible;
    MultiplicationCriteria { factorization, quotient_identity, divisible }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicationVerdict {
    pub holds: bool,
    /// `(I, J)` ideal indices violating `I (J:I) = I ^ J`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    pub criteria: MultiplicationCriteria,
}

/// Decide whether `ring` is a multiplication ring, cross-checking all three criteria.
pub fn is_multiplication_ring(ring: &FiniteRing) -> Result<MultiplicationVerdict, IdealLatticeError> {
    let id = build_ideal_lattice(ring)?;
    is_multiplication_lattice(&id)
}

pub fn is_multiplication_lattice(id: &IdealLattice) -> Result<MultiplicationVerdict, IdealLatticeError> {
    let criteria = multiplication_criteria(id);
    if !criteria.agree() {
        return Err(IdealLatticeError::CriteriaDisagree(criteria));
    }
    Ok(MultiplicationVerdict {
        holds: criteria.quotient_identity.holds,
        witness: criteria.quotient_identity.witness.clone(),
        criteria,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributivityReport {
    pub c6: IdentityResult,
    pub c7: IdentityResult,
}

impl DistributivityReport {
    pub fn all_hold(&self) -> bool {
        self.c6.verdict.holds && self.c7.verdict.holds
    }

    /// Ideal lattice distributive.
    pub fn is_arithmetical(&self) -> bool {
        self.c7.verdict.holds
    }
}

/// Evaluate on all ideal triples, with pairwise results recomputed by ring-level ideal
/// operations rather than read from the algebra tables:
/// c6 `I (J ^ K) = I J ^ I K` and c7 `I ^ (J + K) = (I ^ J) + (I ^ K)`.
pub fn distributivity_identities(id: &IdealLattice) -> DistributivityReport {
    let ring = &id.ring;
    let ideals = &id.ideals;
    let m = ideals.len();
    let index: HashMap<&Ideal, usize> = ideals.iter().enumerate().map(|(k, i)| (i, k)).collect();
    let table = |f: &dyn Fn(&Ideal, &Ideal) -> Result<Ideal, IdealError>| -> Vec<usize> {
        let mut t = Vec::with_capacity(m * m);
        for a in ideals {
            for b in ideals {
                t.push(index[&f(a, b).expect("commutative ring")]);
            }
        }
        t
    };
    let prod = table(&|a, b| ring.ideal_product(a, b));
    let cap = table(&|a, b| ring.ideal_intersection(a, b));
    let sum = table(&|a, b| ring.ideal_sum(a, b));
    let at = |t: &[usize], a: usize, b: usize| t[a * m + b];
    let scan = |bad: &dyn Fn(usize, usize, usize) -> bool| {
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    if bad(i, j, k) {
                        return Verdict::fail(vec![i, j, k]);
                    }
                }
            }
        }
        Verdict::pass()
    };
    let c6 = scan(&|i, j, k| at(&prod, i, at(&cap, j, k)) != at(&cap, at(&prod, i, j), at(&prod, i, k)));
    let c7 = scan(&|i, j, k| at(&cap, i, at(&sum, j, k)) != at(&sum, at(&cap, i, j), at(&cap, i, k)));
    DistributivityReport {
        c6: IdentityResult { name: "c6".into(), verdict: c6 },
        c7: IdentityResult { name: "c7".into(), verdict: c7 },
    }
}

/// c6 and c7, guarded by the multiplication-ring precondition.
pub fn check_c6_c7(ring: &FiniteRing) -> Result<DistributivityReport, IdealLatticeError> {
    let id = build_ideal_lattice(ring)?;
    let verdict = is_multiplication_lattice(&id)?;
    if !verdict.holds {
        return Err(IdealLatticeError::PreconditionNotMultiplication {
            ring: ring.name(),
            witness: verdict.witness.unwrap_or_default(),
        });
    }
    Ok(distributivity_identities(&id))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingLogicReport {
    pub ring: String,
    pub n_ideals: usize,
    pub divisible: bool,
    /// Prelinear ideal lattice.
    pub mtl: bool,
    pub bl: bool,
    pub mv: bool,
    pub heyting: bool,
    pub chain: bool,
    pub multiplication: bool,
    /// `Ann(Ann(I)) = I` for every ideal, checked on ideals.
    pub double_annihilator: bool,
    /// BL-ring iff MTL-ring and multiplication ring.
    pub bl_equivalence_holds: bool,
    /// MV-ring iff multiplication MTL-ring with `Ann(Ann(I)) = I`.
    pub mv_equivalence_holds: bool,
}

/// First ideal (index) with `Ann(Ann(I)) != I`, computed with ring operations.
pub fn double_annihilator_witness(id: &IdealLattice) -> Option<usize> {
    let ring = &id.ring;
    id.ideals.iter().position(|i| {
        let ann = ring.annihilator(i).expect("commutative ring");
        ring.annihilator(&ann).expect("commutative ring") != *i
    })
}

pub fn classify_ring_logic(ring: &FiniteRing) -> Result<RingLogicReport, IdealLatticeError> {
    let id = build_ideal_lattice(ring)?;
    let props = check_properties(&id.algebra);
    let multiplication = is_multiplication_lattice(&id)?.holds;
    let double_annihilator = double_annihilator_witness(&id).is_none();
    let mtl = props.is_prelinear();
    Ok(RingLogicReport {
        ring: ring.name(),
        n_ideals: id.len(),
        divisible: props.is_divisible(),
        mtl,
        bl: props.is_bl(),
        mv: props.is_mv(),
        heyting: props.is_heyting(),
        chain: props.is_chain(),
        multiplication,
        double_annihilator,
        bl_equivalence_holds: props.is_bl() == (mtl && multiplication),
        mv_equivalence_holds: props.is_mv() == (mtl && multiplication && double_annihilator),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_identities_c1_c5;
    use crate::corpus;
    use crate::ring::{build_ring, RingSpec};

    fn ring(spec: RingSpec) -> FiniteRing {
        build_ring(&spec).unwrap()
    }

    #[test]
    fn z2xz2_matches_reference_tables() {
        let id = build_ideal_lattice(&ring(RingSpec::product([RingSpec::zn(2), RingSpec::zn(2)]))).unwrap();
        let a = id.algebra();
        // O, C, B, E in enumeration order
        assert_eq!(a.arrow_matrix(), vec![vec![3, 3, 3, 3], vec![2, 3, 2, 3], vec![1, 1, 3, 3], vec![0, 1, 2, 3]]);
        assert_eq!(a.odot_matrix(), vec![vec![0, 0, 0, 0], vec![0, 1, 0, 1], vec![0, 0, 2, 2], vec![0, 1, 2, 3]]);
        assert!(check_properties(a).is_mv());
    }

    #[test]
    fn z16_gives_five_chain() {
        let id = build_ideal_lattice(&ring(RingSpec::zn(16))).unwrap();
        assert_eq!(id.len(), 5);
        assert!(id.algebra().is_chain());
    }

    #[test]
    fn m2z2_left_ideals_fail_the_monoid_laws() {
        let r = ring(corpus::m2z2());
        let err = one_sided_ideal_structure(&r, Sidedness::Left).unwrap_err();
        assert!(matches!(err, IdealLatticeError::NotResiduated(ResiduatedError::MonoidViolation { .. })));
    }

    #[test]
    fn z2_gives_two_elements() {
        let id = build_ideal_lattice(&ring(RingSpec::zn(2))).unwrap();
        assert_eq!(id.len(), 2);
        assert_eq!(id.algebra().label(0), "(0)");
        assert_eq!(id.algebra().label(1), "A");
    }

    #[test]
    fn noncommutative_ring_is_rejected() {
        let err = build_ideal_lattice(&ring(corpus::m2z2())).unwrap_err();
        assert!(matches!(err, IdealLatticeError::Ideal(IdealError::NonCommutativeRing { .. })));
    }

    #[test]
    fn zn_are_multiplication_rings() {
        for k in 2..=32 {
            assert!(is_multiplication_ring(&ring(RingSpec::zn(k))).unwrap().holds, "Z{k}");
        }
        let z4z2 = ring(RingSpec::product([RingSpec::zn(4), RingSpec::zn(2)]));
        assert!(is_multiplication_ring(&z4z2).unwrap().holds);
    }

    #[test]
    fn local_ring_with_square_zero_maximal_ideal_is_not_multiplication() {
        let r = ring(corpus::non_multiplication_ring());
        let id = build_ideal_lattice(&r).unwrap();
        let v = is_multiplication_lattice(&id).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(id.algebra().label(w[0]), "(x,y)");
        assert_eq!(id.algebra().label(w[1]), "(x)");
        let (i, j) = (&id.ideals()[w[0]], &id.ideals()[w[1]]);
        let q = r.ideal_quotient(j, i).unwrap();
        assert_eq!(r.ideal_product(i, &q).unwrap(), r.zero_ideal());
    }

    #[test]
    fn c6_c7_on_z12_and_z2xz2() {
        for spec in [RingSpec::zn(12), RingSpec::product([RingSpec::zn(2), RingSpec::zn(2)])] {
            let rep = check_c6_c7(&ring(spec)).unwrap();
            assert!(rep.all_hold());
        }
    }

    #[test]
    fn c6_c7_precondition() {
        let err = check_c6_c7(&ring(corpus::non_multiplication_ring())).unwrap_err();
        assert!(matches!(err, IdealLatticeError::PreconditionNotMultiplication { .. }));
    }

    #[test]
    fn ring_logic_examples() {
        let z8 = classify_ring_logic(&ring(RingSpec::zn(8))).unwrap();
        assert!(z8.mv && z8.chain && z8.bl_equivalence_holds && z8.mv_equivalence_holds);
        let z2z2 = classify_ring_logic(&ring(RingSpec::product([RingSpec::zn(2), RingSpec::zn(2)]))).unwrap();
        assert!(z2z2.mv && !z2z2.chain);
        let bad = classify_ring_logic(&ring(corpus::non_multiplication_ring())).unwrap();
        assert!(!bad.divisible && !bad.bl && !bad.multiplication);
        assert!(bad.bl_equivalence_holds && bad.mv_equivalence_holds);
    }

    #[test]
    fn z8_identities_c1_c5() {
        let id = build_ideal_lattice(&ring(RingSpec::zn(8))).unwrap();
        assert!(check_identities_c1_c5(id.algebra()).unwrap().all_hold());
    }

    #[test]
    fn double_annihilator_agrees_with_double_negation() {
        for spec in corpus::ring_corpus().into_iter().take(40) {
            let id = build_ideal_lattice(&ring(spec)).unwrap();
            let a = id.algebra();
            let algebra_level = (0..a.size()).find(|&x| a.neg(a.neg(x)) != x);
            assert_eq!(double_annihilator_witness(&id), algebra_level);
        }
    }
}
