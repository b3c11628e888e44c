use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::lattice::FiniteLattice;
use crate::ordinal::AlgebraExpr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonoidLaw {
    Commutativity,
    Identity,
    Associativity,
    Monotonicity,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ResiduatedError {
    #[error("malformed tables: {0}")]
    BadShape(String),
    #[error("monoid law {law:?} fails at {witness:?}")]
    MonoidViolation { law: MonoidLaw, witness: Vec<usize> },
    /// `{z : x*z <= y}` has several maximal elements (`maximal`) and no maximum.
    #[error("no residuum for ({x}, {y}): maximal solutions {maximal:?}")]
    ResiduumMissing { x: usize, y: usize, maximal: Vec<usize> },
    #[error("adjunction fails at (x, y, z) = ({x}, {y}, {z})")]
    AdjunctionFailure { x: usize, y: usize, z: usize },
    #[error("arrow({x}, {y}): table has {found}, residuum is {expected}")]
    ArrowMismatch { x: usize, y: usize, expected: usize, found: usize },
}

/// A finite commutative integral residuated lattice.
///
/// Both the monoid table and the residuum table are materialized.
#[derive(Clone, Debug)]
pub struct ResiduatedLattice {
    lattice: FiniteLattice,
    odot: Vec<usize>,
    arrow: Vec<usize>,
    provenance: Option<AlgebraExpr>,
}

impl PartialEq for ResiduatedLattice {
    fn eq(&self, other: &Self) -> bool {
        self.lattice == other.lattice && self.odot == other.odot
    }
}

impl Eq for ResiduatedLattice {}

impl ResiduatedLattice {
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.lattice.leq(x, y)
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.lattice.meet(x, y)
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.lattice.join(x, y)
    }

    #[inline]
    pub fn odot(&self, x: usize, y: usize) -> usize {
        self.odot[x * self.size() + y]
    }

    #[inline]
    pub fn arrow(&self, x: usize, y: usize) -> usize {
        self.arrow[x * self.size() + y]
    }

    /// `x* = x -> 0`.
    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.arrow(x, self.bottom())
    }

    pub fn bottom(&self) -> usize {
        self.lattice.bottom()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    pub fn label(&self, x: usize) -> String {
        self.lattice.label(x)
    }

    pub fn is_chain(&self) -> bool {
        self.lattice.is_chain()
    }

    pub fn provenance(&self) -> Option<&AlgebraExpr> {
        self.provenance.as_ref()
    }

    pub fn with_provenance(mut self, expr: Option<AlgebraExpr>) -> Self {
        self.provenance = expr;
        self
    }

    pub fn set_labels(&mut self, labels: Option<Vec<String>>) {
        self.lattice.set_labels(labels);
    }

    pub fn odot_matrix(&self) -> Vec<Vec<usize>> {
        self.odot.chunks(self.size()).map(|r| r.to_vec()).collect()
    }

    pub fn arrow_matrix(&self) -> Vec<Vec<usize>> {
        self.arrow.chunks(self.size()).map(|r| r.to_vec()).collect()
    }

    /// Relabel the carrier: element `x` becomes `perm[x]`. Provenance is kept.
    pub fn permuted(&self, perm: &[usize]) -> ResiduatedLattice {
        let n = self.size();
        let mut odot = vec![0; n * n];
        let mut arrow = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                odot[perm[x] * n + perm[y]] = perm[self.odot(x, y)];
                arrow[perm[x] * n + perm[y]] = perm[self.arrow(x, y)];
            }
        }
        ResiduatedLattice { lattice: self.lattice.permuted(perm), odot, arrow, provenance: self.provenance.clone() }
    }
}

/// Check LR2 and LR3 for `odot` on `lattice`.
///
/// When `arrow` is `None` the residuum is derived as `max{z : x*z <= y}`; when supplied it
/// must equal the derived table entry by entry.
pub fn validate_residuated(
    lattice: FiniteLattice,
    odot: Vec<Vec<usize>>,
    arrow: Option<Vec<Vec<usize>>>,
) -> Result<ResiduatedLattice, ResiduatedError> {
    let n = lattice.size();
    let odot = flatten(odot, n, "odot")?;
    let supplied = arrow.map(|a| flatten(a, n, "arrow")).transpose()?;
    check_monoid(&lattice, &odot)?;
    let derived = derive_arrow(&lattice, &odot)?;
    let at = |x: usize, y: usize| odot[x * n + y];
    for x in 0..n {
        for y in 0..n {
            let r = derived[x * n + y];
            for z in 0..n {
                if lattice.leq(z, r) != lattice.leq(at(x, z), y) {
                    return Err(ResiduatedError::AdjunctionFailure { x, y, z });
                }
            }
        }
    }
    if let Some(given) = supplied {
        for x in 0..n {
            for y in 0..n {
                let (expected, found) = (derived[x * n + y], given[x * n + y]);
                if expected != found {
                    return Err(ResiduatedError::ArrowMismatch { x, y, expected, found });
                }
            }
        }
    }
    Ok(ResiduatedLattice { lattice, odot, arrow: derived, provenance: None })
}

/// Check that `odot` is a commutative monotone monoid with the lattice top as identity.
pub fn check_monoid(lattice: &FiniteLattice, odot: &[usize]) -> Result<(), ResiduatedError> {
    let n = lattice.size();
    let at = |x: usize, y: usize| odot[x * n + y];
    let violation = |law, witness| Err(ResiduatedError::MonoidViolation { law, witness });
    for x in 0..n {
        for y in 0..n {
            if at(x, y) != at(y, x) {
                return violation(MonoidLaw::Commutativity, vec![x, y]);
            }
        }
    }
    let top = lattice.top();
    for x in 0..n {
        if at(top, x) != x || at(x, top) != x {
            return violation(MonoidLaw::Identity, vec![x]);
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if at(at(x, y), z) != at(x, at(y, z)) {
                    return violation(MonoidLaw::Associativity, vec![x, y, z]);
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if !lattice.leq(x, y) {
                continue;
            }
            for z in 0..n {
                if !lattice.leq(at(x, z), at(y, z)) {
                    return violation(MonoidLaw::Monotonicity, vec![x, y, z]);
                }
            }
        }
    }
    Ok(())
}

/// For every `(x, y)` find the maximum of `{z : x*z <= y}`.
///
/// Needs no monoid law; it only inspects the order. Fails on the first pair whose solution
/// set has no maximum.
pub fn derive_arrow(lattice: &FiniteLattice, odot: &[usize]) -> Result<Vec<usize>, ResiduatedError> {
    let n = lattice.size();
    let mut arrow = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let sols: Vec<usize> = (0..n).filter(|&z| lattice.leq(odot[x * n + z], y)).collect();
            match sols.iter().copied().find(|&m| sols.iter().all(|&z| lattice.leq(z, m))) {
                Some(m) => arrow[x * n + y] = m,
                None => {
                    let maximal =
                        sols.iter().copied().filter(|&m| sols.iter().all(|&z| z == m || !lattice.leq(m, z))).collect();
                    return Err(ResiduatedError::ResiduumMissing { x, y, maximal });
                }
            }
        }
    }
    Ok(arrow)
}

fn flatten(rows: Vec<Vec<usize>>, n: usize, what: &str) -> Result<Vec<usize>, ResiduatedError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(ResiduatedError::BadShape(format!("{what} is not {n}x{n}")));
    }
    let flat: Vec<usize> = rows.into_iter().flatten().collect();
    if let Some(v) = flat.iter().find(|&&v| v >= n) {
        return Err(ResiduatedError::BadShape(format!("{what} entry {v} out of range")));
    }
    Ok(flat)
}

/// The lattice with `odot = meet`. Residuated exactly when the lattice is distributive.
pub fn meet_monoid(lattice: FiniteLattice) -> Result<ResiduatedLattice, ResiduatedError> {
    let n = lattice.size();
    let odot = (0..n).map(|x| (0..n).map(|y| lattice.meet(x, y)).collect()).collect();
    validate_residuated(lattice, odot, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lattice::{chain, diamond, from_covers};
    use crate::corpus;

    #[test]
    fn non_bl_divisible_arrow_matches_listed_table() {
        let listed = corpus::non_bl_divisible_arrow();
        let l = corpus::non_bl_divisible();
        assert_eq!(l.arrow_matrix(), listed);
    }

    #[test]
    fn non_bl_divisible_rejects_a_wrong_arrow() {
        let mut arrow = corpus::non_bl_divisible_arrow();
        arrow[1][0] = 0;
        let l = corpus::non_bl_divisible();
        let err = validate_residuated(l.lattice().clone(), l.odot_matrix(), Some(arrow)).unwrap_err();
        assert_eq!(err, ResiduatedError::ArrowMismatch { x: 1, y: 0, expected: 2, found: 0 });
    }

    #[test]
    fn diamond_meet_has_no_residuum() {
        let err = meet_monoid(diamond()).unwrap_err();
        assert_eq!(err, ResiduatedError::ResiduumMissing { x: 1, y: 0, maximal: vec![2, 3] });
    }

    #[test]
    fn boolean_two_is_valid() {
        let b = meet_monoid(chain(2)).unwrap();
        assert_eq!(b.arrow(1, 0), 0);
        assert_eq!(b.arrow(0, 0), 1);
        assert_eq!(b.neg(0), 1);
    }

    #[test]
    fn non_commutative_table_is_rejected() {
        let l = chain(3);
        let odot = vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 2]];
        assert!(validate_residuated(l.clone(), odot, None).is_ok());
        let odot = vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 0, 2]];
        let err = validate_residuated(l, odot, None).unwrap_err();
        assert_eq!(err, ResiduatedError::MonoidViolation { law: MonoidLaw::Commutativity, witness: vec![1, 2] });
    }

    #[test]
    fn non_monotone_table_is_rejected() {
        // 0 < a, b < 1 Boolean square; a*a = 0, b*b = b but a*b = a breaks monotonicity.
        let l = FiniteLattice::from_leq_unchecked(from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]));
        let odot = vec![vec![0, 0, 0, 0], vec![0, 0, 1, 1], vec![0, 1, 2, 2], vec![0, 1, 2, 3]];
        let err = validate_residuated(l, odot, None).unwrap_err();
        assert!(matches!(err, ResiduatedError::MonoidViolation { .. }));
    }

    #[test]
    fn singleton_is_accepted() {
        let r = validate_residuated(chain(1), vec![vec![0]], None).unwrap();
        assert_eq!(r.arrow(0, 0), 0);
    }

    #[test]
    fn permutation_preserves_validity() {
        let e3 = corpus::non_bl_divisible();
        let p = e3.permuted(&[4, 2, 0, 3, 1]);
        let again = validate_residuated(p.lattice().clone(), p.odot_matrix(), Some(p.arrow_matrix()));
        assert!(again.is_ok());
    }
}
