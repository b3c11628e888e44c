use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Which of the partial-order axioms a relation violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderAxiom {
    Reflexivity,
    Antisymmetry,
    Transitivity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundOp {
    Meet,
    Join,
}

impl fmt::Display for BoundOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundOp::Meet => f.write_str("meet"),
            BoundOp::Join => f.write_str("join"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("malformed tables: {0}")]
    BadShape(String),
    #[error("not a partial order: {axiom:?} fails at {witness:?}")]
    NotAPartialOrder { axiom: OrderAxiom, witness: Vec<usize> },
    /// `minimal` (resp. maximal) elements when no bottom (resp. top) exists.
    #[error("not bounded: no {missing} element (extremal elements {extremal:?})")]
    NotBounded { missing: &'static str, extremal: Vec<usize> },
    /// `expected` is the true bound under the order, `None` if it does not exist.
    #[error("{op} of ({x}, {y}): table has {found:?}, order gives {expected:?}")]
    MeetJoinMismatch { op: BoundOp, x: usize, y: usize, expected: Option<usize>, found: Option<usize> },
}

/// Unvalidated lattice tables as read from a file or assembled by hand.
///
/// `meet` and `join` are optional; when absent they are derived from `leq`.
#[derive(Clone, Debug, Default)]
pub struct RawLattice {
    pub size: usize,
    pub leq: Vec<Vec<bool>>,
    pub meet: Option<Vec<Vec<usize>>>,
    pub join: Option<Vec<Vec<usize>>>,
    pub labels: Option<Vec<String>>,
}

impl RawLattice {
    pub fn from_leq(leq: Vec<Vec<bool>>) -> Self {
        RawLattice { size: leq.len(), leq, ..Default::default() }
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        self.labels = Some(labels.into_iter().map(Into::into).collect());
        self
    }
}

/// A finite bounded lattice on the carrier `0..size`.
///
/// Labels are display metadata only: equality ignores them.
#[derive(Clone, Debug)]
pub struct FiniteLattice {
    size: usize,
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
    labels: Option<Vec<String>>,
}

impl PartialEq for FiniteLattice {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.leq == other.leq
    }
}

impl Eq for FiniteLattice {}

impl FiniteLattice {
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.size + y]
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size + y]
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size + y]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Option<Vec<String>>) {
        if let Some(l) = &labels {
            assert_eq!(l.len(), self.size, "label count must match carrier size");
        }
        self.labels = labels;
    }

    /// Display name of an element: its label when present, its index otherwise.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn is_chain(&self) -> bool {
        self.incomparable_pair().is_none()
    }

    /// First pair `(x, y)`, `x < y`, of incomparable elements.
    pub fn incomparable_pair(&self) -> Option<(usize, usize)> {
        let n = self.size;
        (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).find(|&(x, y)| !self.leq(x, y) && !self.leq(y, x))
    }

    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    /// Relabel the carrier: element `x` of `self` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> FiniteLattice {
        let n = self.size;
        let mut leq = vec![false; n * n];
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (px, py) = (perm[x], perm[y]);
                leq[px * n + py] = self.leq(x, y);
                meet[px * n + py] = perm[self.meet(x, y)];
                join[px * n + py] = perm[self.join(x, y)];
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for x in 0..n {
                out[perm[x]] = l[x].clone();
            }
            out
        });
        FiniteLattice { size: n, leq, meet, join, bottom: perm[self.bottom], top: perm[self.top], labels }
    }

    /// Build a lattice from a relation already known to be a bounded lattice order.
    /// Panics if it is not; use [`validate_lattice`] for untrusted input.
    pub fn from_leq_unchecked(leq: Vec<Vec<bool>>) -> FiniteLattice {
        validate_lattice(RawLattice::from_leq(leq)).expect("relation is a bounded lattice order")
    }
}

/// Check the bounded-lattice axioms and return the validated lattice.
///
/// Checks run in a fixed order (shape, partial order, bounds, meets/joins) and each failure
/// reports the lexicographically first offending tuple.
pub fn validate_lattice(raw: RawLattice) -> Result<FiniteLattice, LatticeError> {
    let n = raw.size;
    if n == 0 {
        return Err(LatticeError::BadShape("empty carrier".into()));
    }
    check_square(&raw.leq, n, "leq")?;
    if let Some(labels) = &raw.labels {
        if labels.len() != n {
            return Err(LatticeError::BadShape(format!("{} labels for {n} elements", labels.len())));
        }
    }
    let leq: Vec<bool> = raw.leq.iter().flatten().copied().collect();
    let le = |x: usize, y: usize| leq[x * n + y];

    for x in 0..n {
        if !le(x, x) {
            return Err(LatticeError::NotAPartialOrder { axiom: OrderAxiom::Reflexivity, witness: vec![x] });
        }
    }
    for x in 0..n {
        for y in 0..n {
            if x != y && le(x, y) && le(y, x) {
                return Err(LatticeError::NotAPartialOrder { axiom: OrderAxiom::Antisymmetry, witness: vec![x, y] });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if !le(x, y) {
                continue;
            }
            for z in 0..n {
                if le(y, z) && !le(x, z) {
                    return Err(LatticeError::NotAPartialOrder {
                        axiom: OrderAxiom::Transitivity,
                        witness: vec![x, y, z],
                    });
                }
            }
        }
    }

    let bottom = (0..n).find(|&b| (0..n).all(|x| le(b, x)));
    let top = (0..n).find(|&t| (0..n).all(|x| le(x, t)));
    let Some(bottom) = bottom else {
        let extremal = (0..n).filter(|&m| (0..n).all(|x| x == m || !le(x, m))).collect();
        return Err(LatticeError::NotBounded { missing: "bottom", extremal });
    };
    let Some(top) = top else {
        let extremal = (0..n).filter(|&m| (0..n).all(|x| x == m || !le(m, x))).collect();
        return Err(LatticeError::NotBounded { missing: "top", extremal });
    };

    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for (op, table, given) in
        [(BoundOp::Meet, &mut meet, raw.meet.as_ref()), (BoundOp::Join, &mut join, raw.join.as_ref())]
    {
        if let Some(g) = given {
            check_square(g, n, &op.to_string())?;
            if let Some(v) = g.iter().flatten().find(|&&v| v >= n) {
                return Err(LatticeError::BadShape(format!("{op} entry {v} out of range")));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let bound = match op {
                    BoundOp::Meet => greatest(n, |z| le(z, x) && le(z, y), &le),
                    BoundOp::Join => greatest(n, |z| le(x, z) && le(y, z), &|a, b| le(b, a)),
                };
                let found = given.map(|g| g[x][y]);
                match (bound, found) {
                    (Some(b), None) => table[x * n + y] = b,
                    (Some(b), Some(f)) if b == f => table[x * n + y] = b,
                    (expected, found) => {
                        return Err(LatticeError::MeetJoinMismatch { op, x, y, expected, found });
                    }
                }
            }
        }
    }

    Ok(FiniteLattice { size: n, leq, meet, join, bottom, top, labels: raw.labels })
}

/// The element of `{z : member(z)}` above all others in `order`, if any.
fn greatest(n: usize, member: impl Fn(usize) -> bool, order: &dyn Fn(usize, usize) -> bool) -> Option<usize> {
    let set: Vec<usize> = (0..n).filter(|&z| member(z)).collect();
    set.iter().copied().find(|&g| set.iter().all(|&z| order(z, g)))
}

fn check_square<T>(rows: &[Vec<T>], n: usize, what: &str) -> Result<(), LatticeError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(LatticeError::BadShape(format!("{what} is not {n}x{n}")));
    }
    Ok(())
}

/// `k`-element chain `0 < 1 < ... < k-1`.
pub fn chain(k: usize) -> FiniteLattice {
    FiniteLattice::from_leq_unchecked((0..k).map(|i| (0..k).map(|j| i <= j).collect()).collect())
}

/// Build a lattice order from covering pairs `(lower, upper)` by reflexive-transitive closure.
pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in covers {
        leq[a][b] = true;
    }
    for k in 0..n {
        let via = leq[k].clone();
        for row in leq.iter_mut().filter(|row| row[k]) {
            for (j, &v) in via.iter().enumerate() {
                row[j] |= v;
            }
        }
    }
    leq
}

/// The diamond M3: `0 < a, b, c < 1` with `a, b, c` pairwise incomparable.
pub fn diamond() -> FiniteLattice {
    let leq = from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]);
    let mut l = FiniteLattice::from_leq_unchecked(leq);
    l.set_labels(Some(["0", "a", "b", "c", "1"].map(String::from).to_vec()));
    l
}

/// The pentagon N5: `0 < a < b < 1`, `0 < c < 1`, `c` incomparable to `a, b`.
pub fn pentagon() -> FiniteLattice {
    let leq = from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]);
    let mut l = FiniteLattice::from_leq_unchecked(leq);
    l.set_labels(Some(["0", "a", "b", "c", "1"].map(String::from).to_vec()));
    l
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_chain_is_valid() {
        let l = chain(2);
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 1);
        assert!(l.is_chain());
        assert_eq!(l.meet(0, 1), 0);
        assert_eq!(l.join(0, 1), 1);
    }

    #[test]
    fn diamond_is_a_lattice() {
        let d = diamond();
        assert_eq!(d.size(), 5);
        assert_eq!(d.meet(1, 2), 0);
        assert_eq!(d.join(1, 3), 4);
        assert_eq!(d.incomparable_pair(), Some((1, 2)));
    }

    #[test]
    fn antisymmetry_violation() {
        let leq = vec![vec![true, true, true], vec![false, true, true], vec![false, true, true]];
        let err = validate_lattice(RawLattice::from_leq(leq)).unwrap_err();
        assert_eq!(err, LatticeError::NotAPartialOrder { axiom: OrderAxiom::Antisymmetry, witness: vec![1, 2] });
    }

    #[test]
    fn transitivity_violation() {
        let leq = vec![vec![true, true, false], vec![false, true, true], vec![false, false, true]];
        let err = validate_lattice(RawLattice::from_leq(leq)).unwrap_err();
        assert!(matches!(err, LatticeError::NotAPartialOrder { axiom: OrderAxiom::Transitivity, .. }));
    }

    #[test]
    fn antichain_is_not_bounded() {
        let leq = vec![vec![true, false], vec![false, true]];
        let err = validate_lattice(RawLattice::from_leq(leq)).unwrap_err();
        assert_eq!(err, LatticeError::NotBounded { missing: "bottom", extremal: vec![0, 1] });
    }

    #[test]
    fn missing_join_is_reported() {
        // 0 < a, b < c, d < 1 with a, b both below c and d: meet(c, d) is checked first and
        // does not exist.
        let leq = from_covers(6, &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 5), (4, 5)]);
        let err = validate_lattice(RawLattice::from_leq(leq)).unwrap_err();
        assert_eq!(err, LatticeError::MeetJoinMismatch { op: BoundOp::Meet, x: 3, y: 4, expected: None, found: None });
    }

    #[test]
    fn supplied_meet_must_agree() {
        let l = chain(3);
        let mut meet: Vec<Vec<usize>> = (0..3).map(|x| (0..3).map(|y| l.meet(x, y)).collect()).collect();
        meet[1][2] = 2;
        let raw = RawLattice { meet: Some(meet), ..RawLattice::from_leq(l.leq_matrix()) };
        let err = validate_lattice(raw).unwrap_err();
        assert!(matches!(err, LatticeError::MeetJoinMismatch { op: BoundOp::Meet, x: 1, y: 2, .. }));
    }

    #[test]
    fn singleton_is_degenerate_lattice() {
        let l = chain(1);
        assert_eq!(l.bottom(), l.top());
    }

    #[test]
    fn labels_do_not_affect_equality() {
        let mut a = chain(3);
        let b = chain(3);
        a.set_labels(Some(vec!["x".into(), "y".into(), "z".into()]));
        assert_eq!(a, b);
    }
}
