//! Isomorphism search between residuated lattices.

use serde::{Deserialize, Serialize};

use super::canonical::refine;
use crate::algebra::ResiduatedLattice;

/// A bijection `mapping[x]` from the first carrier to the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoCertificate {
    pub mapping: Vec<usize>,
    pub verified: bool,
}

impl IsoCertificate {
    pub fn inverse(&self) -> IsoCertificate {
        let mut inv = vec![0; self.mapping.len()];
        for (x, &y) in self.mapping.iter().enumerate() {
            inv[y] = x;
        }
        IsoCertificate { mapping: inv, verified: self.verified }
    }

    /// `self` followed by `next`.
    pub fn compose(&self, next: &IsoCertificate) -> IsoCertificate {
        IsoCertificate {
            mapping: self.mapping.iter().map(|&y| next.mapping[y]).collect(),
            verified: self.verified && next.verified,
        }
    }
}

/// Check that `mapping` is a bijection preserving order, bounds, product and residuum.
pub fn verify_isomorphism(a: &ResiduatedLattice, b: &ResiduatedLattice, mapping: &[usize]) -> bool {
    let n = a.size();
    if b.size() != n || mapping.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in mapping {
        if y >= n || std::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    if mapping[a.bottom()] != b.bottom() || mapping[a.top()] != b.top() {
        return false;
    }
    (0..n).all(|x| {
        (0..n).all(|y| {
            let (fx, fy) = (mapping[x], mapping[y]);
            a.leq(x, y) == b.leq(fx, fy)
                && mapping[a.odot(x, y)] == b.odot(fx, fy)
                && mapping[a.arrow(x, y)] == b.arrow(fx, fy)
        })
    })
}

/// Search for an isomorphism. Elements are only paired within matching refinement colours,
/// which already separate by down-set sizes, idempotence and negation behaviour.
pub fn are_isomorphic(a: &ResiduatedLattice, b: &ResiduatedLattice) -> Option<IsoCertificate> {
    let n = a.size();
    if b.size() != n {
        return None;
    }
    let ca = refine(a, vec![0; n]);
    let cb = refine(b, vec![0; n]);
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &ca, &cb, 0, &mut mapping, &mut used) {
        let verified = verify_isomorphism(a, b, &mapping);
        verified.then_some(IsoCertificate { mapping, verified })
    } else {
        None
    }
}

fn consistent(a: &ResiduatedLattice, b: &ResiduatedLattice, mapping: &[usize], x: usize) -> bool {
    let fx = mapping[x];
    (0..=x).all(|y| {
        let fy = mapping[y];
        if a.leq(x, y) != b.leq(fx, fy) || a.leq(y, x) != b.leq(fy, fx) {
            return false;
        }
        let v = a.odot(x, y);
        v > x || mapping[v] == b.odot(fx, fy)
    })
}

fn extend(
    a: &ResiduatedLattice,
    b: &ResiduatedLattice,
    ca: &[u32],
    cb: &[u32],
    x: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if x == a.size() {
        return verify_isomorphism(a, b, mapping);
    }
    for y in 0..b.size() {
        if used[y] || ca[x] != cb[y] {
            continue;
        }
        mapping[x] = y;
        used[y] = true;
        if consistent(a, b, mapping, x) && extend(a, b, ca, cb, x + 1, mapping, used) {
            return true;
        }
        used[y] = false;
    }
    mapping[x] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::ordinal::{evaluate_expr, AlgebraExpr};

    fn alg(e: AlgebraExpr) -> ResiduatedLattice {
        evaluate_expr(&e).unwrap()
    }

    #[test]
    fn three_element_mv_chains_are_isomorphic() {
        let c = are_isomorphic(&alg(AlgebraExpr::zn(4)), &alg(AlgebraExpr::zn(9))).unwrap();
        assert!(c.verified);
    }

    #[test]
    fn lukasiewicz_and_goedel_chains_differ() {
        let g = alg(AlgebraExpr::ordprod(AlgebraExpr::zn(2), AlgebraExpr::zn(2)));
        assert!(are_isomorphic(&alg(AlgebraExpr::zn(4)), &g).is_none());
    }

    #[test]
    fn identity_certificate() {
        let e = corpus::non_bl_divisible();
        assert_eq!(are_isomorphic(&e, &e).unwrap().mapping, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn finds_permutation() {
        let e = corpus::non_bl_divisible();
        let perm = [3, 0, 4, 1, 2];
        let c = are_isomorphic(&e, &e.permuted(&perm)).unwrap();
        assert!(verify_isomorphism(&e, &e.permuted(&perm), &c.mapping));
        assert!(are_isomorphic(&e.permuted(&perm), &e).is_some());
    }

    #[test]
    fn inverse_and_compose() {
        let e = corpus::non_bl_divisible();
        let p = e.permuted(&[1, 0, 2, 3, 4]);
        let q = p.permuted(&[4, 3, 2, 1, 0]);
        let c1 = are_isomorphic(&e, &p).unwrap();
        let c2 = are_isomorphic(&p, &q).unwrap();
        assert!(verify_isomorphism(&p, &e, &c1.inverse().mapping));
        assert!(verify_isomorphism(&e, &q, &c1.compose(&c2).mapping));
    }
}
