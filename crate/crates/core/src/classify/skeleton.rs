//! Bounded lattices on `n` elements up to isomorphism.

use std::collections::BTreeMap;

use super::canonical::canonicalize_lattice;
use super::ClassifyError;
use crate::algebra::{validate_lattice, FiniteLattice, RawLattice};

pub const MAX_SKELETON_SIZE: usize = 8;

/// All bounded lattices with `n` elements, one per isomorphism class, sorted by canonical key.
/// Each is labelled along a linear extension (down-set size, then canonical index), so the
/// bottom is 0 and the top is `n - 1`.
pub fn enumerate_lattice_skeletons(n: usize) -> Result<Vec<FiniteLattice>, ClassifyError> {
    if n > MAX_SKELETON_SIZE {
        return Err(ClassifyError::SizeGuardExceeded { n, max: MAX_SKELETON_SIZE });
    }
    if n == 0 {
        return Ok(vec![]);
    }
    // Middle elements 1..=m; every partial order on them has a linear extension, so only
    // relations i < j with i < j as integers are needed.
    let m = n.saturating_sub(2);
    let pairs: Vec<(usize, usize)> = (1..=m).flat_map(|j| (1..j).rev().map(move |i| (i, j))).collect();
    let mut found: BTreeMap<Vec<u16>, FiniteLattice> = BTreeMap::new();
    let mut rel = vec![vec![false; n]; n];
    enumerate_orders(&pairs, 0, &mut rel, &mut |rel| {
        let mut leq = rel.to_vec();
        leq[0].fill(true);
        for (x, row) in leq.iter_mut().enumerate() {
            row[x] = true;
            row[n - 1] = true;
        }
        if let Ok(l) = validate_lattice(RawLattice::from_leq(leq)) {
            let (c, key) = canonicalize_lattice(&l);
            found.entry(key).or_insert(c);
        }
    });
    Ok(found.into_values().map(|l| bottom_up(&l)).collect())
}

fn bottom_up(l: &FiniteLattice) -> FiniteLattice {
    let n = l.size();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| ((0..n).filter(|&y| l.leq(y, x)).count(), x));
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    l.permuted(&perm)
}

/// Walk the transitive strict relations on the middle elements. Pairs come ordered by larger
/// element, then by smaller element descending, so when `(i, j)` is decided every `(i, h)` and
/// `(h, j)` with `i < h < j` already is.
fn enumerate_orders(pairs: &[(usize, usize)], k: usize, rel: &mut [Vec<bool>], visit: &mut dyn FnMut(&[Vec<bool>])) {
    let Some(&(i, j)) = pairs.get(k) else {
        visit(rel);
        return;
    };
    let forced = (i + 1..j).any(|h| rel[i][h] && rel[h][j]);
    let options: &[bool] = if forced { &[true] } else { &[false, true] };
    for &v in options {
        rel[i][j] = v;
        enumerate_orders(pairs, k + 1, rel, visit);
    }
    rel[i][j] = false;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts() -> Vec<usize> {
        (1..=7).map(|n| enumerate_lattice_skeletons(n).unwrap().len()).collect()
    }

    #[test]
    fn known_counts() {
        assert_eq!(counts(), vec![1, 1, 1, 2, 5, 15, 53]);
    }

    #[test]
    fn five_element_lattices_include_diamond_and_pentagon() {
        let ls = enumerate_lattice_skeletons(5).unwrap();
        let non_chain: Vec<_> = ls.iter().filter(|l| !l.is_chain()).collect();
        assert_eq!(non_chain.len(), 4);
        let keys: Vec<_> = ls.iter().map(|l| canonicalize_lattice(l).1).collect();
        assert!(keys.contains(&canonicalize_lattice(&crate::algebra::lattice::diamond()).1));
        assert!(keys.contains(&canonicalize_lattice(&crate::algebra::lattice::pentagon()).1));
    }

    #[test]
    fn guard() {
        assert!(matches!(enumerate_lattice_skeletons(9), Err(ClassifyError::SizeGuardExceeded { .. })));
    }
}
