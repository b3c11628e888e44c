//! Colour refinement and canonical forms for small ordered algebras.

use std::collections::BTreeMap;

use crate::algebra::{FiniteLattice, ResiduatedLattice};

/// A finite order with at most one binary operation; what canonical forms and isomorphism
/// search look at.
pub trait Structure {
    fn size(&self) -> usize;
    fn leq(&self, x: usize, y: usize) -> bool;
    fn op(&self, x: usize, y: usize) -> Option<usize>;
}

impl Structure for FiniteLattice {
    fn size(&self) -> usize {
        FiniteLattice::size(self)
    }

    fn leq(&self, x: usize, y: usize) -> bool {
        FiniteLattice::leq(self, x, y)
    }

    fn op(&self, _: usize, _: usize) -> Option<usize> {
        None
    }
}

impl Structure for ResiduatedLattice {
    fn size(&self) -> usize {
        ResiduatedLattice::size(self)
    }

    fn leq(&self, x: usize, y: usize) -> bool {
        ResiduatedLattice::leq(self, x, y)
    }

    fn op(&self, x: usize, y: usize) -> Option<usize> {
        Some(self.odot(x, y))
    }
}

type Signature = (u32, Vec<(u32, bool, bool, Option<u32>)>);

/// Refine `colors` until stable. New colours are ranks of sorted signatures, so the result
/// depends only on the isomorphism type of `(s, colors)`.
pub fn refine<S: Structure + ?Sized>(s: &S, mut colors: Vec<u32>) -> Vec<u32> {
    let n = s.size();
    let mut classes = count_classes(&colors);
    loop {
        let sigs: Vec<Signature> = (0..n)
            .map(|x| {
                let mut row: Vec<_> =
                    (0..n).map(|y| (colors[y], s.leq(x, y), s.leq(y, x), s.op(x, y).map(|v| colors[v]))).collect();
                row.sort_unstable();
                (colors[x], row)
            })
            .collect();
        let mut ranks: BTreeMap<&Signature, u32> = sigs.iter().map(|s| (s, 0)).collect();
        for (i, v) in ranks.values_mut().enumerate() {
            *v = i as u32;
        }
        let next: Vec<u32> = sigs.iter().map(|s| ranks[s]).collect();
        let next_classes = ranks.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Canonical relabeling and the table encoding it produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `perm[x]` is the canonical position of element `x`.
    pub perm: Vec<usize>,
    pub key: Vec<u16>,
}

fn encode<S: Structure + ?Sized>(s: &S, perm: &[usize]) -> Vec<u16> {
    let n = s.size();
    let mut inv = vec![0; n];
    for (x, &p) in perm.iter().enumerate() {
        inv[p] = x;
    }
    let mut key = Vec::with_capacity(1 + 2 * n * n);
    key.push(n as u16);
    for p in 0..n {
        for q in 0..n {
            key.push(s.leq(inv[p], inv[q]) as u16);
        }
    }
    for p in 0..n {
        for q in 0..n {
            if let Some(v) = s.op(inv[p], inv[q]) {
                key.push(perm[v] as u16);
            }
        }
    }
    key
}

/// Lexicographically least encoding over all individualize-and-refine leaves.
pub fn canonical_form<S: Structure + ?Sized>(s: &S) -> CanonicalForm {
    let colors = refine(s, vec![0; s.size()]);
    let mut best: Option<CanonicalForm> = None;
    search(s, colors, &mut best);
    best.expect("search visits at least one leaf")
}

fn search<S: Structure + ?Sized>(s: &S, colors: Vec<u32>, best: &mut Option<CanonicalForm>) {
    let n = s.size();
    let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &colors {
        *sizes.entry(c).or_default() += 1;
    }
    let Some((&target, _)) = sizes.iter().find(|(_, &k)| k > 1) else {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let key = encode(s, &perm);
        if best.as_ref().is_none_or(|b| key < b.key) {
            *best = Some(CanonicalForm { perm, key });
        }
        return;
    };
    for v in (0..n).filter(|&x| colors[x] == target) {
        let split: Vec<u32> = (0..n).map(|x| 2 * colors[x] + u32::from(x == v)).collect();
        search(s, refine(s, split), best);
    }
}

pub fn canonical_key<S: Structure + ?Sized>(s: &S) -> Vec<u16> {
    canonical_form(s).key
}

/// The algebra relabeled into canonical position order.
pub fn canonicalize(l: &ResiduatedLattice) -> (ResiduatedLattice, Vec<u16>) {
    let form = canonical_form(l);
    (l.permuted(&form.perm), form.key)
}

pub fn canonicalize_lattice(l: &FiniteLattice) -> (FiniteLattice, Vec<u16>) {
    let form = canonical_form(l);
    (l.permuted(&form.perm), form.key)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn key_is_invariant_under_relabeling() {
        let e = corpus::non_bl_divisible();
        let k = canonical_key(&e);
        for perm in [[4, 3, 2, 1, 0], [1, 0, 3, 2, 4], [2, 4, 1, 0, 3]] {
            assert_eq!(canonical_key(&e.permuted(&perm)), k);
        }
    }

    #[test]
    fn canonicalized_copy_has_same_key() {
        let e = corpus::non_bl_divisible();
        let (c, k) = canonicalize(&e);
        assert_eq!(canonical_key(&c), k);
        assert_eq!(canonicalize(&c).0, c);
    }

    #[test]
    fn refinement_separates_chain_elements() {
        let l = crate::algebra::lattice::chain(4);
        let colors = refine(&l, vec![0; 4]);
        assert_eq!(count_classes(&colors), 4);
    }
}
