//! Named algebras and rings used throughout the tests, examples and the `seed-corpus` command.

use crate::algebra::lattice::{diamond, from_covers, FiniteLattice};
use crate::algebra::{validate_residuated, ResiduatedLattice};
use crate::ring::RingSpec;

fn labels(names: &[&str]) -> Option<Vec<String>> {
    Some(names.iter().map(|s| s.to_string()).collect())
}

/// `{0, a, b, c, 1}` with `0 <= a, b <= c <= 1`, `a`, `b` incomparable.
pub fn non_bl_divisible_lattice() -> FiniteLattice {
    let mut l = FiniteLattice::from_leq_unchecked(from_covers(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]));
    l.set_labels(labels(&["0", "a", "b", "c", "1"]));
    l
}

pub fn non_bl_divisible_odot() -> Vec<Vec<usize>> {
    vec![vec![0, 0, 0, 0, 0], vec![0, 1, 0, 1, 1], vec![0, 0, 2, 2, 2], vec![0, 1, 2, 3, 3], vec![0, 1, 2, 3, 4]]
}

pub fn non_bl_divisible_arrow() -> Vec<Vec<usize>> {
    vec![vec![4, 4, 4, 4, 4], vec![2, 4, 2, 4, 4], vec![1, 1, 4, 4, 4], vec![0, 1, 2, 4, 4], vec![0, 1, 2, 3, 4]]
}

/// The 5-element divisible residuated lattice that is not prelinear.
pub fn non_bl_divisible() -> ResiduatedLattice {
    validate_residuated(non_bl_divisible_lattice(), non_bl_divisible_odot(), Some(non_bl_divisible_arrow()))
        .expect("reference tables form a residuated lattice")
}

/// Diamond M3 with its meet as monoid; not residuated.
pub fn diamond_meet_tables() -> (FiniteLattice, Vec<Vec<usize>>) {
    let l = diamond();
    let n = l.size();
    let odot = (0..n).map(|x| (0..n).map(|y| l.meet(x, y)).collect()).collect();
    (l, odot)
}

/// `Z2[X,Y]/(X^2, XY, Y^2)` as an explicit table: elements `c0 + c1 x + c2 y`, index
/// `c0 + 2 c1 + 4 c2`.
pub fn non_multiplication_ring() -> RingSpec {
    let n = 8;
    let coeffs = |i: usize| [i & 1, (i >> 1) & 1, (i >> 2) & 1];
    let index = |c: [usize; 3]| c[0] | c[1] << 1 | c[2] << 2;
    let add = (0..n).map(|a| (0..n).map(|b| a ^ b).collect()).collect();
    let mul = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let (p, q) = (coeffs(a), coeffs(b));
                    index([p[0] & q[0], (p[0] & q[1]) ^ (p[1] & q[0]), (p[0] & q[2]) ^ (p[2] & q[0])])
                })
                .collect()
        })
        .collect();
    let names = ["0", "1", "x", "1+x", "y", "1+y", "x+y", "1+x+y"];
    RingSpec::Table {
        add,
        mul,
        zero: 0,
        one: 1,
        name: Some("Z2[X,Y]/(X^2,XY,Y^2)".into()),
        labels: Some(names.iter().map(|s| s.to_string()).collect()),
    }
}

/// 2x2 matrices over Z2; `[[a, b], [c, d]]` has index `a + 2b + 4c + 8d`.
pub fn m2z2() -> RingSpec {
    let n = 16;
    let m = |i: usize| [[i & 1, (i >> 1) & 1], [(i >> 2) & 1, (i >> 3) & 1]];
    let index = |a: [[usize; 2]; 2]| a[0][0] | a[0][1] << 1 | a[1][0] << 2 | a[1][1] << 3;
    let add = (0..n).map(|a| (0..n).map(|b| a ^ b).collect()).collect();
    let mul = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let (p, q) = (m(a), m(b));
                    let mut r = [[0; 2]; 2];
                    for (i, row) in r.iter_mut().enumerate() {
                        for (j, cell) in row.iter_mut().enumerate() {
                            *cell = (p[i][0] & q[0][j]) ^ (p[i][1] & q[1][j]);
                        }
                    }
                    index(r)
                })
                .collect()
        })
        .collect();
    let labels = (0..n)
        .map(|i| {
            let a = m(i);
            format!("[{}{};{}{}]", a[0][0], a[0][1], a[1][0], a[1][1])
        })
        .collect();
    RingSpec::Table { add, mul, zero: 0, one: 9, name: Some("M2(Z2)".into()), labels: Some(labels) }
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Prime powers `p^a`, `a >= 1`, up to `limit`.
pub fn prime_powers(limit: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    for p in (2..=limit).filter(|&p| is_prime(p)) {
        let mut a = 1;
        while p.pow(a) <= limit {
            out.push((p, a));
            a += 1;
        }
    }
    out.sort_by_key(|&(p, a)| (p.pow(a), p));
    out
}

/// Multisets of at least two prime powers whose product is at most `max_size`, each given as
/// `(p, alpha)` pairs in non-decreasing order of `p^alpha`.
pub fn prime_power_products(max_size: usize) -> Vec<Vec<(usize, u32)>> {
    fn extend(
        pp: &[(usize, u32)],
        start: usize,
        size: usize,
        max_size: usize,
        cur: &mut Vec<(usize, u32)>,
        out: &mut Vec<Vec<(usize, u32)>>,
    ) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        for (i, &(p, a)) in pp.iter().enumerate().skip(start) {
            let q = p.pow(a);
            if size * q > max_size {
                continue;
            }
            cur.push((p, a));
            extend(pp, i, size * q, max_size, cur, out);
            cur.pop();
        }
    }
    let pp = prime_powers(max_size / 2);
    let mut out = Vec::new();
    extend(&pp, 0, 1, max_size, &mut Vec::new(), &mut out);
    out
}

pub fn prime_power_product_spec(factors: &[(usize, u32)]) -> RingSpec {
    RingSpec::product(factors.iter().map(|&(p, a)| RingSpec::zn(p.pow(a))))
}

pub fn polyquot_examples() -> Vec<RingSpec> {
    vec![
        RingSpec::polyquot(2, [0, 0, 1]),
        RingSpec::polyquot(2, [1, 1, 1]),
        RingSpec::polyquot(2, [1, 0, 1]),
        RingSpec::polyquot(2, [0, 1, 1]),
        RingSpec::polyquot(2, [0, 0, 0, 1]),
        RingSpec::polyquot(2, [0, 0, 0, 0, 1]),
        RingSpec::polyquot(2, [1, 1, 0, 1]),
        RingSpec::polyquot(3, [0, 0, 1]),
        RingSpec::polyquot(3, [1, 0, 1]),
        RingSpec::polyquot(3, [2, 0, 1]),
        RingSpec::polyquot(5, [0, 0, 1]),
    ]
}

/// Commutative test rings: all `Z_k` for `k <= 32`, products of prime-power `Z_k` with at most
/// 64 elements, polynomial quotients and the 8-element local ring that is not a multiplication
/// ring.
pub fn ring_corpus() -> Vec<RingSpec> {
    let mut out: Vec<RingSpec> = (2..=32).map(RingSpec::zn).collect();
    out.extend(prime_power_products(64).iter().map(|f| prime_power_product_spec(f)));
    out.extend(polyquot_examples());
    out.push(non_multiplication_ring());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::build_ring;

    #[test]
    fn corpus_rings_satisfy_ring_axioms() {
        for spec in ring_corpus() {
            let r = build_ring(&spec).unwrap();
            r.check_axioms().unwrap_or_else(|e| panic!("{}: {e}", spec.name()));
            assert!(r.is_commutative(), "{}", spec.name());
        }
    }

    #[test]
    fn corpus_is_large_enough() {
        assert!(ring_corpus().len() >= 25);
    }

    #[test]
    fn m2z2_is_a_ring() {
        let r = build_ring(&m2z2()).unwrap();
        assert_eq!(r.size(), 16);
        assert!(!r.is_commutative());
    }

    #[test]
    fn prime_power_products_respect_bound() {
        let all = prime_power_products(64);
        assert!(all.iter().all(|f| f.iter().map(|&(p, a)| p.pow(a)).product::<usize>() <= 64));
        assert!(all.contains(&vec![(2, 1), (2, 1)]));
        assert!(all.contains(&vec![(2, 3), (2, 3)]));
        assert!(all.contains(&vec![(2, 1), (3, 1), (5, 1)]));
    }
}
