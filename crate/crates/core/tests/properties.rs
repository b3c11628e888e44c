//! Invariants over randomly relabelled small algebras and random finite rings.

use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::select;

use reslat::algebra::{check_properties, divisibility_criteria, ResiduatedLattice};
use reslat::classify::{are_isomorphic, brute_catalog, canonical_key, verify_isomorphism};
use reslat::ideal_lattice::{build_ideal_lattice, is_multiplication_ring};
use reslat::io::{to_json_text, LatticeFile};
use reslat::ordinal::ordinal_product;
use reslat::ring::{build_ring, classify_ideals, FiniteRing, RingSpec};

/// Every residuated lattice with 2 to 5 elements, one per class.
fn catalog() -> &'static [ResiduatedLattice] {
    static CATALOG: OnceLock<Vec<ResiduatedLattice>> = OnceLock::new();
    CATALOG.get_or_init(|| (2..=5).flat_map(|n| brute_catalog(n, false).unwrap()).map(|e| e.algebra).collect())
}

fn bl_catalog() -> Vec<ResiduatedLattice> {
    catalog().iter().filter(|l| check_properties(l).is_bl()).cloned().collect()
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// A catalog algebra under a random relabelling.
fn algebra() -> impl Strategy<Value = ResiduatedLattice> {
    select(catalog().to_vec()).prop_flat_map(|l| permutation(l.size()).prop_map(move |p| l.permuted(&p)))
}

/// Products of one to three cyclic rings of order at most 27.
fn ring() -> impl Strategy<Value = FiniteRing> {
    prop::collection::vec(2usize..=27, 1..=3)
        .prop_filter("at most 64 elements", |ks| ks.iter().product::<usize>() <= 64)
        .prop_map(|ks| build_ring(&RingSpec::product(ks.into_iter().map(RingSpec::zn))).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjunction(l in algebra()) {
        let n = l.size();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    prop_assert_eq!(l.leq(z, l.arrow(x, y)), l.leq(l.odot(x, z), y));
                }
            }
        }
    }

    #[test]
    fn bl_is_divisible_and_prelinear(l in algebra()) {
        let r = check_properties(&l);
        prop_assert_eq!(r.is_bl(), r.is_divisible() && r.is_prelinear());
        if r.is_mv() {
            prop_assert!(r.is_bl());
        }
    }

    #[test]
    fn divisible_chains_are_bl(l in algebra()) {
        let r = check_properties(&l);
        if r.is_chain() && r.is_divisible() {
            prop_assert!(r.is_bl());
        }
    }

    #[test]
    fn divisibility_criteria_agree(l in algebra()) {
        let c = divisibility_criteria(&l);
        prop_assert!(c.agree(), "{:?}", c);
    }

    #[test]
    fn canonical_key_ignores_labels(l in algebra(), seed in any::<u64>()) {
        let mut p: Vec<usize> = (0..l.size()).collect();
        p.rotate_left((seed as usize) % l.size());
        prop_assert_eq!(canonical_key(&l), canonical_key(&l.permuted(&p)));
    }

    #[test]
    fn isomorphism_is_an_equivalence(l in algebra(), p in permutation(5), q in permutation(5)) {
        let n = l.size();
        // Dropping the labels >= n leaves a permutation of 0..n.
        let fix = |p: &[usize]| -> Vec<usize> { p.iter().copied().filter(|&x| x < n).collect() };
        let (p, q) = (fix(&p), fix(&q));
        let a = l.permuted(&p);
        let b = a.permuted(&q);
        let refl = are_isomorphic(&l, &l).unwrap();
        prop_assert!(verify_isomorphism(&l, &l, &refl.mapping));
        let ab = are_isomorphic(&a, &b).unwrap();
        prop_assert!(verify_isomorphism(&b, &a, &ab.inverse().mapping));
        let la = are_isomorphic(&l, &a).unwrap();
        prop_assert!(verify_isomorphism(&l, &b, &la.compose(&ab).mapping));
    }

    #[test]
    fn distinct_classes_are_not_isomorphic(i in 0..catalog().len(), j in 0..catalog().len()) {
        let c = catalog();
        prop_assert_eq!(are_isomorphic(&c[i], &c[j]).is_some(), i == j);
    }

    #[test]
    fn lattice_file_round_trip(l in algebra()) {
        let text = to_json_text(&LatticeFile::from_algebra(&l)).unwrap();
        let back: LatticeFile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.into_algebra().unwrap(), l);
    }

    #[test]
    fn ordinal_product_laws(a in select(bl_catalog()), b in select(bl_catalog())) {
        let ab = ordinal_product(&a, &b).unwrap();
        let r = check_properties(&ab);
        prop_assert_eq!(ab.size(), a.size() + b.size() - 1);
        if a.is_chain() {
            prop_assert!(r.is_bl() && !r.is_mv());
        } else {
            prop_assert!(r.is_divisible() && !r.is_prelinear());
        }
        prop_assert_eq!(ab.is_chain(), a.is_chain() && b.is_chain());
        // Elements of the lower factor sit below those of the upper one.
        for x in 0..a.size() {
            for y in a.size()..ab.size() {
                prop_assert!(ab.leq(x, y));
                prop_assert_eq!(ab.odot(x, y), x);
            }
        }
    }

    #[test]
    fn maximal_ideals_are_the_primes(r in ring()) {
        let s = classify_ideals(&r).unwrap();
        prop_assert_eq!(s.n_maximal, s.n_prime);
        prop_assert!(s.is_principal_ring);
    }

    #[test]
    fn ideal_operations(r in ring()) {
        let id = build_ideal_lattice(&r).unwrap();
        let ideals = id.ideals();
        for i in ideals {
            let ann = r.annihilator(i).unwrap();
            prop_assert_eq!(&r.annihilator(&ann).unwrap(), i);
            for j in ideals {
                let ij = r.ideal_product(i, j).unwrap();
                prop_assert_eq!(&ij, &r.ideal_product(j, i).unwrap());
                prop_assert!(ij.is_subset(&r.ideal_intersection(i, j).unwrap()));
                let q = r.ideal_quotient(j, i).unwrap();
                for k in ideals {
                    let inside = r.ideal_product(k, i).unwrap().is_subset(j);
                    prop_assert_eq!(inside, k.is_subset(&q));
                }
            }
        }
    }

    #[test]
    fn cyclic_products_are_multiplication_rings(r in ring()) {
        let v = is_multiplication_ring(&r).unwrap();
        prop_assert!(v.holds && v.criteria.agree());
        prop_assert!(check_properties(build_ideal_lattice(&r).unwrap().algebra()).is_mv());
    }
}
