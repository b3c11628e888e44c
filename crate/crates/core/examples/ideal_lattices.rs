//! Ideal lattices of small commutative rings and their ideal statistics.

use reslat::algebra::check_properties;
use reslat::ideal_lattice::{build_ideal_lattice, classify_ring_logic};
use reslat::ring::{build_ring, classify_ideals, RingSpec};

fn main() {
    let specs = [
        RingSpec::zn(12),
        RingSpec::zn(16),
        RingSpec::product([RingSpec::zn(2), RingSpec::zn(2)]),
        RingSpec::polyquot(2, [0, 0, 1]),
        reslat::corpus::non_multiplication_ring(),
    ];
    for spec in specs {
        let ring = build_ring(&spec).unwrap();
        let id = build_ideal_lattice(&ring).unwrap();
        let stats = classify_ideals(&ring).unwrap();
        let labels: Vec<String> = (0..id.len()).map(|k| id.algebra().label(k)).collect();
        println!("{}: ideals {}", ring.name(), labels.join(" "));
        println!(
            "  maximal {} prime {} local {} principal {}",
            stats.n_maximal, stats.n_prime, stats.is_local, stats.is_principal_ring
        );
        let p = check_properties(id.algebra());
        let logic = classify_ring_logic(&ring).unwrap();
        println!(
            "  Id(A): BL {} MV {} chain {} multiplication {}",
            p.is_bl(),
            p.is_mv(),
            p.is_chain(),
            logic.multiplication
        );
    }
}
