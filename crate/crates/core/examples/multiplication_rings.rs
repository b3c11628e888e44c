//! The three multiplication-ring criteria over the test corpus.

use reslat::corpus;
use reslat::ideal_lattice::{build_ideal_lattice, check_c6_c7, is_multiplication_lattice};
use reslat::ring::build_ring;

fn main() {
    let mut yes = 0;
    let mut no = 0;
    for spec in corpus::ring_corpus() {
        let ring = build_ring(&spec).unwrap();
        let id = build_ideal_lattice(&ring).unwrap();
        let v = is_multiplication_lattice(&id).expect("criteria agree");
        if v.holds {
            yes += 1;
            assert!(check_c6_c7(&ring).unwrap().all_hold());
        } else {
            no += 1;
            let w = v.witness.unwrap();
            let l = id.algebra();
            println!(
                "{} is not a multiplication ring: I = {}, J = {}, I(J:I) = {} but I^J = {}",
                ring.name(),
                l.label(w[0]),
                l.label(w[1]),
                l.label(l.odot(w[0], l.arrow(w[0], w[1]))),
                l.label(l.meet(w[0], w[1]))
            );
        }
    }
    println!("{yes} multiplication rings, {no} others; c6 and c7 hold on all multiplication rings");
}
