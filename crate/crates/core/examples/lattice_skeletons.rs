//! Bounded lattices up to isomorphism.

use reslat::classify::enumerate_lattice_skeletons;

fn main() {
    for n in 1..=8 {
        let ls = enumerate_lattice_skeletons(n).unwrap();
        let chains = ls.iter().filter(|l| l.is_chain()).count();
        println!("n={n}: {} lattices ({chains} chain)", ls.len());
    }
}
