//! Two structures that are lattices with a monoid but not residuated lattices.

use reslat::algebra::validate_residuated;
use reslat::corpus;
use reslat::ideal_lattice::one_sided_ideal_structure;
use reslat::ring::{build_ring, Sidedness};

fn main() {
    let (diamond, meet) = corpus::diamond_meet_tables();
    match validate_residuated(diamond, meet, None) {
        Ok(_) => println!("diamond with meet: residuated"),
        Err(e) => println!("diamond with meet: {e}"),
    }
    let m2 = build_ring(&corpus::m2z2()).unwrap();
    match one_sided_ideal_structure(&m2, Sidedness::Left) {
        Ok(_) => println!("left ideals of M2(Z2): residuated"),
        Err(e) => println!("left ideals of M2(Z2): {e}"),
    }
}
