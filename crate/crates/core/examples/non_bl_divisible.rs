//! The 5-element divisible residuated lattice that is not a BL-algebra.

use reslat::algebra::{check_divisibility_equivalences, check_identities_c1_c5, check_properties};
use reslat::corpus;

fn main() {
    let l = corpus::non_bl_divisible();
    let r = check_properties(&l);
    println!("divisible: {}  prelinear: {}  BL: {}", r.is_divisible(), r.is_prelinear(), r.is_bl());

    let w = r.prelinear.witness.clone().expect("prelinearity fails");
    let (a, b) = (w[0], w[1]);
    let j = l.join(l.arrow(a, b), l.arrow(b, a));
    println!("({}->{}) v ({}->{}) = {} != 1", l.label(a), l.label(b), l.label(b), l.label(a), l.label(j));

    println!("three divisibility criteria agree: {:?}", check_divisibility_equivalences(&l));
    let ids = check_identities_c1_c5(&l).expect("divisible");
    for id in &ids.results {
        println!("{}: {}", id.name, if id.verdict.holds { "holds" } else { "fails" });
    }
}
