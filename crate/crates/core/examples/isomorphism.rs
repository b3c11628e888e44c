//! Isomorphism certificates and canonical keys.

use reslat::classify::{are_isomorphic, canonical_key};
use reslat::ordinal::{evaluate_expr, AlgebraExpr};

fn main() {
    let z4 = evaluate_expr(&AlgebraExpr::zn(4)).unwrap();
    let z9 = evaluate_expr(&AlgebraExpr::zn(9)).unwrap();
    let g3 = evaluate_expr(&AlgebraExpr::ordprod(AlgebraExpr::zn(2), AlgebraExpr::zn(2))).unwrap();

    let c = are_isomorphic(&z4, &z9).unwrap();
    for x in 0..z4.size() {
        println!("{} -> {}", z4.label(x), z9.label(c.mapping[x]));
    }
    println!("verified: {}", c.verified);
    println!("Id(Z4) ~ Id(Z2) . Id(Z2): {}", are_isomorphic(&z4, &g3).is_some());
    println!("equal canonical keys: {}", canonical_key(&z4) == canonical_key(&z9));
}
