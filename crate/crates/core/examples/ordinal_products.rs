//! Gluing BL-algebras with the ordinal product.

use reslat::algebra::check_properties;
use reslat::classify::are_isomorphic;
use reslat::corpus;
use reslat::ordinal::{distinguishing_flags, evaluate_expr, AlgebraExpr};

fn main() {
    let e = AlgebraExpr::ordprod(AlgebraExpr::zn_product(&[2, 2]), AlgebraExpr::zn(2));
    let l = evaluate_expr(&e).unwrap();
    let r = check_properties(&l);
    println!("{e}: {} elements, divisible {}, BL {}", l.size(), r.is_divisible(), r.is_bl());
    println!("isomorphic to the 5-element example: {}", are_isomorphic(&l, &corpus::non_bl_divisible()).is_some());

    let a = evaluate_expr(&AlgebraExpr::ordprod(AlgebraExpr::zn(2), AlgebraExpr::zn(4))).unwrap();
    let b = evaluate_expr(&AlgebraExpr::ordprod(AlgebraExpr::zn(4), AlgebraExpr::zn(2))).unwrap();
    println!("Z2 . Z4 vs Z4 . Z2 isomorphic: {}", are_isomorphic(&a, &b).is_some());
    let swapped = evaluate_expr(&AlgebraExpr::ordprod(AlgebraExpr::zn(2), AlgebraExpr::zn_product(&[2, 2]))).unwrap();
    println!("(Z2xZ2) . Z2 vs Z2 . (Z2xZ2) isomorphic: {}", are_isomorphic(&l, &swapped).is_some());
    println!("distinguished by: {:?}", distinguishing_flags(&l, &swapped));

    let bad = AlgebraExpr::ordprod(e.clone(), AlgebraExpr::zn(2));
    match evaluate_expr(&bad) {
        Ok(_) => println!("unexpected success"),
        Err(err) => println!("{bad}: {err}"),
    }
}
