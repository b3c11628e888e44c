//! Writing and reading lattice, ring spec and expression files.

use reslat::corpus;
use reslat::io::{load_algebra, read_ring_spec, write_expr, write_lattice_file, write_ring_spec};
use reslat::ordinal::AlgebraExpr;

fn main() {
    let dir = std::env::temp_dir().join(format!("reslat-formats-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let lattice = dir.join("non_bl5.json");
    write_lattice_file(&lattice, &corpus::non_bl_divisible()).unwrap();
    print!("{}", std::fs::read_to_string(&lattice).unwrap());

    let spec = dir.join("ring.json");
    write_ring_spec(&spec, &corpus::non_multiplication_ring()).unwrap();
    println!("ring spec round trip: {}", read_ring_spec(&spec).unwrap() == corpus::non_multiplication_ring());

    let expr = dir.join("expr.json");
    let e = AlgebraExpr::ordprod(AlgebraExpr::literal("non_bl5.json"), AlgebraExpr::zn(2));
    write_expr(&expr, &e).unwrap();
    println!("{}", std::fs::read_to_string(&expr).unwrap().trim());
    match load_algebra(&expr) {
        Ok(l) => println!("loaded {} elements", l.size()),
        Err(err) => println!("{err}"),
    }
    std::fs::remove_dir_all(&dir).unwrap();
}
