//! Counting divisible residuated lattices and BL-algebras with up to six elements.

use reslat::classify::{enumerate_algebras, table_reports, ClassFilter, EnumerateOptions, Method};

fn main() {
    for n in 2..=6 {
        let opts = EnumerateOptions::default();
        let all = enumerate_algebras(n, ClassFilter::Residuated, Method::Brute, opts).unwrap();
        let div = enumerate_algebras(n, ClassFilter::Divisible, Method::Both, opts).unwrap();
        let bl = enumerate_algebras(n, ClassFilter::Bl, Method::Generate, opts).unwrap();
        println!("n={n}: residuated {:>3}  divisible {:>2}  BL {:>2}", all.count, div.count, bl.count);
    }
    let report =
        enumerate_algebras(6, ClassFilter::DivisibleNotBl, Method::Brute, EnumerateOptions::default()).unwrap();
    print!("{}", report.render_text());
    print!("{}", table_reports(5, Method::Generate).unwrap().render_text());
}
