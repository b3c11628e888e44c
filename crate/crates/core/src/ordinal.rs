//! Ordinal product of BL-algebras and the expression language naming how an algebra was built.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{check_properties, validate_lattice, validate_residuated, RawLattice, ResiduatedLattice, Verdict};
use crate::ideal_lattice::{build_ideal_lattice, IdealLatticeError};
use crate::io::{self, FormatError};
use crate::ring::{build_ring, RingError, RingSpec};

/// How an algebra is built: the ideal lattice of a ring, an ordinal product, a direct
/// product, or a lattice file.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AlgebraExpr {
    /// `Id(A)` for the ring built from `spec`.
    Ring { spec: RingSpec },
    /// Ordinal product, `left` glued below `right`.
    #[serde(rename = "ordprod")]
    OrdProd { left: Box<AlgebraExpr>, right: Box<AlgebraExpr> },
    /// Direct product with componentwise operations.
    Product { left: Box<AlgebraExpr>, right: Box<AlgebraExpr> },
    /// A lattice file; relative paths resolve against the evaluation base directory.
    Literal { path: String },
}

impl AlgebraExpr {
    pub fn ring(spec: RingSpec) -> Self {
        AlgebraExpr::Ring { spec }
    }

    /// `Id(Z_k)`.
    pub fn zn(k: usize) -> Self {
        AlgebraExpr::ring(RingSpec::zn(k))
    }

    /// `Id(Z_k1 x ... x Z_kr)`.
    pub fn zn_product(ks: &[usize]) -> Self {
        AlgebraExpr::ring(RingSpec::product(ks.iter().map(|&k| RingSpec::zn(k))))
    }

    pub fn ordprod(left: AlgebraExpr, right: AlgebraExpr) -> Self {
        AlgebraExpr::OrdProd { left: Box::new(left), right: Box::new(right) }
    }

    pub fn product(left: AlgebraExpr, right: AlgebraExpr) -> Self {
        AlgebraExpr::Product { left: Box::new(left), right: Box::new(right) }
    }

    pub fn literal(path: impl Into<String>) -> Self {
        AlgebraExpr::Literal { path: path.into() }
    }

    fn is_compound(&self) -> bool {
        matches!(self, AlgebraExpr::OrdProd { .. } | AlgebraExpr::Product { .. })
    }
}

/// ASCII token rendering the ordinal product.
pub const ORDPROD_TOKEN: &str = " . ";
/// ASCII token rendering the direct product of algebras.
pub const PRODUCT_TOKEN: &str = " * ";

impl fmt::Display for AlgebraExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let child = |f: &mut fmt::Formatter<'_>, e: &AlgebraExpr| {
            if e.is_compound() {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match self {
            AlgebraExpr::Ring { spec } => write!(f, "Id({})", spec.name()),
            AlgebraExpr::OrdProd { left, right } => {
                child(f, left)?;
                f.write_str(ORDPROD_TOKEN)?;
                child(f, right)
            }
            AlgebraExpr::Product { left, right } => {
                child(f, left)?;
                f.write_str(PRODUCT_TOKEN)?;
                child(f, right)
            }
            AlgebraExpr::Literal { path } => write!(f, "Lit({path})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Factor {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("{factor:?} factor is not a BL-algebra (witness {witness:?})")]
    NotBLAlgebra { factor: Factor, witness: Vec<usize> },
}

fn bl_witness(l: &ResiduatedLattice) -> Option<Vec<usize>> {
    let r = check_properties(l);
    if r.is_bl() {
        None
    } else {
        r.bl.witness.or(Some(vec![]))
    }
}

/// Ordinal product of two BL-algebras.
///
/// The carrier is `0..n1+n2-1`: the elements of `l1` keep their indices, the top of `l1` doubles
/// as the bottom of `l2`, and the remaining elements of `l2` follow in their own index order.
pub fn ordinal_product(l1: &ResiduatedLattice, l2: &ResiduatedLattice) -> Result<ResiduatedLattice, OrdinalError> {
    if let Some(witness) = bl_witness(l1) {
        return Err(OrdinalError::NotBLAlgebra { factor: Factor::Left, witness });
    }
    if let Some(witness) = bl_witness(l2) {
        return Err(OrdinalError::NotBLAlgebra { factor: Factor::Right, witness });
    }
    Ok(glue(l1, l2))
}

/// The construction itself, without the BL precondition.
pub(crate) fn glue(l1: &ResiduatedLattice, l2: &ResiduatedLattice) -> ResiduatedLattice {
    let (n1, n2) = (l1.size(), l2.size());
    let n = n1 + n2 - 1;
    let (top1, bot2) = (l1.top(), l2.bottom());
    let upper: Vec<usize> = (0..n2).filter(|&y| y != bot2).collect();
    let mut into2 = vec![0; n2];
    into2[bot2] = top1;
    for (k, &y) in upper.iter().enumerate() {
        into2[y] = n1 + k;
    }
    let in1 = |e: usize| e < n1;
    let in2 = |e: usize| e >= n1 || e == top1;
    let from2 = |e: usize| if e == top1 { bot2 } else { upper[e - n1] };

    let leq = |x: usize, y: usize| {
        (in1(x) && in1(y) && l1.leq(x, y)) || (in2(x) && in2(y) && l2.leq(from2(x), from2(y))) || (in1(x) && in2(y))
    };
    let odot = |x: usize, y: usize| {
        if in1(x) && in1(y) {
            l1.odot(x, y)
        } else if in2(x) && in2(y) {
            into2[l2.odot(from2(x), from2(y))]
        } else if in1(x) {
            x
        } else {
            y
        }
    };
    let top = into2[l2.top()];
    // x in the lower part below y in the upper part is covered by the first case (x <= y).
    let arrow = |x: usize, y: usize| {
        if leq(x, y) {
            top
        } else if in1(x) && in1(y) {
            l1.arrow(x, y)
        } else if in2(x) && in2(y) {
            into2[l2.arrow(from2(x), from2(y))]
        } else {
            y
        }
    };

    let labels = match (l1.lattice().labels(), l2.lattice().labels()) {
        (Some(a), Some(b)) => {
            let mut out: Vec<String> = a.to_vec();
            for &y in &upper {
                let mut name = b[y].clone();
                while out.contains(&name) {
                    name.push('\'');
                }
                out.push(name);
            }
            Some(out)
        }
        _ => None,
    };
    let raw = RawLattice {
        size: n,
        leq: (0..n).map(|x| (0..n).map(|y| leq(x, y)).collect()).collect(),
        meet: None,
        join: None,
        labels,
    };
    let lattice = validate_lattice(raw).expect("ordinal sum of lattices is a lattice");
    let odot_t = (0..n).map(|x| (0..n).map(|y| odot(x, y)).collect()).collect();
    let arrow_t = (0..n).map(|x| (0..n).map(|y| arrow(x, y)).collect()).collect();
    let provenance = match (l1.provenance(), l2.provenance()) {
        (Some(a), Some(b)) => Some(AlgebraExpr::ordprod(a.clone(), b.clone())),
        _ => None,
    };
    validate_residuated(lattice, odot_t, Some(arrow_t))
        .expect("ordinal product of residuated lattices is residuated")
        .with_provenance(provenance)
}

/// Direct product; element `(a, b)` has index `a * n2 + b`.
pub fn direct_product(l1: &ResiduatedLattice, l2: &ResiduatedLattice) -> ResiduatedLattice {
    let (n1, n2) = (l1.size(), l2.size());
    let n = n1 * n2;
    let split = |e: usize| (e / n2, e % n2);
    let pair = |a: usize, b: usize| a * n2 + b;
    let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
        (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect()
    };
    let leq = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let ((a, b), (c, d)) = (split(x), split(y));
                    l1.leq(a, c) && l2.leq(b, d)
                })
                .collect()
        })
        .collect();
    let labels = match (l1.lattice().labels(), l2.lattice().labels()) {
        (Some(a), Some(b)) => Some((0..n).map(|e| format!("<{},{}>", a[e / n2], b[e % n2])).collect()),
        _ => None,
    };
    let lattice = validate_lattice(RawLattice { size: n, leq, meet: None, join: None, labels })
        .expect("product of lattices is a lattice");
    let odot = table(&|x, y| {
        let ((a, b), (c, d)) = (split(x), split(y));
        pair(l1.odot(a, c), l2.odot(b, d))
    });
    let arrow = table(&|x, y| {
        let ((a, b), (c, d)) = (split(x), split(y));
        pair(l1.arrow(a, c), l2.arrow(b, d))
    });
    let provenance = match (l1.provenance(), l2.provenance()) {
        (Some(a), Some(b)) => Some(AlgebraExpr::product(a.clone(), b.clone())),
        _ => None,
    };
    validate_residuated(lattice, odot, Some(arrow))
        .expect("product of residuated lattices is residuated")
        .with_provenance(provenance)
}

#[derive(Debug, Error)]
pub enum ExprError {
    #[error("at {path}: {source}")]
    Ring { path: String, source: RingError },
    #[error("at {path}: {source}")]
    IdealLattice { path: String, source: IdealLatticeError },
    #[error("at {path}: {source}")]
    Literal { path: String, source: FormatError },
    /// `path` locates the ordinal product whose factor is not BL, e.g. `left.right`.
    #[error("at {path}: {factor:?} factor {expr} is not a BL-algebra (witness {witness:?})")]
    NotBLAlgebra { path: String, factor: Factor, expr: String, witness: Vec<usize> },
}

impl ExprError {
    pub fn is_not_bl(&self) -> bool {
        matches!(self, ExprError::NotBLAlgebra { .. })
    }
}

/// Evaluate with literal paths resolved against the current directory.
pub fn evaluate_expr(e: &AlgebraExpr) -> Result<ResiduatedLattice, ExprError> {
    evaluate_expr_in(e, Path::new("."))
}

pub fn evaluate_expr_in(e: &AlgebraExpr, base: &Path) -> Result<ResiduatedLattice, ExprError> {
    eval(e, base, "root")
}

fn eval(e: &AlgebraExpr, base: &Path, path: &str) -> Result<ResiduatedLattice, ExprError> {
    let out = match e {
        AlgebraExpr::Ring { spec } => {
            let ring = build_ring(spec).map_err(|source| ExprError::Ring { path: path.into(), source })?;
            build_ideal_lattice(&ring)
                .map_err(|source| ExprError::IdealLattice { path: path.into(), source })?
                .into_algebra()
        }
        AlgebraExpr::OrdProd { left, right } => {
            let l = eval(left, base, &format!("{path}.left"))?;
            let r = eval(right, base, &format!("{path}.right"))?;
            ordinal_product(&l, &r).map_err(|OrdinalError::NotBLAlgebra { factor, witness }| {
                let expr = match factor {
                    Factor::Left => left.to_string(),
                    Factor::Right => right.to_string(),
                };
                ExprError::NotBLAlgebra { path: path.into(), factor, expr, witness }
            })?
        }
        AlgebraExpr::Product { left, right } => {
            let l = eval(left, base, &format!("{path}.left"))?;
            let r = eval(right, base, &format!("{path}.right"))?;
            direct_product(&l, &r)
        }
        AlgebraExpr::Literal { path: file } => {
            let full: PathBuf = base.join(file);
            io::read_lattice_file(&full).map_err(|source| ExprError::Literal { path: path.into(), source })?
        }
    };
    Ok(out.with_provenance(Some(e.clone())))
}

/// `true` when `e` evaluates to a BL-algebra; convenience for filters.
pub fn is_bl(l: &ResiduatedLattice) -> bool {
    check_properties(l).is_bl()
}

/// The flags that tell `L1 . L2` apart from `L2 . L1` in the non-commutativity example.
pub fn distinguishing_flags(a: &ResiduatedLattice, b: &ResiduatedLattice) -> Vec<&'static str> {
    let (ra, rb) = (check_properties(a), check_properties(b));
    let mut out = Vec::new();
    let cmp = |x: &Verdict, y: &Verdict| x.holds != y.holds;
    if cmp(&ra.mv, &rb.mv) {
        out.push("mv");
    }
    if cmp(&ra.prelinear, &rb.prelinear) {
        out.push("prelinear");
    }
    if cmp(&ra.bl, &rb.bl) {
        out.push("bl");
    }
    if cmp(&ra.chain, &rb.chain) {
        out.push("chain");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lattice::chain;
    use crate::algebra::{check_properties, meet_monoid};
    use crate::corpus;

    fn eval(e: &AlgebraExpr) -> ResiduatedLattice {
        evaluate_expr(e).unwrap()
    }

    #[test]
    fn rendering_matches_table_notation() {
        let e = AlgebraExpr::ordprod(AlgebraExpr::zn(2), AlgebraExpr::ordprod(AlgebraExpr::zn(2), AlgebraExpr::zn(2)));
        assert_eq!(e.to_string(), "Id(Z2) . (Id(Z2) . Id(Z2))");
        let e = AlgebraExpr::ordprod(AlgebraExpr::zn_product(&[2, 2]), AlgebraExpr::zn(4));
        assert_eq!(e.to_string(), "Id(Z2xZ2) . Id(Z4)");
    }

    #[test]
    fn non_bl_divisible_is_z2xz2_glued_below_z2() {
        let l = eval(&AlgebraExpr::ordprod(AlgebraExpr::zn_product(&[2, 2]), AlgebraExpr::zn(2)));
        // Carrier order O, C, B, E, then the new top: identical to the reference tables.
        assert_eq!(l.lattice().leq_matrix(), corpus::non_bl_divisible().lattice().leq_matrix());
        assert_eq!(l.odot_matrix(), corpus::non_bl_divisible_odot());
        assert_eq!(l.arrow_matrix(), corpus::non_bl_divisible_arrow());
    }

    #[test]
    fn two_by_two_chain_is_goedel() {
        let l = eval(&AlgebraExpr::ordprod(AlgebraExpr::zn(2), AlgebraExpr::zn(2)));
        assert_eq!(l.size(), 3);
        assert!(l.is_chain());
        let r = check_properties(&l);
        assert!(r.is_bl() && r.is_heyting() && !r.is_mv());
        let z4 = eval(&AlgebraExpr::zn(4));
        assert!(check_properties(&z4).is_mv());
    }

    #[test]
    fn chain_below_boolean_square_is_bl_not_mv() {
        let l = eval(&AlgebraExpr::ordprod(AlgebraExpr::zn(2), AlgebraExpr::zn_product(&[2, 2])));
        assert_eq!(l.size(), 5);
        let r = check_properties(&l);
        assert!(r.is_bl() && !r.is_mv() && !r.is_chain());
    }

    #[test]
    fn z4_ring_expression() {
        let l = eval(&AlgebraExpr::zn(4));
        assert_eq!(l.size(), 3);
        assert!(check_properties(&l).is_mv());
        assert_eq!(l.provenance(), Some(&AlgebraExpr::zn(4)));
    }

    #[test]
    fn nested_goedel_four_chain() {
        let e = AlgebraExpr::ordprod(AlgebraExpr::zn(2), AlgebraExpr::ordprod(AlgebraExpr::zn(2), AlgebraExpr::zn(2)));
        let l = eval(&e);
        assert_eq!(l.size(), 4);
        assert!(l.is_chain() && check_properties(&l).is_bl());
        assert_eq!(l.provenance(), Some(&e));
    }

    #[test]
    fn literal_non_bl_factor_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        io::write_lattice_file(&dir.path().join("non_bl5.json"), &corpus::non_bl_divisible()).unwrap();
        let e = AlgebraExpr::ordprod(AlgebraExpr::literal("non_bl5.json"), AlgebraExpr::zn(2));
        let err = evaluate_expr_in(&e, dir.path()).unwrap_err();
        match err {
            ExprError::NotBLAlgebra { path, factor, .. } => {
                assert_eq!(path, "root");
                assert_eq!(factor, Factor::Left);
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn not_bl_path_points_into_tree() {
        let bad = AlgebraExpr::ordprod(AlgebraExpr::zn_product(&[2, 2]), AlgebraExpr::zn(2));
        let e = AlgebraExpr::ordprod(AlgebraExpr::zn(2), AlgebraExpr::ordprod(bad, AlgebraExpr::zn(2)));
        match evaluate_expr(&e).unwrap_err() {
            ExprError::NotBLAlgebra { path, factor, .. } => {
                assert_eq!(path, "root.right");
                assert_eq!(factor, Factor::Left);
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn direct_product_of_chains() {
        let g3 = meet_monoid(chain(3)).unwrap();
        let b2 = meet_monoid(chain(2)).unwrap();
        let p = direct_product(&b2, &g3);
        assert_eq!(p.size(), 6);
        let r = check_properties(&p);
        assert!(r.is_bl() && r.is_heyting() && !r.is_chain());
    }

    #[test]
    fn expr_json_shape() {
        let e = AlgebraExpr::ordprod(AlgebraExpr::zn(2), AlgebraExpr::literal("x.json"));
        let j = serde_json::to_string(&e).unwrap();
        assert_eq!(
            j,
            r#"{"kind":"ordprod","left":{"kind":"ring","spec":{"kind":"Zn","k":2}},"right":{"kind":"literal","path":"x.json"}}"#
        );
        assert_eq!(serde_json::from_str::<AlgebraExpr>(&j).unwrap(), e);
    }
}
