//! The BL-algebra structure listing and the count summary for small sizes.

use serde::Serialize;

use super::enumerate::{
    brute_catalog, cross_check, generate_catalog, with_provenance, CatalogEntry, ClassFilter, Method,
};
use super::{canonical_key, ClassifyError};
use crate::ordinal::{evaluate_expr, AlgebraExpr};

/// An expression from the reference structure listing with its listed chain flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListedEntry {
    pub n: usize,
    pub expr: AlgebraExpr,
    pub chain: bool,
}

fn z(k: usize) -> AlgebraExpr {
    AlgebraExpr::zn(k)
}

fn z2z2() -> AlgebraExpr {
    AlgebraExpr::zn_product(&[2, 2])
}

fn op(a: AlgebraExpr, b: AlgebraExpr) -> AlgebraExpr {
    AlgebraExpr::ordprod(a, b)
}

/// BL-algebras with 2 to 5 elements, in the order they are usually listed.
pub fn bl_structure_listing() -> Vec<ListedEntry> {
    let e = |n, expr, chain| ListedEntry { n, expr, chain };
    vec![
        e(2, z(2), true),
        e(3, z(4), true),
        e(3, op(z(2), z(2)), true),
        e(4, z(8), true),
        e(4, z2z2(), false),
        e(4, op(z(2), z(4)), true),
        e(4, op(z(4), z(2)), true),
        e(4, op(z(2), op(z(2), z(2))), true),
        e(5, z(16), true),
        e(5, op(z(2), z(8)), true),
        e(5, op(z(2), z2z2()), false),
        e(5, op(z(2), op(z(2), z(4))), true),
        e(5, op(z(2), op(z(4), z(2))), true),
        e(5, op(z(2), op(z(2), op(z(2), z(2)))), true),
        e(5, op(z(8), z(2)), true),
        e(5, op(op(z(4), z(2)), z(2)), true),
        e(5, op(z(4), z(4)), true),
    ]
}

/// Divisible residuated lattices that are not BL-algebras, up to 6 elements.
pub fn non_bl_expressions() -> Vec<ListedEntry> {
    let e = |n, expr| ListedEntry { n, expr, chain: false };
    vec![
        e(5, op(z2z2(), z(2))),
        e(6, op(op(z(2), z2z2()), z(2))),
        e(6, op(z2z2(), op(z(2), z(2)))),
        e(6, op(z2z2(), z(4))),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: usize,
    pub bl: usize,
    pub div: usize,
    pub bl_chain: usize,
    pub div_chain: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureRow {
    /// `None` when no expression is known for the class.
    pub expr: Option<String>,
    pub chain: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureBlock {
    pub n: usize,
    pub count: usize,
    pub rows: Vec<StructureRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub method: String,
    pub counts: Vec<CountRow>,
    pub bl_structure: Vec<StructureBlock>,
    pub non_bl_structure: Vec<StructureBlock>,
}

/// Divisible classes of size `n` by the chosen method, sorted by key, with provenance where
/// a generated class matches.
fn divisible_catalog(n: usize, method: Method) -> Result<Vec<CatalogEntry>, ClassifyError> {
    let divisible =
        |v: Vec<CatalogEntry>| -> Vec<CatalogEntry> { v.into_iter().filter(|e| e.report.is_divisible()).collect() };
    match method {
        Method::Generate => generate_catalog(n),
        Method::Brute => Ok(with_provenance(divisible(brute_catalog(n, false)?), &generate_catalog(n)?)),
        Method::Both => {
            let brute = divisible(brute_catalog(n, false)?);
            let generated = generate_catalog(n)?;
            cross_check(n, ClassFilter::Divisible, &brute, &generated)?;
            Ok(with_provenance(brute, &generated))
        }
    }
}

/// Match every class in `classes` to exactly one listed expression and back. Rows come out
/// in listed order.
fn match_listed(
    n: usize,
    classes: &[&CatalogEntry],
    listed: &[ListedEntry],
) -> Result<Vec<StructureRow>, ClassifyError> {
    let incomplete = |detail: String| ClassifyError::CatalogIncomplete { n, detail };
    let keys: Vec<Vec<u16>> = listed
        .iter()
        .map(|p| evaluate_expr(&p.expr).map(|l| canonical_key(&l)).map_err(|e| incomplete(format!("{}: {e}", p.expr))))
        .collect::<Result<_, _>>()?;
    for c in classes {
        let hits = keys.iter().filter(|k| **k == c.key).count();
        if hits != 1 {
            let name = c.expr().map_or("a class without expression".to_string(), |e| e.to_string());
            return Err(incomplete(format!("{name} matches {hits} listed expressions")));
        }
    }
    let mut rows = Vec::new();
    for (p, k) in listed.iter().zip(&keys) {
        let Some(c) = classes.iter().find(|c| &c.key == k) else {
            return Err(incomplete(format!("{} matches no enumerated class", p.expr)));
        };
        if c.report.is_chain() != p.chain {
            return Err(incomplete(format!("{} has chain flag {}, listed {}", p.expr, c.report.is_chain(), p.chain)));
        }
        rows.push(StructureRow { expr: Some(p.expr.to_string()), chain: p.chain });
    }
    Ok(rows)
}

fn unmatched_rows(classes: &[&CatalogEntry]) -> Vec<StructureRow> {
    classes.iter().map(|c| StructureRow { expr: c.expr().map(|e| e.to_string()), chain: c.report.is_chain() }).collect()
}

/// Counts for `2..=max` and structure listings matched by isomorphism against the listed
/// expressions (sizes up to 5 for BL-algebras, up to 6 for the others).
pub fn table_reports(max: usize, method: Method) -> Result<TableReport, ClassifyError> {
    if max < 2 {
        return Err(ClassifyError::SizeTooSmall { n: max });
    }
    let listing = bl_structure_listing();
    let non_bl = non_bl_expressions();
    let mut report = TableReport {
        method: method.to_string(),
        counts: Vec::new(),
        bl_structure: Vec::new(),
        non_bl_structure: Vec::new(),
    };
    for n in 2..=max {
        let div = divisible_catalog(n, method)?;
        let bl: Vec<&CatalogEntry> = div.iter().filter(|e| e.report.is_bl()).collect();
        let not_bl: Vec<&CatalogEntry> = div.iter().filter(|e| !e.report.is_bl()).collect();
        report.counts.push(CountRow {
            n,
            bl: bl.len(),
            div: div.len(),
            bl_chain: bl.iter().filter(|e| e.report.is_chain()).count(),
            div_chain: div.iter().filter(|e| e.report.is_chain()).count(),
        });
        let listed: Vec<ListedEntry> = listing.iter().filter(|p| p.n == n).cloned().collect();
        let rows = if listed.is_empty() { unmatched_rows(&bl) } else { match_listed(n, &bl, &listed)? };
        report.bl_structure.push(StructureBlock { n, count: bl.len(), rows });
        let listed: Vec<ListedEntry> = non_bl.iter().filter(|p| p.n == n).cloned().collect();
        let rows = if n <= 6 { match_listed(n, &not_bl, &listed)? } else { unmatched_rows(&not_bl) };
        report.non_bl_structure.push(StructureBlock { n, count: not_bl.len(), rows });
    }
    Ok(report)
}

impl TableReport {
    pub fn render_text(&self) -> String {
        let mut s = String::from("Number of algebras\n");
        let label_width = 32;
        s.push_str(&format!("{:label_width$}", ""));
        for r in &self.counts {
            s.push_str(&format!("{:>6}", format!("n={}", r.n)));
        }
        s.push('\n');
        type Row = (&'static str, fn(&CountRow) -> usize);
        let rows: [Row; 4] = [
            ("BL-algebras", |r| r.bl),
            ("divisible residuated lattices", |r| r.div),
            ("BL-chains", |r| r.bl_chain),
            ("divisible chains", |r| r.div_chain),
        ];
        for (name, get) in rows {
            s.push_str(&format!("{name:label_width$}"));
            for r in &self.counts {
                s.push_str(&format!("{:>6}", get(r)));
            }
            s.push('\n');
        }
        s.push_str("\nStructure of BL-algebras\n");
        render_blocks(&mut s, &self.bl_structure, true);
        s.push_str("\nDivisible residuated lattices that are not BL-algebras\n");
        render_blocks(&mut s, &self.non_bl_structure, false);
        s
    }
}

fn render_blocks(s: &mut String, blocks: &[StructureBlock], bl: bool) {
    for b in blocks {
        let head = format!("n={:<3}{:>3}  ", b.n, b.count);
        if b.rows.is_empty() {
            s.push_str(&format!("{head}-\n"));
        }
        for (i, r) in b.rows.iter().enumerate() {
            let prefix = if i == 0 { head.clone() } else { " ".repeat(head.len()) };
            let expr = r.expr.as_deref().unwrap_or("no expression provenance");
            let flag = match (bl, r.chain) {
                (true, true) => " (BL-chain)",
                (true, false) => " (BL)",
                _ => "",
            };
            s.push_str(&format!("{prefix}{expr}{flag}\n"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_tables() {
        let r = table_reports(6, Method::Generate).unwrap();
        let bl: Vec<usize> = r.counts.iter().map(|t| t.bl).collect();
        let div: Vec<usize> = r.counts.iter().map(|t| t.div).collect();
        assert_eq!(bl, vec![1, 2, 5, 9, 20]);
        assert_eq!(div, vec![1, 2, 5, 10, 23]);
        assert_eq!(r.bl_structure[3].rows.len(), 9);
        assert!(r.bl_structure[4].rows.iter().all(|row| row.expr.is_some()));
    }

    #[test]
    fn listing_sizes() {
        assert_eq!(bl_structure_listing().len(), 1 + 2 + 5 + 9);
        assert_eq!(non_bl_expressions().len(), 4);
    }
}
