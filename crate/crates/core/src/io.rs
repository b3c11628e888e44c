//! JSON file formats: lattice files, ring spec files and expression files.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::algebra::{
    validate_lattice, validate_residuated, LatticeError, RawLattice, ResiduatedError, ResiduatedLattice,
};
use crate::ordinal::{evaluate_expr_in, AlgebraExpr, ExprError};
use crate::ring::RingSpec;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("size {size} does not match {what}")]
    Size { size: usize, what: &'static str },
    #[error("leq entries must be 0 or 1")]
    LeqEntry,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Residuated(#[from] ResiduatedError),
}

/// On-disk lattice: `leq[i][j] = 1` means element `i <= j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeFile {
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub leq: Vec<Vec<u8>>,
    pub odot: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arrow: Option<Vec<Vec<usize>>>,
}

impl LatticeFile {
    pub fn from_algebra(l: &ResiduatedLattice) -> Self {
        LatticeFile {
            size: l.size(),
            labels: l.lattice().labels().map(|s| s.to_vec()),
            leq: l.lattice().leq_matrix().into_iter().map(|r| r.into_iter().map(u8::from).collect()).collect(),
            odot: l.odot_matrix(),
            arrow: Some(l.arrow_matrix()),
        }
    }

    pub fn into_algebra(self) -> Result<ResiduatedLattice, FormatError> {
        if self.leq.len() != self.size {
            return Err(FormatError::Size { size: self.size, what: "leq rows" });
        }
        if self.leq.iter().flatten().any(|&v| v > 1) {
            return Err(FormatError::LeqEntry);
        }
        let leq = self.leq.iter().map(|r| r.iter().map(|&v| v == 1).collect()).collect();
        let lattice =
            validate_lattice(RawLattice { size: self.size, leq, meet: None, join: None, labels: self.labels })?;
        Ok(validate_residuated(lattice, self.odot, self.arrow)?)
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, FormatError> {
    let p = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io { path: p.clone(), source })?;
    serde_json::from_str(&text).map_err(|source| FormatError::Json { path: p, source })
}

/// Indented JSON with arrays of scalars kept on one line, so table rows stay readable.
pub fn to_json_text<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut out = String::new();
    render(&serde_json::to_value(value)?, 0, &mut out);
    Ok(out)
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                render(x, depth + 1, out);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, x)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                render(x, depth + 1, out);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), FormatError> {
    let p = path.display().to_string();
    let mut text = to_json_text(value).map_err(|source| FormatError::Json { path: p.clone(), source })?;
    text.push('\n');
    fs::write(path, text).map_err(|source| FormatError::Io { path: p, source })
}

pub fn read_lattice_file(path: &Path) -> Result<ResiduatedLattice, FormatError> {
    read_json::<LatticeFile>(path)?.into_algebra()
}

pub fn write_lattice_file(path: &Path, l: &ResiduatedLattice) -> Result<(), FormatError> {
    write_json(path, &LatticeFile::from_algebra(l))
}

pub fn read_ring_spec(path: &Path) -> Result<RingSpec, FormatError> {
    read_json(path)
}

pub fn write_ring_spec(path: &Path, spec: &RingSpec) -> Result<(), FormatError> {
    write_json(path, spec)
}

pub fn read_expr(path: &Path) -> Result<AlgebraExpr, FormatError> {
    read_json(path)
}

pub fn write_expr(path: &Path, e: &AlgebraExpr) -> Result<(), FormatError> {
    write_json(path, e)
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Expr(#[from] ExprError),
}

/// Read either a lattice file or an expression file (recognized by its `kind` key).
/// Literal paths inside an expression resolve relative to the file's directory.
pub fn load_algebra(path: &Path) -> Result<ResiduatedLattice, LoadError> {
    let value: serde_json::Value = read_json(path)?;
    if value.get("kind").is_some() {
        let expr: AlgebraExpr = serde_json::from_value(value)
            .map_err(|source| FormatError::Json { path: path.display().to_string(), source })?;
        let base = path.parent().unwrap_or(Path::new("."));
        Ok(evaluate_expr_in(&expr, base)?)
    } else {
        let file: LatticeFile = serde_json::from_value(value)
            .map_err(|source| FormatError::Json { path: path.display().to_string(), source })?;
        Ok(file.into_algebra()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn lattice_file_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("e3.json");
        write_lattice_file(&p, &corpus::non_bl_divisible()).unwrap();
        let back = read_lattice_file(&p).unwrap();
        assert_eq!(back, corpus::non_bl_divisible());
        assert_eq!(back.label(3), "c");
    }

    #[test]
    fn arrow_is_optional() {
        let mut f = LatticeFile::from_algebra(&corpus::non_bl_divisible());
        f.arrow = None;
        let j = serde_json::to_string(&f).unwrap();
        assert!(!j.contains("arrow"));
        let back: LatticeFile = serde_json::from_str(&j).unwrap();
        assert_eq!(back.into_algebra().unwrap().arrow_matrix(), corpus::non_bl_divisible_arrow());
    }

    #[test]
    fn bad_leq_entry() {
        let mut f = LatticeFile::from_algebra(&corpus::non_bl_divisible());
        f.leq[0][1] = 2;
        assert!(matches!(f.into_algebra(), Err(FormatError::LeqEntry)));
    }

    #[test]
    fn load_expression_file() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("z4.json");
        write_expr(&p, &AlgebraExpr::zn(4)).unwrap();
        let l = load_algebra(&p).unwrap();
        assert_eq!(l.size(), 3);
    }
}
