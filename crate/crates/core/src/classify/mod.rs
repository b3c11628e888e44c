//! Isomorphism, canonical forms, lattice skeletons and enumeration of small algebras.

pub mod canonical;

pub use canonical::{
    canonical_form, canonical_key, canonicalize, canonicalize_lattice, refine, CanonicalForm, Structure,
};
pub mod enumerate;
pub mod iso;
pub mod skeleton;
pub mod tables;

pub use enumerate::{
    bl_catalogs, brute_catalog, enumerate_algebras, generate_catalog, CatalogEntry, ClassFilter, ClassificationReport,
    EnumerateOptions, Method, Representative,
};
pub use iso::{are_isomorphic, verify_isomorphism, IsoCertificate};
pub use skeleton::{enumerate_lattice_skeletons, MAX_SKELETON_SIZE};
pub use tables::{bl_structure_listing, non_bl_expressions, table_reports, ListedEntry, TableReport};

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("size {n} exceeds the guard {max}; pass the override to run anyway")]
    SizeGuardExceeded { n: usize, max: usize },
    #[error("size {n} is below 2")]
    SizeTooSmall { n: usize },
    #[error("method {method} cannot enumerate class {filter}")]
    UnsupportedFilter { filter: ClassFilter, method: Method },
    #[error("n = {n}, class {filter}: brute force found {brute} classes, generation found {generate}")]
    MethodMismatch { n: usize, filter: ClassFilter, brute: usize, generate: usize },
    #[error("catalog for n = {n} is incomplete: {detail}")]
    CatalogIncomplete { n: usize, detail: String },
    #[error("thread pool: {0}")]
    ThreadPool(String),
}
