//! Finite residuated lattices, ideal lattices of finite commutative rings, ordinal products
//! and exhaustive classification of small divisible residuated lattices.

pub mod algebra;
pub mod classify;
pub mod cli;
pub mod corpus;
pub mod ideal_lattice;
pub mod io;
pub mod ordinal;
pub mod ring;
