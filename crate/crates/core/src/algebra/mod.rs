//! Finite bounded lattices and commutative integral residuated lattices as operation tables.

pub mod identities;
pub mod lattice;
pub mod properties;
pub mod residuated;

pub use identities::{check_identities_c1_c5, IdentityReport, IdentityResult, PreconditionNotDivisible};
pub use lattice::{validate_lattice, BoundOp, FiniteLattice, LatticeError, OrderAxiom, RawLattice};
pub use properties::{
    check_divisibility_equivalences, check_properties, divisibility_criteria, DivisibilityCriteria, EquivalenceBroken,
    Property, PropertyReport, Verdict,
};
pub use residuated::{meet_monoid, validate_residuated, MonoidLaw, ResiduatedError, ResiduatedLattice};
