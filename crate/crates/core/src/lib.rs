//! Finite commutative semirings, the free semimodules `S^k` over them, their
//! lattices of subsemimodules under the orthogonality operator, and the
//! projections that split them.

pub mod analysis;
pub mod bitset;
pub mod error;
pub mod golden;
pub mod poset;
pub mod report;
pub mod semimodule;
pub mod semiring;
pub mod splitting;
pub mod sublattice;

pub use error::{ModuleError, PosetError, SemiringError};
pub use poset::FinitePoset;
pub use semimodule::{closure, free_semimodule, FreeSemimodule, VecId, Vector};
pub use semiring::{validate_semiring, FiniteSemiring, SemiringTables};
pub use splitting::{enumerate_projections, LinearMap, ProjectionPoset, ProjectionScan};
pub use sublattice::{enumerate_subsemimodules, SubLattice, Subsemimodule};
