use thiserror::Error;

use crate::semiring::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemiringError {
    #[error("malformed semiring tables: {0}")]
    Shape(String),
    #[error("semiring has {n} elements, more than the cap of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("semiring axioms violated: {}", list(.0))]
    AxiomViolation(Vec<Violation>),
    #[error("semiring is not a bounded distributive lattice")]
    NotALattice,
}

fn list(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("{size} vectors exceeds the size cap of {cap}")]
    SizeCapExceeded { size: u128, cap: usize },
    #[error("rank must be positive")]
    ZeroRank,
    #[error("vector has length {found}, ambient rank is {expected}")]
    RankMismatch { expected: usize, found: usize },
    #[error("coordinate {0} is not a semiring element")]
    BadCoordinate(usize),
    #[error("operands live in different semimodules")]
    AmbientMismatch,
    #[error("more than {cap} subsemimodules")]
    EnumerationCapExceeded { cap: usize },
    #[error("subsemimodule is not splitting")]
    NotSplitting,
    #[error("the underlying semiring is not a ring")]
    NotARing,
    #[error("decomposition of vector {vector} is not unique ({count} pairs)")]
    UniquenessViolation { vector: usize, count: usize },
    #[error("{candidates} candidate matrices exceeds the search cap of {cap}")]
    SearchCapExceeded { candidates: u128, cap: u128 },
    #[error("projections do not commute")]
    NotCommuting,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("poset has no {0} element")]
    NoBounds(&'static str),
    #[error("unary operation does not map the carrier into itself")]
    InvolutionNotClosed,
    #[error("poset carries no unary operation")]
    NoInvolution,
    #[error("poset is not an orthoposet")]
    NotOrthoposet,
    #[error("poset is not a lattice")]
    NotALattice,
    #[error("poset is empty")]
    Empty,
}
