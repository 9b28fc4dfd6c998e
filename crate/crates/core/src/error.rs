use thiserror::Error;

use crate::lattice::Subset;

/// Errors raised by the library. Negative verdicts (an axiom that fails, a
/// family that is not a basis system) are reported as values, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set size {0} out of range (1..={max})", max = crate::limits::MAX_N)]
    GroundSetSize(usize),

    #[error("element {elem} outside ground set [1..{n}]")]
    ElementOutOfRange { elem: usize, n: usize },

    #[error("ground sets differ ({0} vs {1})")]
    GroundSetMismatch(usize, usize),

    #[error("relations contain a cycle through {0} and {1}")]
    PosetCycle(usize, usize),

    #[error("not a lattice: {0} and {1} have {2} outside the family")]
    NotALattice(Subset, Subset, &'static str),

    #[error("lattice is missing {0}")]
    MissingBound(Subset),

    #[error("lattice is not accessible: no element of {0} can be removed")]
    NotAccessible(Subset),

    #[error("{0} is not a member of the lattice")]
    NotInLattice(Subset),

    #[error("{0} is not a sublattice of the given lattice")]
    NotASublattice(&'static str),

    #[error("element {0} is already an atom of the lattice")]
    AlreadyAtom(usize),

    #[error("order {0:?} is not a linear extension of the characteristic poset")]
    NotALinearExtension(Vec<usize>),

    #[error("not a permutation of [1..{0}]")]
    NotAPermutation(usize),

    #[error("rank function: {0}")]
    RankTable(String),

    #[error("rank function fails the {axiom} axiom at {a} / {b}")]
    AxiomViolation {
        axiom: &'static str,
        a: Subset,
        b: Subset,
    },

    #[error("{what} limit exceeded ({limit})")]
    CapExceeded { what: &'static str, limit: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("set family is not pure: {0}")]
    NotPure(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("generic sampling failed after {0} attempts")]
    GenericityFailure(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
