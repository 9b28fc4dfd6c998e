//! Rank functions on accessible distributive lattices and the U-matroid
//! operations built on them: validation, vertices and bases, flats, duality
//! and poset-matroid detection.

mod bases;
mod dual;
mod flats;
mod poset_matroid;
mod rank;
mod validate;

pub use bases::{
    bases, bases_by_extensions, bases_with, basis_of_chain, dot_bases, rank_from_bases,
    vertex_of_chain,
};
pub use dual::dual;
pub use flats::{closure, flats, FlatLattice};
pub use poset_matroid::{
    is_poset_matroid, local_chain_violations, ChainViolation, PosetMatroidMethod,
    PosetMatroidReport, PosetMatroidWitness,
};
pub use rank::{RankFunction, UMatroid};
pub use validate::{validate, Axiom, ValidationReport, Violation};
