//! Unbounded matroids (U-matroids): integer rank functions on accessible
//! distributive lattices of subsets, with exact arithmetic throughout.
//!
//! * [`lattice`] — subsets, posets, order-ideal lattices, linear extensions.
//! * [`umatroid`] — rank functions, axiom checks, bases, flats, duality.

pub mod arrangements;
pub mod complexes;
mod error;
pub mod extension;
pub mod io;
pub mod lattice;
pub mod limits;
pub mod umatroid;

pub use error::{Error, Result};
pub use limits::Limits;
