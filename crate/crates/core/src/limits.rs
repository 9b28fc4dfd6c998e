//! Size caps shared by the enumeration routines.
//!
//! The defaults keep every operation at desk scale. A binary may raise or
//! lower them once at start-up with [`Limits::install`]; library callers that
//! need per-call control use the `*_with` variants that take a `&Limits`.

use std::sync::RwLock;

use crate::error::{Error, Result};

/// Hard cap on the ground set size.
pub const MAX_N: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground set for which the full Boolean lattice may be built.
    pub max_boolean_n: usize,
    /// Largest lattice `order_ideals` will materialize.
    pub max_lattice: usize,
    /// Largest number of linear extensions an enumeration may visit.
    pub max_extensions: u64,
    /// Largest number of (ideal, partial basis) states in basis enumeration.
    pub max_basis_states: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_boolean_n: 16,
            max_lattice: 1 << 16,
            max_extensions: 10_000_000,
            max_basis_states: 20_000_000,
        }
    }
}

static GLOBAL: RwLock<Option<Limits>> = RwLock::new(None);

impl Limits {
    /// The process-wide limits (defaults unless [`Limits::install`] was called).
    pub fn current() -> Limits {
        GLOBAL.read().ok().and_then(|g| *g).unwrap_or_default()
    }

    pub fn install(self) {
        if let Ok(mut g) = GLOBAL.write() {
            *g = Some(self);
        }
    }

    pub fn check_boolean(&self, n: usize) -> Result<()> {
        if n > self.max_boolean_n {
            return Err(Error::CapExceeded {
                what: "Boolean ground set size",
                limit: self.max_boolean_n as u64,
            });
        }
        Ok(())
    }
}
