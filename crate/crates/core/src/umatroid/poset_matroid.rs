use std::fmt;
use std::str::FromStr;

use super::bases::bases;
use super::rank::UMatroid;
use crate::error::{Error, Result};
use crate::lattice::Subset;

/// How [`is_poset_matroid`] decides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PosetMatroidMethod {
    /// Scan every `(A, b1, b2)` for the local chain property.
    LocalChain,
    /// Check that every basis is a member of the lattice.
    BasesInLattice,
}

impl FromStr for PosetMatroidMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "local-chain" | "local_chain" => Ok(PosetMatroidMethod::LocalChain),
            "bases" | "bases-in-lattice" | "bases_in_lattice" => {
                Ok(PosetMatroidMethod::BasesInLattice)
            }
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

/// `A ∪ b1 ∪ b2 ∈ D` has larger rank than `A`, but neither `A ∪ b1` nor
/// `A ∪ b2` is a member one step up in rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ChainViolation {
    pub a: Subset,
    pub b1: usize,
    pub b2: usize,
}

impl fmt::Display for ChainViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a.compact(), self.b1, self.b2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetMatroidWitness {
    Chain(ChainViolation),
    Basis(Subset),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetMatroidReport {
    pub method: PosetMatroidMethod,
    /// Every violating triple (local-chain method), sorted.
    pub chain_violations: Vec<ChainViolation>,
    /// Every basis outside the lattice (bases method), sorted.
    pub bases_outside: Vec<Subset>,
}

impl PosetMatroidReport {
    pub fn is_poset_matroid(&self) -> bool {
        self.chain_violations.is_empty() && self.bases_outside.is_empty()
    }

    /// The first violation found, if any.
    pub fn witness(&self) -> Option<PosetMatroidWitness> {
        self.chain_violations
            .first()
            .map(|v| PosetMatroidWitness::Chain(*v))
            .or_else(|| {
                self.bases_outside
                    .first()
                    .map(|b| PosetMatroidWitness::Basis(*b))
            })
    }
}

pub fn is_poset_matroid(u: &UMatroid, method: PosetMatroidMethod) -> Result<PosetMatroidReport> {
    let mut report = PosetMatroidReport {
        method,
        chain_violations: Vec::new(),
        bases_outside: Vec::new(),
    };
    match method {
        PosetMatroidMethod::LocalChain => report.chain_violations = local_chain_violations(u),
        PosetMatroidMethod::BasesInLattice => {
            report.bases_outside = bases(u)?
                .into_iter()
                .filter(|&b| !u.lattice().contains(b))
                .collect();
        }
    }
    Ok(report)
}

/// Triples with `b1 < b2` outside `A`; any other choice satisfies the property
/// trivially.
pub fn local_chain_violations(u: &UMatroid) -> Vec<ChainViolation> {
    let d = u.lattice();
    let n = u.n();
    let mut out = Vec::new();
    for a in d.iter() {
        let ra = u.rank(a);
        let steps_up = |b: usize| u.rank_function().get(a.with(b)) == Some(ra + 1);
        for b1 in (1..=n).filter(|&e| !a.contains(e)) {
            for b2 in (b1 + 1..=n).filter(|&e| !a.contains(e)) {
                let top = a.with(b1).with(b2);
                if !d.contains(top) || u.rank(top) <= ra {
                    continue;
                }
                if !steps_up(b1) && !steps_up(b2) {
                    out.push(ChainViolation { a, b1, b2 });
                }
            }
        }
    }
    out.sort();
    out
}
