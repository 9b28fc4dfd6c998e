use std::fmt;

use super::rank::UMatroid;
use crate::error::{Error, Result};
use crate::lattice::Subset;

/// The flats of a U-matroid, in canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct FlatLattice {
    n: usize,
    flats: Vec<Subset>,
}

impl FlatLattice {
    /// Sorts and dedups; `[n]` must be among the flats.
    pub fn new(n: usize, mut flats: Vec<Subset>) -> Result<FlatLattice> {
        flats.sort_unstable();
        flats.dedup();
        let full = Subset::full(n);
        if flats.last() != Some(&full) {
            return Err(Error::Precondition(format!(
                "flat family must contain {full}"
            )));
        }
        Ok(FlatLattice { n, flats })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flats(&self) -> &[Subset] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.flats.binary_search(&s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.flats.iter().copied()
    }
}

impl fmt::Debug for FlatLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.flats.iter().map(|s| s.compact()))
            .finish()
    }
}

/// `cl(A) = {e : ρ(sup(A ∪ e)) = ρ(sup(A))}`; `a` may be any subset of `[n]`.
pub fn closure(u: &UMatroid, a: Subset) -> Subset {
    let d = u.lattice();
    let base = u.rank(d.sup(a));
    (1..=u.n())
        .filter(|&e| u.rank(d.sup(a.with(e))) == base)
        .fold(Subset::EMPTY, Subset::with)
}

/// Members of `D` whose every strict superset in `D` has larger rank. By
/// monotonicity it suffices to look at upper covers.
pub fn flats(u: &UMatroid) -> FlatLattice {
    let d = u.lattice();
    let flats = d
        .iter()
        .filter(|&a| {
            let r = u.rank(a);
            d.upper_covers(a).all(|(_, b)| u.rank(b) > r)
        })
        .collect();
    FlatLattice::new(u.n(), flats).expect("the ground set is always a flat")
}
