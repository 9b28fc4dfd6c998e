use std::fmt;
use std::sync::Arc;

use super::validate::{validate, ValidationReport};
use crate::error::{Error, Result};
use crate::lattice::{DistLattice, Subset};

/// An integer-valued function on the members of a [`DistLattice`], stored
/// densely in the lattice's canonical order.
#[derive(Clone)]
pub struct RankFunction {
    lattice: Arc<DistLattice>,
    values: Vec<i64>,
}

impl RankFunction {
    /// `values[k]` is the value on `lattice.sets()[k]`.
    pub fn new(lattice: Arc<DistLattice>, values: Vec<i64>) -> Result<RankFunction> {
        if values.len() != lattice.len() {
            return Err(Error::RankTable(format!(
                "{} values for a lattice with {} members",
                values.len(),
                lattice.len()
            )));
        }
        if let Some(k) = values.iter().position(|&v| v < 0) {
            return Err(Error::RankTable(format!(
                "negative value {} at {}",
                values[k],
                lattice.sets()[k]
            )));
        }
        Ok(RankFunction { lattice, values })
    }

    pub fn from_fn(lattice: Arc<DistLattice>, f: impl Fn(Subset) -> i64) -> Result<RankFunction> {
        let values = lattice.iter().map(f).collect();
        RankFunction::new(lattice, values)
    }

    /// Builds a table from `(set, value)` pairs that must cover the lattice
    /// exactly once.
    pub fn from_pairs(lattice: Arc<DistLattice>, pairs: &[(Subset, i64)]) -> Result<RankFunction> {
        let mut values: Vec<Option<i64>> = vec![None; lattice.len()];
        for &(s, v) in pairs {
            let k = lattice.index_of(s).ok_or(Error::NotInLattice(s))?;
            if values[k].replace(v).is_some() {
                return Err(Error::RankTable(format!("duplicate entry for {s}")));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(k, v)| {
                v.ok_or_else(|| {
                    Error::RankTable(format!("missing entry for {}", lattice.sets()[k]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        RankFunction::new(lattice, values)
    }

    pub fn lattice(&self) -> &DistLattice {
        &self.lattice
    }

    pub fn lattice_arc(&self) -> &Arc<DistLattice> {
        &self.lattice
    }

    pub fn n(&self) -> usize {
        self.lattice.n()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Value at a member; `None` outside the lattice.
    pub fn get(&self, s: Subset) -> Option<i64> {
        self.lattice.index_of(s).map(|k| self.values[k])
    }

    /// Value at a member.
    ///
    /// # Panics
    /// If `s` is not in the lattice.
    #[inline]
    pub fn rank(&self, s: Subset) -> i64 {
        match self.lattice.index_of(s) {
            Some(k) => self.values[k],
            None => panic!("{s} is not a member of the lattice"),
        }
    }

    /// Value on the whole ground set.
    pub fn total(&self) -> i64 {
        self.rank(self.lattice.full())
    }

    /// `(set, value)` pairs in canonical order.
    pub fn pairs(&self) -> impl Iterator<Item = (Subset, i64)> + '_ {
        self.lattice.iter().zip(self.values.iter().copied())
    }

    pub fn validate(&self) -> ValidationReport {
        validate(&self.lattice, &self.values)
    }

    /// Restriction to a sublattice.
    pub fn restrict_to(&self, sub: Arc<DistLattice>) -> Result<RankFunction> {
        if !sub.is_sublattice_of(&self.lattice) {
            return Err(Error::NotASublattice("restriction target"));
        }
        RankFunction::from_fn(sub, |s| self.rank(s))
    }
}

impl PartialEq for RankFunction {
    fn eq(&self, other: &Self) -> bool {
        *self.lattice == *other.lattice && self.values == other.values
    }
}

impl Eq for RankFunction {}

impl fmt::Debug for RankFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RankFunction(n={}, ", self.n())?;
        let mut first = true;
        for (s, v) in self.pairs() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}:{}", s.compact(), v)?;
        }
        f.write_str(")")
    }
}

/// A rank function that passes every U-matroid axiom.
#[derive(Clone, PartialEq, Eq)]
pub struct UMatroid {
    rank: RankFunction,
}

impl UMatroid {
    /// Validates `rank`; the first failing axiom is reported as an error.
    pub fn new(rank: RankFunction) -> Result<UMatroid> {
        let report = rank.validate();
        if let Some(v) = report.violations().first() {
            return Err(Error::AxiomViolation {
                axiom: v.axiom.name(),
                a: v.a,
                b: v.b,
            });
        }
        Ok(UMatroid { rank })
    }

    /// Wraps a rank function that is known to be valid by construction.
    /// Debug builds still validate.
    pub(crate) fn trusted(rank: RankFunction) -> UMatroid {
        debug_assert!(
            rank.validate().is_umatroid(),
            "construction produced an invalid U-matroid: {:?}",
            rank.validate()
        );
        UMatroid { rank }
    }

    pub fn from_fn(lattice: Arc<DistLattice>, f: impl Fn(Subset) -> i64) -> Result<UMatroid> {
        UMatroid::new(RankFunction::from_fn(lattice, f)?)
    }

    pub fn rank_function(&self) -> &RankFunction {
        &self.rank
    }

    pub fn into_rank_function(self) -> RankFunction {
        self.rank
    }

    pub fn lattice(&self) -> &DistLattice {
        self.rank.lattice()
    }

    pub fn lattice_arc(&self) -> &Arc<DistLattice> {
        self.rank.lattice_arc()
    }

    pub fn n(&self) -> usize {
        self.rank.n()
    }

    #[inline]
    pub fn rank(&self, s: Subset) -> i64 {
        self.rank.rank(s)
    }

    /// `ρ(E)`.
    pub fn total(&self) -> i64 {
        self.rank.total()
    }

    pub fn is_matroid(&self) -> bool {
        self.lattice().is_boolean()
    }

    /// Renames element `i` to `perm[i - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<UMatroid> {
        let n = self.n();
        crate::lattice::TotalOrder::new(perm.to_vec())?;
        if perm.len() != n {
            return Err(Error::NotAPermutation(n));
        }
        let map = |s: Subset| Subset::from_elements(s.elements().map(|e| perm[e - 1]));
        let sets: Vec<Subset> = self.lattice().iter().map(map).collect();
        let lattice = Arc::new(DistLattice::from_sets(n, &sets)?);
        let pairs: Vec<(Subset, i64)> = self.rank.pairs().map(|(s, v)| (map(s), v)).collect();
        Ok(UMatroid::trusted(RankFunction::from_pairs(
            lattice, &pairs,
        )?))
    }
}

impl fmt::Debug for UMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UMatroid({:?})", self.rank)
    }
}
