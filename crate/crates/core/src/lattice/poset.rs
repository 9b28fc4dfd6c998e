use std::fmt;

use super::subset::Subset;
use crate::error::{Error, Result};
use crate::limits::MAX_N;

/// A partial order on `[n]`.
///
/// Stored as principal down-sets: `down[j]` is the set of `i` with `i <= j`
/// (so it always contains `j`). The relation is kept transitively closed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    down: Vec<Subset>,
}

impl Poset {
    /// The antichain on `[n]`.
    pub fn antichain(n: usize) -> Result<Poset> {
        check_n(n)?;
        Ok(Poset {
            n,
            down: (1..=n).map(Subset::singleton).collect(),
        })
    }

    /// The chain `1 < 2 < ... < n`.
    pub fn chain(n: usize) -> Result<Poset> {
        let rel: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        Poset::from_relations(n, &rel)
    }

    /// Builds a poset from relations `(i, j)` meaning `i < j` (1-based). Any
    /// set of relations is accepted; the transitive closure is taken. Cycles
    /// are rejected with a pair of elements on the cycle.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Poset> {
        check_n(n)?;
        let mut down: Vec<Subset> = (1..=n).map(Subset::singleton).collect();
        for &(i, j) in relations {
            for e in [i, j] {
                if e == 0 || e > n {
                    return Err(Error::ElementOutOfRange { elem: e, n });
                }
            }
            if i == j {
                return Err(Error::PosetCycle(i, j));
            }
            down[j - 1] = down[j - 1].with(i);
        }
        // transitive closure, Warshall over bitsets
        for k in 0..n {
            let dk = down[k];
            for j in 0..n {
                if down[j].contains(k + 1) {
                    down[j] = down[j].union(dk);
                }
            }
        }
        for j in 0..n {
            for i in down[j].without(j + 1).elements() {
                if down[i - 1].contains(j + 1) {
                    let (a, b) = if i < j + 1 { (i, j + 1) } else { (j + 1, i) };
                    return Err(Error::PosetCycle(a, b));
                }
            }
        }
        Ok(Poset { n, down })
    }

    /// Builds a poset from a full `n × n` relation matrix (`leq[i][j]` means
    /// `i+1 <= j+1`). The matrix must already be a partial order.
    pub fn from_matrix(leq: &[Vec<bool>]) -> Result<Poset> {
        let n = leq.len();
        check_n(n)?;
        let mut rel = Vec::new();
        for (i, row) in leq.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            if !row[i] {
                return Err(Error::Precondition(format!(
                    "relation is not reflexive at {}",
                    i + 1
                )));
            }
            for (j, &b) in row.iter().enumerate() {
                if b && i != j {
                    rel.push((i + 1, j + 1));
                }
            }
        }
        let p = Poset::from_relations(n, &rel)?;
        // closure must not add anything
        for i in 0..n {
            for j in 0..n {
                if p.leq(i + 1, j + 1) != leq[i][j] {
                    return Err(Error::Precondition(format!(
                        "relation is not transitive ({} <= {} is implied)",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(p)
    }

    pub(crate) fn from_down_sets(n: usize, down: Vec<Subset>) -> Poset {
        debug_assert_eq!(down.len(), n);
        Poset { n, down }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `i <= j` (1-based).
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.down[j - 1].contains(i)
    }

    /// `i < j` (1-based).
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// Elements `<= j`, including `j`.
    pub fn down_set(&self, j: usize) -> Subset {
        self.down[j - 1]
    }

    /// Elements `>= i`, including `i`.
    pub fn up_set(&self, i: usize) -> Subset {
        Subset::from_elements((1..=self.n).filter(|&j| self.leq(i, j)))
    }

    /// Elements strictly below `j`.
    pub fn predecessors(&self, j: usize) -> Subset {
        self.down[j - 1].without(j)
    }

    /// Down-closure of a set.
    pub fn down_closure(&self, s: Subset) -> Subset {
        s.elements()
            .fold(Subset::EMPTY, |acc, e| acc.union(self.down[e - 1]))
    }

    /// Largest down-set contained in `s`.
    pub fn down_interior(&self, s: Subset) -> Subset {
        Subset::from_elements(s.elements().filter(|&e| self.down[e - 1].is_subset(s)))
    }

    pub fn is_down_set(&self, s: Subset) -> bool {
        s.elements().all(|e| self.down[e - 1].is_subset(s))
    }

    pub fn is_antichain(&self) -> bool {
        (1..=self.n).all(|j| self.down[j - 1].len() == 1)
    }

    /// Minimal elements.
    pub fn minimal(&self) -> Subset {
        Subset::from_elements((1..=self.n).filter(|&j| self.down[j - 1].len() == 1))
    }

    /// Maximal elements.
    pub fn maximal(&self) -> Subset {
        Subset::from_elements((1..=self.n).filter(|&i| self.up_set(i).len() == 1))
    }

    /// All strict relations `(i, j)` with `i < j`, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 1..=self.n {
            for i in self.predecessors(j).elements() {
                out.push((i, j));
            }
        }
        out.sort_unstable();
        out
    }

    /// Covering relations `(i, j)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(i, j)| {
                !self
                    .predecessors(j)
                    .elements()
                    .any(|k| k != i && self.lt(i, k))
            })
            .collect()
    }

    /// The dual poset (all relations reversed).
    pub fn dual(&self) -> Poset {
        let down = (1..=self.n).map(|i| self.up_set(i)).collect();
        Poset { n: self.n, down }
    }

    /// The poset with every relation `b < a` removed for the given `a`.
    pub fn free_below(&self, a: usize) -> Poset {
        let mut down = self.down.clone();
        down[a - 1] = Subset::singleton(a);
        Poset { n: self.n, down }
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset(n={}, covers={:?})", self.n, self.covers())
    }
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        Err(Error::GroundSetSize(n))
    } else {
        Ok(())
    }
}
