use std::fmt;

use super::poset::Poset;
use super::subset::Subset;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A total order `σ(1) < σ(2) < ... < σ(n)` on `[n]`, i.e. a bijection
/// `[n] → E`. Elements are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TotalOrder {
    perm: Vec<usize>,
    pos: Vec<usize>,
}

impl TotalOrder {
    pub fn new(perm: Vec<usize>) -> Result<TotalOrder> {
        let n = perm.len();
        let mut pos = vec![usize::MAX; n];
        for (k, &e) in perm.iter().enumerate() {
            if e == 0 || e > n || pos[e - 1] != usize::MAX {
                return Err(Error::NotAPermutation(n));
            }
            pos[e - 1] = k;
        }
        Ok(TotalOrder { perm, pos })
    }

    pub fn identity(n: usize) -> TotalOrder {
        TotalOrder {
            perm: (1..=n).collect(),
            pos: (0..n).collect(),
        }
    }

    pub fn reversed(&self) -> TotalOrder {
        let mut perm = self.perm.clone();
        perm.reverse();
        TotalOrder::new(perm).expect("reversal of a permutation")
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// `σ` as a list of elements, smallest first.
    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    /// 0-based rank of element `e` in the order.
    #[inline]
    pub fn position(&self, e: usize) -> usize {
        self.pos[e - 1]
    }

    /// Initial segment `{σ(1), ..., σ(k)}`.
    pub fn prefix(&self, k: usize) -> Subset {
        Subset::from_elements(self.perm[..k].iter().copied())
    }

    /// The maximal chain `∅ ⊂ {σ(1)} ⊂ ... ⊂ E` of initial segments.
    pub fn prefixes(&self) -> Vec<Subset> {
        let mut out = Vec::with_capacity(self.n() + 1);
        let mut cur = Subset::EMPTY;
        out.push(cur);
        for &e in &self.perm {
            cur = cur.with(e);
            out.push(cur);
        }
        out
    }

    /// Re-encodes a subset by positions: bit `k` is set iff `σ(k+1)` is in `s`.
    /// Comparing the images with [`Subset`]'s order gives σ-lexicographic order.
    #[inline]
    pub fn encode(&self, s: Subset) -> Subset {
        let mut out = 0u32;
        for e in s.elements() {
            out |= 1 << self.pos[e - 1];
        }
        Subset(out)
    }

    pub fn is_linear_extension(&self, p: &Poset) -> bool {
        p.n() == self.n()
            && p.relations()
                .iter()
                .all(|&(i, j)| self.position(i) < self.position(j))
    }
}

impl fmt::Display for TotalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.perm.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join("<"))
    }
}

impl fmt::Debug for TotalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TotalOrder({self})")
    }
}

/// Number of linear extensions of `p`, counted by dynamic programming over
/// down-sets. Saturates at `u64::MAX`.
pub fn count_linear_extensions(p: &Poset) -> u64 {
    let n = p.n();
    let preds: Vec<u32> = (1..=n).map(|j| p.predecessors(j).bits()).collect();
    let size = 1usize << n;
    let mut count = vec![0u64; size];
    count[0] = 1;
    for mask in 1..size as u32 {
        // mask must be a down-set
        let mut ok = true;
        let mut total = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if preds[i] & !mask != 0 {
                ok = false;
                break;
            }
            total = total.saturating_add(count[(mask & !(1 << i)) as usize]);
        }
        // removing a non-maximal element leaves a non-down-set with count 0
        if ok {
            count[mask as usize] = total;
        }
    }
    count[size - 1]
}

/// Linear extensions of `p` in lexicographic order, with the default limits.
pub fn linear_extensions(p: &Poset) -> Result<LinearExtensions> {
    linear_extensions_with(p, &Limits::current())
}

/// Linear extensions of `p` in lexicographic order. Fails up front when the
/// number of extensions exceeds `limits.max_extensions`.
pub fn linear_extensions_with(p: &Poset, limits: &Limits) -> Result<LinearExtensions> {
    if p.n() > 20 {
        return Err(Error::GroundSetSize(p.n()));
    }
    let count = count_linear_extensions(p);
    if count > limits.max_extensions {
        return Err(Error::CapExceeded {
            what: "linear extension count",
            limit: limits.max_extensions,
        });
    }
    Ok(LinearExtensions::unchecked(p))
}

/// Iterator over `Le(P)`, smallest permutation first.
#[derive(Clone)]
pub struct LinearExtensions {
    preds: Vec<Subset>,
    seq: Vec<usize>,
    placed: Subset,
    started: bool,
    done: bool,
}

impl LinearExtensions {
    pub(crate) fn unchecked(p: &Poset) -> LinearExtensions {
        LinearExtensions {
            preds: (1..=p.n()).map(|j| p.predecessors(j)).collect(),
            seq: Vec::with_capacity(p.n()),
            placed: Subset::EMPTY,
            started: false,
            done: false,
        }
    }

    fn n(&self) -> usize {
        self.preds.len()
    }

    fn next_available(&self, after: usize) -> Option<usize> {
        (after + 1..=self.n())
            .find(|&e| !self.placed.contains(e) && self.preds[e - 1].is_subset(self.placed))
    }

    fn fill(&mut self) {
        while self.seq.len() < self.n() {
            let e = self
                .next_available(0)
                .expect("a partial order always has an available element");
            self.seq.push(e);
            self.placed = self.placed.with(e);
        }
    }

    fn emit(&self) -> TotalOrder {
        TotalOrder::new(self.seq.clone()).expect("extension is a permutation")
    }
}

impl Iterator for LinearExtensions {
    type Item = TotalOrder;

    fn next(&mut self) -> Option<TotalOrder> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
            return Some(self.emit());
        }
        while let Some(last) = self.seq.pop() {
            self.placed = self.placed.without(last);
            if let Some(e) = self.next_available(last) {
                self.seq.push(e);
                self.placed = self.placed.with(e);
                self.fill();
                return Some(self.emit());
            }
        }
        self.done = true;
        None
    }
}

/// Every permutation of `[n]` in lexicographic order (`Le` of the antichain).
pub fn all_orders(n: usize) -> Result<LinearExtensions> {
    linear_extensions(&Poset::antichain(n)?)
}
