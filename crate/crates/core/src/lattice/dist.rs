use std::collections::{HashMap, HashSet};
use std::fmt;

use super::poset::{check_n, Poset};
use super::subset::Subset;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// An accessible distributive sublattice `D ⊆ 2^[n]` containing `∅` and `[n]`.
///
/// Members are kept in canonical order (see [`Subset`]'s `Ord`) together with
/// a hash index and the characteristic poset `Irr(D)`, so `sup`/`inf` and
/// membership are cheap.
#[derive(Clone)]
pub struct DistLattice {
    n: usize,
    sets: Vec<Subset>,
    index: HashMap<u32, usize>,
    poset: Poset,
}

/// Outcome of [`is_accessible`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Accessibility {
    Accessible,
    /// A nonempty member from which no single element can be removed.
    Blocked(Subset),
}

impl DistLattice {
    /// `J(P)`, the lattice of order ideals, with the default limits.
    pub fn order_ideals(p: &Poset) -> Result<DistLattice> {
        DistLattice::order_ideals_with(p, &Limits::current())
    }

    pub fn order_ideals_with(p: &Poset, limits: &Limits) -> Result<DistLattice> {
        let sets = enumerate_ideals(p, limits.max_lattice)?.ok_or(Error::CapExceeded {
            what: "lattice size",
            limit: limits.max_lattice as u64,
        })?;
        Ok(DistLattice::assemble(p.n(), sets, p.clone()))
    }

    /// `2^[n]`.
    pub fn boolean(n: usize) -> Result<DistLattice> {
        Limits::current().check_boolean(n)?;
        DistLattice::order_ideals(&Poset::antichain(n)?)
    }

    /// `{∅, {1}, {1,2}, ..., [n]}`.
    pub fn chain(n: usize) -> Result<DistLattice> {
        DistLattice::order_ideals(&Poset::chain(n)?)
    }

    /// Validates an explicit family of subsets of `[n]`. Duplicates are
    /// ignored. Errors carry a witness: a missing bound, a pair whose union or
    /// intersection escapes, or a member that cannot shed an element.
    pub fn from_sets(n: usize, sets: &[Subset]) -> Result<DistLattice> {
        check_n(n)?;
        let full = Subset::full(n);
        for &s in sets {
            if !s.fits(n) {
                let elem = 32 - s.difference(full).bits().leading_zeros() as usize;
                return Err(Error::ElementOutOfRange { elem, n });
            }
        }
        let mut uniq: Vec<Subset> = sets.to_vec();
        uniq.sort_unstable();
        uniq.dedup();
        if let Some(p) = candidate_poset(n, &uniq) {
            if uniq.iter().all(|&s| p.is_down_set(s)) {
                if let Ok(Some(ideals)) = enumerate_ideals(&p, uniq.len()) {
                    if ideals.len() == uniq.len() {
                        return Ok(DistLattice::assemble(n, uniq, p));
                    }
                }
            }
        }
        // slow path: locate a witness
        match is_accessible(n, &uniq)? {
            Accessibility::Blocked(a) => Err(Error::NotAccessible(a)),
            Accessibility::Accessible => Err(Error::Invariant(
                "accessible distributive family is not the ideal lattice of its poset".into(),
            )),
        }
    }

    fn assemble(n: usize, mut sets: Vec<Subset>, poset: Poset) -> DistLattice {
        sets.sort_unstable();
        let index = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.bits(), i))
            .collect();
        DistLattice {
            n,
            sets,
            index,
            poset,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Members in canonical order.
    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.sets.iter().copied()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.index.contains_key(&s.bits())
    }

    /// Position of `s` in canonical order.
    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.index.get(&s.bits()).copied()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    /// The characteristic poset `Irr(D)` on `[n]`: `i <= j` iff every member
    /// containing `j` contains `i`.
    pub fn irr_poset(&self) -> &Poset {
        &self.poset
    }

    pub fn is_boolean(&self) -> bool {
        self.poset.is_antichain()
    }

    /// Smallest member containing `a`.
    pub fn sup(&self, a: Subset) -> Subset {
        self.poset.down_closure(a)
    }

    /// Largest member contained in `a`.
    pub fn inf(&self, a: Subset) -> Subset {
        self.poset.down_interior(a)
    }

    /// `Atom(D) = {a : {a} ∈ D}`.
    pub fn atoms(&self) -> Subset {
        self.poset.minimal()
    }

    /// `D* = {E ∖ A : A ∈ D}`.
    pub fn dual(&self) -> DistLattice {
        let sets = self.sets.iter().map(|s| s.complement(self.n)).collect();
        DistLattice::assemble(self.n, sets, self.poset.dual())
    }

    /// `D[a] = D ∪ {S ∪ {a} : S ∈ D}`, the lattice generated by `D` and `{a}`.
    pub fn adjoin_atom(&self, a: usize) -> Result<DistLattice> {
        self.check_elem(a)?;
        if self.atoms().contains(a) {
            return Err(Error::AlreadyAtom(a));
        }
        Ok(self.adjoin_unchecked(a))
    }

    /// `D[A] = D ∪ {S ∪ A' : S ∈ D, A' ⊆ A}`.
    pub fn adjoin_set(&self, a: Subset) -> Result<DistLattice> {
        if !a.fits(self.n) {
            return Err(Error::ElementOutOfRange {
                elem: 32 - a.bits().leading_zeros() as usize,
                n: self.n,
            });
        }
        let mut cur = self.clone();
        for e in a.elements() {
            if !cur.atoms().contains(e) {
                cur = cur.adjoin_unchecked(e);
            }
        }
        Ok(cur)
    }

    fn adjoin_unchecked(&self, a: usize) -> DistLattice {
        let bit = Subset::singleton(a);
        let mut seen: HashSet<u32> = self.sets.iter().map(|s| s.bits()).collect();
        let mut sets = self.sets.clone();
        for &s in &self.sets {
            let t = s.union(bit);
            if seen.insert(t.bits()) {
                sets.push(t);
            }
        }
        DistLattice::assemble(self.n, sets, self.poset.free_below(a))
    }

    /// Is every member of `self` a member of `other`?
    pub fn is_sublattice_of(&self, other: &DistLattice) -> bool {
        self.n == other.n && self.sets.iter().all(|&s| other.contains(s))
    }

    pub(crate) fn check_elem(&self, e: usize) -> Result<()> {
        if e == 0 || e > self.n {
            Err(Error::ElementOutOfRange { elem: e, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Members `A ∪ {e}` covering `a` inside the lattice.
    pub fn upper_covers(&self, a: Subset) -> impl Iterator<Item = (usize, Subset)> + '_ {
        (1..=self.n)
            .filter(move |&e| !a.contains(e) && self.poset.predecessors(e).is_subset(a))
            .map(move |e| (e, a.with(e)))
    }

    /// Members `A ∖ {e}` covered by `a` inside the lattice.
    pub fn lower_covers(&self, a: Subset) -> impl Iterator<Item = (usize, Subset)> + '_ {
        a.elements()
            .filter(move |&e| self.poset.up_set(e).intersection(a) == Subset::singleton(e))
            .map(move |e| (e, a.without(e)))
    }
}

impl PartialEq for DistLattice {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.sets == other.sets
    }
}

impl Eq for DistLattice {}

impl fmt::Debug for DistLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DistLattice(n={}, sets=[", self.n)?;
        for (k, s) in self.sets.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&s.compact())?;
        }
        f.write_str("])")
    }
}

/// `J(P)`.
pub fn order_ideals(p: &Poset) -> Result<DistLattice> {
    DistLattice::order_ideals(p)
}

/// `Irr(D)`.
pub fn irr_poset(d: &DistLattice) -> Poset {
    d.irr_poset().clone()
}

/// Checks accessibility of a family that should be closed under union and
/// intersection and contain `∅` and `[n]`. Closure failures are errors with a
/// witness pair.
pub fn is_accessible(n: usize, sets: &[Subset]) -> Result<Accessibility> {
    let full = Subset::full(n);
    let members: HashSet<u32> = sets.iter().map(|s| s.bits()).collect();
    for bound in [Subset::EMPTY, full] {
        if !members.contains(&bound.bits()) {
            return Err(Error::MissingBound(bound));
        }
    }
    let mut sorted: Vec<Subset> = sets.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for (i, &a) in sorted.iter().enumerate() {
        for &b in &sorted[i + 1..] {
            if !members.contains(&a.union(b).bits()) {
                return Err(Error::NotALattice(a, b, "union"));
            }
            if !members.contains(&a.intersection(b).bits()) {
                return Err(Error::NotALattice(a, b, "intersection"));
            }
        }
    }
    for &a in &sorted {
        if a.is_empty() {
            continue;
        }
        if !a.elements().any(|e| members.contains(&a.without(e).bits())) {
            return Ok(Accessibility::Blocked(a));
        }
    }
    Ok(Accessibility::Accessible)
}

/// `i <= j` iff every member containing `j` contains `i`; `None` when that
/// relation is not antisymmetric.
fn candidate_poset(n: usize, sets: &[Subset]) -> Option<Poset> {
    let full = Subset::full(n);
    let mut down = vec![full; n];
    for &s in sets {
        for e in s.elements() {
            down[e - 1] = down[e - 1].intersection(s);
        }
    }
    for j in 1..=n {
        if !down[j - 1].contains(j) {
            // no member contains j at all
            return None;
        }
        for i in down[j - 1].without(j).elements() {
            if down[i - 1].contains(j) {
                return None;
            }
        }
    }
    Some(Poset::from_down_sets(n, down))
}

/// All down-sets of `p`, or `None` once more than `cap` have been found.
fn enumerate_ideals(p: &Poset, cap: usize) -> Result<Option<Vec<Subset>>> {
    let n = p.n();
    // elements in a linear extension order, so predecessors are decided first
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&e| p.down_set(e).len());
    let preds: Vec<Subset> = order.iter().map(|&e| p.predecessors(e)).collect();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Subset)> = vec![(0, Subset::EMPTY)];
    while let Some((k, cur)) = stack.pop() {
        if k == n {
            out.push(cur);
            if out.len() > cap {
                return Ok(None);
            }
            continue;
        }
        stack.push((k + 1, cur));
        if preds[k].is_subset(cur) {
            stack.push((k + 1, cur.with(order[k])));
        }
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subs(v: &[&[usize]]) -> Vec<Subset> {
        v.iter()
            .map(|s| Subset::from_elements(s.iter().copied()))
            .collect()
    }

    fn stalactite_lattice() -> DistLattice {
        DistLattice::order_ideals(&Poset::from_relations(4, &[(1, 4)]).unwrap()).unwrap()
    }

    #[test]
    fn order_ideals_small_cases() {
        let b = DistLattice::order_ideals(&Poset::antichain(2).unwrap()).unwrap();
        assert_eq!(b.sets(), subs(&[&[], &[1], &[2], &[1, 2]]).as_slice());
        let c = DistLattice::order_ideals(&Poset::chain(2).unwrap()).unwrap();
        assert_eq!(c.sets(), subs(&[&[], &[1], &[1, 2]]).as_slice());
        let st = stalactite_lattice();
        assert_eq!(st.len(), 12);
        assert!(st.iter().all(|s| !s.contains(4) || s.contains(1)));
    }

    #[test]
    fn irr_poset_of_explicit_lattice() {
        let d = DistLattice::from_sets(3, &subs(&[&[], &[1], &[2], &[1, 2], &[2, 3], &[1, 2, 3]]))
            .unwrap();
        assert_eq!(d.irr_poset().relations(), vec![(2, 3)]);
        assert!(DistLattice::boolean(4).unwrap().irr_poset().is_antichain());
        assert_eq!(stalactite_lattice().irr_poset().relations(), vec![(1, 4)]);
    }

    #[test]
    fn accessibility_checks() {
        assert_eq!(
            is_accessible(2, &subs(&[&[], &[1], &[1, 2]])).unwrap(),
            Accessibility::Accessible
        );
        assert_eq!(
            is_accessible(2, &subs(&[&[], &[1, 2]])).unwrap(),
            Accessibility::Blocked(Subset::from_elements([1, 2]))
        );
        let err = is_accessible(2, &subs(&[&[], &[1], &[2]])).unwrap_err();
        assert!(matches!(err, Error::MissingBound(_)));
        let err = is_accessible(3, &subs(&[&[], &[1], &[2], &[1, 2, 3]])).unwrap_err();
        assert!(matches!(err, Error::NotALattice(_, _, "union")));
    }

    #[test]
    fn from_sets_reports_witnesses() {
        let err = DistLattice::from_sets(2, &subs(&[&[], &[1, 2]])).unwrap_err();
        assert_eq!(err, Error::NotAccessible(Subset::from_elements([1, 2])));
        let err = DistLattice::from_sets(3, &subs(&[&[], &[1], &[2], &[1, 2, 3]])).unwrap_err();
        assert!(matches!(err, Error::NotALattice(..)));
        assert!(DistLattice::from_sets(2, &subs(&[&[], &[3], &[1, 2]])).is_err());
    }

    #[test]
    fn sup_and_inf() {
        // D = {∅, a, ab} with a = 1, b = 2
        let d = DistLattice::chain(2).unwrap();
        let b = Subset::singleton(2);
        assert_eq!(d.sup(b), Subset::from_elements([1, 2]));
        assert_eq!(d.inf(b), Subset::EMPTY);
        for s in d.iter() {
            assert_eq!(d.sup(s), s);
            assert_eq!(d.inf(s), s);
        }
    }

    #[test]
    fn adjoin_examples() {
        let st = stalactite_lattice();
        assert_eq!(st.adjoin_atom(4).unwrap(), DistLattice::boolean(4).unwrap());
        assert_eq!(
            DistLattice::chain(2).unwrap().adjoin_atom(2).unwrap(),
            DistLattice::boolean(2).unwrap()
        );
        assert_eq!(st.adjoin_atom(1).unwrap_err(), Error::AlreadyAtom(1));
        assert_eq!(st.adjoin_set(Subset::EMPTY).unwrap(), st);
        assert_eq!(
            st.adjoin_set(Subset::full(4)).unwrap(),
            DistLattice::boolean(4).unwrap()
        );
        assert_eq!(
            st.adjoin_set(Subset::singleton(4)).unwrap(),
            DistLattice::boolean(4).unwrap()
        );
        let p = Poset::from_relations(3, &[(1, 2), (2, 3)]).unwrap();
        let d = DistLattice::order_ideals(&p)
            .unwrap()
            .adjoin_atom(2)
            .unwrap();
        assert!(d.irr_poset().predecessors(2).is_empty());
        assert_eq!(d.irr_poset().relations(), vec![(1, 3), (2, 3)]);
    }

    #[test]
    fn dual_and_atoms() {
        let st = stalactite_lattice();
        assert_eq!(st.dual().irr_poset().relations(), vec![(4, 1)]);
        assert_eq!(st.dual().dual(), st);
        let b = DistLattice::boolean(3).unwrap();
        assert_eq!(b.dual(), b);
        assert_eq!(st.atoms().to_vec(), vec![1, 2, 3]);
        assert_eq!(b.atoms(), Subset::full(3));
        assert_eq!(DistLattice::chain(2).unwrap().atoms().to_vec(), vec![1]);
    }

    #[test]
    fn lattice_cap() {
        let limits = Limits {
            max_lattice: 10,
            ..Limits::default()
        };
        let err =
            DistLattice::order_ideals_with(&Poset::antichain(4).unwrap(), &limits).unwrap_err();
        assert!(err.is_cap());
    }
}
