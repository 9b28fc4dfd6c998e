//! Lattice restriction and extension of U-matroids: generous and magnanimous
//! extensions, domination, sheared pairs, 0/1 points of the base polyhedron
//! and the flats of restrictions and atom extensions.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{k_subsets, DistLattice, Subset};
use crate::limits::Limits;
use crate::umatroid::{bases, flats, FlatLattice, RankFunction, UMatroid};

/// A U-matroid obtained by adjoining atoms, with the atoms in the order they
/// were adjoined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionResult {
    pub matroid: UMatroid,
    pub adjoined: Vec<usize>,
}

/// `ρ` restricted to the sublattice `sub`.
pub fn restrict(u: &UMatroid, sub: &DistLattice) -> Result<UMatroid> {
    let rank = u.rank_function().restrict_to(Arc::new(sub.clone()))?;
    Ok(UMatroid::trusted(rank))
}

/// The generous atom extension of `ρ` to `D[a]`:
///
/// * `ρ(S)` for `S ∈ D`;
/// * `ρ(S − a)` if that equals `ρ(sup_D(S))`;
/// * `ρ(S − a) + 1` otherwise.
pub fn generous_atom_extension(u: &UMatroid, a: usize) -> Result<ExtensionResult> {
    let d = u.lattice();
    let ext = Arc::new(d.adjoin_atom(a)?);
    Ok(ExtensionResult {
        matroid: UMatroid::trusted(atom_step(u, ext)),
        adjoined: vec![a],
    })
}

fn atom_step(u: &UMatroid, ext: Arc<DistLattice>) -> RankFunction {
    let d = u.lattice();
    let f = |s: Subset| match u.rank_function().get(s) {
        Some(r) => r,
        None => {
            // S ∉ D forces S − a ∈ D, which is inf_D(S)
            let r = u.rank(d.inf(s));
            if r == u.rank(d.sup(s)) {
                r
            } else {
                r + 1
            }
        }
    };
    RankFunction::from_fn(ext, f).expect("extended ranks are non-negative")
}

/// The generous extension of `u` to `target ⊇ D`: adjoin every non-atom in
/// ascending order to reach `2^E`, then restrict. Debug builds repeat the
/// construction in descending order and check that the results agree.
pub fn generous_extension(u: &UMatroid, target: &DistLattice) -> Result<ExtensionResult> {
    let order: Vec<usize> = (1..=u.n()).collect();
    let out = generous_extension_in_order(u, target, &order)?;
    #[cfg(debug_assertions)]
    {
        let rev: Vec<usize> = order.iter().rev().copied().collect();
        let again = generous_extension_in_order(u, target, &rev)?;
        if again.matroid != out.matroid {
            return Err(Error::Invariant(
                "generous extension depends on the atom order".into(),
            ));
        }
    }
    Ok(out)
}

/// As [`generous_extension`], adjoining the missing atoms in the order they
/// appear in `order` (a permutation of `[n]`).
pub fn generous_extension_in_order(
    u: &UMatroid,
    target: &DistLattice,
    order: &[usize],
) -> Result<ExtensionResult> {
    let n = u.n();
    if target.n() != n {
        return Err(Error::GroundSetMismatch(target.n(), n));
    }
    if !u.lattice().is_sublattice_of(target) {
        return Err(Error::NotASublattice(
            "extension target must contain the lattice",
        ));
    }
    crate::lattice::TotalOrder::new(order.to_vec())?;
    if order.len() != n {
        return Err(Error::NotAPermutation(n));
    }
    let mut cur = u.clone();
    let mut adjoined = Vec::new();
    if !cur.lattice().is_boolean() {
        Limits::current().check_boolean(n)?;
    }
    for &a in order {
        if cur.lattice().atoms().contains(a) {
            continue;
        }
        let ext = Arc::new(cur.lattice().adjoin_atom(a)?);
        cur = UMatroid::trusted(atom_step(&cur, ext));
        adjoined.push(a);
    }
    let matroid = if target.len() == cur.lattice().len() {
        cur
    } else {
        restrict(&cur, target)?
    };
    Ok(ExtensionResult { matroid, adjoined })
}

/// `ρ'(S) = ρ(sup_D(S))` on `target ⊇ D`. The input must be a submodular
/// system; the result is again one but need not satisfy unit increase.
pub fn magnanimous_extension(rank: &RankFunction, target: &DistLattice) -> Result<RankFunction> {
    if !rank.validate().is_submodular_system() {
        return Err(Error::Precondition(
            "magnanimous extension needs a submodular system".into(),
        ));
    }
    let d = rank.lattice();
    if !d.is_sublattice_of(target) {
        return Err(Error::NotASublattice(
            "extension target must contain the lattice",
        ));
    }
    let out = RankFunction::from_fn(Arc::new(target.clone()), |s| rank.rank(d.sup(s)))?;
    if !out.validate().is_submodular_system() {
        return Err(Error::Invariant(
            "magnanimous extension lost submodularity".into(),
        ));
    }
    Ok(out)
}

/// `φ(S) ≥ ρ(S)` for every member of their common lattice.
pub fn dominates(phi: &RankFunction, rho: &RankFunction) -> Result<bool> {
    if phi.lattice() != rho.lattice() {
        return Err(Error::Precondition(
            "domination compares functions on one lattice".into(),
        ));
    }
    Ok(phi.values().iter().zip(rho.values()).all(|(a, b)| a >= b))
}

/// Largest ground set accepted by [`enumerate_matroid_extensions`].
pub const MAX_ENUMERATION_N: usize = 5;

/// Every matroid rank function on `2^E` whose restriction to `D` is `ρ`.
///
/// Subsets are filled in canonical order; each new value is bounded by its
/// lower covers (monotone, unit increase) and every diamond it closes is
/// checked for submodularity, which on a Boolean lattice is equivalent to
/// global submodularity.
pub fn enumerate_matroid_extensions(u: &UMatroid) -> Result<Vec<RankFunction>> {
    let n = u.n();
    if n > MAX_ENUMERATION_N {
        return Err(Error::CapExceeded {
            what: "ground set size for extension enumeration",
            limit: MAX_ENUMERATION_N as u64,
        });
    }
    let full = Arc::new(DistLattice::boolean(n)?);
    let order: Vec<Subset> = full.sets().to_vec();
    let mut val = vec![-1i64; 1 << n];
    let mut out = Vec::new();
    search(u, &order, 0, &mut val, &mut out);
    out.into_iter()
        .map(|vals| {
            let values = full.iter().map(|s| vals[s.bits() as usize]).collect();
            RankFunction::new(full.clone(), values)
        })
        .collect()
}

fn search(u: &UMatroid, order: &[Subset], k: usize, val: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let Some(&s) = order.get(k) else {
        out.push(val.clone());
        return;
    };
    let at = |v: &Vec<i64>, t: Subset| v[t.bits() as usize];
    let (mut lo, mut hi) = if s.is_empty() { (0, 0) } else { (0, i64::MAX) };
    for e in s.elements() {
        let r = at(val, s.without(e));
        lo = lo.max(r);
        hi = hi.min(r + 1);
    }
    if let Some(r) = u.rank_function().get(s) {
        if r < lo || r > hi {
            return;
        }
        lo = r;
        hi = r;
    }
    let elems = s.to_vec();
    for v in lo..=hi {
        let ok = elems.iter().enumerate().all(|(i, &e1)| {
            elems[i + 1..].iter().all(|&e2| {
                v + at(val, s.without(e1).without(e2))
                    <= at(val, s.without(e1)) + at(val, s.without(e2))
            })
        });
        if ok {
            val[s.bits() as usize] = v;
            search(u, order, k + 1, val, out);
        }
    }
    val[s.bits() as usize] = -1;
}

/// Is `ext` a lattice extension of `u` (`D ⊆ D'` and `ρ'|_D = ρ`)? When it
/// is, the bases of `u` are checked to be bases of `ext` as well.
pub fn is_sheared(ext: &UMatroid, u: &UMatroid) -> Result<bool> {
    if ext.n() != u.n() {
        return Err(Error::GroundSetMismatch(ext.n(), u.n()));
    }
    let d = u.lattice();
    let agrees = d.is_sublattice_of(ext.lattice()) && d.iter().all(|s| ext.rank(s) == u.rank(s));
    if agrees {
        let outer = bases(ext)?;
        if let Some(b) = bases(u)?
            .into_iter()
            .find(|b| outer.binary_search(b).is_err())
        {
            return Err(Error::Invariant(format!(
                "basis {b} lost under lattice extension"
            )));
        }
    }
    Ok(agrees)
}

/// Supports of the 0/1 points of the base polyhedron: `r`-sets `X`, `r = ρ(E)`,
/// with `|X ∩ A| ≤ ρ(A)` for every `A ∈ D`.
pub fn zero_one_points(u: &UMatroid) -> Result<Vec<Subset>> {
    Limits::current().check_boolean(u.n())?;
    let r = u.total() as usize;
    let mut out: Vec<Subset> = k_subsets(u.n(), r).filter(|&x| fits_under(u, x)).collect();
    out.sort_unstable();
    Ok(out)
}

/// Supports of the 0/1 points of the independence polyhedron: all `X` with
/// `|X ∩ A| ≤ ρ(A)` for every `A ∈ D`.
pub fn independent_zero_one_points(u: &UMatroid) -> Result<Vec<Subset>> {
    Limits::current().check_boolean(u.n())?;
    let mut out: Vec<Subset> = (0..1u32 << u.n())
        .map(Subset)
        .filter(|&x| fits_under(u, x))
        .collect();
    out.sort_unstable();
    Ok(out)
}

fn fits_under(u: &UMatroid, x: Subset) -> bool {
    u.rank_function()
        .pairs()
        .all(|(a, r)| x.intersection(a).len() as i64 <= r)
}

/// `{inf_{D'}(A) : A a flat of u}`, the flats of the restriction to `sub`.
pub fn flats_after_restriction(u: &UMatroid, sub: &DistLattice) -> Result<FlatLattice> {
    if !sub.is_sublattice_of(u.lattice()) {
        return Err(Error::NotASublattice("restriction target"));
    }
    FlatLattice::new(u.n(), flats(u).iter().map(|a| sub.inf(a)).collect())
}

/// The flats of the generous atom extension by `a`, for `{a} ∉ D` and
/// `E ∖ {a} ∈ D`: the old flats together with `A ∪ a` for each flat `A` with
/// `ρ(sup_D(A ∪ a)) ≥ ρ(A) + 2`.
pub fn flats_after_atom_extension(u: &UMatroid, a: usize) -> Result<FlatLattice> {
    let d = u.lattice();
    d.check_elem(a)?;
    if d.atoms().contains(a) {
        return Err(Error::AlreadyAtom(a));
    }
    if !d.contains(d.full().without(a)) {
        return Err(Error::Precondition(format!(
            "the complement of {a} must be a member of the lattice"
        )));
    }
    let old = flats(u);
    let mut all: Vec<Subset> = old.flats().to_vec();
    all.extend(
        old.iter()
            .filter(|&f| u.rank(d.sup(f.with(a))) >= u.rank(f) + 2)
            .map(|f| f.with(a)),
    );
    FlatLattice::new(u.n(), all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Poset;

    fn stalactite() -> UMatroid {
        let d = DistLattice::order_ideals(&Poset::from_relations(4, &[(1, 4)]).unwrap()).unwrap();
        UMatroid::from_fn(Arc::new(d), |s| s.len().min(2) as i64).unwrap()
    }

    fn set(v: &[usize]) -> Subset {
        Subset::from_elements(v.iter().copied())
    }

    #[test]
    fn stalactite_atom_extension() {
        let u = stalactite();
        let ext = generous_atom_extension(&u, 4).unwrap().matroid;
        assert!(ext.lattice().is_boolean());
        assert_eq!(ext.rank(set(&[4])), 1);
        assert_eq!(ext.rank(set(&[2, 4])), 2);
        assert_eq!(ext.rank(set(&[3, 4])), 2);
        for s in u.lattice().iter() {
            assert_eq!(ext.rank(s), u.rank(s));
        }
        assert!(matches!(
            generous_atom_extension(&u, 2),
            Err(Error::AlreadyAtom(2))
        ));
    }

    #[test]
    fn stalactite_generous_is_uniform() {
        let u = stalactite();
        let b = DistLattice::boolean(4).unwrap();
        let g = generous_extension(&u, &b).unwrap();
        assert_eq!(g.adjoined, vec![4]);
        assert!(g
            .matroid
            .rank_function()
            .pairs()
            .all(|(s, r)| r == s.len().min(2) as i64));
        assert_eq!(restrict(&g.matroid, u.lattice()).unwrap(), u);
    }

    #[test]
    fn stalactite_extensions() {
        let u = stalactite();
        let all = enumerate_matroid_extensions(&u).unwrap();
        assert_eq!(all.len(), 3);
        let g = generous_extension(&u, &DistLattice::boolean(4).unwrap())
            .unwrap()
            .matroid;
        for r in &all {
            assert!(dominates(g.rank_function(), r).unwrap());
            let m = UMatroid::new(r.clone()).unwrap();
            assert!(is_sheared(&m, &u).unwrap());
        }
        assert!(all.iter().any(|r| r == g.rank_function()));
    }

    #[test]
    fn matroid_has_one_extension() {
        let u = UMatroid::from_fn(Arc::new(DistLattice::boolean(3).unwrap()), |s| {
            s.len().min(2) as i64
        })
        .unwrap();
        assert_eq!(
            enumerate_matroid_extensions(&u).unwrap(),
            vec![u.rank_function().clone()]
        );
        let g = generous_extension(&u, u.lattice()).unwrap();
        assert!(g.adjoined.is_empty());
        assert_eq!(g.matroid, u);
    }

    #[test]
    fn stalactite_points_and_flats() {
        let u = stalactite();
        let pts = zero_one_points(&u).unwrap();
        assert_eq!(pts.len(), 6);
        assert!(pts.iter().all(|p| p.len() == 2));
        let f = flats_after_atom_extension(&u, 4).unwrap();
        assert_eq!(f.len(), 6);
        assert!(f.contains(set(&[4])));
        let direct = flats(&generous_atom_extension(&u, 4).unwrap().matroid);
        assert_eq!(f, direct);
        let uni = UMatroid::from_fn(Arc::new(DistLattice::boolean(4).unwrap()), |s| {
            s.len().min(2) as i64
        })
        .unwrap();
        let fr = flats_after_restriction(&uni, u.lattice()).unwrap();
        assert_eq!(fr, flats(&u));
    }

    #[test]
    fn magnanimous_breaks_unit_increase() {
        let d = Arc::new(DistLattice::chain(2).unwrap());
        let r = RankFunction::from_fn(d, |s| s.len() as i64).unwrap();
        let m = magnanimous_extension(&r, &DistLattice::boolean(2).unwrap()).unwrap();
        assert_eq!(m.rank(set(&[2])), 2);
        assert!(!m.validate().is_umatroid());
        assert!(m.validate().is_submodular_system());
    }

    #[test]
    fn zero_rank() {
        let d = Arc::new(DistLattice::chain(3).unwrap());
        let u = UMatroid::from_fn(d, |_| 0).unwrap();
        assert_eq!(zero_one_points(&u).unwrap(), vec![Subset::EMPTY]);
        let g = generous_extension(&u, &DistLattice::boolean(3).unwrap()).unwrap();
        assert!(g.matroid.rank_function().values().iter().all(|&v| v == 0));
    }
}
