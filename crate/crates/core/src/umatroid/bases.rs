use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use super::rank::{RankFunction, UMatroid};
use crate::error::{Error, Result};
use crate::lattice::{linear_extensions_with, DistLattice, Subset, TotalOrder};
use crate::limits::Limits;

/// The increments `x_{σ(i)} = ρ(A_i) − ρ(A_{i−1})` along the initial
/// segments of `σ`, indexed by element (`x[e - 1]`).
pub fn vertex_of_chain(u: &UMatroid, sigma: &TotalOrder) -> Result<Vec<u8>> {
    check_chain(u, sigma)?;
    let mut x = vec![0u8; u.n()];
    let mut prev = 0;
    for (k, a) in sigma.prefixes().into_iter().enumerate().skip(1) {
        let r = u.rank(a);
        x[sigma.as_slice()[k - 1] - 1] = (r - prev) as u8;
        prev = r;
    }
    Ok(x)
}

/// The elements at which `ρ` jumps along `σ`.
pub fn basis_of_chain(u: &UMatroid, sigma: &TotalOrder) -> Result<Subset> {
    check_chain(u, sigma)?;
    Ok(jumps(u, sigma))
}

fn check_chain(u: &UMatroid, sigma: &TotalOrder) -> Result<()> {
    if sigma.n() != u.n() {
        return Err(Error::GroundSetMismatch(sigma.n(), u.n()));
    }
    if !sigma.is_linear_extension(u.lattice().irr_poset()) {
        return Err(Error::NotALinearExtension(sigma.as_slice().to_vec()));
    }
    Ok(())
}

fn jumps(u: &UMatroid, sigma: &TotalOrder) -> Subset {
    let mut b = Subset::EMPTY;
    let mut a = Subset::EMPTY;
    let mut prev = 0;
    for &e in sigma.as_slice() {
        a = a.with(e);
        let r = u.rank(a);
        if r > prev {
            b = b.with(e);
        }
        prev = r;
    }
    b
}

/// All bases, in canonical order, with the default limits.
pub fn bases(u: &UMatroid) -> Result<Vec<Subset>> {
    bases_with(u, &Limits::current())
}

/// All bases in canonical order.
///
/// A basis only depends on the chain through the pair (current ideal, jumps
/// so far), so the maximal chains are swept level by level over the distinct
/// pairs rather than one linear extension at a time. The result is the same
/// set as [`bases_by_extensions`].
pub fn bases_with(u: &UMatroid, limits: &Limits) -> Result<Vec<Subset>> {
    let d = u.lattice();
    let key = |a: Subset, i: Subset| (u64::from(a.bits()) << 32) | u64::from(i.bits());
    let mut level: HashSet<u64> = HashSet::from([key(Subset::EMPTY, Subset::EMPTY)]);
    let mut states = 1usize;
    for _ in 0..u.n() {
        let mut next = HashSet::with_capacity(level.len() * 2);
        for &k in &level {
            let a = Subset((k >> 32) as u32);
            let i = Subset(k as u32);
            let ra = u.rank(a);
            for (e, b) in d.upper_covers(a) {
                let j = if u.rank(b) > ra { i.with(e) } else { i };
                next.insert(key(b, j));
            }
        }
        states += next.len();
        if states > limits.max_basis_states {
            return Err(Error::CapExceeded {
                what: "basis enumeration states",
                limit: limits.max_basis_states as u64,
            });
        }
        level = next;
    }
    let mut out: Vec<Subset> = level.into_iter().map(|k| Subset(k as u32)).collect();
    out.sort_unstable();
    Ok(out)
}

/// All bases by running through every linear extension of the characteristic
/// poset. Exponentially slower than [`bases`]; kept as a reference.
pub fn bases_by_extensions(u: &UMatroid, limits: &Limits) -> Result<Vec<Subset>> {
    let set: BTreeSet<Subset> = linear_extensions_with(u.lattice().irr_poset(), limits)?
        .map(|s| jumps(u, &s))
        .collect();
    Ok(set.into_iter().collect())
}

/// `ρ(A) = max_B |A ∩ B|` on `d`.
pub fn rank_from_bases(bases: &[Subset], d: Arc<DistLattice>) -> Result<RankFunction> {
    if bases.is_empty() {
        return Err(Error::Precondition("empty basis family".into()));
    }
    let r = bases[0].len();
    if let Some(b) = bases.iter().find(|b| b.len() != r || !b.fits(d.n())) {
        return Err(Error::NotPure(format!(
            "{b} does not match rank {r} on [{}]",
            d.n()
        )));
    }
    RankFunction::from_fn(d, |a| {
        bases
            .iter()
            .map(|b| a.intersection(*b).len())
            .max()
            .unwrap_or(0) as i64
    })
}

/// Maximal members `B ∈ D` with `|B| = ρ(B)`, in canonical order.
pub fn dot_bases(u: &UMatroid) -> Vec<Subset> {
    let d = u.lattice();
    let indep: Vec<Subset> = d.iter().filter(|&b| b.len() as i64 == u.rank(b)).collect();
    // independent members are down-closed within D, so maximality is local
    indep
        .iter()
        .copied()
        .filter(|&b| d.upper_covers(b).all(|(_, c)| c.len() as i64 != u.rank(c)))
        .collect()
}
