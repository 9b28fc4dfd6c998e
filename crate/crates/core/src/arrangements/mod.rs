//! Subspace arrangements over the rationals and their matroidal invariants:
//! intersection ranks, the arrangement polymatroid, its minimal multisymmetric
//! lift, the U-matroid on a product of chains, and generic splitting of a
//! space into a codimension-one-smaller space and a hyperplane.

mod linalg;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use linalg::{combine, independent_rows};
pub use linalg::{integer_rank, parse_rational, rank, Rational};

use crate::error::{Error, Result};
use crate::extension::generous_atom_extension;
use crate::lattice::{DistLattice, Poset, Subset};
use crate::limits::MAX_N;
use crate::umatroid::{local_chain_violations, validate, RankFunction, UMatroid, ValidationReport};

/// Random coefficients are drawn from `[-COEFF_BOUND, COEFF_BOUND]`.
pub const COEFF_BOUND: i64 = 1000;
/// Draws per generic construction before giving up.
pub const MAX_RESAMPLES: usize = 10;

/// A linear subspace of `Q^dim`, stored as a spanning set of its annihilator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    dim: usize,
    normals: Vec<Vec<Rational>>,
    codim: usize,
}

impl Subspace {
    pub fn new(dim: usize, normals: Vec<Vec<Rational>>) -> Result<Subspace> {
        if let Some(v) = normals.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.len(),
            });
        }
        let codim = rank(&normals);
        Ok(Subspace {
            dim,
            normals,
            codim,
        })
    }

    /// The hyperplane with the given normal.
    pub fn hyperplane(normal: Vec<Rational>) -> Result<Subspace> {
        Subspace::new(normal.len(), vec![normal])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn normals(&self) -> &[Vec<Rational>] {
        &self.normals
    }

    fn annihilator_basis(&self) -> Vec<Vec<Rational>> {
        independent_rows(&self.normals)
    }
}

/// A list of subspaces of a common `Q^dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    spaces: Vec<Subspace>,
}

impl Arrangement {
    pub fn new(dim: usize, spaces: Vec<Subspace>) -> Result<Arrangement> {
        if let Some(s) = spaces.iter().find(|s| s.dim != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: s.dim,
            });
        }
        Ok(Arrangement { dim, spaces })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    /// Number of spaces.
    pub fn len(&self) -> usize {
        self.spaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    /// The codimension vector `c`.
    pub fn codims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::codim).collect()
    }

    pub fn lift_index(&self) -> Result<LiftIndex> {
        LiftIndex::new(self.codims())
    }
}

/// `codim ⋂_{a ∈ A} X_a`, with `A ⊆ [m]`.
pub fn codim_intersection(x: &Arrangement, a: Subset) -> Result<usize> {
    if !a.fits(x.len()) {
        return Err(Error::ElementOutOfRange {
            elem: a.to_vec().last().copied().unwrap_or(0),
            n: x.len(),
        });
    }
    Ok(rank(
        a.elements().flat_map(|i| x.spaces[i - 1].normals.iter()),
    ))
}

/// An integer set function on `2^[m]`, indexed by bitmask. `m = 0` is allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polymatroid {
    m: usize,
    table: Vec<i64>,
}

impl Polymatroid {
    /// `table[mask]` is the value on the subset with that bitmask.
    pub fn new(m: usize, table: Vec<i64>) -> Result<Polymatroid> {
        if m > MAX_N {
            return Err(Error::GroundSetSize(m));
        }
        if table.len() != 1 << m {
            return Err(Error::RankTable(format!(
                "{} values for 2^{m} subsets",
                table.len()
            )));
        }
        Ok(Polymatroid { m, table })
    }

    pub fn from_fn(m: usize, f: impl Fn(Subset) -> i64) -> Result<Polymatroid> {
        if m > MAX_N {
            return Err(Error::GroundSetSize(m));
        }
        Polymatroid::new(m, (0..1u32 << m).map(|b| f(Subset(b))).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rank(&self, a: Subset) -> i64 {
        self.table[a.bits() as usize]
    }

    /// `(set, value)` pairs in canonical order.
    pub fn pairs(&self) -> Vec<(Subset, i64)> {
        let mut v: Vec<(Subset, i64)> = (0..self.table.len() as u32)
            .map(|b| (Subset(b), self.table[b as usize]))
            .collect();
        v.sort_unstable();
        v
    }

    /// Calibration, monotonicity, submodularity (and the U-matroid extras,
    /// which a polymatroid need not satisfy). Trivially clean for `m = 0`.
    pub fn validate(&self) -> Result<ValidationReport> {
        if self.m == 0 {
            return Ok(if self.table[0] == 0 {
                ValidationReport::default()
            } else {
                validate(&DistLattice::boolean(1)?, &[self.table[0], self.table[0]])
            });
        }
        let rf = self.to_rank_function()?;
        Ok(rf.validate())
    }

    pub fn to_rank_function(&self) -> Result<RankFunction> {
        let d = Arc::new(DistLattice::boolean(self.m)?);
        RankFunction::from_fn(d, |s| self.rank(s))
    }
}

/// `A ↦ codim ⋂_{a∈A} X_a` on `2^[m]`.
pub fn polymatroid_rank(x: &Arrangement) -> Result<Polymatroid> {
    let p = Polymatroid::from_fn(x.len(), |a| {
        codim_intersection(x, a).expect("subset of the spaces") as i64
    })?;
    if !p.validate()?.is_submodular_system() {
        return Err(Error::Invariant(
            "arrangement rank is not a polymatroid".into(),
        ));
    }
    Ok(p)
}

/// Blocks `Ẽ_1 = {1..c_1}`, `Ẽ_2 = {c_1+1..c_1+c_2}`, … of the lifted ground
/// set, with the projection `π` onto `[m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftIndex {
    blocks: Vec<usize>,
    offsets: Vec<usize>,
}

impl LiftIndex {
    pub fn new(blocks: Vec<usize>) -> Result<LiftIndex> {
        let n: usize = blocks.iter().sum();
        if n == 0 || n > MAX_N {
            return Err(Error::GroundSetSize(n));
        }
        let offsets = blocks
            .iter()
            .scan(0, |acc, &c| {
                let o = *acc;
                *acc += c;
                Some(o)
            })
            .collect();
        Ok(LiftIndex { blocks, offsets })
    }

    /// `|Ẽ|`.
    pub fn n(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// Number of blocks `m`.
    pub fn m(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// `Ẽ_i` for `i ∈ [m]`.
    pub fn block(&self, i: usize) -> Subset {
        let o = self.offsets[i - 1];
        Subset::from_elements(o + 1..=o + self.blocks[i - 1])
    }

    /// `π(e)`.
    pub fn project(&self, e: usize) -> usize {
        (1..=self.m())
            .find(|&i| self.block(i).contains(e))
            .expect("element of the lifted ground set")
    }

    /// `π⁻¹(A)` for `A ⊆ [m]`.
    pub fn preimage(&self, a: Subset) -> Subset {
        a.elements()
            .fold(Subset::EMPTY, |s, i| s.union(self.block(i)))
    }

    /// `(|S ∩ Ẽ_1|, …, |S ∩ Ẽ_m|)`.
    pub fn counts(&self, s: Subset) -> Vec<usize> {
        (1..=self.m())
            .map(|i| s.intersection(self.block(i)).len())
            .collect()
    }

    /// The member of `D_c` with the given block counts: each block filled
    /// from its lowest element.
    pub fn embed(&self, b: &[usize]) -> Result<Subset> {
        if b.len() != self.m() {
            return Err(Error::DimensionMismatch {
                expected: self.m(),
                got: b.len(),
            });
        }
        let mut s = Subset::EMPTY;
        for (i, (&bi, &ci)) in b.iter().zip(&self.blocks).enumerate() {
            if bi > ci {
                return Err(Error::Precondition(format!(
                    "b = {b:?} exceeds c = {:?} at position {}",
                    self.blocks,
                    i + 1
                )));
            }
            let o = self.offsets[i];
            s = s.union(Subset::from_elements(o + 1..=o + bi));
        }
        Ok(s)
    }

    /// Disjoint chains, one per block, ordered by element index.
    pub fn poset(&self) -> Poset {
        let rel: Vec<(usize, usize)> = (1..=self.m())
            .flat_map(|i| {
                let v = self.block(i).to_vec();
                v.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>()
            })
            .collect();
        Poset::from_relations(self.n(), &rel).expect("chains are acyclic")
    }

    /// `D_c = [0,c_1] × … × [0,c_m]` as a sublattice of `2^Ẽ`.
    pub fn lattice(&self) -> Result<DistLattice> {
        DistLattice::order_ideals(&self.poset())
    }
}

/// `min_{A ⊆ [m]} rk(A) + Σ_{i ∉ A} b_i`.
fn min_over_flats(rk: &Polymatroid, b: &[usize]) -> i64 {
    (0..1u32 << rk.m())
        .map(|mask| {
            let a = Subset(mask);
            let outside: usize = (1..=rk.m())
                .filter(|&i| !a.contains(i))
                .map(|i| b[i - 1])
                .sum();
            rk.rank(a) + outside as i64
        })
        .min()
        .expect("at least the empty set")
}

/// `rk_M(S) = min_A rk(A) + |S ∖ π⁻¹(A)|` on `2^Ẽ`. Requires
/// `rk({i}) ≤ c_i`; the result is checked to be a multisymmetric matroid.
pub fn multisymmetric_lift(rk: &Polymatroid, c: &[usize]) -> Result<UMatroid> {
    if c.len() != rk.m() {
        return Err(Error::DimensionMismatch {
            expected: rk.m(),
            got: c.len(),
        });
    }
    for i in 1..=rk.m() {
        if rk.rank(Subset::singleton(i)) > c[i - 1] as i64 {
            return Err(Error::Precondition(format!(
                "rank of {{{i}}} exceeds its block size {}",
                c[i - 1]
            )));
        }
    }
    let idx = LiftIndex::new(c.to_vec())?;
    let d = Arc::new(DistLattice::boolean(idx.n())?);
    let rf = RankFunction::from_fn(d, |s| min_over_flats(rk, &idx.counts(s)))?;
    for (s, v) in rf.pairs() {
        let canon = idx.embed(&idx.counts(s))?;
        if rf.rank(canon) != v {
            return Err(Error::Invariant(format!(
                "lift is not multisymmetric at {s}"
            )));
        }
    }
    UMatroid::new(rf).map_err(|e| Error::Invariant(format!("lift is not a matroid: {e}")))
}

/// `ρ_X(b) = min_A rk_X(A) + Σ_{i∉A} b_i` on `D_c`, embedded in `2^Ẽ` with
/// blocks filled bottom-up. The result is checked to be a poset matroid.
pub fn arrangement_umatroid(x: &Arrangement) -> Result<UMatroid> {
    let rk = polymatroid_rank(x)?;
    umatroid_from_polymatroid(&rk, &x.codims())
}

/// [`arrangement_umatroid`] for an abstract polymatroid and block sizes.
pub fn umatroid_from_polymatroid(rk: &Polymatroid, c: &[usize]) -> Result<UMatroid> {
    let idx = LiftIndex::new(c.to_vec())?;
    let d = Arc::new(idx.lattice()?);
    let rf = RankFunction::from_fn(d, |s| min_over_flats(rk, &idx.counts(s)))?;
    let u = UMatroid::new(rf).map_err(|e| Error::Invariant(format!("not a U-matroid: {e}")))?;
    if let Some(v) = local_chain_violations(&u).first() {
        return Err(Error::Invariant(format!("not a poset matroid: {v}")));
    }
    Ok(u)
}

fn random_rows(
    rng: &mut ChaCha8Rng,
    basis: &[Vec<Rational>],
    k: usize,
    dim: usize,
) -> Vec<Vec<Rational>> {
    (0..k)
        .map(|_| {
            let coeffs: Vec<i64> = (0..basis.len())
                .map(|_| rng.gen_range(-COEFF_BOUND..=COEFF_BOUND))
                .collect();
            combine(&coeffs, basis, dim)
        })
        .collect()
}

/// Largest `codim ⋂ Y` over `trials` random `Y_i ⊇ X_i` with `codim Y_i = b_i`.
/// A lower bound on `ρ_X(b)`, equal to it with high probability.
pub fn generic_rank_oracle(
    x: &Arrangement,
    b: &[usize],
    trials: usize,
    seed: u64,
) -> Result<usize> {
    let c = x.codims();
    if b.len() != c.len() || b.iter().zip(&c).any(|(bi, ci)| bi > ci) {
        return Err(Error::Precondition(format!(
            "b = {b:?} is not in [0, {c:?}]"
        )));
    }
    if trials == 0 {
        return Err(Error::Precondition("at least one trial".into()));
    }
    let bases: Vec<Vec<Vec<Rational>>> = x.spaces.iter().map(Subspace::annihilator_basis).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for _ in 0..trials {
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for (i, basis) in bases.iter().enumerate() {
            if b[i] == basis.len() {
                rows.extend(basis.iter().cloned());
                continue;
            }
            let mut attempt = 0;
            let y = loop {
                let y = random_rows(&mut rng, basis, b[i], x.dim);
                if rank(&y) == b[i] {
                    break y;
                }
                attempt += 1;
                if attempt == MAX_RESAMPLES {
                    return Err(Error::GenericityFailure(MAX_RESAMPLES));
                }
            };
            rows.extend(y);
        }
        best = best.max(rank(&rows));
    }
    Ok(best)
}

/// Outcome of [`split_space`].
#[derive(Debug, Clone)]
pub struct SplitReport {
    /// `X` with the split space replaced by `X'` followed by `H`.
    pub arrangement: Arrangement,
    /// The new atom: the top element of the split space's block.
    pub atom: usize,
    /// Draws used, including the successful one.
    pub attempts: usize,
    pub seed: u64,
    pub before: UMatroid,
    /// The U-matroid of the new arrangement; equals the generous atom
    /// extension of `before` by `atom`.
    pub after: UMatroid,
}

/// Replaces space `space` (1-based, codim `c ≥ 2`) by a random pair `X'`,
/// `H` with `codim X' = c − 1`, `codim H = 1` and `X' ∩ H = X`, then checks
/// that the new U-matroid is the generous atom extension of the old one by
/// the top element of the space's block. Degenerate draws are resampled.
pub fn split_space(x: &Arrangement, space: usize, seed: u64) -> Result<SplitReport> {
    if space == 0 || space > x.len() {
        return Err(Error::Precondition(format!(
            "space index {space} outside 1..={}",
            x.len()
        )));
    }
    let target = &x.spaces[space - 1];
    let c = target.codim;
    if c < 2 {
        return Err(Error::Precondition(format!(
            "space {space} has codimension {c}; splitting needs at least 2"
        )));
    }
    let before = arrangement_umatroid(x)?;
    let idx = x.lift_index()?;
    let atom = idx
        .block(space)
        .to_vec()
        .last()
        .copied()
        .expect("nonempty block");
    let expected = generous_atom_extension(&before, atom)?.matroid;
    let basis = target.annihilator_basis();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatched = false;
    for attempt in 1..=MAX_RESAMPLES {
        let w = random_rows(&mut rng, &basis, c, x.dim);
        // W spans the annihilator of X exactly when it has rank c
        if rank(&w) != c {
            continue;
        }
        let x_prime = Subspace::new(x.dim, w[..c - 1].to_vec())?;
        let h = Subspace::new(x.dim, w[c - 1..].to_vec())?;
        let meet = rank(w.iter().chain(target.normals.iter()));
        if x_prime.codim != c - 1 || h.codim != 1 || meet != c {
            continue;
        }
        let mut spaces = x.spaces.clone();
        spaces.splice(space - 1..space, [x_prime, h]);
        let arrangement = Arrangement::new(x.dim, spaces)?;
        let after = arrangement_umatroid(&arrangement)?;
        if after == expected {
            return Ok(SplitReport {
                arrangement,
                atom,
                attempts: attempt,
                seed,
                before,
                after,
            });
        }
        mismatched = true;
    }
    if mismatched {
        Err(Error::Invariant(format!(
            "split of space {space} never matched the generous atom extension in {MAX_RESAMPLES} draws"
        )))
    } else {
        Err(Error::GenericityFailure(MAX_RESAMPLES))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn space(dim: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::new(
            dim,
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| Rational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
        )
        .unwrap()
    }

    /// `x_i = x_j = x_k` planes in `Q^4`.
    fn k_equal() -> Arrangement {
        let mut spaces = Vec::new();
        for (i, j, k) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
            let mut r1 = [0i64; 4];
            r1[i] = 1;
            r1[j] = -1;
            let mut r2 = [0i64; 4];
            r2[j] = 1;
            r2[k] = -1;
            spaces.push(space(4, &[&r1, &r2]));
        }
        Arrangement::new(4, spaces).unwrap()
    }

    #[test]
    fn k_equal_ranks() {
        let x = k_equal();
        assert_eq!(x.codims(), vec![2, 2, 2, 2]);
        let p = polymatroid_rank(&x).unwrap();
        for (a, r) in p.pairs() {
            let want = match a.len() {
                0 => 0,
                1 => 2,
                _ => 3,
            };
            assert_eq!(r, want, "{a}");
        }
        let lift = multisymmetric_lift(&p, &x.codims()).unwrap();
        assert!(lift
            .rank_function()
            .pairs()
            .all(|(s, v)| v == s.len().min(3) as i64));
        let u = arrangement_umatroid(&x).unwrap();
        assert_eq!(u.lattice().len(), 81);
        assert_eq!(generic_rank_oracle(&x, &[1, 1, 1, 0], 20, 0).unwrap(), 3);
    }

    #[test]
    fn two_planes_in_four_space() {
        let x = Arrangement::new(
            4,
            vec![
                space(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]),
                space(4, &[&[0, 1, 0, 0], &[0, 0, 1, 0]]),
            ],
        )
        .unwrap();
        assert_eq!(
            codim_intersection(&x, Subset::from_elements([1, 2])).unwrap(),
            3
        );
        let u = arrangement_umatroid(&x).unwrap();
        assert_eq!(u.rank(Subset::EMPTY), 0);
        assert_eq!(u.total(), 3);
    }

    #[test]
    fn hyperplanes_and_trivia() {
        let x = Arrangement::new(
            2,
            vec![Subspace::hyperplane(vec![q("1"), q("1/2")]).unwrap()],
        )
        .unwrap();
        assert_eq!(codim_intersection(&x, Subset::singleton(1)).unwrap(), 1);
        let empty = Arrangement::new(3, vec![]).unwrap();
        let p = polymatroid_rank(&empty).unwrap();
        assert_eq!(p.rank(Subset::EMPTY), 0);
        let free = multisymmetric_lift(&Polymatroid::new(1, vec![0, 3]).unwrap(), &[3]).unwrap();
        assert!(free
            .rank_function()
            .pairs()
            .all(|(s, v)| v == s.len() as i64));
        let zero = multisymmetric_lift(&Polymatroid::new(2, vec![0; 4]).unwrap(), &[1, 2]).unwrap();
        assert_eq!(zero.total(), 0);
    }

    #[test]
    fn oracle_edges() {
        let x = k_equal();
        assert_eq!(generic_rank_oracle(&x, &[0, 0, 0, 0], 3, 1).unwrap(), 0);
        assert_eq!(generic_rank_oracle(&x, &[2, 2, 2, 2], 1, 1).unwrap(), 3);
        assert!(generic_rank_oracle(&x, &[3, 0, 0, 0], 1, 1).is_err());
    }

    #[test]
    fn stalactite_arrangement() {
        let x = Arrangement::new(
            2,
            vec![
                space(2, &[&[1, 0]]),
                space(2, &[&[0, 1]]),
                space(2, &[&[1, 0], &[0, 1]]),
            ],
        )
        .unwrap();
        let u = arrangement_umatroid(&x).unwrap();
        let relabeled = u.relabel(&[2, 3, 1, 4]).unwrap();
        assert!(relabeled.lattice().irr_poset().lt(1, 4));
        assert!(relabeled
            .rank_function()
            .pairs()
            .all(|(s, v)| v == s.len().min(2) as i64));
        let rep = split_space(&x, 3, 0).unwrap();
        assert_eq!(rep.atom, 4);
        assert!(rep.after.lattice().is_boolean());
        assert!(rep
            .after
            .rank_function()
            .pairs()
            .all(|(s, v)| v == s.len().min(2) as i64));
        assert!(split_space(&x, 1, 0).is_err());
    }

    #[test]
    fn k_equal_split() {
        let x = k_equal();
        let rep = split_space(&x, 4, 7).unwrap();
        assert_eq!(rep.arrangement.codims(), vec![2, 2, 2, 1, 1]);
        assert_eq!(rep.atom, 8);
    }
}
