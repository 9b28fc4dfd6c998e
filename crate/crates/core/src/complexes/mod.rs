//! Pure simplicial complexes given by their facets, Gale and lexicographic
//! orders induced by a total order, shelling checks, and the shelling/Gale
//! characterization of U-matroid basis systems.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{linear_extensions, DistLattice, Poset, Subset, TotalOrder};
use crate::umatroid::{bases, rank_from_bases, RankFunction, UMatroid};

/// A nonempty family of distinct `r`-subsets of `[n]`, the facets of the
/// complex they generate. Facets are kept in canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct PureComplex {
    n: usize,
    r: usize,
    facets: Vec<Subset>,
}

impl PureComplex {
    pub fn new(n: usize, facets: &[Subset]) -> Result<PureComplex> {
        let mut facets = facets.to_vec();
        facets.sort_unstable();
        facets.dedup();
        let first = *facets
            .first()
            .ok_or_else(|| Error::Precondition("a complex needs at least one facet".into()))?;
        if let Some(f) = facets.iter().find(|f| !f.fits(n)) {
            return Err(Error::ElementOutOfRange {
                elem: f.to_vec().last().copied().unwrap_or(0),
                n,
            });
        }
        let r = first.len();
        if let Some(f) = facets.iter().find(|f| f.len() != r) {
            return Err(Error::NotPure(format!(
                "{f} has {} elements, {first} has {r}",
                f.len()
            )));
        }
        Ok(PureComplex { n, r, facets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Facet cardinality.
    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn facets(&self) -> &[Subset] {
        &self.facets
    }

    pub fn contains_facet(&self, s: Subset) -> bool {
        self.facets.binary_search(&s).is_ok()
    }

    /// Number of faces, the empty face included.
    pub fn face_count(&self) -> usize {
        let mut faces: HashSet<u32> = HashSet::new();
        for f in &self.facets {
            // every submask of f
            let m = f.bits();
            let mut s = m;
            loop {
                faces.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & m;
            }
        }
        faces.len()
    }

    /// The facets sorted by `<_lex` under `sigma`.
    pub fn lex_order(&self, sigma: &TotalOrder) -> Vec<Subset> {
        let mut keyed: Vec<(Subset, Subset)> =
            self.facets.iter().map(|&f| (sigma.encode(f), f)).collect();
        keyed.sort_unstable();
        keyed.into_iter().map(|(_, f)| f).collect()
    }
}

impl fmt::Debug for PureComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PureComplex(n={}, r={}, ", self.n, self.r)?;
        f.debug_list()
            .entries(self.facets.iter().map(|s| s.compact()))
            .finish()?;
        f.write_str(")")
    }
}

/// A sequence listing every facet of a complex exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetOrder(Vec<Subset>);

impl FacetOrder {
    pub fn new(complex: &PureComplex, seq: Vec<Subset>) -> Result<FacetOrder> {
        let mut sorted = seq.clone();
        sorted.sort_unstable();
        if sorted != complex.facets {
            return Err(Error::Precondition(
                "facet order must list every facet exactly once".into(),
            ));
        }
        Ok(FacetOrder(seq))
    }

    pub fn lex(complex: &PureComplex, sigma: &TotalOrder) -> FacetOrder {
        FacetOrder(complex.lex_order(sigma))
    }

    pub fn as_slice(&self) -> &[Subset] {
        &self.0
    }
}

/// Lexicographic comparison of the σ-sorted element lists. Sets of different
/// size compare by size.
pub fn lex_compare(a: Subset, b: Subset, sigma: &TotalOrder) -> Ordering {
    sigma.encode(a).cmp(&sigma.encode(b))
}

/// Gale order: with both sets sorted by `sigma`, `a_i ≤ b_i` for every `i`.
/// False for sets of different size.
pub fn gale_leq(a: Subset, b: Subset, sigma: &TotalOrder) -> bool {
    a.len() == b.len()
        && sigma
            .encode(a)
            .elements()
            .zip(sigma.encode(b).elements())
            .all(|(x, y)| x <= y)
}

/// `f_B(σ)`: the lexicographically smallest member of `family`.
///
/// # Panics
/// If `family` is empty.
pub fn lex_min(family: &[Subset], sigma: &TotalOrder) -> Subset {
    *family
        .iter()
        .min_by_key(|&&f| sigma.encode(f))
        .expect("nonempty family")
}

/// The unique Gale-minimum of `family`, if there is one. Lex order extends
/// Gale order, so the only candidate is the lex-minimum.
pub fn gale_min(family: &[Subset], sigma: &TotalOrder) -> Option<Subset> {
    let m = lex_min(family, sigma);
    family.iter().all(|&f| gale_leq(m, f, sigma)).then_some(m)
}

/// A position `j` whose facet meets the earlier facet at position `i` in a
/// face not contained in any codimension-one face shared with an earlier
/// facet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShellingFailure {
    pub i: usize,
    pub j: usize,
    pub earlier: Subset,
    pub facet: Subset,
}

impl fmt::Display for ShellingFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "facet #{} {} meets earlier facet #{} {} outside the earlier codimension-one faces",
            self.j + 1,
            self.facet,
            self.i + 1,
            self.earlier
        )
    }
}

/// Shelling test on a sequence of `r`-sets: for every `i < j` some
/// `x ∈ F_j ∖ F_i` has `F_j ∖ x` inside an earlier facet. Returns the first
/// failing `(i, j)`.
pub fn is_shelling_order(order: &[Subset]) -> Result<(), ShellingFailure> {
    for (j, &fj) in order.iter().enumerate().skip(1) {
        let shared: Subset = fj
            .elements()
            .filter(|&x| order[..j].iter().any(|&fl| fj.without(x).is_subset(fl)))
            .fold(Subset::EMPTY, Subset::with);
        for (i, &fi) in order[..j].iter().enumerate() {
            if fj.difference(fi).intersection(shared).is_empty() {
                return Err(ShellingFailure {
                    i,
                    j,
                    earlier: fi,
                    facet: fj,
                });
            }
        }
    }
    Ok(())
}

/// The outcome of [`check_basis_system`].
#[derive(Debug, Clone)]
pub struct BasisSystemReport {
    /// `f_B` is onto `B` over `Le(P)`.
    pub b1: bool,
    /// Every `σ ∈ Le(P)` has a unique Gale-minimum in `B`.
    pub b2: bool,
    /// Same condition as `b1` (stated separately in the shelling criterion).
    pub b1_prime: bool,
    /// Every `σ`-lex order on `B` is a shelling order. Implies `b2`, but is
    /// strictly stronger: some basis systems have a linear extension whose
    /// lex order is not a shelling, so this does not enter the verdict.
    pub b2_prime: bool,
    /// A member of `B` that is never a lex-minimum.
    pub unreached: Option<Subset>,
    /// A `σ` without a unique Gale-minimum.
    pub gale_failure: Option<TotalOrder>,
    /// A `σ` whose lex order is not a shelling.
    pub shelling_failure: Option<(TotalOrder, ShellingFailure)>,
    /// `ρ(A) = max |B ∩ A|` on `J(P)`, when it is a U-matroid with bases `B`.
    pub rank: Option<RankFunction>,
}

impl BasisSystemReport {
    pub fn is_basis_system(&self) -> bool {
        self.b1 && self.b2
    }
}

/// Decides whether `facets` is the basis system of a U-matroid on `J(P)` by
/// the Gale criterion over every linear extension of `P`, cross-checked
/// against the rank function reconstructed from the facets. The shelling
/// criterion is evaluated and reported alongside.
pub fn check_basis_system(p: &Poset, facets: &PureComplex) -> Result<BasisSystemReport> {
    if p.n() != facets.n() {
        return Err(Error::GroundSetMismatch(p.n(), facets.n()));
    }
    let fam = facets.facets();
    let mut reached: HashSet<u32> = HashSet::new();
    let mut gale_failure = None;
    let mut shelling_failure = None;
    let mut keyed: Vec<(Subset, Subset)> = Vec::with_capacity(fam.len());
    for sigma in linear_extensions(p)? {
        keyed.clear();
        keyed.extend(fam.iter().map(|&f| (sigma.encode(f), f)));
        keyed.sort_unstable();
        let (m_enc, m) = keyed[0];
        reached.insert(m.bits());
        if gale_failure.is_none() {
            let unique = keyed
                .iter()
                .all(|&(enc, _)| m_enc.elements().zip(enc.elements()).all(|(x, y)| x <= y));
            if !unique {
                gale_failure = Some(sigma.clone());
            }
        }
        if shelling_failure.is_none() {
            let order: Vec<Subset> = keyed.iter().map(|&(_, f)| f).collect();
            if let Err(w) = is_shelling_order(&order) {
                shelling_failure = Some((sigma.clone(), w));
            }
        }
    }
    let unreached = fam.iter().copied().find(|f| !reached.contains(&f.bits()));
    let b1 = unreached.is_none();
    let b2 = gale_failure.is_none();
    let b2_prime = shelling_failure.is_none();
    // shellings force unique Gale minima; the converse fails (see
    // `BasisSystemReport::b2_prime`)
    if b2_prime && !b2 {
        return Err(Error::Invariant(
            "every lex order shells but a Gale minimum is not unique".into(),
        ));
    }
    let d = Arc::new(DistLattice::order_ideals(p)?);
    let rank = rank_from_bases(fam, d)?;
    let reconstructs = match UMatroid::new(rank.clone()) {
        Ok(u) => bases(&u)? == fam,
        Err(_) => false,
    };
    if reconstructs != (b1 && b2) {
        return Err(Error::Invariant(format!(
            "criteria say {} but the reconstructed rank function says {}",
            b1 && b2,
            reconstructs
        )));
    }
    Ok(BasisSystemReport {
        b1,
        b2,
        b1_prime: b1,
        b2_prime,
        unreached,
        gale_failure,
        shelling_failure,
        rank: reconstructs.then_some(rank),
    })
}

/// The complex generated by the bases of `u`.
pub fn pseudo_independence_complex(u: &UMatroid) -> Result<PureComplex> {
    PureComplex::new(u.n(), &bases(u)?)
}
