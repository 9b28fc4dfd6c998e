//! Seeded random instances shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use umx::arrangements::{integer_rank, Arrangement, Rational, Subspace};
use umx::lattice::{DistLattice, Poset, Subset};
use umx::umatroid::UMatroid;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random poset on `[n]`: each pair is related with a random density, then
/// the elements are shuffled so that relations do not follow the labels.
pub fn random_poset(rng: &mut ChaCha8Rng, n: usize) -> Poset {
    let density: f64 = rng.gen_range(0.0..0.6);
    let mut labels: Vec<usize> = (1..=n).collect();
    labels.shuffle(rng);
    let mut rel = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                rel.push((labels[i], labels[j]));
            }
        }
    }
    Poset::from_relations(n, &rel).expect("relations follow a linear order")
}

/// Rank table, indexed by bitmask, of the column matroid of a random small
/// integer matrix on `n` columns.
pub fn random_matroid_table(rng: &mut ChaCha8Rng, n: usize) -> Vec<i64> {
    let rows = rng.gen_range(0..=n.min(4));
    let spread = if rng.gen_bool(0.5) { 1 } else { 3 };
    let cols: Vec<Vec<BigInt>> = (0..n)
        .map(|_| {
            (0..rows)
                .map(|_| BigInt::from(rng.gen_range(-spread..=spread)))
                .collect()
        })
        .collect();
    (0..1u32 << n)
        .map(|mask| {
            let m: Vec<Vec<BigInt>> = Subset(mask)
                .elements()
                .map(|e| cols[e - 1].clone())
                .collect();
            if m.is_empty() || rows == 0 {
                0
            } else {
                integer_rank(m) as i64
            }
        })
        .collect()
}

/// A random U-matroid on `n` elements: a random linear matroid restricted to
/// the order ideals of a random poset.
pub fn random_umatroid(rng: &mut ChaCha8Rng, n: usize) -> UMatroid {
    let p = random_poset(rng, n);
    random_umatroid_on(rng, &p)
}

pub fn random_umatroid_on(rng: &mut ChaCha8Rng, p: &Poset) -> UMatroid {
    let table = random_matroid_table(rng, p.n());
    let d = Arc::new(DistLattice::order_ideals(p).unwrap());
    UMatroid::from_fn(d, |s| table[s.bits() as usize]).expect("restricted matroid")
}

pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    umx::lattice::all_orders(n)
        .unwrap()
        .map(|s| s.as_slice().to_vec())
        .collect()
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// A random arrangement in `Q^d`, `d ≤ 5`, with `m ≤ 3` spaces of codimension
/// 1 or 2. When `want_split` is set the last space has codimension 2.
pub fn random_arrangement(rng: &mut ChaCha8Rng, want_split: bool) -> Arrangement {
    let d = rng.gen_range(if want_split { 2 } else { 1 }..=5);
    let m = rng.gen_range(1..=3);
    let mut spaces = Vec::new();
    for i in 0..m {
        let c = if want_split && i == m - 1 {
            2
        } else {
            rng.gen_range(1..=2.min(d))
        };
        let s = loop {
            let normals: Vec<Vec<Rational>> = (0..c)
                .map(|_| (0..d).map(|_| int(rng.gen_range(-2..=2))).collect())
                .collect();
            let s = Subspace::new(d, normals).unwrap();
            if s.codim() == c {
                break s;
            }
        };
        spaces.push(s);
    }
    Arrangement::new(d, spaces).unwrap()
}

/// Every `b` with `0 ≤ b_i ≤ c_i`.
pub fn product_of_chains(c: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &ci in c {
        out = out
            .into_iter()
            .flat_map(|b| {
                (0..=ci).map(move |v| {
                    let mut b = b.clone();
                    b.push(v);
                    b
                })
            })
            .collect();
    }
    out
}

/// A pure family: a U-matroid's bases, sometimes with one basis perturbed
/// or dropped, so that both verdicts occur.
pub fn random_family(rng: &mut ChaCha8Rng, u: &UMatroid) -> Vec<Subset> {
    let mut b = umx::umatroid::bases(u).unwrap();
    let n = u.n();
    match rng.gen_range(0..4) {
        0 => {}
        1 if b.len() > 1 => {
            let i = rng.gen_range(0..b.len());
            b.remove(i);
        }
        2 => {
            // add a random set of the same size
            let k = b[0].len();
            let mut elems: Vec<usize> = (1..=n).collect();
            elems.shuffle(rng);
            let s = Subset::from_elements(elems[..k].iter().copied());
            if !b.contains(&s) {
                b.push(s);
            }
        }
        _ => {
            // a random pure family
            let k = rng.gen_range(0..=n);
            let count = rng.gen_range(1..=6);
            b.clear();
            for _ in 0..count {
                let mut elems: Vec<usize> = (1..=n).collect();
                elems.shuffle(rng);
                let s = Subset::from_elements(elems[..k].iter().copied());
                if !b.contains(&s) {
                    b.push(s);
                }
            }
        }
    }
    b.sort();
    b
}
