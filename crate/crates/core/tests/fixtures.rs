mod common;

use std::path::Path;
use std::sync::Arc;

use umx::arrangements::{arrangement_umatroid, polymatroid_rank, split_space};
use umx::complexes::{check_basis_system, is_shelling_order, pseudo_independence_complex};
use umx::extension::generous_extension;
use umx::io;
use umx::lattice::{DistLattice, Subset, TotalOrder};
use umx::umatroid::{bases, closure, flats, rank_from_bases, Axiom, UMatroid};
use umx::Error;

use common::product_of_chains;

fn read(name: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    std::fs::read_to_string(p).unwrap()
}

fn umatroid(name: &str) -> UMatroid {
    UMatroid::new(io::rank_function_from_str(&read(name)).unwrap()).unwrap()
}

fn s(v: &[usize]) -> Subset {
    Subset::from_elements(v.iter().copied())
}

/// `ρ_X(b)` for spaces cut out by coordinate functionals: generic
/// `b_i`-dimensional pieces of the normal spaces `N_i` span
/// `min_A (|⋃_{i∈A} N_i| + Σ_{i∉A} b_i)` dimensions.
fn coordinate_rank(supports: &[&[usize]], b: &[usize]) -> usize {
    let m = supports.len();
    (0u32..1 << m)
        .map(|mask| {
            let a = Subset(mask);
            let union = a
                .elements()
                .fold(Subset::EMPTY, |acc, i| acc.union(s(supports[i - 1])));
            union.len()
                + (1..=m)
                    .filter(|i| !a.contains(*i))
                    .map(|i| b[i - 1])
                    .sum::<usize>()
        })
        .min()
        .unwrap()
}

fn check_coordinate_arrangement(name: &str, supports: &[&[usize]]) {
    let x = io::arrangement_from_str(&read(name)).unwrap();
    let u = arrangement_umatroid(&x).unwrap();
    let idx = x.lift_index().unwrap();
    for b in product_of_chains(&x.codims()) {
        let got = u.rank(idx.embed(&b).unwrap()) as usize;
        assert_eq!(got, coordinate_rank(supports, &b), "{name} at {b:?}");
    }
}

#[test]
fn transverse_pair_in_four_space() {
    check_coordinate_arrangement("transverse_q4.json", &[&[1, 2], &[3, 4], &[1, 3]]);
    let x = io::arrangement_from_str(&read("transverse_q4.json")).unwrap();
    let u = arrangement_umatroid(&x).unwrap();
    let idx = x.lift_index().unwrap();
    // the second and third spaces share a normal direction, as do the first and third
    assert_eq!(u.rank(idx.embed(&[2, 0, 2]).unwrap()), 3);
    assert_eq!(u.rank(idx.embed(&[0, 2, 2]).unwrap()), 3);
    assert_eq!(u.rank(idx.embed(&[2, 2, 0]).unwrap()), 4);
}

#[test]
fn four_spaces_in_six_space() {
    check_coordinate_arrangement(
        "transverse_q6.json",
        &[&[1, 2, 3], &[4, 5, 6], &[1, 2, 6], &[3, 4, 5]],
    );
}

#[test]
fn two_lines_and_origin_is_a_relabeled_stalactite() {
    let x = io::arrangement_from_str(&read("two_lines_and_origin.json")).unwrap();
    let u = arrangement_umatroid(&x).unwrap();
    assert_eq!(
        u.relabel(&[2, 3, 1, 4]).unwrap(),
        umatroid("stalactite.json")
    );

    let rep = split_space(&x, 3, 0).unwrap();
    assert_eq!(rep.atom, 4);
    let full = DistLattice::boolean(4).unwrap();
    assert_eq!(rep.after.lattice(), &full);
    assert!((0u32..16)
        .map(Subset)
        .all(|a| rep.after.rank(a) == (a.len() as i64).min(2)));
}

#[test]
fn k_equal_split_adds_an_atom_on_top() {
    let x = io::arrangement_from_str(&read("k_equal.json")).unwrap();
    assert_eq!(polymatroid_rank(&x).unwrap().rank(s(&[1, 2, 3, 4])), 3);
    let rep = split_space(&x, 4, 0).unwrap();
    assert_eq!(rep.arrangement.codims(), vec![2, 2, 2, 1, 1]);
    assert_eq!(rep.atom, 8);
    let idx = x.lift_index().unwrap();
    assert_eq!(rep.before.rank(idx.embed(&[1, 1, 1, 0]).unwrap()), 3);
}

#[test]
fn stalactite_structure() {
    let u = umatroid("stalactite.json");
    let f = flats(&u);
    let want = vec![s(&[]), s(&[1]), s(&[2]), s(&[3]), s(&[1, 2, 3, 4])];
    assert_eq!(f.flats(), &want[..]);
    assert_eq!(closure(&u, s(&[1, 4])), s(&[1, 2, 3, 4]));
    let c = pseudo_independence_complex(&u).unwrap();
    // 4 edges on 4 vertices plus the empty face
    assert_eq!(c.face_count(), 9);
    let sigma = TotalOrder::new(vec![3, 1, 2, 4]).unwrap();
    let lex = c.lex_order(&sigma);
    assert_eq!(lex, vec![s(&[1, 3]), s(&[2, 3]), s(&[1, 2]), s(&[1, 4])]);
    assert!(is_shelling_order(&lex).is_ok());
}

#[test]
fn stalactite_bases_file_is_a_basis_system() {
    let (p, c) = io::basis_system_from_str(&read("stalactite_bases.json")).unwrap();
    let rep = check_basis_system(&p, &c).unwrap();
    assert!(rep.is_basis_system() && rep.b2_prime);
    assert_eq!(
        rep.rank.unwrap(),
        *umatroid("stalactite.json").rank_function()
    );

    // the same family over the antichain is not a matroid basis system
    let (p, c) = io::basis_system_from_str(&read("stalactite_bases_free.json")).unwrap();
    let rep = check_basis_system(&p, &c).unwrap();
    assert!(!rep.is_basis_system());
    assert!(rep.rank.is_none());
}

#[test]
fn lex_order_need_not_shell() {
    let u = umatroid("lex_not_shelling.json");
    let b = bases(&u).unwrap();
    assert_eq!(
        b,
        vec![
            s(&[1, 2, 3]),
            s(&[1, 2, 5]),
            s(&[1, 3, 4]),
            s(&[1, 4, 5]),
            s(&[3, 4, 5])
        ]
    );
    let c = pseudo_independence_complex(&u).unwrap();
    let sigma = TotalOrder::new(vec![3, 1, 2, 4, 5]).unwrap();
    assert!(sigma.is_linear_extension(u.lattice().irr_poset()));
    let lex = c.lex_order(&sigma);
    // {1,2,5} meets the earlier {3,4,5} in {5}, which lies in no earlier ridge of it
    let w = is_shelling_order(&lex).unwrap_err();
    assert_eq!((w.facet, w.earlier), (s(&[1, 2, 5]), s(&[3, 4, 5])));
    // the complex itself is shellable
    let order = vec![
        s(&[1, 2, 3]),
        s(&[1, 2, 5]),
        s(&[1, 3, 4]),
        s(&[1, 4, 5]),
        s(&[3, 4, 5]),
    ];
    assert!(is_shelling_order(&order).is_ok());
    // and the Gale criterion still recognizes the basis system
    let rep = check_basis_system(u.lattice().irr_poset(), &c).unwrap();
    assert!(rep.is_basis_system());
    assert!(!rep.b2_prime);
}

#[test]
fn non_poset_matroid_round_trip() {
    let u = umatroid("non_poset_matroid.json");
    let b = bases(&u).unwrap();
    let back = rank_from_bases(&b, u.lattice_arc().clone()).unwrap();
    assert_eq!(&back, u.rank_function());
}

#[test]
fn jump_of_two_is_rejected() {
    let r = io::rank_function_from_str(&read("jump_of_two.json")).unwrap();
    let rep = r.validate();
    assert!(!rep.passes(Axiom::UnitIncrease));
    // 0 + 0 < 2 + 0 as well
    assert!(!rep.passes(Axiom::Submodularity));
    assert!(matches!(
        UMatroid::new(r),
        Err(Error::AxiomViolation { .. })
    ));
}

#[test]
fn uniform_matroid_is_its_own_generous_extension() {
    let u = umatroid("uniform_2_4.json");
    assert!(u.is_matroid());
    let g = generous_extension(&u, &DistLattice::boolean(4).unwrap()).unwrap();
    assert!(g.adjoined.is_empty());
    assert_eq!(g.matroid, u);
    assert_eq!(bases(&u).unwrap().len(), 6);
}

#[test]
fn three_chains_candidate_differs_from_generous() {
    let u = umatroid("three_chains.json");
    let cand = io::rank_function_from_str(&read("three_chains_candidate.json")).unwrap();
    let full = Arc::new(DistLattice::boolean(6).unwrap());
    let g = generous_extension(&u, &full).unwrap().matroid;
    assert_eq!(cand.rank(s(&[4])), 1);
    assert_eq!(cand.rank(s(&[5, 6])), 1);
    assert_eq!(cand.rank(s(&[4, 5, 6])), 3);
    assert!(g.rank(s(&[4, 5, 6])) <= g.rank(s(&[4])) + g.rank(s(&[5, 6])));
}

#[test]
fn total_order_fixture_parses() {
    let sigma = io::total_order_from_str(&read("sigma_3124.json")).unwrap();
    assert_eq!(sigma.to_string(), "3<1<2<4");
}
