//! Induced count matroids: values, independence, rank (greedy vs the
//! brute partition-minimisation oracle vs the pebble game), circuit and
//! flat characterisations, and the connected-flat structure statements.

mod common;

use common::*;
use xmatroid::bits::{subsets_of, ElementSet};
use xmatroid::counts::{
    induced_basis, induced_circuit_check, induced_flat_check, induced_independent,
    induced_matroid, induced_rank, induced_rank_brute, CountFunction,
};
use xmatroid::graphs::{rooted_copies, HostGraph, PatternSpec};
use xmatroid::pebble::pebble_game_rank;

fn edge_set(host: &HostGraph, pairs: &[(usize, usize)]) -> ElementSet {
    ElementSet::from_ids(pairs.iter().map(|&(a, b)| host.edge_id(a, b).unwrap()))
}

/// Theta graph: 5 vertices, two hub vertices joined by three 2-edge paths.
fn theta(host: &HostGraph) -> ElementSet {
    edge_set(host, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
}

#[test]
fn eval_examples() {
    let k4 = complete(4);
    let f23 = CountFunction::vertex_count(2, 3, k4.clone()).unwrap();
    assert_eq!(f23.eval(k4.ground().full_set()), 5);

    let g110 = CountFunction::bipartite_count(1, 1, 0, k4.clone()).unwrap();
    let c4 = edge_set(&k4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
    assert_eq!(g110.eval(c4), 3);

    let k33 = bipartite(3, 3);
    let h2 = CountFunction::picture_lifting(2, k33.clone()).unwrap();
    let rooted = rooted_copies(3, 2, &k33).unwrap();
    assert_eq!(h2.eval(rooted.members()[0]), 5);

    // empty set evaluates to zero by convention
    assert_eq!(f23.eval(ElementSet::empty()), 0);
}

#[test]
fn independence_examples() {
    let k4 = complete(4);
    let f23 = CountFunction::vertex_count(2, 3, k4.clone()).unwrap();
    let full = k4.ground().full_set();
    let (ok, _) = induced_independent(&f23, full.without(0)).unwrap();
    assert!(ok);
    let (ok, witness) = induced_independent(&f23, full).unwrap();
    assert!(!ok);
    assert_eq!(witness, Some(full));

    let k5 = complete(5);
    let f10 = CountFunction::vertex_count(1, 0, k5.clone()).unwrap();
    let (ok, _) = induced_independent(&f10, theta(&k5)).unwrap();
    assert!(!ok);
}

#[test]
fn rank_examples_and_brute_agreement() {
    let k4 = complete(4);
    let f11 = CountFunction::vertex_count(1, 1, k4.clone()).unwrap();
    let full = k4.ground().full_set();
    assert_eq!(induced_rank(&f11, full).unwrap(), 3);
    assert_eq!(induced_rank_brute(&f11, full).unwrap(), 3);

    let k5 = complete(5);
    let f10 = CountFunction::vertex_count(1, 0, k5.clone()).unwrap();
    assert_eq!(induced_rank(&f10, theta(&k5)).unwrap(), 5);
    assert_eq!(induced_rank_brute(&f10, theta(&k5)).unwrap(), 5);

    let g110 = CountFunction::bipartite_count(1, 1, 0, k4.clone()).unwrap();
    assert_eq!(induced_rank(&g110, full).unwrap(), 4);
    assert_eq!(induced_rank_brute(&g110, full).unwrap(), 4);
}

#[test]
fn greedy_rank_matches_brute_oracle_on_small_sets() {
    let k5 = complete(5);
    let funcs = vec![
        CountFunction::vertex_count(1, 1, k5.clone()).unwrap(),
        CountFunction::vertex_count(2, 3, k5.clone()).unwrap(),
        CountFunction::vertex_count(1, 0, k5.clone()).unwrap(),
        CountFunction::vertex_count(2, 2, k5.clone()).unwrap(),
        CountFunction::bipartite_count(1, 1, 0, k5.clone()).unwrap(),
        CountFunction::bipartite_count(2, 1, 2, k5.clone()).unwrap(),
        CountFunction::bipartite_count(1, 1, -1, k5.clone()).unwrap(),
    ];
    // all subsets of a fixed 9-edge sample (brute oracle is capped at 10)
    let sample = ElementSet::from_ids(0..9);
    for f in &funcs {
        for sub in subsets_of(sample) {
            assert_eq!(
                induced_rank(f, sub).unwrap(),
                induced_rank_brute(f, sub).unwrap(),
                "mismatch for {f:?} at {sub:?}"
            );
        }
    }
}

#[test]
fn pebble_game_matches_generic_engine_exhaustively() {
    let k5 = complete(5);
    for (a, b) in [(1usize, 0usize), (1, 1), (2, 2), (2, 3), (3, 5)] {
        let f = CountFunction::vertex_count(a as i64, b as i64, k5.clone()).unwrap();
        for mask in 0u64..(1 << 10) {
            let s = ElementSet(mask);
            let via_pebble = pebble_game_rank(a, b, s, &k5).unwrap();
            // independent reference: greedy growth with the subset-scan test
            let mut basis = ElementSet::empty();
            for e in s.iter() {
                let cand = basis.with(e);
                let ok = subsets_of(cand)
                    .filter(|x| !x.is_empty())
                    .all(|x| x.len() as i64 <= f.eval(x));
                if ok {
                    basis = cand;
                }
            }
            assert_eq!(via_pebble, basis.len(), "(a,b)=({a},{b}) at {s:?}");
        }
    }
}

#[test]
fn pebble_spot_values() {
    let k4 = complete(4);
    let full4 = k4.ground().full_set();
    assert_eq!(pebble_game_rank(2, 3, full4.without(0), &k4).unwrap(), 5);

    let k6 = complete(6);
    let tree = edge_set(&k6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
    assert_eq!(pebble_game_rank(1, 1, tree, &k6).unwrap(), 5);
    let full6 = k6.ground().full_set();
    assert_eq!(pebble_game_rank(3, 5, full6.without(0), &k6).unwrap(), 13);
    assert_eq!(pebble_game_rank(3, 5, full6, &k6).unwrap(), 13);
}

#[test]
fn circuit_characterisation_per_pattern() {
    // every copy of the matching pattern is a circuit of its count matroid
    let k6 = complete(6);
    let cases: Vec<(CountFunction, PatternSpec)> = vec![
        (
            CountFunction::vertex_count(1, 1, k6.clone()).unwrap(),
            PatternSpec::Clique(3),
        ),
        (
            CountFunction::vertex_count(2, 3, k6.clone()).unwrap(),
            PatternSpec::Clique(4),
        ),
        (
            CountFunction::vertex_count(1, 0, k6.clone()).unwrap(),
            PatternSpec::CliqueMinus(4),
        ),
        (
            CountFunction::vertex_count(2, 2, k6.clone()).unwrap(),
            PatternSpec::CliqueMinus(5),
        ),
        (
            CountFunction::vertex_count(3, 5, k6.clone()).unwrap(),
            PatternSpec::CliqueMinus(6),
        ),
        (
            CountFunction::bipartite_count(1, 1, 0, k6.clone()).unwrap(),
            PatternSpec::Cycle(4),
        ),
        (
            CountFunction::bipartite_count(2, 1, 2, k6.clone()).unwrap(),
            PatternSpec::CliqueMinus(5),
        ),
    ];
    for (f, pat) in cases {
        for &x in copies(pat.clone(), &k6).members() {
            assert!(
                induced_circuit_check(&f, x).unwrap(),
                "{pat:?} copy {x:?} not a circuit of {f:?}"
            );
        }
    }
    // K_{3,4} copies are circuits of g(2,1,2) on K7
    let k7 = complete(7);
    let g212 = CountFunction::bipartite_count(2, 1, 2, k7.clone()).unwrap();
    for &x in copies(PatternSpec::Biclique(3, 4), &k7).members().iter().take(20) {
        assert!(induced_circuit_check(&g212, x).unwrap());
    }
    // K_{2,3} copies are circuits of the bipartite vertex count
    let k34 = bipartite(3, 4);
    let f10 = CountFunction::vertex_count(1, 0, k34.clone()).unwrap();
    for &x in copies(PatternSpec::Biclique(2, 3), &k34).members() {
        assert!(induced_circuit_check(&f10, x).unwrap());
    }
    // rooted K_{k+1,2} copies are circuits of picture lifting
    for k in [1i64, 2] {
        let k33 = bipartite(3, 3);
        let h = CountFunction::picture_lifting(k, k33.clone()).unwrap();
        for &x in rooted_copies(k as usize + 1, 2, &k33).unwrap().members() {
            assert!(induced_circuit_check(&h, x).unwrap());
        }
    }
}

#[test]
fn circuit_check_rejects_independent_sets() {
    let k4 = complete(4);
    let f23 = CountFunction::vertex_count(2, 3, k4.clone()).unwrap();
    assert!(!induced_circuit_check(&f23, k4.ground().full_set().without(0)).unwrap());
    assert!(!induced_circuit_check(&f23, ElementSet::empty()).unwrap());
}

#[test]
fn flat_characterisation_examples() {
    let k4 = complete(4);
    let f11 = CountFunction::vertex_count(1, 1, k4.clone()).unwrap();
    let triangle = edge_set(&k4, &[(0, 1), (0, 2), (1, 2)]);
    assert!(induced_flat_check(&f11, triangle));

    let k3 = complete(3);
    let f11_3 = CountFunction::vertex_count(1, 1, k3.clone()).unwrap();
    let two = edge_set(&k3, &[(0, 1), (0, 2)]);
    assert!(!induced_flat_check(&f11_3, two));

    // complete bipartite edge sets are flats of the even-cycle counts
    let k6 = complete(6);
    let g110 = CountFunction::bipartite_count(1, 1, 0, k6.clone()).unwrap();
    let k23_inside = edge_set(&k6, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
    assert!(induced_flat_check(&g110, k23_inside));
}

#[test]
fn connected_flats_of_vertex_counts_induce_complete_subgraphs() {
    // exhaustive on K5 for the (2,3) count: every connected flat spans a
    // clique and carries more than a|V|-b edges
    let k5 = complete(5);
    let f = CountFunction::vertex_count(2, 3, k5.clone()).unwrap();
    let m = explicit(&induced_matroid(&f));
    for flat in m.flats(1 << 20).unwrap() {
        if flat.is_empty() || !m.is_connected_set(flat, u64::MAX).unwrap() {
            continue;
        }
        if flat.len() == 1 {
            continue;
        }
        let vmask = k5.vertices_of(flat);
        let verts: Vec<usize> = (0..5).filter(|&v| vmask >> v & 1 == 1).collect();
        assert_eq!(flat, k5.edges_within(&verts), "flat is vertex-induced");
        assert!(flat.len() as i64 >= 2 * verts.len() as i64 - 3 + 1);
    }
}

#[test]
fn connected_flats_of_bipartite_counts_are_cliques_or_bicliques() {
    let k5 = complete(5);
    let g = CountFunction::bipartite_count(1, 1, 0, k5.clone()).unwrap();
    let m = explicit(&induced_matroid(&g));
    for flat in m.flats(1 << 20).unwrap() {
        if flat.len() < 2 || !m.is_connected_set(flat, u64::MAX).unwrap() {
            continue;
        }
        let vmask = k5.vertices_of(flat);
        let verts: Vec<usize> = (0..5).filter(|&v| vmask >> v & 1 == 1).collect();
        let complete_edges = k5.edges_within(&verts);
        let is_clique = flat == complete_edges;
        let is_biclique = {
            // some bipartition of the incident vertices realises the flat
            let k = verts.len();
            let host = &k5;
            (1..(1u32 << k) / 2 + 1).any(|pick| {
                let a: Vec<usize> = (0..k).filter(|&i| pick >> i & 1 == 1).map(|i| verts[i]).collect();
                let b: Vec<usize> = (0..k).filter(|&i| pick >> i & 1 == 0).map(|i| verts[i]).collect();
                !a.is_empty()
                    && !b.is_empty()
                    && flat
                        == ElementSet::from_ids(a.iter().flat_map(|&x| {
                            b.iter().filter_map(move |&y| host.edge_id(x, y))
                        }))
            })
        };
        assert!(is_clique || is_biclique, "flat {flat:?} is neither");
    }
}

#[test]
fn negative_c_allows_disconnected_circuits() {
    // two vertex-disjoint 4-cycles form a circuit of g(1,1,-1) on K8
    let k8 = complete(8);
    let g = CountFunction::bipartite_count(1, 1, -1, k8.clone()).unwrap();
    let two_c4 = edge_set(
        &k8,
        &[(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)],
    );
    assert!(induced_circuit_check(&g, two_c4).unwrap());
    // and it is a connected flat of the induced matroid
    let m = induced_matroid(&g);
    assert!(m.is_connected_set(two_c4, u64::MAX).unwrap());
    assert_eq!(m.closure(two_c4), two_c4);
}

#[test]
fn induced_basis_is_independent_and_maximal() {
    let k5 = complete(5);
    let g212 = CountFunction::bipartite_count(2, 1, 2, k5.clone()).unwrap();
    let full = k5.ground().full_set();
    let b = induced_basis(&g212, full).unwrap();
    assert_eq!(b.len(), induced_rank(&g212, full).unwrap());
    let (ok, _) = induced_independent(&g212, b).unwrap();
    assert!(ok);
}
