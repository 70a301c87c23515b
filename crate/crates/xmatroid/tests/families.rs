//! Copy enumeration, union stability and the uniform matroid of a family.

mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xmatroid::bits::{binomial, ElementSet};
use xmatroid::graphs::{
    build_uniform_matroid, enumerate_copies, is_union_stable, rooted_copies,
    union_stable_closure, CopyFamily, HostGraph, PatternSpec,
};
use xmatroid::matroid::{verify_matroid_axioms, Matroid};
use xmatroid::Error;

#[test]
fn enumeration_counts() {
    let k4 = complete(4);
    let k5 = complete(5);
    assert_eq!(copies(PatternSpec::Clique(3), &k4).len(), 4);
    assert_eq!(copies(PatternSpec::Cycle(5), &k5).len(), 12);
    assert_eq!(copies(PatternSpec::Biclique(2, 3), &k5).len(), 10);
    assert_eq!(copies(PatternSpec::Cycle(4), &k4).len(), 3);
    assert_eq!(copies(PatternSpec::CliqueMinus(4), &k5).len(), 30);
    assert_eq!(copies(PatternSpec::Matching(2), &k5).len(), 15);
    assert_eq!(copies(PatternSpec::Path(3), &k4).len(), 12);
    assert_eq!(copies(PatternSpec::Star(3), &k5).len(), 20);
    // labeled 5-cycles in K8: C(8,5) * 4!/2
    let k8 = complete(8);
    assert_eq!(copies(PatternSpec::Cycle(5), &k8).len(), 672);
}

#[test]
fn members_are_distinct_and_look_like_the_pattern() {
    let k6 = complete(6);
    for (pat, size, degsorted) in [
        (PatternSpec::Clique(4), 6, vec![3, 3, 3, 3]),
        (PatternSpec::Cycle(5), 5, vec![2, 2, 2, 2, 2]),
        (PatternSpec::Biclique(2, 3), 6, vec![2, 2, 2, 3, 3]),
        (PatternSpec::Star(4), 4, vec![1, 1, 1, 1, 4]),
    ] {
        let fam = copies(pat, &k6);
        let mut seen = std::collections::HashSet::new();
        for &m in fam.members() {
            assert!(seen.insert(m.0), "duplicate member");
            assert_eq!(m.len(), size);
            let vmask = k6.vertices_of(m);
            let mut degs: Vec<usize> = (0..6)
                .filter(|&v| vmask >> v & 1 == 1)
                .map(|v| k6.degree_in(m, v))
                .collect();
            degs.sort();
            assert_eq!(degs, degsorted);
        }
    }
}

#[test]
fn explicit_pattern_matches_specialized_enumerator() {
    let k5 = complete(5);
    // C4 as an explicit pattern graph
    let c4 = PatternSpec::Explicit {
        n: 4,
        edges: vec![(0, 1), (1, 2), (2, 3), (3, 0)],
    };
    let generic = copies(c4, &k5);
    let special = copies(PatternSpec::Cycle(4), &k5);
    assert_eq!(generic.members(), special.members());
}

#[test]
fn rooted_copy_counts() {
    let k33 = bipartite(3, 3);
    assert_eq!(rooted_copies(3, 2, &k33).unwrap().len(), 3);
    let k22 = bipartite(2, 2);
    assert_eq!(rooted_copies(2, 2, &k22).unwrap().len(), 1);
    // unrooted K_{3,2} in K_{3,3} counts both orientations
    let unrooted = copies(PatternSpec::Biclique(3, 2), &k33);
    assert_eq!(unrooted.len(), 6);
    assert!(rooted_copies(4, 2, &k33).is_err());
}

#[test]
fn union_stability_examples() {
    let k5 = complete(5);
    let c5 = copies(PatternSpec::Cycle(5), &k5);
    assert!(is_union_stable(&c5).unwrap().0);

    let stars = copies(PatternSpec::Star(3), &complete(6));
    assert!(is_union_stable(&stars).unwrap().0);

    let k4s = copies(PatternSpec::Clique(4), &k5);
    assert!(is_union_stable(&k4s).unwrap().0);

    // abstract 3-uniform family that is not union-stable
    let host = HostGraph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
    let fam = CopyFamily::from_members(
        host,
        vec![
            ElementSet::from_ids([0, 1, 2]),
            ElementSet::from_ids([0, 2, 3]),
        ],
        vec![],
    );
    let (stable, witness) = is_union_stable(&fam).unwrap();
    assert!(!stable);
    assert!(witness.is_some());
}

#[test]
fn union_stable_closure_examples() {
    let k5 = complete(5);
    let c5 = copies(PatternSpec::Cycle(5), &k5);
    let closed = union_stable_closure(&c5).unwrap();
    assert_eq!(closed.members(), c5.members());

    let host = HostGraph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
    let fam = CopyFamily::from_members(
        host,
        vec![
            ElementSet::from_ids([0, 1, 2]),
            ElementSet::from_ids([0, 2, 3]),
        ],
        vec![],
    );
    let closed = union_stable_closure(&fam).unwrap();
    let expect: Vec<ElementSet> = vec![
        ElementSet::from_ids([0, 1, 2]),
        ElementSet::from_ids([0, 1, 3]),
        ElementSet::from_ids([0, 2, 3]),
        ElementSet::from_ids([1, 2, 3]),
    ];
    assert_eq!(closed.members(), &expect[..]);
    assert!(is_union_stable(&closed).unwrap().0);
    // idempotent
    assert_eq!(union_stable_closure(&closed).unwrap().members(), closed.members());
}

#[test]
fn closure_is_minimal() {
    // removing any added member breaks stability
    let host = HostGraph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
    let original = vec![
        ElementSet::from_ids([0, 1, 2]),
        ElementSet::from_ids([0, 2, 3]),
    ];
    let fam = CopyFamily::from_members(host.clone(), original.clone(), vec![]);
    let closed = union_stable_closure(&fam).unwrap();
    for &added in closed.members().iter().filter(|m| !original.contains(m)) {
        let without: Vec<ElementSet> = closed
            .members()
            .iter()
            .copied()
            .filter(|&m| m != added)
            .collect();
        let sub = CopyFamily::from_members(host.clone(), without, vec![]);
        assert!(!is_union_stable(&sub).unwrap().0);
    }
}

#[test]
fn uniform_matroid_examples() {
    let k5 = complete(5);
    let c5 = copies(PatternSpec::Cycle(5), &k5);
    let u = build_uniform_matroid(&c5).unwrap();
    assert_eq!(u.rank_full(), 5);
    // base count: C(10,5) - 12 five-cycles
    let mut bases = 0u64;
    xmatroid::bits::for_each_k_subset(k5.ground().full_set(), 5, |s| {
        if u.is_independent(s) {
            bases += 1;
        }
    });
    assert_eq!(bases, binomial(10, 5) - 12);

    // every member is a circuit, and the matroid is cyclic on members
    for &m in c5.members() {
        assert_eq!(u.rank(m), 4);
        assert!(m.iter().all(|e| u.is_independent(m.without(e))));
        assert!(u.is_cyclic_set(m));
    }

    // all k-subsets dependent collapses to the uniform matroid of rank k-1
    let host = HostGraph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
    let all3: Vec<ElementSet> = xmatroid::bits::k_subsets_of(ElementSet::full(5), 3);
    let fam = CopyFamily::from_members(host, all3, vec![]);
    let u2 = build_uniform_matroid(&fam).unwrap();
    assert!(u2.same_matroid(&Matroid::uniform(5, 2).unwrap()).unwrap());
}

#[test]
fn k23_on_k7_has_rank_six() {
    let k7 = complete(7);
    let fam = copies(PatternSpec::Biclique(2, 3), &k7);
    assert_eq!(fam.len(), 210);
    let u = build_uniform_matroid(&fam).unwrap();
    assert_eq!(u.rank_full(), 6);
}

#[test]
fn non_union_stable_family_rejected_with_witness() {
    let host = HostGraph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
    let fam = CopyFamily::from_members(
        host,
        vec![
            ElementSet::from_ids([0, 1, 2]),
            ElementSet::from_ids([0, 2, 3]),
        ],
        vec![],
    );
    match build_uniform_matroid(&fam) {
        Err(Error::NotUnionStable { x1, x2, e }) => {
            assert!(x1.contains(e) && x2.contains(e));
        }
        other => panic!("expected NotUnionStable, got {other:?}"),
    }
}

#[test]
fn empty_family_is_ambiguous() {
    let host = complete(3);
    let fam = CopyFamily::from_members(host, vec![], vec![]);
    assert!(matches!(build_uniform_matroid(&fam), Err(Error::EmptyFamily)));
}

#[test]
fn uniform_matroid_exists_iff_union_stable() {
    // random 3-uniform families over at most 8 elements: construction
    // succeeds exactly when stable, and success implies the axioms hold
    let mut rng = ChaCha8Rng::seed_from_u64(97);
    let host = complete(4); // 6 edges in the ground
    let ground = host.ground().full_set();
    let all3 = xmatroid::bits::k_subsets_of(ground, 3);
    for _ in 0..200 {
        let count = rng.gen_range(1..=5);
        let mut members = Vec::new();
        for _ in 0..count {
            members.push(all3[rng.gen_range(0..all3.len())]);
        }
        let fam = CopyFamily::from_members(host.clone(), members, vec![]);
        let (stable, _) = is_union_stable(&fam).unwrap();
        let built = build_uniform_matroid(&fam);
        assert_eq!(stable, built.is_ok());
        // the raw uniform system satisfies the axioms iff stable
        let indep = |s: ElementSet| s.len() <= 3 && !fam.contains_member(s);
        let ok = verify_matroid_axioms(6, indep, u64::MAX).unwrap().is_none();
        assert_eq!(ok, stable);
    }
}

#[test]
fn uncovered_edges_are_dropped() {
    // a single triangle in K4: the family covers 3 of 6 edges
    let k4 = complete(4);
    let tri = ElementSet::from_ids([
        k4.edge_id(0, 1).unwrap(),
        k4.edge_id(0, 2).unwrap(),
        k4.edge_id(1, 2).unwrap(),
    ]);
    let fam = CopyFamily::from_members(k4, vec![tri], vec![]);
    let u = build_uniform_matroid(&fam).unwrap();
    assert_eq!(u.ground_size(), 3);
    assert_eq!(u.rank_full(), 2);
}

#[test]
fn mixed_families_keep_sizes() {
    let k6 = complete(6);
    let k4s = copies(PatternSpec::Clique(4), &k6);
    let k33s = copies(PatternSpec::Biclique(3, 3), &k6);
    let mix = k4s.merged_with(&k33s).unwrap();
    assert_eq!(mix.len(), 25);
    assert_eq!(mix.uniform_size(), None);
    assert!(matches!(
        is_union_stable(&mix),
        Err(Error::NonUniformFamily(6, 9))
    ));
    // the 6-uniform pair {K4, K_{2,3}} stays uniform
    let k23s = copies(PatternSpec::Biclique(2, 3), &k6);
    let mix6 = k4s.merged_with(&k23s).unwrap();
    assert_eq!(mix6.uniform_size(), Some(6));
}
