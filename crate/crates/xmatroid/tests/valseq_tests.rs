//! The sequence engine: val evaluation and minimisation, certificates,
//! weakly saturated sequences, submodularity scans and the matroid built
//! from a submodular val function.

mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xmatroid::bits::ElementSet;
use xmatroid::counts::{induced_matroid, CountFunction};
use xmatroid::graphs::{build_uniform_matroid, CopyFamily, HostGraph, PatternSpec};
use xmatroid::matroid::Matroid;
use xmatroid::valseq::*;
use xmatroid::weaksat::{construct_weak_sat, expected_base_size, WeakSatKind};
use xmatroid::Error;

#[test]
fn eval_val_examples() {
    let k4 = complete(4);
    let tri = copies(PatternSpec::Clique(3), &k4);
    let full = k4.ground().full_set();

    // empty sequence: val is the set size
    assert_eq!(eval_val(&tri, full, &ProperSequence::empty()).unwrap(), 6);

    // three triangles cover all six edges; the fourth is contained in the
    // union, so the longest proper sequence has length three
    let res = compute_val(&tri, full, None, 1 << 20).unwrap();
    assert_eq!(res.value, 3);
    assert_eq!(res.sequence.len(), 3);
    let seq4 = ProperSequence {
        member_indices: vec![0, 1, 2, 3],
    };
    assert!(matches!(
        eval_val(&tri, full, &seq4),
        Err(Error::ImproperSequence { index: 3 })
    ));
}

#[test]
fn compute_val_examples() {
    let k5 = complete(5);
    let tri5 = copies(PatternSpec::Clique(3), &k5);
    let full5 = k5.ground().full_set();
    let res = compute_val(&tri5, full5, None, 1 << 22).unwrap();
    assert_eq!(res.value, 4);
    assert!(res.exact);
    verify_certificate(&tri5, &res.witness).unwrap();

    let k4 = complete(4);
    let k4fam = copies(PatternSpec::Clique(4), &k4);
    let full4 = k4.ground().full_set();
    assert_eq!(compute_val(&k4fam, full4, None, 1 << 20).unwrap().value, 5);

    let c4fam = copies(PatternSpec::Cycle(4), &k4);
    assert_eq!(compute_val(&c4fam, full4, None, 1 << 20).unwrap().value, 4);
}

#[test]
fn lower_bound_oracle_prunes_without_changing_the_value() {
    let k5 = complete(5);
    let tri = copies(PatternSpec::Clique(3), &k5);
    let g = graphic(&k5);
    let full = k5.ground().full_set();
    let with_oracle = compute_val(&tri, full, Some(&g), 1 << 22).unwrap();
    let without = compute_val(&tri, full, None, 1 << 22).unwrap();
    assert_eq!(with_oracle.value, without.value);
    assert!(with_oracle.exact);
    assert!(with_oracle.stats.states <= without.stats.states);
}

#[test]
fn budget_exhaustion_is_flagged_inexact() {
    let k5 = complete(5);
    let tri = copies(PatternSpec::Clique(3), &k5);
    let full = k5.ground().full_set();
    let res = compute_val(&tri, full, None, 8).unwrap();
    assert!(!res.exact);
    // still a sound upper bound
    assert!(res.value >= 4);
    verify_certificate(&tri, &res.witness).unwrap();
}

#[test]
fn certificates_round_trip_and_reject_tampering() {
    let k5 = complete(5);
    let tri = copies(PatternSpec::Clique(3), &k5);
    let res = compute_val(&tri, k5.ground().full_set(), None, 1 << 22).unwrap();
    let mut cert = res.witness.clone();
    verify_certificate(&tri, &cert).unwrap();
    cert.value -= 1;
    assert!(verify_certificate(&tri, &cert).is_err());
    let mut cert2 = res.witness.clone();
    cert2.sequence.push(vec![0, 1, 2]);
    assert!(verify_certificate(&tri, &cert2).is_err());
    let mut cert3 = res.witness;
    cert3.family_hash = "0".repeat(64);
    assert!(verify_certificate(&tri, &cert3).is_err());
}

#[test]
fn certificate_soundness_fuzz() {
    // rank(F) <= val(F, S) for every proper sequence over the fixture pairs,
    // plus the equality side conditions when the bound is tight
    let mut rng = ChaCha8Rng::seed_from_u64(314);
    let k5 = complete(5);
    let pairs: Vec<(CopyFamily, Matroid)> = vec![
        (copies(PatternSpec::Clique(3), &k5), graphic(&k5)),
        (copies(PatternSpec::Clique(4), &k5), laman(&k5)),
        (copies(PatternSpec::CliqueMinus(4), &k5), bicircular(&k5)),
        (copies(PatternSpec::Cycle(4), &k5), even_cycle(&k5)),
    ];
    for (family, m) in &pairs {
        let full = family.host().ground().full_set();
        for _ in 0..300 {
            let f = ElementSet(rng.gen::<u64>() & full.0);
            let seq = random_proper_sequence(family, rng.gen_range(0..6), &mut rng);
            let v = eval_val(family, f, &seq).unwrap();
            let r = m.rank(f) as i64;
            assert!(r <= v, "rank {r} exceeds val {v} at {f:?}");
            if r == v {
                let union = sequence_union(family, &seq).unwrap();
                assert!(equality_side_conditions_hold(m, f, union));
            }
        }
    }
}

#[test]
fn weakly_saturated_validation_examples() {
    let k4 = complete(4);
    let tri = copies(PatternSpec::Clique(3), &k4);
    // star at vertex 0, then each triangle adds one missing edge
    let base = ElementSet::from_ids([
        k4.edge_id(0, 1).unwrap(),
        k4.edge_id(0, 2).unwrap(),
        k4.edge_id(0, 3).unwrap(),
    ]);
    let find = |a: usize, b: usize| -> usize {
        let t = ElementSet::from_ids([
            k4.edge_id(0, a).unwrap(),
            k4.edge_id(0, b).unwrap(),
            k4.edge_id(a, b).unwrap(),
        ]);
        tri.members().iter().position(|&m| m == t).unwrap()
    };
    let w = WeakSatSequence {
        base: base.to_ids(),
        steps: vec![find(1, 2), find(1, 3), find(2, 3)],
    };
    let built = is_weakly_saturated(&tri, &w).unwrap();
    assert_eq!(built, k4.ground().full_set());

    // empty step list constructs the base
    let w0 = WeakSatSequence {
        base: base.to_ids(),
        steps: vec![],
    };
    assert_eq!(is_weakly_saturated(&tri, &w0).unwrap(), base);

    // a step adding two new elements fails at its index
    let w2 = WeakSatSequence {
        base: vec![k4.edge_id(0, 1).unwrap()],
        steps: vec![find(2, 3)],
    };
    assert!(matches!(
        is_weakly_saturated(&tri, &w2),
        Err(Error::NotWeaklySaturated { index: 0, added }) if added >= 2
    ));
}

#[test]
fn search_finds_sequences_when_they_exist() {
    // near-clique family on K5 from a 5-edge start of the right count value
    let k5 = complete(5);
    let fam = copies(PatternSpec::CliqueMinus(4), &k5);
    let f10 = CountFunction::vertex_count(1, 0, k5.clone()).unwrap();
    // spanning start: star at vertex 0 plus one more edge
    let base = ElementSet::from_ids([
        k5.edge_id(0, 1).unwrap(),
        k5.edge_id(0, 2).unwrap(),
        k5.edge_id(0, 3).unwrap(),
        k5.edge_id(0, 4).unwrap(),
        k5.edge_id(1, 2).unwrap(),
    ]);
    assert_eq!(f10.eval(k5.ground().full_set()), 5);
    let target = k5.ground().full_set();
    let seq = search_weak_sat(&fam, base, target, 1 << 22).unwrap().unwrap();
    assert_eq!(is_weakly_saturated(&fam, &seq).unwrap(), target);

    // base equal to the target needs no steps
    let seq0 = search_weak_sat(&fam, target, target, 1 << 10).unwrap().unwrap();
    assert!(seq0.steps.is_empty());
}

#[test]
fn five_cycle_starts_are_dead_ends_for_near_cliques() {
    // a 5-cycle has the right size but no first step exists: every copy of
    // the near-clique needs two chords, so the exhaustive search refutes it
    let k5 = complete(5);
    let fam = copies(PatternSpec::CliqueMinus(4), &k5);
    let cycle = ElementSet::from_ids([
        k5.edge_id(0, 1).unwrap(),
        k5.edge_id(1, 2).unwrap(),
        k5.edge_id(2, 3).unwrap(),
        k5.edge_id(3, 4).unwrap(),
        k5.edge_id(0, 4).unwrap(),
    ]);
    let res = search_weak_sat(&fam, cycle, k5.ground().full_set(), 1 << 22).unwrap();
    assert!(res.is_none());
}

#[test]
fn named_constructions_validate_with_stated_start_sizes() {
    let kinds = vec![
        WeakSatKind::Matchings { k: 2, n: 5 },
        WeakSatKind::Paths { k: 3, n: 5 },
        WeakSatKind::Cliques { d: 1, m: 5 },
        WeakSatKind::Cliques { d: 2, m: 5 },
        WeakSatKind::CycleComplete { m: 4 },
        WeakSatKind::CycleComplete { m: 5 },
        WeakSatKind::CycleBipartite { s: 2, t: 3 },
        WeakSatKind::K5MinusComplete { m: 5 },
        WeakSatKind::K5MinusComplete { m: 6 },
        WeakSatKind::K34Bipartite { s: 3, t: 4 },
        WeakSatKind::K23Bipartite { s: 2, t: 3 },
        WeakSatKind::K23Bipartite { s: 3, t: 4 },
        WeakSatKind::RootedK2 { k: 2, m: 3, n: 3 },
    ];
    for kind in kinds {
        let c = construct_weak_sat(kind).unwrap();
        assert_eq!(
            c.sequence.base_set().len(),
            expected_base_size(kind),
            "base size for {kind:?}"
        );
        let built = is_weakly_saturated(&c.family, &c.sequence).unwrap();
        assert_eq!(built, c.target, "construction for {kind:?}");
    }
}

#[test]
fn rooted_k32_start_has_seven_edges() {
    let kind = WeakSatKind::RootedK2 { k: 2, m: 3, n: 3 };
    assert_eq!(expected_base_size(kind), 3 + 2 * 3 - 2);
}

#[test]
fn submodularity_scans_are_clean_for_count_families() {
    let k5 = complete(5);
    for pat in [PatternSpec::Clique(3), PatternSpec::Clique(4)] {
        let fam = copies(pat, &k5);
        let v = val_submodularity_scan(&fam, ScanMode::Exhaustive, 1 << 22).unwrap();
        assert!(v.is_empty());
    }
    // single-member family behaves modularly
    let host = HostGraph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
    let single = CopyFamily::from_members(
        host,
        vec![ElementSet::from_ids([0, 1, 2])],
        vec![],
    );
    let v = val_submodularity_scan(&single, ScanMode::Exhaustive, 1 << 20).unwrap();
    assert!(v.is_empty());
    // sampled mode agrees
    let fam = copies(PatternSpec::Cycle(4), &k5);
    let v = val_submodularity_scan(
        &fam,
        ScanMode::Sampled { samples: 3000, seed: 11 },
        1 << 22,
    )
    .unwrap();
    assert!(v.is_empty());
}

#[test]
fn val_matroid_matches_count_matroids() {
    let k4 = complete(4);
    let tri = copies(PatternSpec::Clique(3), &k4);
    let m = build_val_matroid(&tri, 1 << 20).unwrap();
    assert!(m.same_matroid(&explicit(&graphic(&k4))).unwrap());

    let c4 = copies(PatternSpec::Cycle(4), &k4);
    let m = build_val_matroid(&c4, 1 << 20).unwrap();
    assert!(m.same_matroid(&explicit(&even_cycle(&k4))).unwrap());

    // all 3-subsets of a 5-element ground give the rank-2 uniform matroid
    let host = HostGraph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
    let all3 = CopyFamily::from_members(
        host,
        xmatroid::bits::k_subsets_of(ElementSet::full(5), 3),
        vec![],
    );
    let m = build_val_matroid(&all3, 1 << 20).unwrap();
    assert!(m.same_matroid(&Matroid::uniform(5, 2).unwrap()).unwrap());
}

#[test]
fn val_is_monotone_under_family_growth() {
    let k5 = complete(5);
    let tri = copies(PatternSpec::Clique(3), &k5);
    let sub = CopyFamily::from_members(
        k5.clone(),
        tri.members()[..4].to_vec(),
        vec![PatternSpec::Clique(3)],
    );
    let e_sub = ValEngine::build(&sub, 1 << 22);
    let e_all = ValEngine::build(&tri, 1 << 22);
    for mask in (0u64..(1 << 10)).step_by(7) {
        let f = ElementSet(mask);
        assert!(e_all.val(f) <= e_sub.val(f));
        assert!(e_all.val(f) <= f.len() as i64);
    }
}

#[test]
fn certify_connected_flats_fixtures() {
    // graphic K5 with triangles: every connected flat certifies
    let k5 = complete(5);
    let tri = copies(PatternSpec::Clique(3), &k5);
    let g = explicit(&graphic(&k5));
    let out = certify_connected_flats(&g, &tri, 1 << 20, 1 << 22).unwrap();
    assert!(out.success(), "failures: {:?}", out.failures);
    for cert in &out.certificates {
        verify_certificate(&tri, cert).unwrap();
        assert_eq!(cert.value, g.rank(cert.target_set()) as i64);
    }

    // bicircular counts on K_{3,4} with K_{2,3} copies
    let k34 = bipartite(3, 4);
    let fam = copies(PatternSpec::Biclique(2, 3), &k34);
    let m = explicit(&bicircular(&k34));
    let out = certify_connected_flats(&m, &fam, 1 << 20, 1 << 22).unwrap();
    assert!(out.success(), "failures: {:?}", out.failures);

    // even cycle matroid on K5 with 4-cycles
    let c4 = copies(PatternSpec::Cycle(4), &k5);
    let ec = explicit(&even_cycle(&k5));
    let out = certify_connected_flats(&ec, &c4, 1 << 20, 1 << 22).unwrap();
    assert!(out.success(), "failures: {:?}", out.failures);
}

#[test]
fn certify_rejects_loops() {
    let loopy = Matroid::explicit(
        xmatroid::GroundSet::plain(3).unwrap(),
        1,
        vec![ElementSet::singleton(0)],
    )
    .unwrap();
    let host = HostGraph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let fam = CopyFamily::from_members(host, vec![ElementSet::from_ids([0, 1])], vec![]);
    assert!(certify_connected_flats(&loopy, &fam, 1 << 10, 1 << 10).is_err());
}

#[test]
fn val_table_matches_engine() {
    let k4 = complete(4);
    let tri = copies(PatternSpec::Clique(3), &k4);
    let table = val_table(&tri, 1 << 20).unwrap();
    let engine = ValEngine::build(&tri, 1 << 20);
    for mask in 0u64..(1 << 6) {
        assert_eq!(table[mask as usize], engine.val(ElementSet(mask)));
    }
}
