//! Erections against the brute-force oracle: equivalence with the
//! weak-order maximum, truncate-back identity, preserved circuits,
//! elevation chains and symmetry preservation.

mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xmatroid::bits::{for_each_k_subset, k_subsets_of, ElementSet};
use xmatroid::checks::symmetry_check;
use xmatroid::erection::{
    enumerate_erections, free_elevation, free_erection, is_erection_of, ErectionBudget,
    ErectionResult,
};
use xmatroid::graphs::{build_uniform_matroid, PatternSpec};
use xmatroid::ground::GroundSet;
use xmatroid::matroid::{CircuitSet, Matroid, Relation};

fn budget() -> ErectionBudget {
    ErectionBudget::default()
}

/// The unique weak-order maximum of an erection list.
fn oracle_maximum(all: &[ErectionResult]) -> Matroid {
    let mut max: Option<&Matroid> = None;
    for cand in all {
        let dominates = all.iter().all(|other| {
            matches!(
                cand.matroid
                    .weak_order_compare(&other.matroid, u64::MAX)
                    .unwrap()
                    .relation,
                Relation::Equal | Relation::StrictlyAbove
            )
        });
        if dominates {
            assert!(max.is_none(), "two distinct maxima in the erection poset");
            max = Some(&cand.matroid);
        }
    }
    max.expect("erection lattice has a maximum").clone()
}

#[test]
fn named_fixture_equivalence() {
    // U_1(3), graphic K4, the uniform 4-cycle matroid on K4
    let u1 = Matroid::uniform(3, 1).unwrap();
    let k4 = complete(4);
    let g4 = explicit(&graphic(&k4));
    let c4 = copies(PatternSpec::Cycle(4), &k4);
    let u_c4 = build_uniform_matroid(&c4).unwrap();
    for m in [u1, g4, u_c4] {
        let all = enumerate_erections(&m, 63).unwrap();
        let maximum = oracle_maximum(&all);
        let fe = free_erection(&m, &budget()).unwrap();
        assert!(fe.matroid.same_matroid(&maximum).unwrap());
        if !fe.trivial {
            assert!(fe.matroid.truncate().unwrap().same_matroid(&m).unwrap());
        }
    }
}

#[test]
fn graphic_k4_has_only_the_trivial_erection() {
    // the would-be erection with independent 4-cycles fails augmentation
    // (star {01,02,03} cannot extend into the cycle {01,12,23,03}), so the
    // oracle finds exactly one erection and the free erection is trivial
    let k4 = complete(4);
    let g4 = explicit(&graphic(&k4));
    let all = enumerate_erections(&g4, 63).unwrap();
    assert_eq!(all.len(), 1);
    assert!(all[0].trivial);
    let fe = free_erection(&g4, &budget()).unwrap();
    assert!(fe.trivial);
}

#[test]
fn random_fixture_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(20260809);
    let mut tested = 0;
    let mut attempts = 0;
    while tested < 20 && attempts < 400 {
        attempts += 1;
        let m = if attempts % 2 == 0 {
            match random_sparse_paving(&mut rng) {
                Some(m) => m,
                None => continue,
            }
        } else {
            random_binary_linear(&mut rng)
        };
        if count_free_sets(&m) > 16 {
            continue;
        }
        let all = enumerate_erections(&m, 63).unwrap();
        let maximum = oracle_maximum(&all);
        let fe = free_erection(&m, &budget()).unwrap();
        assert!(
            fe.matroid.same_matroid(&maximum).unwrap(),
            "fixture {tested}: free erection differs from the oracle maximum"
        );
        if !fe.trivial {
            assert!(fe.matroid.truncate().unwrap().same_matroid(&m).unwrap());
        }
        tested += 1;
    }
    assert_eq!(tested, 20, "fixture generation starved");
}

fn random_sparse_paving(rng: &mut ChaCha8Rng) -> Option<Matroid> {
    let n = rng.gen_range(5..=9);
    let r = rng.gen_range(2..=4.min(n - 2));
    let cand = k_subsets_of(ElementSet::full(n), r);
    let mut members: Vec<ElementSet> = Vec::new();
    for _ in 0..rng.gen_range(1..=6) {
        let c = cand[rng.gen_range(0..cand.len())];
        if members.iter().all(|m| m.intersection(c).len() + 2 <= r) {
            members.push(c);
        }
    }
    if members.is_empty() {
        return None;
    }
    let member_hash: std::collections::HashSet<u64> = members.iter().map(|m| m.0).collect();
    let mut circuits = members.clone();
    for_each_k_subset(ElementSet::full(n), r + 1, |s| {
        if !s.iter().any(|e| member_hash.contains(&s.without(e).0)) {
            circuits.push(s);
        }
    });
    Matroid::explicit(GroundSet::plain(n).unwrap(), r, circuits).ok()
}

fn random_binary_linear(rng: &mut ChaCha8Rng) -> Matroid {
    let n = rng.gen_range(5..=9);
    let r = rng.gen_range(2..=4);
    let cols: Vec<u32> = (0..n).map(|_| rng.gen_range(1..(1u32 << r))).collect();
    let rank_of = move |s: ElementSet| -> usize {
        let mut basis: Vec<u32> = Vec::new();
        for e in s.iter() {
            let mut v = cols[e];
            for &b in &basis {
                let hb = 31 - b.leading_zeros();
                if v >> hb & 1 == 1 {
                    v ^= b;
                }
            }
            if v != 0 {
                basis.push(v);
                basis.sort_by_key(|x| std::cmp::Reverse(*x));
            }
        }
        basis.len()
    };
    Matroid::from_oracle(GroundSet::plain(n).unwrap(), std::sync::Arc::new(rank_of))
        .to_explicit(u64::MAX)
        .unwrap()
}

fn count_free_sets(m: &Matroid) -> usize {
    let r = m.rank_full();
    let n = m.ground_size();
    if r + 1 > n {
        return 0;
    }
    let smalls = CircuitSet::new(
        m.circuit_set()
            .unwrap()
            .iter()
            .filter(|c| c.len() <= r)
            .collect(),
    );
    let mut cnt = 0;
    for_each_k_subset(ElementSet::full(n), r + 1, |d| {
        if !smalls.contains_circuit_within(d) {
            cnt += 1;
        }
    });
    cnt
}

#[test]
fn erection_relation_examples() {
    let u2 = Matroid::uniform(3, 2).unwrap();
    let u1 = Matroid::uniform(3, 1).unwrap();
    assert!(is_erection_of(&u2, &u1).unwrap());
    assert!(is_erection_of(&u1, &u1).unwrap());

    let k4 = complete(4);
    let g4 = explicit(&graphic(&k4));
    let m23 = explicit(&laman(&k4));
    assert!(!is_erection_of(&m23, &g4).unwrap());
}

#[test]
fn non_spanning_circuits_survive_erection() {
    // parallel pair stays a circuit through the erection
    let ground = GroundSet::plain(4).unwrap();
    let parallel = Matroid::explicit(
        ground,
        2,
        vec![
            ElementSet::from_ids([0, 1]),
            ElementSet::from_ids([0, 2, 3]),
            ElementSet::from_ids([1, 2, 3]),
        ],
    )
    .unwrap();
    let fe = free_erection(&parallel, &budget()).unwrap();
    assert!(!fe.trivial);
    let circuits = fe.matroid.circuits_up_to(2, u64::MAX).unwrap();
    assert_eq!(circuits, vec![ElementSet::from_ids([0, 1])]);
    assert!(fe.matroid.truncate().unwrap().same_matroid(&parallel).unwrap());
}

#[test]
fn elevation_chains() {
    // rank grows by one per stage up to the free matroid
    let u1 = Matroid::uniform(4, 1).unwrap();
    let chain = free_elevation(&u1, None, &budget()).unwrap();
    let ranks: Vec<usize> = chain.stages.iter().map(|m| m.rank_full()).collect();
    assert_eq!(ranks, vec![1, 2, 3, 4]);
    assert!(!chain.aborted_at_cap);
    for w in chain.stages.windows(2) {
        assert!(is_erection_of(&w[1], &w[0]).unwrap());
    }
    // final stage admits only the trivial erection
    let last = chain.final_stage();
    assert!(free_erection(last, &budget()).unwrap().trivial);

    // rank cap aborts with a partial chain
    let capped = free_elevation(&u1, Some(2), &budget()).unwrap();
    assert!(capped.aborted_at_cap);
    assert_eq!(capped.final_stage().rank_full(), 2);
}

#[test]
fn uniform_family_elevations_are_already_maximal() {
    // the uniform 5-cycle matroid on K6 admits no nontrivial erection, and
    // every stage of its (single-stage) elevation is symmetric
    let k6 = complete(6);
    let c5 = copies(PatternSpec::Cycle(5), &k6);
    let u = build_uniform_matroid(&c5).unwrap();
    let chain = free_elevation(&u, Some(8), &budget()).unwrap();
    assert_eq!(chain.stages.len(), 1);
    for stage in &chain.stages {
        let rep = symmetry_check(stage, &k6, 400, 17).unwrap();
        assert!(rep.ok());
    }
}

#[test]
fn symmetry_is_preserved_by_erection() {
    // a symmetric input (uniform matroid over K4 edges) erects symmetrically
    let k4 = complete(4);
    let u2 = Matroid::uniform(6, 2).unwrap();
    let fe = free_erection(&u2, &budget()).unwrap();
    assert!(!fe.trivial);
    let rep = symmetry_check(&fe.matroid, &k4, 300, 23).unwrap();
    assert!(rep.ok());
}
