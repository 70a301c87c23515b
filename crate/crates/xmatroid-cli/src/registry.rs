//! Deterministic experiment registry.
//!
//! Each entry reproduces one desk-scale result with pinned expected values
//! and emits a JSON artifact. Re-running with the same seed produces
//! byte-identical artifacts at any thread count: entries are pure given the
//! run configuration, and results merge in id order.

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use xmatroid::bits::{for_each_k_subset, ElementSet};
use xmatroid::checks::*;
use xmatroid::counts::{induced_circuit_check, induced_matroid, CountFunction};
use xmatroid::erection::{
    enumerate_erections, free_elevation, free_erection, ErectionBudget, ErectionResult,
};
use xmatroid::graphs::{
    build_uniform_matroid, enumerate_copies, rooted_copies, CopyFamily, HostGraph, PatternSpec,
};
use xmatroid::ground::GroundSet;
use xmatroid::linear::{RowMatrixKind, RowMatrixSpec, DEFAULT_PRIME};
use xmatroid::matroid::{Matroid, Relation};
use xmatroid::pebble::pebble_game_rank;
use xmatroid::valseq::*;
use xmatroid::weaksat::{construct_weak_sat, expected_base_size, WeakSatKind};

#[derive(Copy, Clone, Debug)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: u32,
    pub field_prime: u64,
    pub state_budget: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 20260809,
            trials: 3,
            field_prime: DEFAULT_PRIME,
            state_budget: 1 << 24,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunResult {
    pub id: String,
    pub outcome: Outcome,
    /// deterministic artifact; excludes timing so runs compare byte-for-byte
    pub artifact: Value,
    #[serde(skip)]
    pub millis: u128,
}

pub struct Experiment {
    pub id: &'static str,
    pub description: &'static str,
    /// how the expected values were obtained
    pub basis: &'static str,
    pub run: fn(&RunConfig) -> (Outcome, Value),
}

pub fn experiments() -> Vec<Experiment> {
    vec![
        Experiment {
            id: "val-K3-K5",
            description: "val of triangles equals the cycle-matroid rank on every subset of E(K5)",
            basis: "stated result; equality recomputed subset by subset",
            run: |cfg| val_equals_count("K3", "f,1,1", 5, cfg),
        },
        Experiment {
            id: "val-K4-K5",
            description: "val of 4-cliques equals the (2,3)-count rank on every subset of E(K5)",
            basis: "stated result; equality recomputed subset by subset",
            run: |cfg| val_equals_count("K4", "f,2,3", 5, cfg),
        },
        Experiment {
            id: "val-K4minus-K5",
            description: "val of near-4-cliques equals the (1,0)-count rank on E(K5)",
            basis: "stated result; equality recomputed subset by subset",
            run: |cfg| val_equals_count("K4-", "f,1,0", 5, cfg),
        },
        Experiment {
            id: "val-C4-K5",
            description: "val of 4-cycles equals the even-cycle rank on E(K5)",
            basis: "stated result; equality recomputed subset by subset",
            run: |cfg| val_equals_count("C4", "g,1,1,0", 5, cfg),
        },
        Experiment {
            id: "val-K23-K34",
            description: "val of K_{2,3} copies equals the (1,0)-count rank on E(K_{3,4})",
            basis: "stated result; equality recomputed subset by subset",
            run: run_val_k23_k34,
        },
        Experiment {
            id: "val-K5minus-K6",
            description: "val of near-5-cliques equals the (2,2)-count rank on sampled subsets and all flats of E(K6)",
            basis: "stated result; sampled equality plus full flat scan",
            run: run_val_k5minus_k6,
        },
        Experiment {
            id: "T-K23-unique-bipartite",
            description: "every connected flat of the (1,0)-count matroid on K_{3,4} certifies against K_{2,3} sequences",
            basis: "stated result; certificates re-verified independently",
            run: run_k23_unique_bipartite,
        },
        Experiment {
            id: "cert-soundness-fuzz",
            description: "10^4 random (set, sequence) pairs never beat the matroid rank, and tight pairs satisfy the equality side conditions",
            basis: "direct consequence of the val bound; fuzzed",
            run: run_cert_fuzz,
        },
        Experiment {
            id: "uniform-2K2-K5",
            description: "val of 2-matchings on K5 is 1 and the val matroid is the rank-1 uniform matroid",
            basis: "stated result; matroid equality recomputed",
            run: |cfg| uniform_family_case("2K2", 5, 1, cfg),
        },
        Experiment {
            id: "uniform-P3-K4",
            description: "val of 3-edge paths on K4 is 2 and the val matroid is the rank-2 uniform matroid",
            basis: "stated result; matroid equality recomputed",
            run: |cfg| uniform_family_case("P3", 4, 2, cfg),
        },
        Experiment {
            id: "uniform-K13-K5",
            description: "the uniform matroid of 3-stars on K5 equals the val matroid",
            basis: "stated result; matroid equality recomputed",
            run: run_k13_uniform,
        },
        Experiment {
            id: "weaksat-constructions",
            description: "the named weakly saturated constructions validate with their stated start sizes",
            basis: "constructions from the proofs; validated step by step",
            run: run_weaksat_constructions,
        },
        Experiment {
            id: "erection-oracle",
            description: "the free erection equals the weak-order maximum of all erections on named and random fixtures",
            basis: "computed by the brute-force enumeration oracle",
            run: run_erection_oracle,
        },
        Experiment {
            id: "nonunique-K23-K7",
            description: "the uniform K_{2,3} matroid on K7 admits only the trivial erection and is weak-order incomparable with the bicircular matroid",
            basis: "stated result; witnesses recomputed and replayed",
            run: run_nonunique_k23,
        },
        Experiment {
            id: "nonunique-C5-K8",
            description: "the free elevation of the uniform 5-cycle matroid on K8 stays below the cycle matroid's rank, which is itself a 5-cycle matroid",
            basis: "stated bound; elevation computed with a rank cap",
            run: run_nonunique_c5,
        },
        Experiment {
            id: "nonunique-K4K23-gK8",
            description: "the (1,1,-1)-count matroid on K8 is a {K4, K_{2,3}}-matroid of rank 9 with a disconnected two-4-cycle circuit",
            basis: "stated result; every quantity recomputed",
            run: run_nonunique_g11m1,
        },
        Experiment {
            id: "linear-generic-ranks",
            description: "generic row matroid ranks match their closed forms, and planar generic rigidity matches the (2,3) pebble count",
            basis: "stated formulas; three-seed agreement per query",
            run: run_linear_ranks,
        },
        Experiment {
            id: "linear-circuits",
            description: "clique and biclique edge sets are circuits of the expected row matroids",
            basis: "stated results; minimality recomputed row by row",
            run: run_linear_circuits,
        },
        Experiment {
            id: "picture-lifting-equivalence",
            description: "the (k,1) birigidity rank equals the picture-lifting count rank on all subsets, and rooted biclique certificates cover every connected flat",
            basis: "stated result; equality recomputed subset by subset",
            run: run_picture_lifting,
        },
        Experiment {
            id: "checker-H72-operations",
            description: "sampled 0-extensions and diamond splittings preserve independence in the hyperconnectivity matroid on K7",
            basis: "stated properties; sampled with zero tolerated failures",
            run: run_h72_operations,
        },
        Experiment {
            id: "checker-circuits2conn-H62",
            description: "every circuit of the hyperconnectivity matroid on K6 with at most 10 rows induces a 2-connected subgraph",
            basis: "stated property; circuits enumerated exhaustively",
            run: run_circuits_2conn,
        },
        Experiment {
            id: "checker-covering-fixtures",
            description: "cyclic flats of the elevation fixtures are unions of family members",
            basis: "stated covering property; cyclic flats enumerated",
            run: run_covering_fixtures,
        },
        Experiment {
            id: "checker-symmetry-C5K6",
            description: "every stage of the 5-cycle elevation on K6 has transposition-invariant rank",
            basis: "stated symmetry; sampled transposition checks",
            run: run_symmetry_c5k6,
        },
        Experiment {
            id: "submodularity-exhaustive-K5",
            description: "val of triangles and of 4-cliques on K5 is submodular, and the val matroids equal the count matroids",
            basis: "exhaustive local scan; matroid equality recomputed",
            run: run_submodularity,
        },
        Experiment {
            id: "probe-K4K33-K6",
            description: "on K6, the hyperconnectivity fixture passes the extension, splitting and covering checks and certifies every connected flat against the mixed clique/biclique family",
            basis: "equivalence-theorem probe; certificates re-verified",
            run: |cfg| probe_k4k33(6, cfg),
        },
        Experiment {
            id: "probe-K4K33-K7",
            description: "the same probe on K7",
            basis: "equivalence-theorem probe; certificates re-verified",
            run: |cfg| probe_k4k33(7, cfg),
        },
    ]
}

/// Run all experiments whose id contains the filter (all when empty),
/// optionally across worker threads; results always merge in id order.
pub fn reproduce_all(filter: &str, cfg: &RunConfig, threads: usize) -> Vec<RunResult> {
    let selected: Vec<Experiment> = experiments()
        .into_iter()
        .filter(|e| filter.is_empty() || e.id.contains(filter))
        .collect();
    let mut results: Vec<RunResult> = if threads <= 1 {
        selected.iter().map(|e| run_one(e, cfg)).collect()
    } else {
        let chunks: Vec<Vec<usize>> = (0..threads)
            .map(|t| (t..selected.len()).step_by(threads).collect())
            .collect();
        let selected = Arc::new(selected);
        let cfg = *cfg;
        let mut handles = Vec::new();
        for chunk in chunks {
            let sel = Arc::clone(&selected);
            handles.push(std::thread::spawn(move || {
                chunk
                    .into_iter()
                    .map(|i| run_one(&sel[i], &cfg))
                    .collect::<Vec<_>>()
            }));
        }
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker thread"))
            .collect()
    };
    results.sort_by(|a, b| a.id.cmp(&b.id));
    results
}

fn run_one(e: &Experiment, cfg: &RunConfig) -> RunResult {
    let start = Instant::now();
    let (outcome, detail) = (e.run)(cfg);
    let artifact = json!({
        "schema": 1,
        "id": e.id,
        "outcome": outcome,
        "seed": cfg.seed,
        "detail": detail,
    });
    RunResult {
        id: e.id.to_string(),
        outcome,
        artifact,
        millis: start.elapsed().as_millis(),
    }
}

fn pass_if(ok: bool, detail: Value) -> (Outcome, Value) {
    (if ok { Outcome::Pass } else { Outcome::Fail }, detail)
}

fn pattern_of(tok: &str) -> PatternSpec {
    match tok {
        "K3" => PatternSpec::Clique(3),
        "K4" => PatternSpec::Clique(4),
        "K4-" => PatternSpec::CliqueMinus(4),
        "K5-" => PatternSpec::CliqueMinus(5),
        "C4" => PatternSpec::Cycle(4),
        "C5" => PatternSpec::Cycle(5),
        "P3" => PatternSpec::Path(3),
        "2K2" => PatternSpec::Matching(2),
        "K13" => PatternSpec::Star(3),
        "K23" => PatternSpec::Biclique(2, 3),
        _ => panic!("unknown fixture pattern {tok}"),
    }
}

fn count_fn(spec: &str, host: &HostGraph) -> CountFunction {
    let parts: Vec<&str> = spec.split(',').collect();
    match parts.as_slice() {
        ["f", a, b] => {
            CountFunction::vertex_count(a.parse().unwrap(), b.parse().unwrap(), host.clone())
                .unwrap()
        }
        ["g", a, b, c] => CountFunction::bipartite_count(
            a.parse().unwrap(),
            b.parse().unwrap(),
            c.parse().unwrap(),
            host.clone(),
        )
        .unwrap(),
        _ => panic!("bad count spec {spec}"),
    }
}

fn val_equals_count(pattern: &str, count: &str, n: usize, cfg: &RunConfig) -> (Outcome, Value) {
    let host = HostGraph::complete(n).unwrap();
    let fam = enumerate_copies(&pattern_of(pattern), &host).unwrap();
    let engine = ValEngine::build(&fam, cfg.state_budget);
    if !engine.exact() {
        return (Outcome::Inconclusive, json!({"reason": "state budget exceeded"}));
    }
    let m = induced_matroid(&count_fn(count, &host));
    let total = 1u64 << host.n_edges();
    let mut mismatches = Vec::new();
    for mask in 0..total {
        let f = ElementSet(mask);
        if engine.val(f) != m.rank(f) as i64 {
            mismatches.push(f.to_ids());
            if mismatches.len() > 4 {
                break;
            }
        }
    }
    pass_if(
        mismatches.is_empty(),
        json!({"subsets": total, "states": engine.state_count(), "mismatches": mismatches}),
    )
}

fn run_val_k23_k34(cfg: &RunConfig) -> (Outcome, Value) {
    let host = HostGraph::complete_bipartite(3, 4).unwrap();
    let fam = enumerate_copies(&PatternSpec::Biclique(2, 3), &host).unwrap();
    let engine = ValEngine::build(&fam, cfg.state_budget);
    let m = induced_matroid(&count_fn("f,1,0", &host));
    let total = 1u64 << host.n_edges();
    let mut mismatches = Vec::new();
    for mask in 0..total {
        let f = ElementSet(mask);
        if engine.val(f) != m.rank(f) as i64 {
            mismatches.push(f.to_ids());
            if mismatches.len() > 4 {
                break;
            }
        }
    }
    pass_if(
        mismatches.is_empty() && engine.exact(),
        json!({"subsets": total, "states": engine.state_count(), "mismatches": mismatches}),
    )
}

fn run_val_k5minus_k6(cfg: &RunConfig) -> (Outcome, Value) {
    let host = HostGraph::complete(6).unwrap();
    let fam = enumerate_copies(&PatternSpec::CliqueMinus(5), &host).unwrap();
    let engine = ValEngine::build(&fam, cfg.state_budget);
    let f22 = count_fn("f,2,2", &host);
    let m = induced_matroid(&f22);
    let full = host.ground().full_set();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xa5);
    let mut mismatches = Vec::new();
    for _ in 0..2000 {
        let f = ElementSet(rng.gen::<u64>() & full.0);
        if engine.val(f) != m.rank(f) as i64 {
            mismatches.push(f.to_ids());
        }
    }
    // all flats of the count matroid
    let flats = m.flats(1 << 22).unwrap();
    let flat_count = flats.len();
    for f in flats {
        if engine.val(f) != m.rank(f) as i64 {
            mismatches.push(f.to_ids());
        }
    }
    pass_if(
        mismatches.is_empty() && engine.exact(),
        json!({"sampled": 2000, "flats": flat_count, "states": engine.state_count(),
               "mismatches": mismatches}),
    )
}

fn run_k23_unique_bipartite(cfg: &RunConfig) -> (Outcome, Value) {
    let host = HostGraph::complete_bipartite(3, 4).unwrap();
    let fam = enumerate_copies(&PatternSpec::Biclique(2, 3), &host).unwrap();
    let m = induced_matroid(&count_fn("f,1,0", &host));
    let out = certify_connected_flats(&m, &fam, 1 << 22, cfg.state_budget).unwrap();
    let mut verified = 0;
    for cert in &out.certificates {
        if verify_certificate(&fam, cert).is_ok() {
            verified += 1;
        }
    }
    pass_if(
        out.success() && verified == out.certificates.len(),
        json!({"flats_checked": out.flats_checked,
               "certificates": out.certificates.len(),
               "verified": verified,
               "failures": out.failures.iter().map(|(f, v, r)| json!({
                   "flat": f.to_ids(), "val": v, "rank": r})).collect::<Vec<_>>()}),
    )
}

fn fixture_pairs(n5: &HostGraph, k34: &HostGraph, k6: &HostGraph) -> Vec<(CopyFamily, Matroid)> {
    vec![
        (
            enumerate_copies(&PatternSpec::Clique(3), n5).unwrap(),
            induced_matroid(&count_fn("f,1,1", n5)),
        ),
        (
            enumerate_copies(&PatternSpec::Clique(4), n5).unwrap(),
            induced_matroid(&count_fn("f,2,3", n5)),
        ),
        (
            enumerate_copies(&PatternSpec::CliqueMinus(4), n5).unwrap(),
            induced_matroid(&count_fn("f,1,0", n5)),
        ),
        (
            enumerate_copies(&PatternSpec::Cycle(4), n5).unwrap(),
            induced_matroid(&count_fn("g,1,1,0", n5)),
        ),
        (
            enumerate_copies(&PatternSpec::Biclique(2, 3), k34).unwrap(),
            induced_matroid(&count_fn("f,1,0", k34)),
        ),
        (
            enumerate_copies(&PatternSpec::CliqueMinus(5), k6).unwrap(),
            induced_matroid(&count_fn("f,2,2", k6)),
        ),
    ]
}

fn run_cert_fuzz(cfg: &RunConfig) -> (Outcome, Value) {
    let k5 = HostGraph::complete(5).unwrap();
    let k34 = HostGraph::complete_bipartite(3, 4).unwrap();
    let k6 = HostGraph::complete(6).unwrap();
    let pairs = fixture_pairs(&k5, &k34, &k6);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xf42a);
    let per_family = 10_000 / pairs.len() as u64 + 1;
    let mut checked = 0u64;
    let mut tight = 0u64;
    for (fam, m) in &pairs {
        let full = fam.host().ground().full_set();
        for _ in 0..per_family {
            let f = ElementSet(rng.gen::<u64>() & full.0);
            let seq = random_proper_sequence(fam, rng.gen_range(0..7), &mut rng);
            let v = eval_val(fam, f, &seq).unwrap();
            let r = m.rank(f) as i64;
            if r > v {
                return pass_if(false, json!({"set": f.to_ids(), "val": v, "rank": r}));
            }
            if r == v {
                tight += 1;
                let union = sequence_union(fam, &seq).unwrap();
                if !equality_side_conditions_hold(m, f, union) {
                    return pass_if(
                        false,
                        json!({"set": f.to_ids(), "side_conditions": "violated"}),
                    );
                }
            }
            checked += 1;
        }
    }
    pass_if(true, json!({"pairs_checked": checked, "tight_pairs": tight}))
}

fn uniform_family_case(
    pattern: &str,
    n: usize,
    expected_val: i64,
    cfg: &RunConfig,
) -> (Outcome, Value) {
    let host = HostGraph::complete(n).unwrap();
    let fam = enumerate_copies(&pattern_of(pattern), &host).unwrap();
    let res = compute_val(&fam, host.ground().full_set(), None, cfg.state_budget).unwrap();
    let m = build_val_matroid(&fam, cfg.state_budget).unwrap();
    let uniform = Matroid::uniform(host.n_edges(), expected_val as usize).unwrap();
    pass_if(
        res.value == expected_val && m.same_matroid(&uniform).unwrap(),
        json!({"val": res.value, "expected": expected_val, "rank": m.rank_full()}),
    )
}

fn run_k13_uniform(cfg: &RunConfig) -> (Outcome, Value) {
    let host = HostGraph::complete(5).unwrap();
    let fam = enumerate_copies(&PatternSpec::Star(3), &host).unwrap();
    let u = build_uniform_matroid(&fam).unwrap();
    let v = build_val_matroid(&fam, cfg.state_budget).unwrap();
    pass_if(
        u.same_matroid(&v).unwrap(),
        json!({"members": fam.len(), "rank": u.rank_full()}),
    )
}

fn run_weaksat_constructions(_cfg: &RunConfig) -> (Outcome, Value) {
    let kinds = vec![
        WeakSatKind::Matchings { k: 2, n: 5 },
        WeakSatKind::Matchings { k: 2, n: 6 },
        WeakSatKind::Paths { k: 3, n: 5 },
        WeakSatKind::Cliques { d: 1, m: 5 },
        WeakSatKind::Cliques { d: 2, m: 6 },
        WeakSatKind::CycleComplete { m: 5 },
        WeakSatKind::CycleBipartite { s: 3, t: 3 },
        WeakSatKind::K5MinusComplete { m: 6 },
        WeakSatKind::K34Bipartite { s: 3, t: 4 },
        WeakSatKind::K23Bipartite { s: 3, t: 4 },
        WeakSatKind::RootedK2 { k: 2, m: 3, n: 3 },
    ];
    let mut rows = Vec::new();
    let mut ok = true;
    for kind in kinds {
        let c = construct_weak_sat(kind).unwrap();
        let built = is_weakly_saturated(&c.family, &c.sequence).unwrap();
        let base_ok = c.sequence.base_set().len() == expected_base_size(kind);
        let target_ok = built == c.target;
        ok &= base_ok && target_ok;
        rows.push(json!({
            "kind": format!("{kind:?}"),
            "base_size": c.sequence.base_set().len(),
            "steps": c.sequence.steps.len(),
            "valid": base_ok && target_ok,
        }));
    }
    pass_if(ok, json!({"constructions": rows}))
}

fn oracle_maximum(all: &[ErectionResult]) -> Option<Matroid> {
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
            if max.is_some() {
                return None;
            }
            max = Some(&cand.matroid);
        }
    }
    max.cloned()
}

fn run_erection_oracle(cfg: &RunConfig) -> (Outcome, Value) {
    let budget = ErectionBudget::default();
    let mut fixtures: Vec<(String, Matroid)> = Vec::new();
    fixtures.push(("u1-3".into(), Matroid::uniform(3, 1).unwrap()));
    let k4 = HostGraph::complete(4).unwrap();
    fixtures.push((
        "graphic-K4".into(),
        induced_matroid(&count_fn("f,1,1", &k4)).to_explicit(u64::MAX).unwrap(),
    ));
    let c4 = enumerate_copies(&PatternSpec::Cycle(4), &k4).unwrap();
    fixtures.push(("uniform-C4-K4".into(), build_uniform_matroid(&c4).unwrap()));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut attempts = 0;
    while fixtures.len() < 23 && attempts < 500 {
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
        fixtures.push((format!("random-{}", fixtures.len() - 3), m));
    }
    let mut rows = Vec::new();
    let mut ok = fixtures.len() == 23;
    for (name, m) in &fixtures {
        let all = enumerate_erections(m, 63).unwrap();
        let maximum = match oracle_maximum(&all) {
            Some(m) => m,
            None => return pass_if(false, json!({"fixture": name, "reason": "no unique maximum"})),
        };
        let fe = free_erection(m, &budget).unwrap();
        let equal = fe.matroid.same_matroid(&maximum).unwrap();
        let truncates = fe.trivial || fe.matroid.truncate().unwrap().same_matroid(m).unwrap();
        ok &= equal && truncates;
        rows.push(json!({
            "fixture": name, "erections": all.len(), "trivial": fe.trivial,
            "matches_oracle": equal, "truncates_back": truncates,
        }));
    }
    pass_if(ok, json!({"fixtures": rows}))
}

fn random_sparse_paving(rng: &mut ChaCha8Rng) -> Option<Matroid> {
    let n = rng.gen_range(5..=9);
    let r = rng.gen_range(2..=4.min(n - 2));
    let cand = xmatroid::bits::k_subsets_of(ElementSet::full(n), r);
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
    Matroid::from_oracle(GroundSet::plain(n).unwrap(), Arc::new(rank_of))
        .to_explicit(u64::MAX)
        .unwrap()
}

fn count_free_sets(m: &Matroid) -> usize {
    let r = m.rank_full();
    let n = m.ground_size();
    if r + 1 > n {
        return 0;
    }
    let smalls = xmatroid::matroid::CircuitSet::new(
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

fn run_nonunique_k23(cfg: &RunConfig) -> (Outcome, Value) {
    let k7 = HostGraph::complete(7).unwrap();
    let fam = enumerate_copies(&PatternSpec::Biclique(2, 3), &k7).unwrap();
    let u = build_uniform_matroid(&fam).unwrap();
    let fe = free_erection(&u, &ErectionBudget::default()).unwrap();
    let bicircular = induced_matroid(&count_fn("f,1,0", &k7));
    let cmp = u.weak_order_compare(&bicircular, 1 << 26).unwrap();
    let w1 = cmp.self_ind_other_dep;
    let w2 = cmp.other_ind_self_dep;
    let witnesses_ok = match (w1, w2) {
        (Some(a), Some(b)) => {
            u.is_independent(a)
                && !bicircular.is_independent(a)
                && bicircular.is_independent(b)
                && !u.is_independent(b)
        }
        _ => false,
    };
    let ok = fe.trivial
        && u.rank_full() == 6
        && cmp.relation == Relation::Incomparable
        && witnesses_ok
        && cfg.trials >= 1;
    pass_if(
        ok,
        json!({
            "erection_trivial": fe.trivial,
            "rank": u.rank_full(),
            "relation": cmp.relation,
            "uniform_ind_bicircular_dep": w1.map(|s| s.to_ids()),
            "bicircular_ind_uniform_dep": w2.map(|s| s.to_ids()),
        }),
    )
}

fn run_nonunique_c5(_cfg: &RunConfig) -> (Outcome, Value) {
    let k8 = HostGraph::complete(8).unwrap();
    let fam = enumerate_copies(&PatternSpec::Cycle(5), &k8).unwrap();
    let u = build_uniform_matroid(&fam).unwrap();
    let chain = free_elevation(&u, Some(7), &ErectionBudget::default()).unwrap();
    let final_rank = chain.final_stage().rank_full();
    let graphic = induced_matroid(&count_fn("f,1,1", &k8));
    let graphic_rank = graphic.rank_full();
    let xk = is_x_matroid(&graphic, &fam);
    let ok = !chain.aborted_at_cap && final_rank <= 6 && graphic_rank == 7 && xk.ok();
    pass_if(
        ok,
        json!({
            "stages": chain.stages.iter().map(|m| m.rank_full()).collect::<Vec<_>>(),
            "final_rank": final_rank,
            "graphic_rank": graphic_rank,
            "graphic_is_C5_matroid": xk.ok(),
        }),
    )
}

fn run_nonunique_g11m1(_cfg: &RunConfig) -> (Outcome, Value) {
    let k8 = HostGraph::complete(8).unwrap();
    let g = count_fn("g,1,1,-1", &k8);
    let m = induced_matroid(&g);
    let k4s = enumerate_copies(&PatternSpec::Clique(4), &k8).unwrap();
    let k23s = enumerate_copies(&PatternSpec::Biclique(2, 3), &k8).unwrap();
    let fam = k4s.merged_with(&k23s).unwrap();
    let xk = is_x_matroid(&m, &fam);
    let rank = m.rank_full();
    let two_c4 = ElementSet::from_ids(
        [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)]
            .iter()
            .map(|&(a, b)| k8.edge_id(a, b).unwrap()),
    );
    let circuit = induced_circuit_check(&g, two_c4).unwrap();
    pass_if(
        xk.ok() && rank == 9 && circuit,
        json!({"x_matroid": xk.ok(), "rank": rank, "two_c4_circuit": circuit}),
    )
}

fn run_linear_ranks(cfg: &RunConfig) -> (Outcome, Value) {
    let mk = |kind| RowMatrixSpec::new(kind, cfg.seed, cfg.field_prime).unwrap();
    let mut rows = Vec::new();
    let mut ok = true;
    for (d, n) in [(1usize, 4usize), (2, 6), (2, 7), (3, 8)] {
        let s = mk(RowMatrixKind::Hyperconnectivity { n, d });
        let expect = d * n - (d + 1) * d / 2;
        let got = s
            .generic_rank(ElementSet::full(n * (n - 1) / 2), cfg.trials)
            .unwrap();
        ok &= got == expect;
        rows.push(json!({"spec": s.kind.describe(), "rank": got, "expected": expect}));
    }
    for (d, n) in [(2usize, 6usize), (2, 7)] {
        let s = mk(RowMatrixKind::SymmetricCompletion { n, d });
        let expect = d * n - d * (d - 1) / 2;
        let got = s
            .generic_rank(ElementSet::full(n * (n - 1) / 2), cfg.trials)
            .unwrap();
        ok &= got == expect;
        rows.push(json!({"spec": s.kind.describe(), "rank": got, "expected": expect}));
    }
    for (m, n, k, l, expect) in [
        (3usize, 3usize, 2usize, 1usize, 7usize),
        (3, 3, 2, 2, 8),
        (4, 4, 2, 2, 12),
    ] {
        let s = mk(RowMatrixKind::Birigidity { m, n, k, l });
        let got = s.generic_rank(ElementSet::full(m * n), cfg.trials).unwrap();
        ok &= got == expect;
        rows.push(json!({"spec": s.kind.describe(), "rank": got, "expected": expect}));
    }
    // planar rigidity equals the (2,3) pebble count on every subset of E(K5)
    let k5 = HostGraph::complete(5).unwrap();
    let r2 = mk(RowMatrixKind::Rigidity { n: 5, d: 2 });
    let mut rigidity_ok = true;
    for mask in 0u64..(1 << 10) {
        let f = ElementSet(mask);
        if r2.generic_rank(f, cfg.trials).unwrap() != pebble_game_rank(2, 3, f, &k5).unwrap() {
            rigidity_ok = false;
            break;
        }
    }
    ok &= rigidity_ok;
    rows.push(json!({"spec": "rigid:n=5,d=2", "matches_pebble_2_3": rigidity_ok}));
    pass_if(ok, json!({"ranks": rows}))
}

fn run_linear_circuits(cfg: &RunConfig) -> (Outcome, Value) {
    let mk = |kind| RowMatrixSpec::new(kind, cfg.seed, cfg.field_prime).unwrap();
    let k6 = HostGraph::complete(6).unwrap();
    let k4_edges = k6.edges_within(&[0, 1, 2, 3]);
    let mut k33_edges = ElementSet::empty();
    for a in [0, 1, 2] {
        for b in [3, 4, 5] {
            k33_edges.insert(k6.edge_id(a, b).unwrap());
        }
    }
    let h62 = mk(RowMatrixKind::Hyperconnectivity { n: 6, d: 2 });
    let i62 = mk(RowMatrixKind::SymmetricCompletion { n: 6, d: 2 });
    let b321 = mk(RowMatrixKind::Birigidity { m: 3, n: 3, k: 2, l: 1 });
    let k33host = HostGraph::complete_bipartite(3, 3).unwrap();
    let rooted = rooted_copies(3, 2, &k33host).unwrap();
    let c1 = h62.linear_circuit_check(k4_edges, cfg.trials).unwrap();
    let c2 = h62.linear_circuit_check(k33_edges, cfg.trials).unwrap();
    let c3 = i62.linear_circuit_check(k33_edges, cfg.trials).unwrap();
    let c4 = rooted
        .members()
        .iter()
        .all(|&m| b321.linear_circuit_check(m, cfg.trials).unwrap());
    pass_if(
        c1 && c2 && c3 && c4,
        json!({"K4_in_H62": c1, "K33_in_H62": c2, "K33_in_I62": c3,
               "rooted_K32_in_biri321": c4}),
    )
}

fn run_picture_lifting(cfg: &RunConfig) -> (Outcome, Value) {
    let mut ok = true;
    let mut rows = Vec::new();
    for k in [1usize, 2] {
        for (m, n) in [(2usize, 3usize), (3, 3)] {
            let spec = RowMatrixSpec::new(
                RowMatrixKind::Birigidity { m, n, k, l: 1 },
                cfg.seed,
                cfg.field_prime,
            )
            .unwrap();
            let host = HostGraph::complete_bipartite(m, n).unwrap();
            let h = CountFunction::picture_lifting(k as i64, host.clone()).unwrap();
            let mh = induced_matroid(&h);
            let mut agree = true;
            for mask in 0u64..(1u64 << (m * n)) {
                let f = ElementSet(mask);
                if spec.generic_rank(f, cfg.trials).unwrap() != mh.rank(f) {
                    agree = false;
                    break;
                }
            }
            ok &= agree;
            rows.push(json!({"k": k, "host": [m, n], "rank_equal_everywhere": agree}));
        }
    }
    // certificates for every connected flat against rooted copies
    for k in [1usize, 2] {
        let host = HostGraph::complete_bipartite(3, 3).unwrap();
        let h = CountFunction::picture_lifting(k as i64, host.clone()).unwrap();
        let mh = induced_matroid(&h);
        let fam = rooted_copies(k + 1, 2, &host).unwrap();
        let out = certify_connected_flats(&mh, &fam, 1 << 20, cfg.state_budget).unwrap();
        ok &= out.success();
        rows.push(json!({"k": k, "certified_flats": out.flats_checked,
                          "failures": out.failures.len()}));
    }
    pass_if(ok, json!({"cases": rows}))
}

fn run_h72_operations(cfg: &RunConfig) -> (Outcome, Value) {
    let host = HostGraph::complete(7).unwrap();
    let h = RowMatrixSpec::new(
        RowMatrixKind::Hyperconnectivity { n: 7, d: 2 },
        cfg.seed,
        cfg.field_prime,
    )
    .unwrap()
    .matroid(cfg.trials)
    .unwrap();
    let ze = zero_extension_check(
        &h,
        &host,
        CheckMode::Sampled { samples: 500, seed: cfg.seed ^ 1 },
    )
    .unwrap();
    let ds = diamond_splitting_check(
        &h,
        &host,
        CheckMode::Sampled { samples: 500, seed: cfg.seed ^ 2 },
    )
    .unwrap();
    pass_if(
        ze.ok() && ds.ok(),
        json!({"zero_extension": ze, "diamond_splitting": ds}),
    )
}

fn run_circuits_2conn(cfg: &RunConfig) -> (Outcome, Value) {
    let host = HostGraph::complete(6).unwrap();
    let h = RowMatrixSpec::new(
        RowMatrixKind::Hyperconnectivity { n: 6, d: 2 },
        cfg.seed,
        cfg.field_prime,
    )
    .unwrap()
    .matroid(cfg.trials)
    .unwrap();
    let rep = circuits_two_connected_check(&h, &host, 10, 1 << 24).unwrap();
    pass_if(rep.ok(), serde_json::to_value(&rep).unwrap())
}

fn run_covering_fixtures(_cfg: &RunConfig) -> (Outcome, Value) {
    // final elevation stages of the two nonuniqueness fixtures
    let k7 = HostGraph::complete(7).unwrap();
    let k23 = enumerate_copies(&PatternSpec::Biclique(2, 3), &k7).unwrap();
    let u23 = build_uniform_matroid(&k23).unwrap();
    let stage23 = free_elevation(&u23, Some(7), &ErectionBudget::default()).unwrap();
    let rep1 = has_x_covering(stage23.final_stage(), &k23, 1 << 22).unwrap();

    let k8 = HostGraph::complete(8).unwrap();
    let c5 = enumerate_copies(&PatternSpec::Cycle(5), &k8).unwrap();
    let u5 = build_uniform_matroid(&c5).unwrap();
    let stage5 = free_elevation(&u5, Some(7), &ErectionBudget::default()).unwrap();
    let rep2 = has_x_covering(stage5.final_stage(), &c5, 1 << 22).unwrap();
    pass_if(
        rep1.ok() && rep2.ok(),
        json!({"K23_on_K7": rep1, "C5_on_K8": rep2}),
    )
}

fn run_symmetry_c5k6(cfg: &RunConfig) -> (Outcome, Value) {
    let k6 = HostGraph::complete(6).unwrap();
    let c5 = enumerate_copies(&PatternSpec::Cycle(5), &k6).unwrap();
    let u = build_uniform_matroid(&c5).unwrap();
    let chain = free_elevation(&u, Some(8), &ErectionBudget::default()).unwrap();
    let mut rows = Vec::new();
    let mut ok = true;
    for stage in &chain.stages {
        let rep = symmetry_check(stage, &k6, 1000, cfg.seed ^ 3).unwrap();
        ok &= rep.ok();
        rows.push(json!({"rank": stage.rank_full(), "verdict": rep.verdict}));
    }
    pass_if(ok, json!({"stages": rows}))
}

fn run_submodularity(cfg: &RunConfig) -> (Outcome, Value) {
    let k5 = HostGraph::complete(5).unwrap();
    let mut rows = Vec::new();
    let mut ok = true;
    for (tok, count) in [("K3", "f,1,1"), ("K4", "f,2,3")] {
        let fam = enumerate_copies(&pattern_of(tok), &k5).unwrap();
        let violations = val_submodularity_scan(&fam, ScanMode::Exhaustive, cfg.state_budget).unwrap();
        let matroid = build_val_matroid(&fam, cfg.state_budget).unwrap();
        let count_m = induced_matroid(&count_fn(count, &k5));
        let equal = matroid.same_matroid(&count_m).unwrap();
        ok &= violations.is_empty() && equal;
        rows.push(json!({"family": tok, "violations": violations.len(),
                          "equals_count_matroid": equal}));
    }
    pass_if(ok, json!({"families": rows}))
}

fn probe_k4k33(n: usize, cfg: &RunConfig) -> (Outcome, Value) {
    let host = HostGraph::complete(n).unwrap();
    let k4 = enumerate_copies(&PatternSpec::Clique(4), &host).unwrap();
    let k33 = enumerate_copies(&PatternSpec::Biclique(3, 3), &host).unwrap();
    let fam = k4.merged_with(&k33).unwrap();
    let h = RowMatrixSpec::new(
        RowMatrixKind::Hyperconnectivity { n, d: 2 },
        cfg.seed,
        cfg.field_prime,
    )
    .unwrap()
    .matroid(cfg.trials)
    .unwrap();
    let xk = is_x_matroid(&h, &fam);
    let ze = zero_extension_check(
        &h,
        &host,
        CheckMode::Sampled { samples: 400, seed: cfg.seed ^ 5 },
    )
    .unwrap();
    let ds = diamond_splitting_check(
        &h,
        &host,
        CheckMode::Sampled { samples: 400, seed: cfg.seed ^ 6 },
    )
    .unwrap();
    let cov = has_x_covering(&h, &fam, 1 << 22).unwrap();
    let hypotheses = xk.ok() && ze.ok() && ds.ok() && cov.ok();
    if !hypotheses {
        // the implication is vacuous, but for these fixtures the hypotheses
        // are themselves expected to hold
        return pass_if(
            false,
            json!({"x_matroid": xk.ok(), "zero_extension": ze.ok(),
                   "diamond": ds.ok(), "covering": cov.ok()}),
        );
    }
    let cert = certify_connected_flats(&h, &fam, 1 << 22, cfg.state_budget).unwrap();
    pass_if(
        cert.success(),
        json!({"hypotheses": true, "flats_certified": cert.flats_checked,
               "failures": cert.failures.len()}),
    )
}
