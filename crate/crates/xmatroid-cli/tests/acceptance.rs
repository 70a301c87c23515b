//! Acceptance suite: every gate criterion runs at its stated tolerance and
//! prints one pass/fail line. All expected values are exact integers; no
//! criterion is deferred.

use xmatroid_cli::registry::{reproduce_all, Outcome, RunConfig};

fn run_ids(ids: &[&str]) -> Vec<(String, Outcome)> {
    let cfg = RunConfig::default();
    ids.iter()
        .flat_map(|id| {
            let results = reproduce_all(id, &cfg, 1);
            assert!(!results.is_empty(), "no experiment matches {id}");
            results.into_iter().map(|r| (r.id, r.outcome))
        })
        .collect()
}

fn assert_criterion(name: &str, ids: &[&str]) {
    let results = run_ids(ids);
    let ok = results.iter().all(|(_, o)| *o == Outcome::Pass);
    println!(
        "{} {name}: {}",
        if ok { "PASS" } else { "FAIL" },
        results
            .iter()
            .map(|(id, o)| format!("{id}={o:?}"))
            .collect::<Vec<_>>()
            .join(", ")
    );
    assert!(ok, "criterion {name} failed: {results:?}");
}

#[test]
fn criterion_01_val_equals_rank() {
    assert_criterion(
        "criterion-1 val=rank equalities",
        &[
            "val-K3-K5",
            "val-K4-K5",
            "val-K4minus-K5",
            "val-C4-K5",
            "val-K23-K34",
            "val-K5minus-K6",
        ],
    );
}

#[test]
fn criterion_02_certificate_soundness() {
    assert_criterion("criterion-2 certificate soundness", &["cert-soundness-fuzz"]);
}

#[test]
fn criterion_03_uniform_matroid_results() {
    assert_criterion(
        "criterion-3 uniform-matroid results",
        &["uniform-2K2-K5", "uniform-P3-K4", "uniform-K13-K5"],
    );
}

#[test]
fn criterion_04_erection_oracle_equivalence() {
    assert_criterion("criterion-4 erection oracle equivalence", &["erection-oracle"]);
}

#[test]
fn criterion_05_nonuniqueness_ingredients() {
    assert_criterion(
        "criterion-5 nonuniqueness ingredients",
        &["nonunique-K23-K7", "nonunique-C5-K8", "nonunique-K4K23-gK8"],
    );
}

#[test]
fn criterion_06_linear_generic_ranks() {
    assert_criterion(
        "criterion-6 linear generic ranks",
        &["linear-generic-ranks", "linear-circuits"],
    );
}

#[test]
fn criterion_07_picture_lifting() {
    assert_criterion(
        "criterion-7 picture-lifting equivalence",
        &["picture-lifting-equivalence"],
    );
}

#[test]
fn criterion_08_property_checker_fixtures() {
    assert_criterion(
        "criterion-8 property-checker fixtures",
        &[
            "checker-H72-operations",
            "checker-circuits2conn-H62",
            "checker-covering-fixtures",
            "checker-symmetry-C5K6",
        ],
    );
}

#[test]
fn criterion_09_submodularity_scans() {
    assert_criterion(
        "criterion-9 submodularity scans",
        &["submodularity-exhaustive-K5"],
    );
}

#[test]
fn criterion_10_determinism() {
    // the full registry twice, same seed, different thread counts:
    // artifact sets must be byte-identical
    let cfg = RunConfig::default();
    let first = reproduce_all("", &cfg, 1);
    let second = reproduce_all("", &cfg, 3);
    assert_eq!(first.len(), second.len());
    let mut identical = true;
    for (a, b) in first.iter().zip(second.iter()) {
        assert_eq!(a.id, b.id);
        let ja = serde_json::to_string(&a.artifact).unwrap();
        let jb = serde_json::to_string(&b.artifact).unwrap();
        if ja != jb {
            identical = false;
            eprintln!("artifact drift in {}", a.id);
        }
    }
    let all_pass = first.iter().all(|r| r.outcome == Outcome::Pass);
    println!(
        "{} criterion-10 determinism: {} experiments byte-identical across thread counts",
        if identical && all_pass { "PASS" } else { "FAIL" },
        first.len()
    );
    assert!(identical && all_pass);
}

#[test]
fn equivalence_probe_registry_entries() {
    // module-invariant cross-check beyond the numbered criteria
    assert_criterion("probe {K4,K33} fixtures", &["probe-K4K33-K6"]);
}
