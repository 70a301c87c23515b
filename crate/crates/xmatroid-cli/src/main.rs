//! Command-line entry point.
//!
//! Exit codes: 0 pass, 1 fail, 2 inconclusive or budget exceeded, 64 usage
//! or malformed input. All output is JSON on stdout; progress lines go to
//! stderr.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use xmatroid::checks::{self, CheckMode};
use xmatroid::erection::{free_elevation, free_erection, ErectionBudget};
use xmatroid::json::{ElevationChainJson, ElevationStageJson, MatroidJson};
use xmatroid::linear::DEFAULT_PRIME;
use xmatroid::valseq::{certify_connected_flats, compute_val, verify_certificate, Certificate};
use xmatroid::Error;

use xmatroid_cli::registry::{reproduce_all, experiments, Outcome, RunConfig};
use xmatroid_cli::specparse::*;

#[derive(Parser)]
#[command(name = "xmatroid", about = "Exact workbench for circuit-prescribed matroids", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args, Clone)]
struct GlobalOpts {
    /// seed for generic assignments and sampled checks
    #[arg(long, global = true, default_value_t = 20260809)]
    seed: u64,
    /// independent trials for randomized rank queries
    #[arg(long, global = true, default_value_t = 3)]
    trials: u32,
    /// field modulus for generic matrices
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    field_prime: u64,
    /// state budget for the val search
    #[arg(long, global = true, default_value_t = 1 << 24)]
    budget_states: u64,
    /// worker threads for the registry
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// output format (json only)
    #[arg(long, global = true, default_value = "json")]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Rank of a target set in a matroid
    Rank {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        target: String,
    },
    /// Minimise val over proper sequences of a family; emits a certificate
    Val {
        #[arg(long)]
        family: String,
        #[arg(long)]
        host: String,
        #[arg(long)]
        target: String,
        /// optional matroid spec used as a sound lower-bound oracle
        #[arg(long)]
        oracle: Option<String>,
    },
    /// Certify every connected flat of a matroid against a family
    Certify {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        family: String,
        #[arg(long)]
        host: String,
    },
    /// Free erection of a matroid
    Erect {
        #[arg(long)]
        matroid: String,
    },
    /// Free elevation chain of a matroid
    Elevate {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        rank_cap: Option<usize>,
    },
    /// Weak-order comparison of two matroids
    Compare {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Run a property checker
    Check {
        /// x-matroid | x-cyclic | x-covering | 0-extension |
        /// diamond-splitting | circuits-2-connected | symmetry
        #[arg(long)]
        property: String,
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        host: Option<String>,
        #[arg(long, default_value_t = 500)]
        samples: u64,
        #[arg(long, default_value_t = false)]
        exhaustive: bool,
    },
    /// Run registry experiments (all, by id, or by substring filter)
    Reproduce {
        /// experiment id or substring; empty runs everything
        filter: Option<String>,
        /// write one artifact JSON per experiment into this directory
        #[arg(long)]
        out: Option<String>,
        /// list the registry instead of running it
        #[arg(long, default_value_t = false)]
        list: bool,
        /// audit the provenance notes of every expected value
        #[arg(long, default_value_t = false)]
        lint: bool,
    },
    /// Re-check a certificate produced by `val` or `certify`
    Verify {
        /// certificate JSON file
        cert: String,
        #[arg(long)]
        family: String,
        #[arg(long)]
        host: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.global.format != "json" {
        eprintln!("only --format json is supported");
        return ExitCode::from(64);
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            let usage = matches!(e, Error::InvalidInput(_));
            eprintln!("error: {e}");
            if usage {
                ExitCode::from(64)
            } else if matches!(e, Error::BudgetExceeded { .. }) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let g = &cli.global;
    let matroid_of = |s: &str| parse_matroid(s, g.seed, g.field_prime, g.trials, g.budget_states);
    match cli.command {
        Command::Rank { matroid, target } => {
            let m = matroid_of(&matroid)?;
            let t = parse_target(&target, m.ground_size())?;
            let rank = m.rank(t);
            emit(json!({"schema": 1, "rank": rank, "target": t.to_ids()}));
            Ok(ExitCode::SUCCESS)
        }
        Command::Val { family, host, target, oracle } => {
            let h = parse_host(&host)?;
            let fam = parse_family(&family, &h)?;
            let t = parse_target(&target, h.ground().size())?;
            let oracle_m = match &oracle {
                Some(s) => Some(matroid_of(s)?),
                None => None,
            };
            let res = compute_val(&fam, t, oracle_m.as_ref(), g.budget_states)?;
            emit(json!({
                "schema": 1,
                "value": res.value,
                "exact": res.exact,
                "states": res.stats.states,
                "certificate": res.witness,
            }));
            Ok(if res.exact {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Certify { matroid, family, host } => {
            let h = parse_host(&host)?;
            let fam = parse_family(&family, &h)?;
            let m = matroid_of(&matroid)?;
            let out = certify_connected_flats(&m, &fam, 1 << 22, g.budget_states)?;
            emit(json!({
                "schema": 1,
                "flats_checked": out.flats_checked,
                "success": out.success(),
                "certificates": out.certificates,
                "failures": out.failures.iter().map(|(f, v, r)| json!({
                    "flat": f.to_ids(), "val": v, "rank": r,
                })).collect::<Vec<_>>(),
            }));
            Ok(if out.success() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Erect { matroid } => {
            let m = matroid_of(&matroid)?;
            let res = free_erection(&m, &ErectionBudget::default())?;
            emit(json!({
                "schema": 1,
                "trivial": res.trivial,
                "rank": res.matroid.rank_full(),
                "matroid": MatroidJson::from_matroid(&res.matroid)?,
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Elevate { matroid, rank_cap } => {
            let m = matroid_of(&matroid)?;
            let chain = free_elevation(&m, rank_cap, &ErectionBudget::default())?;
            let stages = chain
                .stages
                .iter()
                .map(|s| {
                    Ok(ElevationStageJson {
                        rank: s.rank_full(),
                        matroid: MatroidJson::from_matroid(s)?,
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            emit(json!({
                "schema": 1,
                "chain": ElevationChainJson { stages, aborted_at_cap: chain.aborted_at_cap },
            }));
            Ok(if chain.aborted_at_cap {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Compare { left, right } => {
            let a = matroid_of(&left)?;
            let b = matroid_of(&right)?;
            let cmp = a.weak_order_compare(&b, 1 << 26)?;
            emit(json!({"schema": 1, "comparison": cmp}));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { property, matroid, family, host, samples, exhaustive } => {
            let m = matroid_of(&matroid)?;
            let host_graph = match &host {
                Some(h) => Some(parse_host(h)?),
                None => None,
            };
            let fam = match (&family, &host_graph) {
                (Some(f), Some(h)) => Some(parse_family(f, h)?),
                (Some(_), None) => {
                    return Err(Error::InvalidInput("--family needs --host".into()))
                }
                _ => None,
            };
            let need_fam = || {
                fam.clone()
                    .ok_or_else(|| Error::InvalidInput("this property needs --family".into()))
            };
            let need_host = || {
                host_graph
                    .clone()
                    .ok_or_else(|| Error::InvalidInput("this property needs --host".into()))
            };
            let mode = if exhaustive {
                CheckMode::Exhaustive
            } else {
                CheckMode::Sampled { samples, seed: g.seed }
            };
            let report = match property.as_str() {
                "x-matroid" => checks::is_x_matroid(&m, &need_fam()?),
                "x-cyclic" => checks::is_x_cyclic(&m, &need_fam()?),
                "x-covering" => checks::has_x_covering(&m, &need_fam()?, 1 << 22)?,
                "0-extension" => checks::zero_extension_check(&m, &need_host()?, mode)?,
                "diamond-splitting" => checks::diamond_splitting_check(&m, &need_host()?, mode)?,
                "circuits-2-connected" => {
                    checks::circuits_two_connected_check(&m, &need_host()?, 10, 1 << 24)?
                }
                "symmetry" => checks::symmetry_check(&m, &need_host()?, samples, g.seed)?,
                other => {
                    return Err(Error::InvalidInput(format!("unknown property {other}")))
                }
            };
            emit(json!({"schema": 1, "report": report}));
            Ok(match report.verdict {
                checks::Verdict::Pass => ExitCode::SUCCESS,
                checks::Verdict::Fail => ExitCode::FAILURE,
                checks::Verdict::InconclusiveSampled => ExitCode::from(2),
            })
        }
        Command::Reproduce { filter, out, list, lint } => {
            if list || lint {
                let rows: Vec<_> = experiments()
                    .iter()
                    .map(|e| {
                        if lint {
                            json!({"id": e.id, "basis": e.basis})
                        } else {
                            json!({"id": e.id, "description": e.description})
                        }
                    })
                    .collect();
                emit(json!({"schema": 1, "experiments": rows}));
                return Ok(ExitCode::SUCCESS);
            }
            let cfg = RunConfig {
                seed: g.seed,
                trials: g.trials,
                field_prime: g.field_prime,
                state_budget: g.budget_states,
            };
            let results = reproduce_all(filter.as_deref().unwrap_or(""), &cfg, g.threads.max(1));
            if results.is_empty() {
                return Err(Error::InvalidInput(format!(
                    "no experiment matches {:?}",
                    filter.unwrap_or_default()
                )));
            }
            if let Some(dir) = &out {
                std::fs::create_dir_all(dir)
                    .map_err(|e| Error::InvalidInput(format!("cannot create {dir}: {e}")))?;
                for r in &results {
                    let path = format!("{dir}/{}.json", r.id);
                    let mut f = std::fs::File::create(&path)
                        .map_err(|e| Error::InvalidInput(format!("cannot write {path}: {e}")))?;
                    let text = serde_json::to_string_pretty(&r.artifact).unwrap();
                    f.write_all(text.as_bytes())
                        .map_err(|e| Error::InvalidInput(format!("cannot write {path}: {e}")))?;
                }
            }
            let mut worst = Outcome::Pass;
            for r in &results {
                eprintln!(
                    "{} {} ({} ms)",
                    match r.outcome {
                        Outcome::Pass => "PASS",
                        Outcome::Fail => "FAIL",
                        Outcome::Inconclusive => "INCONCLUSIVE",
                    },
                    r.id,
                    r.millis
                );
                match (r.outcome, worst) {
                    (Outcome::Fail, _) => worst = Outcome::Fail,
                    (Outcome::Inconclusive, Outcome::Pass) => worst = Outcome::Inconclusive,
                    _ => {}
                }
            }
            let summary: Vec<_> = results
                .iter()
                .map(|r| json!({"id": r.id, "outcome": r.outcome}))
                .collect();
            emit(json!({"schema": 1, "results": summary}));
            Ok(match worst {
                Outcome::Pass => ExitCode::SUCCESS,
                Outcome::Fail => ExitCode::FAILURE,
                Outcome::Inconclusive => ExitCode::from(2),
            })
        }
        Command::Verify { cert, family, host } => {
            let h = parse_host(&host)?;
            let fam = parse_family(&family, &h)?;
            let text = std::fs::read_to_string(&cert)
                .map_err(|e| Error::InvalidInput(format!("cannot read {cert}: {e}")))?;
            let parsed: Certificate = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidInput(format!("bad certificate JSON: {e}")))?;
            match verify_certificate(&fam, &parsed) {
                Ok(()) => {
                    emit(json!({"schema": 1, "verified": true, "value": parsed.value}));
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    emit(json!({"schema": 1, "verified": false, "reason": e.to_string()}));
                    Ok(ExitCode::FAILURE)
                }
            }
        }
    }
}

fn emit(v: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&v).unwrap());
}
