use std::time::Instant;
use xmatroid::graphs::{enumerate_copies, HostGraph, PatternSpec};
use xmatroid::valseq::{val_submodularity_scan, ScanMode, ValEngine};

fn main() {
    let t = Instant::now();
    let k7 = HostGraph::complete(7).unwrap();
    let fam = enumerate_copies(&PatternSpec::Biclique(2, 3), &k7).unwrap();
    let engine = ValEngine::build(&fam, 1 << 25);
    println!("engine: {} states exact={} [{:?}]", engine.state_count(), engine.exact(), t.elapsed());
    let t = Instant::now();
    for samples in [20_000u64, 100_000] {
        let v = val_submodularity_scan(&fam, ScanMode::Sampled { samples, seed: 7 }, 1 << 25).unwrap();
        println!("samples {samples}: {} violations [{:?}]", v.len(), t.elapsed());
        if let Some(first) = v.first() {
            println!("  witness: {:?}", first);
            break;
        }
    }
}
