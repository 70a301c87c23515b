//! Matroids induced by monotone submodular integer count functions.
//!
//! The built-in functions are the vertex count `a|V(F)| - b`, the
//! bipartite-aware count `a|V(F)| - b·β(F) - c` on complete hosts (β is the
//! number of bipartite connected components), and the picture-lifting count
//! `|U(F)| + k|W(F)| - k` on bipartite hosts. A custom integer oracle can be
//! supplied and is scan-verified on small grounds.
//!
//! Independence of `F` means `|I| <= f(I)` for every nonempty `I ⊆ F`; rank
//! comes from greedy growth, which is exact for matroids. A brute-force rank
//! oracle evaluating the partition minimisation directly is kept for tests
//! on at most 10 elements.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::bits::{subsets_of, ElementSet};
use crate::error::{Error, Result};
use crate::graphs::HostGraph;
use crate::matroid::{Matroid, RankOracle};
use crate::pebble::pebble_game_rank;

/// Exhaustive subset scans are only attempted up to this set size.
const SCAN_LIMIT: usize = 22;

#[derive(Clone)]
pub enum CountKind {
    /// f_{a,b}(F) = a|V(F)| - b
    VertexCount { a: i64, b: i64 },
    /// g_{a,b,c}(F) = a|V(F)| - b*beta(F) - c
    BipartiteCount { a: i64, b: i64, c: i64 },
    /// h(F) = |U(F)| + k|W(F)| - k on a bipartite host
    PictureLifting { k: i64 },
    /// arbitrary integer oracle over edge sets
    Custom(Arc<dyn Fn(ElementSet) -> i64 + Send + Sync>),
}

impl std::fmt::Debug for CountKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CountKind::VertexCount { a, b } => write!(f, "f({a},{b})"),
            CountKind::BipartiteCount { a, b, c } => write!(f, "g({a},{b},{c})"),
            CountKind::PictureLifting { k } => write!(f, "h(k={k})"),
            CountKind::Custom(_) => write!(f, "custom"),
        }
    }
}

/// A count function bound to its host graph.
#[derive(Clone, Debug)]
pub struct CountFunction {
    kind: CountKind,
    host: HostGraph,
}

impl CountFunction {
    pub fn vertex_count(a: i64, b: i64, host: HostGraph) -> Result<Self> {
        if a < 0 {
            return Err(Error::ParamRange(format!("f({a},{b}) needs a >= 0")));
        }
        Ok(CountFunction {
            kind: CountKind::VertexCount { a, b },
            host,
        })
    }

    pub fn bipartite_count(a: i64, b: i64, c: i64, host: HostGraph) -> Result<Self> {
        if !(a >= b && b >= 0) {
            return Err(Error::ParamRange(format!("g({a},{b},{c}) needs a >= b >= 0")));
        }
        Ok(CountFunction {
            kind: CountKind::BipartiteCount { a, b, c },
            host,
        })
    }

    pub fn picture_lifting(k: i64, host: HostGraph) -> Result<Self> {
        if k < 1 {
            return Err(Error::ParamRange(format!("picture lifting needs k >= 1, got {k}")));
        }
        if host.sides().is_none() {
            return Err(Error::ParamRange("picture lifting needs a bipartite host".into()));
        }
        Ok(CountFunction {
            kind: CountKind::PictureLifting { k },
            host,
        })
    }

    /// Custom oracle, scan-verified monotone and submodular on nonempty sets
    /// when the ground has at most 14 elements.
    pub fn custom(
        oracle: Arc<dyn Fn(ElementSet) -> i64 + Send + Sync>,
        host: HostGraph,
    ) -> Result<Self> {
        let n = host.ground().size();
        if n <= 14 {
            let full = host.ground().full_set();
            for s in subsets_of(full) {
                if s.is_empty() {
                    continue;
                }
                for e in full.difference(s).iter() {
                    if oracle(s.with(e)) < oracle(s) {
                        return Err(Error::ParamRange(format!(
                            "custom count not monotone at {s:?} + {e}"
                        )));
                    }
                }
                // local submodularity
                for e in full.difference(s).iter() {
                    for f2 in full.difference(s).iter() {
                        if f2 <= e {
                            continue;
                        }
                        if oracle(s.with(e)) + oracle(s.with(f2))
                            < oracle(s.with(e).with(f2)) + oracle(s)
                        {
                            return Err(Error::ParamRange(format!(
                                "custom count not submodular at {s:?} with {e},{f2}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(CountFunction {
            kind: CountKind::Custom(oracle),
            host,
        })
    }

    pub fn host(&self) -> &HostGraph {
        &self.host
    }

    pub fn kind(&self) -> &CountKind {
        &self.kind
    }

    /// Exact value; the empty set evaluates to 0 so rank formulas stay total.
    pub fn eval(&self, f: ElementSet) -> i64 {
        if f.is_empty() {
            return 0;
        }
        match &self.kind {
            CountKind::VertexCount { a, b } => a * self.host.vertex_count_of(f) as i64 - b,
            CountKind::BipartiteCount { a, b, c } => {
                let v = self.host.vertex_count_of(f) as i64;
                let beta = self.host.bipartite_component_count(f) as i64;
                a * v - b * beta - c
            }
            CountKind::PictureLifting { k } => {
                let (m, _) = self.host.sides().expect("bipartite host");
                let vmask = self.host.vertices_of(f);
                let u = (vmask & ((1u64 << m) - 1)).count_ones() as i64;
                let w = (vmask >> m).count_ones() as i64;
                u + k * w - k
            }
            CountKind::Custom(oracle) => oracle(f),
        }
    }

    /// The pebble-game fast path applies to vertex counts with
    /// `0 <= b <= 2a - 1`.
    fn pebble_params(&self) -> Option<(usize, usize)> {
        match self.kind {
            CountKind::VertexCount { a, b } if a >= 1 && b >= 0 && b <= 2 * a - 1 => {
                Some((a as usize, b as usize))
            }
            _ => None,
        }
    }
}

/// Is `f` independent in the induced matroid? Returns the first violating
/// subset in canonical order otherwise.
pub fn induced_independent(f: &CountFunction, set: ElementSet) -> Result<(bool, Option<ElementSet>)> {
    if set.len() > SCAN_LIMIT {
        return Err(Error::BudgetExceeded {
            op: "isInducedIndependent",
            detail: format!("set of {} elements exceeds scan limit {SCAN_LIMIT}", set.len()),
        });
    }
    let mut violations: Vec<ElementSet> = Vec::new();
    for sub in subsets_of(set) {
        if sub.is_empty() {
            continue;
        }
        if (sub.len() as i64) > f.eval(sub) {
            violations.push(sub);
        }
    }
    if violations.is_empty() {
        Ok((true, None))
    } else {
        violations.sort_by_key(|s| s.canonical_key());
        Ok((false, Some(violations[0])))
    }
}

/// Incremental independence: assumes `base` independent, tests `base + e`.
/// Only subsets through `e` need checking.
fn independent_with(f: &CountFunction, base: ElementSet, e: usize) -> bool {
    for sub in subsets_of(base) {
        let cand = sub.with(e);
        if (cand.len() as i64) > f.eval(cand) {
            return false;
        }
    }
    true
}

/// Rank of `set` in the induced matroid, greedy over ascending elements.
pub fn induced_rank(f: &CountFunction, set: ElementSet) -> Result<usize> {
    if let Some((a, b)) = f.pebble_params() {
        return pebble_game_rank(a, b, set, f.host());
    }
    let mut basis = ElementSet::empty();
    for e in set.iter() {
        if basis.len() >= SCAN_LIMIT {
            return Err(Error::BudgetExceeded {
                op: "inducedRank",
                detail: "independent prefix exceeds scan limit".into(),
            });
        }
        if independent_with(f, basis, e) {
            basis.insert(e);
        }
    }
    Ok(basis.len())
}

/// Greedy maximal independent subset, same order as `induced_rank`.
pub fn induced_basis(f: &CountFunction, set: ElementSet) -> Result<ElementSet> {
    if let Some((a, b)) = f.pebble_params() {
        // replay the greedy order with pebble independence
        let mut basis = ElementSet::empty();
        for e in set.iter() {
            let cand = basis.with(e);
            if pebble_game_rank(a, b, cand, f.host())? == cand.len() {
                basis = cand;
            }
        }
        return Ok(basis);
    }
    let mut basis = ElementSet::empty();
    for e in set.iter() {
        if independent_with(f, basis, e) {
            basis.insert(e);
        }
    }
    Ok(basis)
}

/// Brute-force evaluation of the induced rank formula: minimum of
/// `|F0| + Σ f(Fi)` over all `F0 ⊆ F` and partitions of the rest.
/// Test oracle only; grows with the Bell numbers.
pub fn induced_rank_brute(f: &CountFunction, set: ElementSet) -> Result<usize> {
    if set.len() > 10 {
        return Err(Error::BudgetExceeded {
            op: "inducedRankBrute",
            detail: "brute rank oracle capped at 10 elements".into(),
        });
    }
    let mut best = i64::MAX;
    for f0 in subsets_of(set) {
        let rest = set.difference(f0);
        let base = f0.len() as i64;
        if base >= best {
            continue;
        }
        min_partition_sum(f, rest, base, &mut best);
    }
    Ok(best as usize)
}

fn min_partition_sum(f: &CountFunction, rest: ElementSet, acc: i64, best: &mut i64) {
    if acc >= *best {
        return;
    }
    if rest.is_empty() {
        *best = acc;
        return;
    }
    // first element goes into a block; enumerate the block's other members
    let first = rest.iter().next().unwrap();
    let others = rest.without(first);
    for tail in subsets_of(others) {
        let block = tail.with(first);
        min_partition_sum(f, rest.difference(block), acc + f.eval(block), best);
    }
}

/// Circuit characterisation: `|F| = f(F) + 1 != 0` and every proper
/// nonempty subset satisfies the count.
pub fn induced_circuit_check(f: &CountFunction, set: ElementSet) -> Result<bool> {
    if set.is_empty() {
        return Ok(false);
    }
    if set.len() > SCAN_LIMIT {
        return Err(Error::BudgetExceeded {
            op: "inducedCircuitCheck",
            detail: "set exceeds scan limit".into(),
        });
    }
    if set.len() as i64 != f.eval(set) + 1 {
        return Ok(false);
    }
    for sub in subsets_of(set) {
        if sub.is_empty() || sub == set {
            continue;
        }
        if (sub.len() as i64) > f.eval(sub) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Flat characterisation: `f(F + e) = f(F) + 1` for every host edge outside.
pub fn induced_flat_check(f: &CountFunction, set: ElementSet) -> bool {
    let full = f.host().ground().full_set();
    let fv = f.eval(set);
    full.difference(set).iter().all(|e| f.eval(set.with(e)) == fv + 1)
}

/// Rank oracle wrapper so induced matroids plug into the matroid machinery.
pub struct InducedMatroid {
    f: CountFunction,
    cache: Mutex<HashMap<u64, usize>>,
}

impl InducedMatroid {
    pub fn new(f: CountFunction) -> Self {
        InducedMatroid {
            f,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn function(&self) -> &CountFunction {
        &self.f
    }
}

impl RankOracle for InducedMatroid {
    fn rank(&self, set: ElementSet) -> usize {
        if let Some(&r) = self.cache.lock().unwrap().get(&set.0) {
            return r;
        }
        let r = induced_rank(&self.f, set).expect("induced rank within budget");
        self.cache.lock().unwrap().insert(set.0, r);
        r
    }
}

/// The induced matroid as a `Matroid` value over the host's ground set.
pub fn induced_matroid(f: &CountFunction) -> Matroid {
    Matroid::from_oracle(
        f.host().ground().clone(),
        Arc::new(InducedMatroid::new(f.clone())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> HostGraph {
        HostGraph::complete(4).unwrap()
    }

    #[test]
    fn eval_matches_definitions() {
        let host = k4();
        let f23 = CountFunction::vertex_count(2, 3, host.clone()).unwrap();
        assert_eq!(f23.eval(host.ground().full_set()), 5);

        let g110 = CountFunction::bipartite_count(1, 1, 0, host.clone()).unwrap();
        // C4 in K4: edges 01,12,23,03
        let c4 = ElementSet::from_ids([
            host.edge_id(0, 1).unwrap(),
            host.edge_id(1, 2).unwrap(),
            host.edge_id(2, 3).unwrap(),
            host.edge_id(0, 3).unwrap(),
        ]);
        assert_eq!(g110.eval(c4), 3);

        let k33 = HostGraph::complete_bipartite(3, 3).unwrap();
        let h2 = CountFunction::picture_lifting(2, k33.clone()).unwrap();
        let rooted = crate::graphs::rooted_copies(3, 2, &k33).unwrap();
        assert_eq!(h2.eval(rooted.members()[0]), 5);
    }

    #[test]
    fn k4_is_a_circuit_of_f23() {
        let host = k4();
        let f23 = CountFunction::vertex_count(2, 3, host.clone()).unwrap();
        let full = host.ground().full_set();
        assert!(induced_circuit_check(&f23, full).unwrap());
        let (ok, witness) = induced_independent(&f23, full).unwrap();
        assert!(!ok);
        assert_eq!(witness, Some(full));
        let (ok, _) = induced_independent(&f23, full.without(0)).unwrap();
        assert!(ok);
    }

    #[test]
    fn parameter_ranges_enforced() {
        let host = k4();
        assert!(CountFunction::vertex_count(-1, 0, host.clone()).is_err());
        assert!(CountFunction::bipartite_count(1, 2, 0, host.clone()).is_err());
        assert!(CountFunction::picture_lifting(0, HostGraph::complete_bipartite(2, 2).unwrap()).is_err());
        assert!(CountFunction::picture_lifting(1, host).is_err());
    }
}
