//! Named weakly-saturated-sequence constructions.
//!
//! Each constructor fixes the documented start set (whose size matches the
//! count value of the target) and completes it to a validated sequence by
//! the deterministic search in `valseq`. The start sets follow the explicit
//! constructions used for matchings, paths, cliques, 4-cycles (complete and
//! bipartite targets), near-cliques, bicliques and rooted bicliques.

use crate::bits::ElementSet;
use crate::error::{Error, Result};
use crate::graphs::{enumerate_copies, rooted_copies, CopyFamily, HostGraph, PatternSpec};
use crate::valseq::{is_weakly_saturated, search_weak_sat, WeakSatSequence};

#[derive(Clone, Copy, Debug)]
pub enum WeakSatKind {
    /// k disjoint edges building E(K_n), n >= 2k+1
    Matchings { k: usize, n: usize },
    /// path with k edges building E(K_n), n >= k+1
    Paths { k: usize, n: usize },
    /// K_{d+2} building E(K_m) from a clique-plus-cone start
    Cliques { d: usize, m: usize },
    /// C_4 building E(K_m) from a star plus one edge
    CycleComplete { m: usize },
    /// C_4 building the K_{s,t} subgraph of K_{s+t} from a double star
    CycleBipartite { s: usize, t: usize },
    /// K_5 minus an edge building E(K_m)
    K5MinusComplete { m: usize },
    /// K_{3,4} building the K_{s,t} subgraph of K_{s+t}
    K34Bipartite { s: usize, t: usize },
    /// K_{2,3} building all of the bipartite host K_{s,t}
    K23Bipartite { s: usize, t: usize },
    /// rooted K_{k+1,2} building all of K_{m,n}
    RootedK2 { k: usize, m: usize, n: usize },
}

#[derive(Clone, Debug)]
pub struct WeakSatConstruction {
    pub family: CopyFamily,
    pub sequence: WeakSatSequence,
    /// the constructed set, equal to base plus the union of the steps
    pub target: ElementSet,
}

const SEARCH_BUDGET: u64 = 5_000_000;

/// Build the named construction and validate it.
pub fn construct_weak_sat(kind: WeakSatKind) -> Result<WeakSatConstruction> {
    let (family, base, target) = match kind {
        WeakSatKind::Matchings { k, n } => {
            if k < 1 || n < 2 * k + 1 {
                return Err(Error::ParamRange(format!(
                    "matchings need n >= 2k+1, got k={k}, n={n}"
                )));
            }
            let host = HostGraph::complete(n)?;
            let family = enumerate_copies(&PatternSpec::Matching(k), &host)?;
            let base = ElementSet::from_ids(
                (0..k).map(|i| host.edge_id(2 * i, 2 * i + 1).unwrap()),
            );
            let target = host.ground().full_set();
            (family, base, target)
        }
        WeakSatKind::Paths { k, n } => {
            if k < 1 || n < k + 1 {
                return Err(Error::ParamRange(format!(
                    "paths need n >= k+1, got k={k}, n={n}"
                )));
            }
            let host = HostGraph::complete(n)?;
            let family = enumerate_copies(&PatternSpec::Path(k), &host)?;
            let base = ElementSet::from_ids((0..k).map(|i| host.edge_id(i, i + 1).unwrap()));
            let target = host.ground().full_set();
            (family, base, target)
        }
        WeakSatKind::Cliques { d, m } => {
            if d < 1 || m < d + 2 {
                return Err(Error::ParamRange(format!(
                    "cliques need m >= d+2, got d={d}, m={m}"
                )));
            }
            let host = HostGraph::complete(m)?;
            let family = enumerate_copies(&PatternSpec::Clique(d + 2), &host)?;
            let mut base = ElementSet::empty();
            for i in 0..d {
                for j in i + 1..d {
                    base.insert(host.edge_id(i, j).unwrap());
                }
                for j in d..m {
                    base.insert(host.edge_id(i, j).unwrap());
                }
            }
            let target = host.ground().full_set();
            (family, base, target)
        }
        WeakSatKind::CycleComplete { m } => {
            if m < 4 {
                return Err(Error::ParamRange("4-cycles on K_m need m >= 4".into()));
            }
            let host = HostGraph::complete(m)?;
            let family = enumerate_copies(&PatternSpec::Cycle(4), &host)?;
            let mut base = ElementSet::singleton(host.edge_id(1, 2).unwrap());
            for i in 1..m {
                base.insert(host.edge_id(0, i).unwrap());
            }
            let target = host.ground().full_set();
            (family, base, target)
        }
        WeakSatKind::CycleBipartite { s, t } => {
            if s < 2 || t < 2 {
                return Err(Error::ParamRange("bipartite 4-cycle targets need s,t >= 2".into()));
            }
            let host = HostGraph::complete(s + t)?;
            let family = enumerate_copies(&PatternSpec::Cycle(4), &host)?;
            let mut base = ElementSet::empty();
            for j in 0..t {
                base.insert(host.edge_id(0, s + j).unwrap());
            }
            for i in 1..s {
                base.insert(host.edge_id(i, s).unwrap());
            }
            let mut target = ElementSet::empty();
            for i in 0..s {
                for j in 0..t {
                    target.insert(host.edge_id(i, s + j).unwrap());
                }
            }
            (family, base, target)
        }
        WeakSatKind::K5MinusComplete { m } => {
            if m < 5 {
                return Err(Error::ParamRange("K5-minus sequences need m >= 5".into()));
            }
            let host = HostGraph::complete(m)?;
            let family = enumerate_copies(&PatternSpec::CliqueMinus(5), &host)?;
            let mut base = ElementSet::from_ids([
                host.edge_id(0, 1).unwrap(),
                host.edge_id(2, 3).unwrap(),
            ]);
            for i in 0..2 {
                for j in 2..m {
                    base.insert(host.edge_id(i, j).unwrap());
                }
            }
            let target = host.ground().full_set();
            (family, base, target)
        }
        WeakSatKind::K34Bipartite { s, t } => {
            if s < 3 || t < 4 {
                return Err(Error::ParamRange("K_{3,4} targets need s >= 3, t >= 4".into()));
            }
            let host = HostGraph::complete(s + t)?;
            let family = enumerate_copies(&PatternSpec::Biclique(3, 4), &host)?;
            let mut base = ElementSet::empty();
            for i in 0..3 {
                for j in 0..3 {
                    base.insert(host.edge_id(i, s + j).unwrap());
                }
            }
            for i in 0..2 {
                for j in 3..t {
                    base.insert(host.edge_id(i, s + j).unwrap());
                }
            }
            for i in 3..s {
                for j in 0..2 {
                    base.insert(host.edge_id(i, s + j).unwrap());
                }
            }
            let mut target = ElementSet::empty();
            for i in 0..s {
                for j in 0..t {
                    target.insert(host.edge_id(i, s + j).unwrap());
                }
            }
            (family, base, target)
        }
        WeakSatKind::K23Bipartite { s, t } => {
            if s < 2 || t < 3 {
                return Err(Error::ParamRange("K_{2,3} on K_{s,t} needs s >= 2, t >= 3".into()));
            }
            let host = HostGraph::complete_bipartite(s, t)?;
            let family = enumerate_copies(&PatternSpec::Biclique(2, 3), &host)?;
            let mut base = ElementSet::singleton(host.edge_id(1, s + 1).unwrap());
            for j in 0..t {
                base.insert(host.edge_id(0, s + j).unwrap());
            }
            for i in 1..s {
                base.insert(host.edge_id(i, s).unwrap());
            }
            let target = host.ground().full_set();
            (family, base, target)
        }
        WeakSatKind::RootedK2 { k, m, n } => {
            if k < 1 || m < k + 1 || n < 2 {
                return Err(Error::ParamRange(format!(
                    "rooted K_{{k+1,2}} needs m >= k+1 and n >= 2, got k={k}, m={m}, n={n}"
                )));
            }
            let host = HostGraph::complete_bipartite(m, n)?;
            let family = rooted_copies(k + 1, 2, &host)?;
            let mut base = ElementSet::empty();
            for i in 0..m {
                base.insert(host.edge_id(i, m).unwrap());
            }
            for i in 0..k {
                for j in 1..n {
                    base.insert(host.edge_id(i, m + j).unwrap());
                }
            }
            let target = host.ground().full_set();
            (family, base, target)
        }
    };
    let sequence = search_weak_sat(&family, base, target, SEARCH_BUDGET)?.ok_or_else(|| {
        Error::InvalidInput(format!("no weakly saturated sequence found for {kind:?}"))
    })?;
    let built = is_weakly_saturated(&family, &sequence)?;
    debug_assert_eq!(built, target);
    Ok(WeakSatConstruction {
        family,
        sequence,
        target,
    })
}

/// Report on a candidate 10-edge pattern proposed as the minimum-degree-one
/// union-stable graph whose copies weakly saturate complete hosts from a
/// biclique start. No candidate is asserted here; this validates proposals.
#[derive(Clone, Debug)]
pub struct CandidateReport {
    pub edge_count: usize,
    pub min_degree: usize,
    pub union_stable: bool,
    pub stability_witness: Option<(ElementSet, ElementSet, usize)>,
    /// saturates the host from the canonical K_{2,3} start; `None` when the
    /// search budget ran out before deciding
    pub saturates_from_k23: Option<bool>,
}

impl CandidateReport {
    pub fn qualifies(&self) -> bool {
        self.edge_count == 10
            && self.min_degree == 1
            && self.union_stable
            && self.saturates_from_k23 == Some(true)
    }
}

/// Machine-check a candidate pattern against the documented properties:
/// ten edges, minimum degree one, union-stable on the complete host, and
/// the host constructible from a K_{2,3} start by a weakly saturated
/// sequence of its copies.
pub fn validate_candidate_pattern(
    pattern_vertices: usize,
    pattern_edges: &[(usize, usize)],
    host_n: usize,
    budget: u64,
) -> Result<CandidateReport> {
    let pattern = PatternSpec::Explicit {
        n: pattern_vertices,
        edges: pattern_edges.to_vec(),
    };
    let mut degree = vec![0usize; pattern_vertices];
    for &(a, b) in pattern_edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let min_degree = degree.iter().copied().min().unwrap_or(0);
    let host = HostGraph::complete(host_n)?;
    let family = enumerate_copies(&pattern, &host)?;
    let (union_stable, stability_witness) = crate::graphs::is_union_stable(&family)?;
    let saturates = if union_stable {
        let start = enumerate_copies(&PatternSpec::Biclique(2, 3), &host)?.members()[0];
        match search_weak_sat(&family, start, host.ground().full_set(), budget) {
            Ok(found) => Some(found.is_some()),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    Ok(CandidateReport {
        edge_count: pattern_edges.len(),
        min_degree,
        union_stable,
        stability_witness,
        saturates_from_k23: saturates,
    })
}

/// Expected start-set size for each construction (the count value of the
/// target in the matching induced matroid).
pub fn expected_base_size(kind: WeakSatKind) -> usize {
    match kind {
        WeakSatKind::Matchings { k, .. } => k,
        WeakSatKind::Paths { k, .. } => k,
        WeakSatKind::Cliques { d, m } => d * (d - 1) / 2 + d * (m - d),
        WeakSatKind::CycleComplete { m } => m,
        WeakSatKind::CycleBipartite { s, t } => s + t - 1,
        WeakSatKind::K5MinusComplete { m } => 2 * m - 2,
        WeakSatKind::K34Bipartite { s, t } => 2 * (s + t) - 3,
        WeakSatKind::K23Bipartite { s, t } => s + t,
        WeakSatKind::RootedK2 { k, m, n } => m + k * n - k,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_construction_validates() {
        let c = construct_weak_sat(WeakSatKind::Matchings { k: 2, n: 5 }).unwrap();
        assert_eq!(
            c.sequence.base_set().len(),
            expected_base_size(WeakSatKind::Matchings { k: 2, n: 5 })
        );
        let built = is_weakly_saturated(&c.family, &c.sequence).unwrap();
        assert_eq!(built, c.target);
        assert_eq!(built.len(), 10);
    }

    #[test]
    fn clique_construction_matches_star_start() {
        // triangles from a spanning star
        let c = construct_weak_sat(WeakSatKind::Cliques { d: 1, m: 4 }).unwrap();
        assert_eq!(c.sequence.base_set().len(), 3);
        assert_eq!(is_weakly_saturated(&c.family, &c.sequence).unwrap().len(), 6);
    }

    #[test]
    fn triangle_family_cannot_grow_from_one_edge() {
        let host = HostGraph::complete(4).unwrap();
        let tri = enumerate_copies(&PatternSpec::Clique(3), &host).unwrap();
        let base = ElementSet::singleton(0);
        let res = search_weak_sat(&tri, base, host.ground().full_set(), 10_000).unwrap();
        assert!(res.is_none());
    }

    #[test]
    fn out_of_range_parameters_rejected() {
        assert!(construct_weak_sat(WeakSatKind::Matchings { k: 3, n: 6 }).is_err());
        assert!(construct_weak_sat(WeakSatKind::K34Bipartite { s: 2, t: 4 }).is_err());
    }

    #[test]
    fn candidate_validator_rejects_a_book_with_pendant() {
        // 10 edges, 7 vertices, minimum degree one, but not union-stable
        let edges = vec![
            (0, 1),
            (0, 2),
            (1, 2),
            (0, 3),
            (1, 3),
            (0, 4),
            (1, 4),
            (0, 5),
            (1, 5),
            (5, 6),
        ];
        let report = validate_candidate_pattern(7, &edges, 8, 200_000).unwrap();
        assert_eq!(report.edge_count, 10);
        assert_eq!(report.min_degree, 1);
        assert!(!report.union_stable);
        assert!(!report.qualifies());
    }
}
