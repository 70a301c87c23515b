//! Decidable predicates used in hypotheses and equivalence statements:
//! circuit/cyclic family membership, covering by a family, 0-extension and
//! diamond splitting, rank and degree bounds, 2-connected circuits, and
//! rank symmetry under vertex transpositions.
//!
//! Every failing report carries a witness that re-validates independently.
//! Sampled runs never claim an exhaustive pass.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::bits::{binomial, subsets_of, ElementSet};
use crate::error::{Error, Result};
use crate::graphs::{CopyFamily, HostGraph};
use crate::matroid::Matroid;

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// a sampled scan with zero failures; not an exhaustive claim
    InconclusiveSampled,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Coverage {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub property: String,
    pub verdict: Verdict,
    pub witness: Option<serde_json::Value>,
    pub coverage: Coverage,
}

impl CheckReport {
    fn pass(property: &str, coverage: Coverage) -> Self {
        let verdict = match coverage {
            Coverage::Exhaustive => Verdict::Pass,
            Coverage::Sampled { .. } => Verdict::InconclusiveSampled,
        };
        CheckReport {
            property: property.to_string(),
            verdict,
            witness: None,
            coverage,
        }
    }

    fn fail(property: &str, coverage: Coverage, witness: serde_json::Value) -> Self {
        CheckReport {
            property: property.to_string(),
            verdict: Verdict::Fail,
            witness: Some(witness),
            coverage,
        }
    }

    pub fn ok(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

#[derive(Clone, Copy, Debug)]
pub enum CheckMode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

/// Every family member is a circuit of `m`.
pub fn is_x_matroid(m: &Matroid, family: &CopyFamily) -> CheckReport {
    for &x in family.members() {
        let r = m.rank(x);
        let is_circuit = r == x.len() - 1 && x.iter().all(|e| m.is_independent(x.without(e)));
        if !is_circuit {
            return CheckReport::fail(
                "x-matroid",
                Coverage::Exhaustive,
                json!({"member": x.to_ids(), "rank": r, "size": x.len()}),
            );
        }
    }
    CheckReport::pass("x-matroid", Coverage::Exhaustive)
}

/// Every family member is a cyclic set of `m` (each element lies in a
/// circuit inside the member).
pub fn is_x_cyclic(m: &Matroid, family: &CopyFamily) -> CheckReport {
    for &x in family.members() {
        if !m.is_cyclic_set(x) {
            return CheckReport::fail(
                "x-cyclic",
                Coverage::Exhaustive,
                json!({"member": x.to_ids()}),
            );
        }
    }
    CheckReport::pass("x-cyclic", Coverage::Exhaustive)
}

/// Every cyclic flat of `m` is a union of family members.
pub fn has_x_covering(m: &Matroid, family: &CopyFamily, max_flats: usize) -> Result<CheckReport> {
    let cyclic = m.cyclic_flats(max_flats)?;
    for flat in cyclic {
        let mut union = ElementSet::empty();
        for &x in family.members() {
            if x.is_subset_of(flat) {
                union = union.union(x);
            }
        }
        if union != flat {
            return Ok(CheckReport::fail(
                "x-covering",
                Coverage::Exhaustive,
                json!({"cyclic_flat": flat.to_ids(), "covered": union.to_ids()}),
            ));
        }
    }
    Ok(CheckReport::pass("x-covering", Coverage::Exhaustive))
}

/// 0-extension: for independent F and a fresh vertex v0 joined to two
/// distinct vertices of V(F), the extended set stays independent.
pub fn zero_extension_check(m: &Matroid, host: &HostGraph, mode: CheckMode) -> Result<CheckReport> {
    match mode {
        CheckMode::Exhaustive => {
            let n = host.ground().size();
            if n > 15 {
                return Err(Error::BudgetExceeded {
                    op: "zeroExtensionCheck",
                    detail: format!("exhaustive mode needs ground <= 15, got {n}"),
                });
            }
            let full = host.ground().full_set();
            for f in subsets_of(full) {
                if f.is_empty() || !m.is_independent(f) {
                    continue;
                }
                if let Some(w) = zero_extension_violation(m, host, f, None) {
                    return Ok(CheckReport::fail("0-extension", Coverage::Exhaustive, w));
                }
            }
            Ok(CheckReport::pass("0-extension", Coverage::Exhaustive))
        }
        CheckMode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let f = random_independent_set(m, host, &mut rng);
                if f.is_empty() {
                    continue;
                }
                if let Some(w) = zero_extension_violation(m, host, f, Some(&mut rng)) {
                    return Ok(CheckReport::fail(
                        "0-extension",
                        Coverage::Sampled { samples, seed },
                        w,
                    ));
                }
            }
            Ok(CheckReport::pass(
                "0-extension",
                Coverage::Sampled { samples, seed },
            ))
        }
    }
}

fn zero_extension_violation(
    m: &Matroid,
    host: &HostGraph,
    f: ElementSet,
    sample_one: Option<&mut ChaCha8Rng>,
) -> Option<serde_json::Value> {
    let vmask = host.vertices_of(f);
    let verts: Vec<usize> = (0..host.n_vertices()).filter(|&v| vmask >> v & 1 == 1).collect();
    let fresh: Vec<usize> = (0..host.n_vertices()).filter(|&v| vmask >> v & 1 == 0).collect();
    if verts.len() < 2 || fresh.is_empty() {
        return None;
    }
    let try_one = |v0: usize, v1: usize, v2: usize| -> Option<serde_json::Value> {
        let (e1, e2) = (host.edge_id(v0, v1)?, host.edge_id(v0, v2)?);
        let extended = f.with(e1).with(e2);
        if !m.is_independent(extended) {
            return Some(json!({
                "independent": f.to_ids(),
                "v0": v0, "v1": v1, "v2": v2,
                "extended": extended.to_ids(),
            }));
        }
        None
    };
    match sample_one {
        Some(rng) => {
            let v0 = fresh[rng.gen_range(0..fresh.len())];
            let i = rng.gen_range(0..verts.len());
            let mut j = rng.gen_range(0..verts.len() - 1);
            if j >= i {
                j += 1;
            }
            try_one(v0, verts[i], verts[j])
        }
        None => {
            for &v0 in &fresh {
                for (i, &v1) in verts.iter().enumerate() {
                    for &v2 in &verts[i + 1..] {
                        if let Some(w) = try_one(v0, v1, v2) {
                            return Some(w);
                        }
                    }
                }
            }
            None
        }
    }
}

/// Diamond splitting at v1: split off part of v1's neighborhood to a fresh
/// vertex v0 joined to the moved vertices and the two kept pivots.
pub fn diamond_splitting_check(
    m: &Matroid,
    host: &HostGraph,
    mode: CheckMode,
) -> Result<CheckReport> {
    match mode {
        CheckMode::Exhaustive => {
            let n = host.ground().size();
            if n > 15 {
                return Err(Error::BudgetExceeded {
                    op: "diamondSplittingCheck",
                    detail: format!("exhaustive mode needs ground <= 15, got {n}"),
                });
            }
            let full = host.ground().full_set();
            for f in subsets_of(full) {
                if f.is_empty() || !m.is_independent(f) {
                    continue;
                }
                if let Some(w) = diamond_violation_exhaustive(m, host, f) {
                    return Ok(CheckReport::fail("diamond-splitting", Coverage::Exhaustive, w));
                }
            }
            Ok(CheckReport::pass("diamond-splitting", Coverage::Exhaustive))
        }
        CheckMode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let f = random_independent_set(m, host, &mut rng);
                if let Some(w) = diamond_violation_sampled(m, host, f, &mut rng) {
                    return Ok(CheckReport::fail(
                        "diamond-splitting",
                        Coverage::Sampled { samples, seed },
                        w,
                    ));
                }
            }
            Ok(CheckReport::pass(
                "diamond-splitting",
                Coverage::Sampled { samples, seed },
            ))
        }
    }
}

fn apply_diamond(
    host: &HostGraph,
    f: ElementSet,
    v1: usize,
    v0: usize,
    u_star: (usize, usize),
    u0: &[usize],
) -> Option<ElementSet> {
    let mut out = f;
    for &u in u0 {
        out.remove(host.edge_id(v1, u)?);
    }
    for &u in u0 {
        out.insert(host.edge_id(v0, u)?);
    }
    out.insert(host.edge_id(v0, u_star.0)?);
    out.insert(host.edge_id(v0, u_star.1)?);
    Some(out)
}

fn diamond_violation_exhaustive(
    m: &Matroid,
    host: &HostGraph,
    f: ElementSet,
) -> Option<serde_json::Value> {
    let vmask = host.vertices_of(f);
    let fresh: Vec<usize> = (0..host.n_vertices()).filter(|&v| vmask >> v & 1 == 0).collect();
    if fresh.is_empty() {
        return None;
    }
    for v1 in (0..host.n_vertices()).filter(|&v| vmask >> v & 1 == 1) {
        let nbrs: Vec<usize> = (0..host.n_vertices())
            .filter(|&u| host.edge_id(v1, u).map(|e| f.contains(e)).unwrap_or(false))
            .collect();
        if nbrs.len() < 2 {
            continue;
        }
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                let rest: Vec<usize> = nbrs.iter().copied().filter(|&u| u != a && u != b).collect();
                let rest_mask = ElementSet::from_ids(0..rest.len());
                for pick in subsets_of(rest_mask) {
                    let u0: Vec<usize> = pick.iter().map(|i| rest[i]).collect();
                    for &v0 in &fresh {
                        let Some(next) = apply_diamond(host, f, v1, v0, (a, b), &u0) else {
                            continue;
                        };
                        if !m.is_independent(next) {
                            return Some(json!({
                                "independent": f.to_ids(),
                                "v1": v1, "v0": v0, "u_star": [a, b], "u0": u0,
                                "result": next.to_ids(),
                            }));
                        }
                    }
                }
            }
        }
    }
    None
}

fn diamond_violation_sampled(
    m: &Matroid,
    host: &HostGraph,
    f: ElementSet,
    rng: &mut ChaCha8Rng,
) -> Option<serde_json::Value> {
    let vmask = host.vertices_of(f);
    let fresh: Vec<usize> = (0..host.n_vertices()).filter(|&v| vmask >> v & 1 == 0).collect();
    let candidates: Vec<usize> = (0..host.n_vertices())
        .filter(|&v| vmask >> v & 1 == 1 && host.degree_in(f, v) >= 2)
        .collect();
    if fresh.is_empty() || candidates.is_empty() {
        return None;
    }
    let v1 = candidates[rng.gen_range(0..candidates.len())];
    let nbrs: Vec<usize> = (0..host.n_vertices())
        .filter(|&u| host.edge_id(v1, u).map(|e| f.contains(e)).unwrap_or(false))
        .collect();
    let i = rng.gen_range(0..nbrs.len());
    let mut j = rng.gen_range(0..nbrs.len() - 1);
    if j >= i {
        j += 1;
    }
    let (a, b) = (nbrs[i], nbrs[j]);
    let rest: Vec<usize> = nbrs.iter().copied().filter(|&u| u != a && u != b).collect();
    let u0: Vec<usize> = rest.into_iter().filter(|_| rng.gen_bool(0.5)).collect();
    let v0 = fresh[rng.gen_range(0..fresh.len())];
    let next = apply_diamond(host, f, v1, v0, (a, b), &u0)?;
    if !m.is_independent(next) {
        return Some(json!({
            "independent": f.to_ids(),
            "v1": v1, "v0": v0, "u_star": [a, b], "u0": u0,
            "result": next.to_ids(),
        }));
    }
    None
}

fn random_independent_set(m: &Matroid, host: &HostGraph, rng: &mut ChaCha8Rng) -> ElementSet {
    let n = host.ground().size();
    let mut ids: Vec<usize> = (0..n).collect();
    for i in (1..ids.len()).rev() {
        ids.swap(i, rng.gen_range(0..=i));
    }
    let target = rng.gen_range(0..=m.rank_full());
    let mut b = ElementSet::empty();
    for &e in &ids {
        if b.len() == target {
            break;
        }
        if m.is_independent(b.with(e)) {
            b.insert(e);
        }
    }
    b
}

/// Rank upper bound for matroids whose circuit family comes from a pattern
/// with `s` vertices and minimum degree `delta`, on an n-vertex complete
/// host.
pub fn rank_bound_check(m: &Matroid, s: usize, delta: usize, n: usize) -> CheckReport {
    let bound = (delta.saturating_sub(1)) * (n + 1 - s) + binomial(s - 1, 2) as usize;
    let rank = m.rank_full();
    if rank <= bound {
        CheckReport::pass("rank-bound", Coverage::Exhaustive)
    } else {
        CheckReport::fail(
            "rank-bound",
            Coverage::Exhaustive,
            json!({"rank": rank, "bound": bound}),
        )
    }
}

/// Minimum degree of `v` over all bases of `f`: a 0/1-weight greedy basis
/// that prefers edges avoiding `v`, exact by matroid greedy optimality.
pub fn min_basis_degree(m: &Matroid, host: &HostGraph, f: ElementSet, v: usize) -> usize {
    let away: Vec<usize> = f
        .iter()
        .filter(|&e| {
            let (a, b) = host.edge(e);
            a != v && b != v
        })
        .collect();
    let incident: Vec<usize> = f
        .iter()
        .filter(|&e| {
            let (a, b) = host.edge(e);
            a == v || b == v
        })
        .collect();
    let mut basis = ElementSet::empty();
    let mut deg = 0usize;
    for &e in away.iter().chain(incident.iter()) {
        if m.is_independent(basis.with(e)) {
            basis.insert(e);
            if incident.contains(&e) {
                deg += 1;
            }
        }
    }
    deg
}

/// Degree bound for connected sets, over a host graph:
/// `Σ_v min{d_B(v)} <= 2(r(F)-1) - |V(F)|`.
pub fn degree_bound_check(m: &Matroid, host: &HostGraph, f: ElementSet) -> Result<CheckReport> {
    if !m.is_connected_set(f, u64::MAX)? {
        return Err(Error::InvalidInput("degree bound needs a connected set".into()));
    }
    let vmask = host.vertices_of(f);
    let mut total = 0usize;
    for v in (0..host.n_vertices()).filter(|&v| vmask >> v & 1 == 1) {
        total += min_basis_degree(m, host, f, v);
    }
    let r = m.rank(f);
    let rhs = 2 * (r as i64 - 1) - vmask.count_ones() as i64;
    if (total as i64) <= rhs {
        Ok(CheckReport::pass("degree-bound", Coverage::Exhaustive))
    } else {
        Ok(CheckReport::fail(
            "degree-bound",
            Coverage::Exhaustive,
            json!({"sum_min_degrees": total, "bound": rhs}),
        ))
    }
}

/// Every circuit of `m` up to `max_size` induces a 2-connected subgraph.
pub fn circuits_two_connected_check(
    m: &Matroid,
    host: &HostGraph,
    max_size: usize,
    budget: u64,
) -> Result<CheckReport> {
    let circuits = m.circuits_up_to(max_size, budget)?;
    for c in circuits {
        if !host.is_two_connected(c) {
            return Ok(CheckReport::fail(
                "circuits-2-connected",
                Coverage::Exhaustive,
                json!({"circuit": c.to_ids()}),
            ));
        }
    }
    Ok(CheckReport::pass("circuits-2-connected", Coverage::Exhaustive))
}

/// Rank invariance under the edge permutations induced by vertex
/// transpositions (within a side, for bipartite hosts). Transpositions
/// generate the full relevant symmetry group; coverage over subsets is
/// sampled.
pub fn symmetry_check(
    m: &Matroid,
    host: &HostGraph,
    samples: u64,
    seed: u64,
) -> Result<CheckReport> {
    let transpositions = host_transpositions(host);
    if transpositions.is_empty() {
        return Err(Error::InvalidInput(
            "symmetry check needs a complete or complete bipartite host".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = host.ground().full_set();
    let ids = full.to_ids();
    for _ in 0..samples {
        // size-stratified sampling reaches small sets where asymmetries hide
        let size = rng.gen_range(0..=ids.len());
        let mut pool = ids.clone();
        for i in (1..pool.len()).rev() {
            pool.swap(i, rng.gen_range(0..=i));
        }
        let f = ElementSet::from_ids(pool[..size].iter().copied());
        let (a, b) = transpositions[rng.gen_range(0..transpositions.len())];
        let g = permute_edges(host, f, a, b);
        if m.rank(f) != m.rank(g) {
            return Ok(CheckReport::fail(
                "symmetry",
                Coverage::Sampled { samples, seed },
                json!({"set": f.to_ids(), "swap": [a, b], "image": g.to_ids(),
                       "rank": m.rank(f), "image_rank": m.rank(g)}),
            ));
        }
    }
    Ok(CheckReport::pass(
        "symmetry",
        Coverage::Sampled { samples, seed },
    ))
}

fn host_transpositions(host: &HostGraph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    match host.sides() {
        Some((m, n)) => {
            for a in 0..m {
                for b in a + 1..m {
                    out.push((a, b));
                }
            }
            for a in 0..n {
                for b in a + 1..n {
                    out.push((m + a, m + b));
                }
            }
        }
        None => {
            if matches!(host.kind(), crate::graphs::HostKind::Complete { .. }) {
                let n = host.n_vertices();
                for a in 0..n {
                    for b in a + 1..n {
                        out.push((a, b));
                    }
                }
            }
        }
    }
    out
}

/// Image of an edge set under the vertex transposition (a b).
pub fn permute_edges(host: &HostGraph, f: ElementSet, a: usize, b: usize) -> ElementSet {
    let swap = |v: usize| {
        if v == a {
            b
        } else if v == b {
            a
        } else {
            v
        }
    };
    ElementSet::from_ids(f.iter().map(|e| {
        let (x, y) = host.edge(e);
        host.edge_id(swap(x), swap(y)).expect("automorphism maps edges to edges")
    }))
}
