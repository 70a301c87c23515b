//! Host graphs, pattern-copy enumeration, union stability and the uniform
//! matroid of a union-stable uniform family.
//!
//! Copies are edge sets of subgraphs of the host isomorphic to a pattern.
//! Specialised combinatorial generators cover the built-in pattern kinds;
//! a generic backtracking matcher handles explicit patterns of up to 7
//! vertices. Deduplication canonicalises by bit pattern, not isomorphism
//! class.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::bits::{for_each_k_subset, ElementSet};
use crate::error::{Error, Result};
use crate::ground::{EdgeLabel, GroundSet};
use crate::matroid::{verify_matroid_axioms, Matroid};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum HostKind {
    Complete { n: usize },
    Bipartite { m: usize, n: usize },
    Edges { n: usize, edges: Vec<(usize, usize)> },
}

/// A host graph together with the canonical bijection between its edges and
/// ground-set ids.
#[derive(Clone, Debug)]
pub struct HostGraph {
    kind: HostKind,
    n_vertices: usize,
    /// side sizes when bipartite
    sides: Option<(usize, usize)>,
    /// edges as vertex pairs (i, j), i < j, in canonical id order
    edges: Vec<(usize, usize)>,
    /// adjacency[i][j] = edge id
    adj: Vec<Vec<Option<usize>>>,
    ground: GroundSet,
}

impl HostGraph {
    pub fn complete(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput("complete host needs n >= 2".into()));
        }
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Self::build(HostKind::Complete { n }, n, None, edges)
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidInput("bipartite host needs m, n >= 1".into()));
        }
        let mut edges = Vec::new();
        for i in 0..m {
            for j in 0..n {
                edges.push((i, m + j));
            }
        }
        Self::build(HostKind::Bipartite { m, n }, m + n, Some((m, n)), edges)
    }

    pub fn from_edge_list(n: usize, raw: &[(usize, usize)]) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = raw
            .iter()
            .map(|&(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        edges.sort();
        edges.dedup();
        if edges.iter().any(|&(a, b)| a == b || b >= n) {
            return Err(Error::InvalidInput("bad edge list".into()));
        }
        Self::build(
            HostKind::Edges {
                n,
                edges: edges.clone(),
            },
            n,
            None,
            edges,
        )
    }

    fn build(
        kind: HostKind,
        n_vertices: usize,
        sides: Option<(usize, usize)>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let labels: Vec<EdgeLabel> = match sides {
            Some((m, _)) => edges.iter().map(|&(a, b)| EdgeLabel::Bip(a, b - m)).collect(),
            None => edges.iter().map(|&(a, b)| EdgeLabel::Pair(a, b)).collect(),
        };
        let ground = GroundSet::labelled(labels)?;
        let mut adj = vec![vec![None; n_vertices]; n_vertices];
        for (id, &(a, b)) in edges.iter().enumerate() {
            adj[a][b] = Some(id);
            adj[b][a] = Some(id);
        }
        Ok(HostGraph {
            kind,
            n_vertices,
            sides,
            edges,
            adj,
            ground,
        })
    }

    pub fn kind(&self) -> &HostKind {
        &self.kind
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn sides(&self) -> Option<(usize, usize)> {
        self.sides
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        self.adj[a][b]
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a][b].is_some()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n_vertices).filter(|&u| self.has_edge(v, u)).collect()
    }

    /// Edge set of the complete graph on a vertex set, restricted to host
    /// edges.
    pub fn edges_within(&self, vertices: &[usize]) -> ElementSet {
        let mut s = ElementSet::empty();
        for (i, &a) in vertices.iter().enumerate() {
            for &b in &vertices[i + 1..] {
                if let Some(id) = self.adj[a][b] {
                    s.insert(id);
                }
            }
        }
        s
    }

    /// Vertices incident to an edge set, as a mask.
    pub fn vertices_of(&self, f: ElementSet) -> u64 {
        let mut v = 0u64;
        for e in f.iter() {
            let (a, b) = self.edges[e];
            v |= 1 << a;
            v |= 1 << b;
        }
        v
    }

    pub fn vertex_count_of(&self, f: ElementSet) -> usize {
        self.vertices_of(f).count_ones() as usize
    }

    pub fn degree_in(&self, f: ElementSet, v: usize) -> usize {
        f.iter()
            .filter(|&e| {
                let (a, b) = self.edges[e];
                a == v || b == v
            })
            .count()
    }

    /// Connected components of the subgraph with edge set `f`, as
    /// (vertex mask, edge set) pairs. Isolated vertices never appear.
    pub fn graph_components(&self, f: ElementSet) -> Vec<(u64, ElementSet)> {
        let mut parent: Vec<usize> = (0..self.n_vertices).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for e in f.iter() {
            let (a, b) = self.edges[e];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut comps: std::collections::BTreeMap<usize, (u64, ElementSet)> = Default::default();
        for e in f.iter() {
            let (a, b) = self.edges[e];
            let root = find(&mut parent, a);
            let entry = comps.entry(root).or_default();
            entry.0 |= (1 << a) | (1 << b);
            entry.1.insert(e);
        }
        comps.into_values().collect()
    }

    /// Number of bipartite connected components of the subgraph `f`
    /// (isolated vertices excluded).
    pub fn bipartite_component_count(&self, f: ElementSet) -> usize {
        self.graph_components(f)
            .into_iter()
            .filter(|&(vmask, emask)| self.component_is_bipartite(vmask, emask))
            .count()
    }

    fn component_is_bipartite(&self, vmask: u64, emask: ElementSet) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.n_vertices];
        let verts: Vec<usize> = (0..self.n_vertices).filter(|&v| vmask >> v & 1 == 1).collect();
        let adj: Vec<Vec<usize>> = {
            let mut a = vec![Vec::new(); self.n_vertices];
            for e in emask.iter() {
                let (x, y) = self.edges[e];
                a[x].push(y);
                a[y].push(x);
            }
            a
        };
        for &start in &verts {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let c = color[v].unwrap();
                for &u in &adj[v] {
                    match color[u] {
                        None => {
                            color[u] = Some(!c);
                            stack.push(u);
                        }
                        Some(cu) => {
                            if cu == c {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Is the subgraph 2-connected (at least 2 vertices everywhere, no cut
    /// vertex, connected)?
    pub fn is_two_connected(&self, f: ElementSet) -> bool {
        let comps = self.graph_components(f);
        if comps.len() != 1 {
            return false;
        }
        let (vmask, _) = comps[0];
        let verts: Vec<usize> = (0..self.n_vertices).filter(|&v| vmask >> v & 1 == 1).collect();
        if verts.len() < 3 {
            return verts.len() == 2;
        }
        // remove each vertex and test connectivity of the rest
        for &cut in &verts {
            let remaining = ElementSet::from_ids(f.iter().filter(|&e| {
                let (a, b) = self.edges[e];
                a != cut && b != cut
            }));
            let sub = self.graph_components(remaining);
            let covered: u64 = sub.iter().map(|&(vm, _)| vm).fold(0, |x, y| x | y);
            let expect = vmask & !(1u64 << cut);
            if sub.len() != 1 || covered != expect {
                return false;
            }
        }
        true
    }
}

/// Built-in pattern kinds plus explicit small graphs.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum PatternSpec {
    /// K_t
    Clique(usize),
    /// K_t minus one edge
    CliqueMinus(usize),
    /// K_{s,t}
    Biclique(usize, usize),
    /// cycle with k edges
    Cycle(usize),
    /// path with k edges
    Path(usize),
    /// star K_{1,k}
    Star(usize),
    /// k pairwise vertex-disjoint edges
    Matching(usize),
    /// explicit pattern graph on vertices 0..n (at most 7)
    Explicit { n: usize, edges: Vec<(usize, usize)> },
}

impl PatternSpec {
    pub fn edge_count(&self) -> usize {
        match self {
            PatternSpec::Clique(t) => t * (t - 1) / 2,
            PatternSpec::CliqueMinus(t) => t * (t - 1) / 2 - 1,
            PatternSpec::Biclique(s, t) => s * t,
            PatternSpec::Cycle(k) | PatternSpec::Path(k) | PatternSpec::Star(k)
            | PatternSpec::Matching(k) => *k,
            PatternSpec::Explicit { edges, .. } => edges.len(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            PatternSpec::Clique(t) => format!("K{t}"),
            PatternSpec::CliqueMinus(t) => format!("K{t}-"),
            PatternSpec::Biclique(s, t) => format!("K{s},{t}"),
            PatternSpec::Cycle(k) => format!("C{k}"),
            PatternSpec::Path(k) => format!("P{k}"),
            PatternSpec::Star(k) => format!("K1,{k}"),
            PatternSpec::Matching(k) => format!("{k}K2"),
            PatternSpec::Explicit { n, edges } => format!("explicit({n}v,{}e)", edges.len()),
        }
    }
}

/// A family of copies: distinct element sets over a host's ground set.
#[derive(Clone, Debug)]
pub struct CopyFamily {
    host: HostGraph,
    members: Vec<ElementSet>,
    member_hash: HashSet<u64>,
    /// uniform member size, when all members agree
    uniform: Option<usize>,
    patterns: Vec<PatternSpec>,
}

impl CopyFamily {
    pub fn from_members(
        host: HostGraph,
        mut members: Vec<ElementSet>,
        patterns: Vec<PatternSpec>,
    ) -> Self {
        members.sort_by_key(|m| m.canonical_key());
        members.dedup();
        let member_hash = members.iter().map(|m| m.0).collect();
        let uniform = uniform_size(&members);
        CopyFamily {
            host,
            members,
            member_hash,
            uniform,
            patterns,
        }
    }

    pub fn host(&self) -> &HostGraph {
        &self.host
    }

    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains_member(&self, s: ElementSet) -> bool {
        self.member_hash.contains(&s.0)
    }

    pub fn uniform_size(&self) -> Option<usize> {
        self.uniform
    }

    pub fn patterns(&self) -> &[PatternSpec] {
        &self.patterns
    }

    /// Union of all members.
    pub fn covered_elements(&self) -> ElementSet {
        self.members
            .iter()
            .fold(ElementSet::empty(), |acc, &m| acc.union(m))
    }

    /// Concatenate families over the same host.
    pub fn merged_with(&self, other: &CopyFamily) -> Result<CopyFamily> {
        if self.host.ground().size() != other.host.ground().size() {
            return Err(Error::GroundMismatch(
                self.host.ground().size(),
                other.host.ground().size(),
            ));
        }
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        let mut patterns = self.patterns.clone();
        patterns.extend_from_slice(&other.patterns);
        Ok(CopyFamily::from_members(self.host.clone(), members, patterns))
    }
}

fn uniform_size(members: &[ElementSet]) -> Option<usize> {
    let first = members.first()?.len();
    members.iter().all(|m| m.len() == first).then_some(first)
}

/// Every copy of `pattern` in `host`, each exactly once.
pub fn enumerate_copies(pattern: &PatternSpec, host: &HostGraph) -> Result<CopyFamily> {
    if pattern.edge_count() == 0 {
        return Err(Error::InvalidInput("pattern needs at least one edge".into()));
    }
    let n = host.n_vertices();
    let members: Vec<ElementSet> = match pattern {
        PatternSpec::Clique(t) => {
            if *t > n {
                return Err(Error::PatternTooLarge);
            }
            let mut out = Vec::new();
            for_each_vertex_subset(n, *t, |vs| {
                if is_clique(host, vs) {
                    out.push(host.edges_within(vs));
                }
            });
            out
        }
        PatternSpec::CliqueMinus(t) => {
            if *t > n || *t < 3 {
                return Err(Error::PatternTooLarge);
            }
            let mut out = Vec::new();
            for_each_vertex_subset(n, *t, |vs| {
                let full = host.edges_within(vs);
                let want = t * (t - 1) / 2;
                if full.len() == want {
                    for e in full.iter() {
                        out.push(full.without(e));
                    }
                } else if full.len() == want - 1 {
                    out.push(full);
                }
            });
            out
        }
        PatternSpec::Biclique(s, t) => enumerate_bicliques(host, *s, *t)?,
        PatternSpec::Cycle(k) => {
            if *k < 3 || *k > n {
                return Err(Error::PatternTooLarge);
            }
            enumerate_cycles(host, *k)
        }
        PatternSpec::Path(k) => {
            if *k + 1 > n {
                return Err(Error::PatternTooLarge);
            }
            enumerate_paths(host, *k)
        }
        PatternSpec::Star(k) => {
            if *k + 1 > n {
                return Err(Error::PatternTooLarge);
            }
            let mut out = Vec::new();
            for c in 0..n {
                let nbrs = host.neighbors(c);
                if nbrs.len() < *k {
                    continue;
                }
                for_each_index_subset(nbrs.len(), *k, |pick| {
                    let s = ElementSet::from_ids(
                        pick.iter().map(|&i| host.edge_id(c, nbrs[i]).unwrap()),
                    );
                    out.push(s);
                });
            }
            out
        }
        PatternSpec::Matching(k) => {
            let mut out = Vec::new();
            let mut cur = ElementSet::empty();
            enumerate_matchings(host, *k, 0, 0u64, &mut cur, &mut out);
            if out.is_empty() {
                return Err(Error::PatternTooLarge);
            }
            out
        }
        PatternSpec::Explicit { n: pn, edges } => {
            if *pn > 7 {
                return Err(Error::PatternTooLarge);
            }
            enumerate_explicit(host, *pn, edges)?
        }
    };
    if members.is_empty() {
        return Err(Error::PatternTooLarge);
    }
    Ok(CopyFamily::from_members(
        host.clone(),
        members,
        vec![pattern.clone()],
    ))
}

/// Copies of K_{s,t} in a bipartite host with the s-side inside U and the
/// t-side inside W only.
pub fn rooted_copies(s: usize, t: usize, host: &HostGraph) -> Result<CopyFamily> {
    let (m, n) = host.sides().ok_or(Error::DimensionMismatch)?;
    if s > m || t > n {
        return Err(Error::DimensionMismatch);
    }
    let mut out = Vec::new();
    for_each_index_subset(m, s, |us| {
        let uverts: Vec<usize> = us.to_vec();
        for_each_index_subset(n, t, |ws| {
            if uverts
                .iter()
                .all(|&u| ws.iter().all(|&w| host.has_edge(u, m + w)))
            {
                let set = ElementSet::from_ids(uverts.iter().flat_map(|&u| {
                    ws.iter().map(move |&w| host.edge_id(u, m + w).unwrap())
                }));
                out.push(set);
            }
        });
    });
    if out.is_empty() {
        return Err(Error::DimensionMismatch);
    }
    Ok(CopyFamily::from_members(
        host.clone(),
        out,
        vec![PatternSpec::Biclique(s, t)],
    ))
}

fn enumerate_bicliques(host: &HostGraph, s: usize, t: usize) -> Result<Vec<ElementSet>> {
    let n = host.n_vertices();
    if s + t > n || s == 0 || t == 0 {
        return Err(Error::PatternTooLarge);
    }
    let mut out = Vec::new();
    if let Some((m, w)) = host.sides() {
        // bipartition must be respected; both side assignments when they fit
        let mut push_rooted = |a: usize, b: usize| {
            if a <= m && b <= w {
                if let Ok(fam) = rooted_copies(a, b, host) {
                    out.extend(fam.members().iter().copied());
                }
            }
        };
        push_rooted(s, t);
        if s != t {
            push_rooted(t, s);
        }
    } else {
        // complete or explicit host: choose disjoint parts, all cross edges present
        for_each_vertex_subset(n, s, |aside| {
            let amask: u64 = aside.iter().fold(0u64, |m, &v| m | 1 << v);
            let rest: Vec<usize> = (0..n).filter(|&v| amask >> v & 1 == 0).collect();
            for_each_index_subset(rest.len(), t, |pick| {
                let bside: Vec<usize> = pick.iter().map(|&i| rest[i]).collect();
                // each unordered {A, B} pair once: when sizes tie, force the
                // overall smallest vertex into A
                if s == t {
                    let bmin = *bside.iter().min().unwrap();
                    if bmin < aside[0] {
                        return;
                    }
                }
                if aside
                    .iter()
                    .all(|&a| bside.iter().all(|&b| host.has_edge(a, b)))
                {
                    let set = ElementSet::from_ids(aside.iter().flat_map(|&a| {
                        bside.iter().map(move |&b| host.edge_id(a, b).unwrap())
                    }));
                    out.push(set);
                }
            });
        });
    }
    Ok(out)
}

fn enumerate_cycles(host: &HostGraph, k: usize) -> Vec<ElementSet> {
    // canonical form: start at the smallest vertex of the cycle, second
    // vertex smaller than the last (kills rotation and reflection)
    let n = host.n_vertices();
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::with_capacity(k);
    for start in 0..n {
        path.clear();
        path.push(start);
        dfs_cycle(host, k, start, &mut path, &mut out);
    }
    out
}

fn dfs_cycle(host: &HostGraph, k: usize, start: usize, path: &mut Vec<usize>, out: &mut Vec<ElementSet>) {
    let last = *path.last().unwrap();
    if path.len() == k {
        if host.has_edge(last, start) && path[1] < path[k - 1] {
            let mut s = ElementSet::empty();
            for w in path.windows(2) {
                s.insert(host.edge_id(w[0], w[1]).unwrap());
            }
            s.insert(host.edge_id(last, start).unwrap());
            out.push(s);
        }
        return;
    }
    for v in start + 1..host.n_vertices() {
        if path.contains(&v) || !host.has_edge(last, v) {
            continue;
        }
        path.push(v);
        dfs_cycle(host, k, start, path, out);
        path.pop();
    }
}

fn enumerate_paths(host: &HostGraph, k: usize) -> Vec<ElementSet> {
    // a path is determined by its vertex sequence up to reversal; force
    // first endpoint < last endpoint
    let n = host.n_vertices();
    let mut out = Vec::new();
    let mut seq: Vec<usize> = Vec::with_capacity(k + 1);
    fn dfs(
        host: &HostGraph,
        k: usize,
        seq: &mut Vec<usize>,
        out: &mut Vec<ElementSet>,
    ) {
        if seq.len() == k + 1 {
            if seq[0] < seq[k] {
                let mut s = ElementSet::empty();
                for w in seq.windows(2) {
                    s.insert(host.edge_id(w[0], w[1]).unwrap());
                }
                out.push(s);
            }
            return;
        }
        let last = *seq.last().unwrap();
        for v in 0..host.n_vertices() {
            if seq.contains(&v) || !host.has_edge(last, v) {
                continue;
            }
            seq.push(v);
            dfs(host, k, seq, out);
            seq.pop();
        }
    }
    for v0 in 0..n {
        seq.clear();
        seq.push(v0);
        dfs(host, k, &mut seq, &mut out);
    }
    out
}

fn enumerate_matchings(
    host: &HostGraph,
    k: usize,
    from_edge: usize,
    used_vertices: u64,
    cur: &mut ElementSet,
    out: &mut Vec<ElementSet>,
) {
    if cur.len() == k {
        out.push(*cur);
        return;
    }
    for e in from_edge..host.n_edges() {
        let (a, b) = host.edge(e);
        if used_vertices >> a & 1 == 1 || used_vertices >> b & 1 == 1 {
            continue;
        }
        cur.insert(e);
        enumerate_matchings(host, k, e + 1, used_vertices | 1 << a | 1 << b, cur, out);
        cur.remove(e);
    }
}

fn enumerate_explicit(host: &HostGraph, pn: usize, pedges: &[(usize, usize)]) -> Result<Vec<ElementSet>> {
    let n = host.n_vertices();
    if pn > n {
        return Err(Error::PatternTooLarge);
    }
    // order pattern vertices by decreasing degree for earlier pruning
    let mut deg = vec![0usize; pn];
    for &(a, b) in pedges {
        if a.max(b) >= pn {
            return Err(Error::InvalidInput("pattern edge out of range".into()));
        }
        deg[a] += 1;
        deg[b] += 1;
    }
    let mut order: Vec<usize> = (0..pn).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(deg[v]));
    let mut seen: HashSet<u64> = HashSet::new();
    let mut assignment = vec![usize::MAX; pn];
    let mut used = vec![false; n];
    backtrack_explicit(
        host, pedges, &order, 0, &mut assignment, &mut used, &mut seen,
    );
    let mut out: Vec<ElementSet> = seen.into_iter().map(ElementSet).collect();
    out.sort_by_key(|s| s.canonical_key());
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn backtrack_explicit(
    host: &HostGraph,
    pedges: &[(usize, usize)],
    order: &[usize],
    depth: usize,
    assignment: &mut Vec<usize>,
    used: &mut Vec<bool>,
    seen: &mut HashSet<u64>,
) {
    if depth == order.len() {
        let mut s = ElementSet::empty();
        for &(a, b) in pedges {
            match host.edge_id(assignment[a], assignment[b]) {
                Some(id) => s.insert(id),
                None => return,
            }
        }
        seen.insert(s.0);
        return;
    }
    let pv = order[depth];
    'hosts: for hv in 0..host.n_vertices() {
        if used[hv] {
            continue;
        }
        // check edges to already-assigned pattern vertices
        for &(a, b) in pedges {
            let (pa, pb) = (a, b);
            if pa == pv && assignment[pb] != usize::MAX && !host.has_edge(hv, assignment[pb]) {
                continue 'hosts;
            }
            if pb == pv && assignment[pa] != usize::MAX && !host.has_edge(hv, assignment[pa]) {
                continue 'hosts;
            }
        }
        assignment[pv] = hv;
        used[hv] = true;
        backtrack_explicit(host, pedges, order, depth + 1, assignment, used, seen);
        assignment[pv] = usize::MAX;
        used[hv] = false;
    }
}

fn is_clique(host: &HostGraph, vs: &[usize]) -> bool {
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if !host.has_edge(a, b) {
                return false;
            }
        }
    }
    true
}

fn for_each_vertex_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    for_each_index_subset(n, k, |s| f(s));
}

fn for_each_index_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Union-stability of a k-uniform family: for any two members and any
/// shared element, the union minus the element is either larger than k or
/// again a member.
pub fn is_union_stable(family: &CopyFamily) -> Result<(bool, Option<(ElementSet, ElementSet, usize)>)> {
    let k = require_uniform(family)?;
    for (i, &x1) in family.members().iter().enumerate() {
        for &x2 in &family.members()[i + 1..] {
            let union = x1.union(x2);
            if union.len() != k + 1 {
                continue;
            }
            for e in x1.intersection(x2).iter() {
                let reduced = union.without(e);
                if !family.contains_member(reduced) {
                    return Ok((false, Some((x1, x2, e))));
                }
            }
        }
    }
    Ok((true, None))
}

/// Least k-uniform union-stable superset: the fixpoint of repeatedly adding
/// `(X1 ∪ X2) − e` whenever that set has size k.
pub fn union_stable_closure(family: &CopyFamily) -> Result<CopyFamily> {
    let k = require_uniform(family)?;
    let mut members: Vec<ElementSet> = family.members().to_vec();
    let mut hash: HashSet<u64> = members.iter().map(|m| m.0).collect();
    let mut frontier_start = 0usize;
    while frontier_start < members.len() {
        let frontier_end = members.len();
        for i in 0..frontier_end {
            let lo = i.max(frontier_start);
            for j in lo..frontier_end {
                if i == j {
                    continue;
                }
                let (x1, x2) = (members[i], members[j]);
                let union = x1.union(x2);
                if union.len() != k + 1 {
                    continue;
                }
                for e in x1.intersection(x2).iter() {
                    let reduced = union.without(e);
                    if hash.insert(reduced.0) {
                        members.push(reduced);
                    }
                }
            }
        }
        frontier_start = frontier_end;
    }
    Ok(CopyFamily::from_members(
        family.host().clone(),
        members,
        family.patterns().to_vec(),
    ))
}

fn require_uniform(family: &CopyFamily) -> Result<usize> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    family.uniform_size().ok_or_else(|| {
        let mut sizes: Vec<usize> = family.members().iter().map(|m| m.len()).collect();
        sizes.sort();
        sizes.dedup();
        Error::NonUniformFamily(sizes[0], sizes[1])
    })
}

/// The uniform matroid of a union-stable k-uniform family: sets of at most
/// k elements are independent unless they are members.
///
/// The ground set is the union of the members; host edges lying in no
/// member are dropped. Construction fails on families that are not
/// union-stable, with the violating pair.
pub fn build_uniform_matroid(family: &CopyFamily) -> Result<Matroid> {
    let k = require_uniform(family)?;
    let (stable, witness) = is_union_stable(family)?;
    if !stable {
        let (x1, x2, e) = witness.unwrap();
        return Err(Error::NotUnionStable { x1, x2, e });
    }
    let covered = family.covered_elements();
    let host_ground = family.host().ground();
    let full = host_ground.full_set();
    let (ground, members): (GroundSet, Vec<ElementSet>) = if covered == full {
        (host_ground.clone(), family.members().to_vec())
    } else {
        // drop uncovered edges, reindexing to the covered elements
        let ids = covered.to_ids();
        let labels: Option<Vec<EdgeLabel>> = host_ground
            .labels()
            .map(|ls| ids.iter().map(|&e| ls[e]).collect());
        let g = match labels {
            Some(ls) => GroundSet::labelled(ls)?,
            None => GroundSet::plain(ids.len())?,
        };
        let members = family
            .members()
            .iter()
            .map(|&m| ElementSet(crate::matroid::map_down(m.0, covered)))
            .collect();
        (g, members)
    };
    let n = ground.size();
    let mut circuits = members.clone();
    let member_hash: HashSet<u64> = members.iter().map(|m| m.0).collect();
    if k + 1 <= n {
        for_each_k_subset(ElementSet::full(n), k + 1, |s| {
            // the k-subsets of a (k+1)-set are exactly s minus one element;
            // (k+1)-sets containing no member are the remaining circuits
            let contains_member = s.iter().any(|e| member_hash.contains(&s.without(e).0));
            if !contains_member {
                circuits.push(s);
            }
        });
    }
    // all k-sets dependent collapses the rank to k-1
    let every_k_set = members.len() as u64 == crate::bits::binomial(n, k);
    let rank = if every_k_set { k - 1 } else { k.min(n) };
    let m = Matroid::explicit(ground, rank, circuits)?;
    if n <= 20 {
        let check = verify_matroid_axioms(n, |s| m.is_independent(s), 20_000_000);
        match check {
            Ok(None) => {}
            Ok(Some(v)) => {
                return Err(Error::AxiomViolation(format!(
                    "uniform matroid construction produced {v:?}"
                )))
            }
            Err(Error::BudgetExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(m)
}
