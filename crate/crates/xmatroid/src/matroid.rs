//! Matroid representations with rank, closure, circuits, flats, connectivity,
//! truncation and weak-order comparison.
//!
//! A matroid is either *explicit* (rank plus the complete list of circuits,
//! none of which exceeds `rank + 1` elements) or a *rank oracle*. All values
//! are immutable after construction, so concurrent read-only sharing is safe.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::{binomial, for_each_k_subset, subsets_of, ElementSet};
use crate::error::{Error, Result};
use crate::ground::GroundSet;

/// Rank function of a matroid given as an oracle.
pub trait RankOracle: Send + Sync {
    fn rank(&self, set: ElementSet) -> usize;
}

impl<F> RankOracle for F
where
    F: Fn(ElementSet) -> usize + Send + Sync,
{
    fn rank(&self, set: ElementSet) -> usize {
        self(set)
    }
}

/// Complete circuit list of an explicit matroid, bucketed by size for the
/// adaptive containment test.
#[derive(Clone, Debug, Default)]
pub struct CircuitSet {
    by_size: Vec<Vec<u64>>,
    hash: HashSet<u64>,
}

impl CircuitSet {
    pub fn new(mut circuits: Vec<ElementSet>) -> Self {
        circuits.sort_by_key(|c| c.canonical_key());
        circuits.dedup();
        let max = circuits.iter().map(|c| c.len()).max().unwrap_or(0);
        let mut by_size = vec![Vec::new(); max + 1];
        let mut hash = HashSet::with_capacity(circuits.len());
        for c in circuits {
            by_size[c.len()].push(c.0);
            hash.insert(c.0);
        }
        CircuitSet { by_size, hash }
    }

    pub fn is_circuit(&self, s: ElementSet) -> bool {
        self.hash.contains(&s.0)
    }

    pub fn len(&self) -> usize {
        self.hash.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hash.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.by_size
            .iter()
            .flat_map(|v| v.iter().map(|&m| ElementSet(m)))
    }

    pub fn max_size(&self) -> usize {
        self.by_size.len().saturating_sub(1)
    }

    /// Does `s` contain some circuit? Chooses between enumerating the
    /// subsets of `s` (hash lookups) and scanning the bucket (mask tests),
    /// whichever is cheaper.
    pub fn contains_circuit_within(&self, s: ElementSet) -> bool {
        let k = s.len();
        for sz in 0..self.by_size.len().min(k + 1) {
            let bucket = &self.by_size[sz];
            if bucket.is_empty() {
                continue;
            }
            if sz == k {
                if self.hash.contains(&s.0) {
                    return true;
                }
                continue;
            }
            let n_subsets = binomial(k, sz);
            if n_subsets <= bucket.len() as u64 {
                let mut found = false;
                for_each_k_subset(s, sz, |sub| {
                    if !found && self.hash.contains(&sub.0) {
                        found = true;
                    }
                });
                if found {
                    return true;
                }
            } else {
                for &c in bucket {
                    if c & !s.0 == 0 {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Circuits contained in `s`, canonical order.
    pub fn circuits_within(&self, s: ElementSet) -> Vec<ElementSet> {
        let mut out = Vec::new();
        for bucket in &self.by_size {
            for &c in bucket {
                if c & !s.0 == 0 {
                    out.push(ElementSet(c));
                }
            }
        }
        out.sort_by_key(|c| c.canonical_key());
        out
    }
}

#[derive(Clone)]
enum Repr {
    Explicit { rank: usize, circuits: Arc<CircuitSet> },
    Oracle(Arc<dyn RankOracle>),
}

/// A matroid on a ground set of at most 64 elements.
#[derive(Clone)]
pub struct Matroid {
    ground: GroundSet,
    repr: Repr,
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.repr {
            Repr::Explicit { rank, circuits } => write!(
                f,
                "Matroid(explicit, n={}, rank={}, {} circuits)",
                self.ground.size(),
                rank,
                circuits.len()
            ),
            Repr::Oracle(_) => write!(f, "Matroid(oracle, n={})", self.ground.size()),
        }
    }
}

impl Matroid {
    /// Explicit matroid from its rank and complete circuit list.
    pub fn explicit(ground: GroundSet, rank: usize, circuits: Vec<ElementSet>) -> Result<Self> {
        let full = ground.full_set();
        for c in &circuits {
            if !c.is_subset_of(full) {
                return Err(Error::InvalidInput(format!(
                    "circuit {c:?} not within the ground set"
                )));
            }
            if c.len() > rank + 1 {
                return Err(Error::InvalidInput(format!(
                    "circuit {c:?} larger than rank+1"
                )));
            }
        }
        Ok(Matroid {
            ground,
            repr: Repr::Explicit {
                rank,
                circuits: Arc::new(CircuitSet::new(circuits)),
            },
        })
    }

    pub fn from_oracle(ground: GroundSet, oracle: Arc<dyn RankOracle>) -> Self {
        Matroid {
            ground,
            repr: Repr::Oracle(oracle),
        }
    }

    /// Uniform matroid of rank `k` on `n` elements.
    pub fn uniform(n: usize, k: usize) -> Result<Self> {
        let ground = GroundSet::plain(n)?;
        if k >= n {
            return Matroid::explicit(ground, n, Vec::new());
        }
        let mut circuits = Vec::new();
        for_each_k_subset(ground.full_set(), k + 1, |s| circuits.push(s));
        Matroid::explicit(ground, k, circuits)
    }

    /// Free matroid: every subset independent.
    pub fn free(ground: GroundSet) -> Self {
        let rank = ground.size();
        Matroid {
            ground,
            repr: Repr::Explicit {
                rank,
                circuits: Arc::new(CircuitSet::new(Vec::new())),
            },
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn ground_size(&self) -> usize {
        self.ground.size()
    }

    pub fn is_explicit(&self) -> bool {
        matches!(self.repr, Repr::Explicit { .. })
    }

    pub fn circuit_set(&self) -> Option<&CircuitSet> {
        match &self.repr {
            Repr::Explicit { circuits, .. } => Some(circuits),
            Repr::Oracle(_) => None,
        }
    }

    pub fn rank_full(&self) -> usize {
        match &self.repr {
            Repr::Explicit { rank, .. } => *rank,
            Repr::Oracle(o) => o.rank(self.ground.full_set()),
        }
    }

    pub fn is_independent(&self, f: ElementSet) -> bool {
        match &self.repr {
            Repr::Explicit { rank, circuits } => {
                f.len() <= *rank && !circuits.contains_circuit_within(f)
            }
            Repr::Oracle(o) => o.rank(f) == f.len(),
        }
    }

    /// Matroid rank of `f`, computed by greedy independence growth.
    pub fn rank(&self, f: ElementSet) -> usize {
        match &self.repr {
            Repr::Explicit { .. } => self.basis_of(f).len(),
            Repr::Oracle(o) => o.rank(f),
        }
    }

    /// A maximal independent subset of `f`, greedily in ascending element
    /// order (deterministic).
    pub fn basis_of(&self, f: ElementSet) -> ElementSet {
        match &self.repr {
            Repr::Explicit { rank, circuits } => {
                let mut b = ElementSet::empty();
                for e in f.iter() {
                    if b.len() == *rank {
                        break;
                    }
                    let cand = b.with(e);
                    if !circuits.contains_circuit_within(cand) {
                        b = cand;
                    }
                }
                b
            }
            Repr::Oracle(o) => {
                let mut b = ElementSet::empty();
                let mut r = 0;
                for e in f.iter() {
                    let cand = b.with(e);
                    if o.rank(cand) > r {
                        b = cand;
                        r += 1;
                    }
                }
                b
            }
        }
    }

    /// The unique maximal superset of `f` with equal rank.
    pub fn closure(&self, f: ElementSet) -> ElementSet {
        let b = self.basis_of(f);
        let mut cl = f;
        for e in self.ground.full_set().difference(f).iter() {
            if !self.is_independent(b.with(e)) {
                cl.insert(e);
            }
        }
        cl
    }

    /// All circuits of size at most `max_size`, canonical order.
    pub fn circuits_up_to(&self, max_size: usize, budget: u64) -> Result<Vec<ElementSet>> {
        match &self.repr {
            Repr::Explicit { circuits, .. } => {
                let mut out: Vec<ElementSet> =
                    circuits.iter().filter(|c| c.len() <= max_size).collect();
                out.sort_by_key(|c| c.canonical_key());
                Ok(out)
            }
            Repr::Oracle(_) => {
                let n = self.ground.size();
                let mut cost = 0u64;
                for s in 1..=max_size.min(n) {
                    cost = cost.saturating_add(binomial(n, s));
                }
                if cost > budget {
                    return Err(Error::BudgetExceeded {
                        op: "circuits",
                        detail: format!("{cost} subsets exceed budget {budget}"),
                    });
                }
                let mut found = CircuitSet::new(Vec::new());
                let mut out = Vec::new();
                let full = self.ground.full_set();
                for s in 1..=max_size.min(n) {
                    let mut layer = Vec::new();
                    for_each_k_subset(full, s, |cand| {
                        if !found.contains_circuit_within(cand) && !self.is_independent(cand) {
                            layer.push(cand);
                        }
                    });
                    out.extend(layer.iter().copied());
                    if !layer.is_empty() {
                        let mut all: Vec<ElementSet> = found.iter().collect();
                        all.extend(layer);
                        found = CircuitSet::new(all);
                    }
                }
                out.sort_by_key(|c| c.canonical_key());
                Ok(out)
            }
        }
    }

    /// Materialise an oracle matroid as an explicit one (identity on
    /// explicit input).
    pub fn to_explicit(&self, budget: u64) -> Result<Matroid> {
        match &self.repr {
            Repr::Explicit { .. } => Ok(self.clone()),
            Repr::Oracle(_) => {
                let rank = self.rank_full();
                let circuits = self.circuits_up_to(rank + 1, budget)?;
                Matroid::explicit(self.ground.clone(), rank, circuits)
            }
        }
    }

    /// Truncation: independent sets of `self` of size at most `rank - 1`.
    pub fn truncate(&self) -> Result<Matroid> {
        let r = self.rank_full();
        if r == 0 {
            return Err(Error::RankZero);
        }
        let me = self.to_explicit(u64::MAX)?;
        let circuits = me.circuit_set().expect("explicit");
        let mut new_circuits: Vec<ElementSet> =
            circuits.iter().filter(|c| c.len() <= r).collect();
        // every basis of the original becomes a circuit of the truncation
        for_each_k_subset(self.ground.full_set(), r, |s| {
            if !circuits.contains_circuit_within(s) {
                new_circuits.push(s);
            }
        });
        Matroid::explicit(self.ground.clone(), r - 1, new_circuits)
    }

    /// Equality as matroids (same ground size, same independent sets).
    pub fn same_matroid(&self, other: &Matroid) -> Result<bool> {
        if self.ground.size() != other.ground.size() {
            return Err(Error::GroundMismatch(self.ground.size(), other.ground.size()));
        }
        let a = self.to_explicit(u64::MAX)?;
        let b = other.to_explicit(u64::MAX)?;
        if a.rank_full() != b.rank_full() {
            return Ok(false);
        }
        let ca: Vec<ElementSet> = a.circuit_set().unwrap().circuits_within(self.ground.full_set());
        let cb: Vec<ElementSet> = b.circuit_set().unwrap().circuits_within(self.ground.full_set());
        Ok(ca == cb)
    }

    /// Connected components of the restriction to `f`.
    ///
    /// Explicit matroids use the shared-circuit relation on the stored
    /// circuit list; oracle matroids merge blocks while rank stays
    /// subadditive, which yields the same (finest rank-additive) partition:
    /// a circuit crossing two blocks forces strict subadditivity, and when
    /// rank is additive the restriction is a direct sum.
    pub fn components_of(&self, f: ElementSet, _budget: u64) -> Result<Vec<ElementSet>> {
        match &self.repr {
            Repr::Explicit { circuits, .. } => {
                let circuits_in_f = circuits.circuits_within(f);
                let ids = f.to_ids();
                let mut dsu = Dsu::new(ids.len());
                let pos: HashMap<usize, usize> =
                    ids.iter().copied().enumerate().map(|(i, e)| (e, i)).collect();
                for c in circuits_in_f {
                    let mut it = c.iter();
                    if let Some(first) = it.next() {
                        let fi = pos[&first];
                        for e in it {
                            dsu.union(fi, pos[&e]);
                        }
                    }
                }
                let mut groups: HashMap<usize, ElementSet> = HashMap::new();
                for (i, &e) in ids.iter().enumerate() {
                    groups.entry(dsu.find(i)).or_default().insert(e);
                }
                let mut out: Vec<ElementSet> = groups.into_values().collect();
                out.sort_by_key(|c| c.canonical_key());
                Ok(out)
            }
            Repr::Oracle(_) => {
                // union-find over the fundamental circuits of one basis:
                // their connectivity classes are exactly the components
                let ids = f.to_ids();
                let pos: HashMap<usize, usize> =
                    ids.iter().copied().enumerate().map(|(i, e)| (e, i)).collect();
                let mut dsu = Dsu::new(ids.len());
                let basis = self.basis_of(f);
                for e in f.difference(basis).iter() {
                    // fundamental circuit of e: e plus the basis elements it
                    // can replace
                    let with_e = basis.with(e);
                    let mut members = vec![e];
                    for b in basis.iter() {
                        if self.is_independent(with_e.without(b)) {
                            members.push(b);
                        }
                    }
                    // loops have an empty replacement set and stay alone
                    let first = pos[&members[0]];
                    for &x in &members[1..] {
                        dsu.union(first, pos[&x]);
                    }
                }
                let mut groups: HashMap<usize, ElementSet> = HashMap::new();
                for (i, &e) in ids.iter().enumerate() {
                    groups.entry(dsu.find(i)).or_default().insert(e);
                }
                let mut out: Vec<ElementSet> = groups.into_values().collect();
                out.sort_by_key(|c| c.canonical_key());
                Ok(out)
            }
        }
    }

    pub fn is_connected_set(&self, f: ElementSet, budget: u64) -> Result<bool> {
        Ok(self.components_of(f, budget)?.len() == 1)
    }

    /// The definitional bipartition test: `f` is connected iff
    /// `r(f) < r(f1) + r(f2)` for every bipartition. Exponential; used as a
    /// cross-check oracle on small sets.
    pub fn is_connected_by_partition_test(&self, f: ElementSet) -> bool {
        if f.len() <= 1 {
            return true;
        }
        let r = self.rank(f);
        let ids = f.to_ids();
        let anchor = ids[0];
        for part in subsets_of(f.without(anchor)) {
            let f1 = part.with(anchor);
            let f2 = f.difference(f1);
            if f2.is_empty() {
                continue;
            }
            if self.rank(f1) + self.rank(f2) == r {
                return false;
            }
        }
        true
    }

    /// Restriction to `f`, reindexed to `0..|f|`, as an explicit matroid.
    pub fn restriction_explicit(&self, f: ElementSet, budget: u64) -> Result<Matroid> {
        let ids = f.to_ids();
        if ids.is_empty() {
            return Err(Error::EmptyGround);
        }
        let ground = GroundSet::plain(ids.len())?;
        match &self.repr {
            Repr::Explicit { circuits, .. } => {
                let cs: Vec<ElementSet> = circuits
                    .circuits_within(f)
                    .into_iter()
                    .map(|c| ElementSet(map_down(c.0, f)))
                    .collect();
                Matroid::explicit(ground, self.rank(f), cs)
            }
            Repr::Oracle(_) => {
                let me = self.clone();
                let fmask = f;
                let oracle = move |s: ElementSet| me.rank(ElementSet(map_up(s.0, fmask)));
                let m = Matroid::from_oracle(ground, Arc::new(oracle));
                m.to_explicit(budget)
            }
        }
    }

    /// All flats, via breadth-first walk of the flat lattice. Budgeted by
    /// the number of flats.
    pub fn flats(&self, max_flats: usize) -> Result<Vec<ElementSet>> {
        let full = self.ground.full_set();
        let bottom = self.closure(ElementSet::empty());
        let mut seen: HashSet<u64> = HashSet::new();
        let mut order: Vec<ElementSet> = Vec::new();
        let mut frontier = vec![bottom];
        seen.insert(bottom.0);
        order.push(bottom);
        while let Some(flat) = frontier.pop() {
            let b = self.basis_of(flat);
            for e in full.difference(flat).iter() {
                let nb = b.with(e);
                // closure of flat + e computed from its basis
                let mut cl = flat.with(e);
                for x in full.difference(cl).iter() {
                    if !self.is_independent(nb.with(x)) {
                        cl.insert(x);
                    }
                }
                if seen.insert(cl.0) {
                    if order.len() >= max_flats {
                        return Err(Error::BudgetExceeded {
                            op: "flats",
                            detail: format!("more than {max_flats} flats"),
                        });
                    }
                    order.push(cl);
                    frontier.push(cl);
                }
            }
        }
        order.sort_by_key(|f| f.canonical_key());
        Ok(order)
    }

    /// Is every element of `f` in a circuit within `f`?
    pub fn is_cyclic_set(&self, f: ElementSet) -> bool {
        if f.is_empty() {
            return true;
        }
        let b = self.basis_of(f);
        let r = b.len();
        // elements outside a fixed basis of f are never coloops of f
        for e in b.iter() {
            if self.rank(f.without(e)) < r {
                return false;
            }
        }
        true
    }

    /// Flats that are unions of circuits, canonical order.
    pub fn cyclic_flats(&self, max_flats: usize) -> Result<Vec<ElementSet>> {
        let flats = self.flats(max_flats)?;
        Ok(flats
            .into_iter()
            .filter(|&f| self.is_cyclic_set(f))
            .collect())
    }

    /// Exact weak-order comparison with witness sets.
    pub fn weak_order_compare(&self, other: &Matroid, budget: u64) -> Result<CompareResult> {
        if self.ground.size() != other.ground.size() {
            return Err(Error::GroundMismatch(self.ground.size(), other.ground.size()));
        }
        // witness independent in self & dependent in other refutes self <= other
        let w_self_not_below = find_ind_dep_witness(self, other, budget)?;
        let w_other_not_below = find_ind_dep_witness(other, self, budget)?;
        let relation = match (&w_self_not_below, &w_other_not_below) {
            (None, None) => Relation::Equal,
            (None, Some(_)) => Relation::StrictlyBelow,
            (Some(_), None) => Relation::StrictlyAbove,
            (Some(_), Some(_)) => Relation::Incomparable,
        };
        Ok(CompareResult {
            relation,
            self_ind_other_dep: w_self_not_below,
            other_ind_self_dep: w_other_not_below,
        })
    }
}

/// First set (canonical order, sizes ascending) independent in `a` and
/// dependent in `b`, or `None` if `a` is weakly below `b`.
fn find_ind_dep_witness(a: &Matroid, b: &Matroid, budget: u64) -> Result<Option<ElementSet>> {
    // A witness exists iff some circuit of b is independent in a, so sets of
    // size up to rank(b) + 1 suffice.
    if let Some(cs) = b.circuit_set() {
        let mut circuits: Vec<ElementSet> = cs.iter().collect();
        circuits.sort_by_key(|c| c.canonical_key());
        for c in circuits {
            if a.is_independent(c) {
                return Ok(Some(c));
            }
        }
        return Ok(None);
    }
    let n = b.ground_size();
    let max_size = (b.rank_full() + 1).min(n);
    let mut cost = 0u64;
    for s in 1..=max_size {
        cost = cost.saturating_add(binomial(n, s));
    }
    if cost > budget {
        return Err(Error::BudgetExceeded {
            op: "weakOrderCompare",
            detail: format!("{cost} subsets exceed budget {budget}"),
        });
    }
    let full = b.ground().full_set();
    for s in 1..=max_size {
        let mut witness: Option<ElementSet> = None;
        for_each_k_subset(full, s, |cand| {
            if witness.is_none() && !b.is_independent(cand) && a.is_independent(cand) {
                witness = Some(cand);
            }
        });
        if witness.is_some() {
            return Ok(witness);
        }
    }
    Ok(None)
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    StrictlyBelow,
    StrictlyAbove,
    Equal,
    Incomparable,
}

/// Outcome of a weak-order comparison. Witnesses certify strictness: a set
/// independent in one matroid and dependent in the other.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CompareResult {
    pub relation: Relation,
    /// Independent in the left matroid, dependent in the right.
    pub self_ind_other_dep: Option<ElementSet>,
    /// Independent in the right matroid, dependent in the left.
    pub other_ind_self_dep: Option<ElementSet>,
}

/// Violation found by the axiom verifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    EmptySetDependent,
    NotHereditary { set: ElementSet, element: usize },
    ExchangeFails { larger: ElementSet, smaller: ElementSet },
}

/// Exhaustive matroid-axiom check of an independence predicate.
///
/// Checks that the empty set is independent, the family is hereditary, and
/// the exchange (augmentation) axiom holds. Exchange scanning is capped by
/// `pair_budget` pair tests.
pub fn verify_matroid_axioms(
    n: usize,
    indep: impl Fn(ElementSet) -> bool,
    pair_budget: u64,
) -> Result<Option<AxiomViolation>> {
    if n > 22 {
        return Err(Error::BudgetExceeded {
            op: "verifyMatroidAxioms",
            detail: format!("ground size {n} beyond exhaustive budget"),
        });
    }
    if !indep(ElementSet::empty()) {
        return Ok(Some(AxiomViolation::EmptySetDependent));
    }
    let total = 1u64 << n;
    let mut ind_by_size: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for mask in 0..total {
        let s = ElementSet(mask);
        if indep(s) {
            ind_by_size[s.len()].push(mask);
        }
    }
    // hereditary
    for size in 1..=n {
        for &mask in &ind_by_size[size] {
            let s = ElementSet(mask);
            for e in s.iter() {
                if !indep(s.without(e)) {
                    return Ok(Some(AxiomViolation::NotHereditary { set: s, element: e }));
                }
            }
        }
    }
    // exchange
    let mut pairs = 0u64;
    for size in 0..n {
        let smaller = &ind_by_size[size];
        let larger = &ind_by_size[size + 1];
        pairs = pairs.saturating_add(smaller.len() as u64 * larger.len() as u64);
        if pairs > pair_budget {
            return Err(Error::BudgetExceeded {
                op: "verifyMatroidAxioms",
                detail: format!("exchange pair count exceeds budget {pair_budget}"),
            });
        }
        for &a in larger {
            for &b in smaller {
                let extra = a & !b;
                let mut ok = false;
                let mut bits = extra;
                while bits != 0 {
                    let e = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if indep(ElementSet(b | (1 << e))) {
                        ok = true;
                        break;
                    }
                }
                if !ok {
                    return Ok(Some(AxiomViolation::ExchangeFails {
                        larger: ElementSet(a),
                        smaller: ElementSet(b),
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Re-index a mask living inside `within` down to positions `0..|within|`.
pub fn map_down(mask: u64, within: ElementSet) -> u64 {
    let mut out = 0u64;
    for (i, e) in within.iter().enumerate() {
        if mask >> e & 1 == 1 {
            out |= 1 << i;
        }
    }
    out
}

/// Inverse of `map_down`.
pub fn map_up(mask: u64, within: ElementSet) -> u64 {
    let mut out = 0u64;
    for (i, e) in within.iter().enumerate() {
        if mask >> i & 1 == 1 {
            out |= 1 << e;
        }
    }
    out
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
