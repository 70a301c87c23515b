//! Proper sequences over a copy family, the val minimisation with witness
//! certificates, weakly saturated sequences, submodularity scanning, and
//! the matroid construction from a submodular val function.
//!
//! For a family X and a sequence S = (X_1, .., X_k) with each member not
//! contained in the union of its predecessors, `val(F, S) = |F ∪ ⋃X_i| - k`.
//! The minimum over all proper sequences upper-bounds the rank of F in
//! every matroid where all members of X are circuits, which is what the
//! emitted certificates witness.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bits::ElementSet;
use crate::error::{Error, Result};
use crate::graphs::CopyFamily;
use crate::matroid::{verify_matroid_axioms, Matroid};

/// Ordered member indices into a copy family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProperSequence {
    pub member_indices: Vec<usize>,
}

impl ProperSequence {
    pub fn empty() -> Self {
        ProperSequence {
            member_indices: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.member_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.member_indices.is_empty()
    }
}

/// Check properness and return the union of the members.
pub fn sequence_union(family: &CopyFamily, seq: &ProperSequence) -> Result<ElementSet> {
    let mut union = ElementSet::empty();
    for (i, &idx) in seq.member_indices.iter().enumerate() {
        let member = *family
            .members()
            .get(idx)
            .ok_or_else(|| Error::InvalidInput(format!("member index {idx} out of range")))?;
        if member.is_subset_of(union) {
            return Err(Error::ImproperSequence { index: i });
        }
        union = union.union(member);
    }
    Ok(union)
}

/// `val(F, S) = |F ∪ ⋃X_i| - k` for a proper sequence.
pub fn eval_val(family: &CopyFamily, target: ElementSet, seq: &ProperSequence) -> Result<i64> {
    let union = sequence_union(family, seq)?;
    Ok(target.union(union).len() as i64 - seq.len() as i64)
}

/// A checkable witness that `rank(target) <= value` holds in every matroid
/// in which all family members are circuits.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub target: Vec<usize>,
    pub sequence: Vec<Vec<usize>>,
    pub value: i64,
    pub family_hash: String,
}

impl Certificate {
    pub fn target_set(&self) -> ElementSet {
        ElementSet::from_ids(self.target.iter().copied())
    }

    pub fn sequence_sets(&self) -> Vec<ElementSet> {
        self.sequence
            .iter()
            .map(|ids| ElementSet::from_ids(ids.iter().copied()))
            .collect()
    }
}

/// Stable hash of a family: members as sorted id arrays over the ground.
pub fn family_hash(family: &CopyFamily) -> String {
    let mut hasher = Sha256::new();
    hasher.update(family.host().ground().size().to_le_bytes());
    for m in family.members() {
        hasher.update([0xffu8]);
        for e in m.iter() {
            hasher.update((e as u64).to_le_bytes());
        }
    }
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

/// Build a certificate from a sequence known to be proper.
pub fn make_certificate(
    family: &CopyFamily,
    target: ElementSet,
    seq: &ProperSequence,
) -> Result<Certificate> {
    let value = eval_val(family, target, seq)?;
    Ok(Certificate {
        target: target.to_ids(),
        sequence: seq
            .member_indices
            .iter()
            .map(|&i| family.members()[i].to_ids())
            .collect(),
        value,
        family_hash: family_hash(family),
    })
}

/// Re-check a certificate without trusting its producer: the hash must
/// match the family, the sequence must be proper and consist of members,
/// and the value must re-evaluate.
pub fn verify_certificate(family: &CopyFamily, cert: &Certificate) -> Result<()> {
    if cert.family_hash != family_hash(family) {
        return Err(Error::BadCertificate("family hash mismatch".into()));
    }
    let mut union = ElementSet::empty();
    for (i, set) in cert.sequence_sets().iter().enumerate() {
        if !family.contains_member(*set) {
            return Err(Error::BadCertificate(format!(
                "sequence entry {i} is not a family member"
            )));
        }
        if set.is_subset_of(union) {
            return Err(Error::BadCertificate(format!(
                "sequence entry {i} adds nothing new"
            )));
        }
        union = union.union(*set);
    }
    let value = cert.target_set().union(union).len() as i64 - cert.sequence.len() as i64;
    if value != cert.value {
        return Err(Error::BadCertificate(format!(
            "value mismatch: recomputed {value}, stated {}",
            cert.value
        )));
    }
    Ok(())
}

#[derive(Copy, Clone, Debug, Default, Serialize, Deserialize)]
pub struct SearchStats {
    pub states: u64,
    pub prunes: u64,
}

/// Result of the val minimisation.
#[derive(Clone, Debug)]
pub struct ValResult {
    pub value: i64,
    pub witness: Certificate,
    pub sequence: ProperSequence,
    /// false when the state budget cut the search short; the value is then
    /// only an upper bound
    pub exact: bool,
    pub stats: SearchStats,
}

#[derive(Clone, Copy)]
struct StateRec {
    mask: u64,
    k: u32,
    prev: u32,
    via: u32,
}

/// Exhaustive dynamic program over reachable unions of family members.
///
/// A state is the exact union U of the chosen members; properness and
/// future extensions depend only on U, so the maximal sequence length per
/// U is the only thing retained. Built once per family, then queried for
/// any number of targets.
pub struct ValEngine {
    members: Vec<ElementSet>,
    states: Vec<StateRec>,
    /// state indices sorted by (popcount, mask); scan order for tie-breaks
    order: Vec<u32>,
    exact: bool,
    stats: SearchStats,
}

impl ValEngine {
    pub fn build(family: &CopyFamily, state_budget: u64) -> ValEngine {
        let members: Vec<ElementSet> = family.members().to_vec();
        let mut index: HashMap<u64, u32> = HashMap::new();
        let mut states: Vec<StateRec> = vec![StateRec {
            mask: 0,
            k: 0,
            prev: u32::MAX,
            via: u32::MAX,
        }];
        index.insert(0, 0);
        let mut stats = SearchStats::default();
        let mut exact = true;
        // process strictly by popcount so a state's k is final when expanded
        let mut pending: std::collections::BTreeMap<u32, Vec<u32>> = Default::default();
        pending.insert(0, vec![0]);
        while let Some((&level, _)) = pending.iter().next() {
            let mut layer = pending.remove(&level).unwrap();
            layer.sort_by_key(|&i| states[i as usize].mask);
            for &si in &layer {
                let (umask, uk) = (states[si as usize].mask, states[si as usize].k);
                for (mi, &member) in members.iter().enumerate() {
                    if member.0 & !umask == 0 {
                        stats.prunes += 1;
                        continue;
                    }
                    let nmask = umask | member.0;
                    let nk = uk + 1;
                    match index.get(&nmask) {
                        Some(&existing) => {
                            if states[existing as usize].k < nk {
                                states[existing as usize].k = nk;
                                states[existing as usize].prev = si;
                                states[existing as usize].via = mi as u32;
                            }
                        }
                        None => {
                            if states.len() as u64 >= state_budget {
                                exact = false;
                                continue;
                            }
                            let id = states.len() as u32;
                            states.push(StateRec {
                                mask: nmask,
                                k: nk,
                                prev: si,
                                via: mi as u32,
                            });
                            index.insert(nmask, id);
                            pending.entry(nmask.count_ones()).or_default().push(id);
                        }
                    }
                }
            }
        }
        stats.states = states.len() as u64;
        let mut order: Vec<u32> = (0..states.len() as u32).collect();
        order.sort_by_key(|&i| {
            let s = &states[i as usize];
            (s.mask.count_ones(), s.mask)
        });
        ValEngine {
            members,
            states,
            order,
            exact,
            stats,
        }
    }

    pub fn exact(&self) -> bool {
        self.exact
    }

    pub fn stats(&self) -> SearchStats {
        self.stats
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    /// Minimum of `|F ∪ U| - k` over reachable states, with the optimal
    /// state chosen canonically.
    pub fn val(&self, target: ElementSet) -> i64 {
        let mut best = i64::MAX;
        for s in &self.states {
            let v = (target.0 | s.mask).count_ones() as i64 - s.k as i64;
            if v < best {
                best = v;
            }
        }
        best
    }

    /// Value plus the witness sequence (member indices along the optimal
    /// state's recorded path).
    pub fn val_with_witness(&self, target: ElementSet) -> (i64, ProperSequence) {
        let mut best = i64::MAX;
        let mut best_idx = 0usize;
        // canonical scan order, so ties keep the least state
        for &i in &self.order {
            let s = &self.states[i as usize];
            let v = (target.0 | s.mask).count_ones() as i64 - s.k as i64;
            if v < best {
                best = v;
                best_idx = i as usize;
            }
        }
        (best, self.reconstruct(best_idx))
    }

    fn reconstruct(&self, mut idx: usize) -> ProperSequence {
        let mut rev = Vec::new();
        while self.states[idx].via != u32::MAX {
            rev.push(self.states[idx].via as usize);
            idx = self.states[idx].prev as usize;
        }
        rev.reverse();
        ProperSequence {
            member_indices: rev,
        }
    }

    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }
}

/// One-shot val computation with an optional sound lower-bound oracle: once
/// the running minimum for `target` matches the oracle rank, the search can
/// stop early because val never goes below the rank of any matroid whose
/// circuits include the family.
pub fn compute_val(
    family: &CopyFamily,
    target: ElementSet,
    lower_bound: Option<&Matroid>,
    state_budget: u64,
) -> Result<ValResult> {
    let stop_at: Option<i64> = lower_bound.map(|m| m.rank(target) as i64);
    let members: Vec<ElementSet> = family.members().to_vec();
    let mut index: HashMap<u64, usize> = HashMap::new();
    let mut masks: Vec<u64> = vec![0];
    let mut ks: Vec<u32> = vec![0];
    let mut prevs: Vec<(u32, u32)> = vec![(u32::MAX, u32::MAX)];
    index.insert(0, 0);
    let mut stats = SearchStats::default();
    let mut exact = true;
    let mut best: i64 = target.len() as i64;
    let mut best_idx = 0usize;
    let mut pending: std::collections::BTreeMap<u32, Vec<usize>> = Default::default();
    pending.insert(0, vec![0]);
    'outer: while let Some((&level, _)) = pending.iter().next() {
        if let Some(stop) = stop_at {
            if best <= stop {
                stats.prunes += pending.values().map(|v| v.len() as u64).sum::<u64>();
                break 'outer;
            }
        }
        let mut layer = pending.remove(&level).unwrap();
        layer.sort_by_key(|&i| masks[i]);
        for &si in &layer {
            let (umask, uk) = (masks[si], ks[si]);
            for (mi, &member) in members.iter().enumerate() {
                if member.0 & !umask == 0 {
                    continue;
                }
                let nmask = umask | member.0;
                let nk = uk + 1;
                match index.get(&nmask) {
                    Some(&existing) => {
                        if ks[existing] < nk {
                            ks[existing] = nk;
                            prevs[existing] = (si as u32, mi as u32);
                        }
                    }
                    None => {
                        if masks.len() as u64 >= state_budget {
                            exact = false;
                            continue;
                        }
                        index.insert(nmask, masks.len());
                        masks.push(nmask);
                        ks.push(nk);
                        prevs.push((si as u32, mi as u32));
                        pending
                            .entry(nmask.count_ones())
                            .or_default()
                            .push(masks.len() - 1);
                    }
                }
            }
        }
        // refresh the running minimum after the level settles
        for i in 0..masks.len() {
            let v = (target.0 | masks[i]).count_ones() as i64 - ks[i] as i64;
            if v < best
                || (v == best
                    && (masks[i].count_ones(), masks[i])
                        < (masks[best_idx].count_ones(), masks[best_idx]))
            {
                best = v;
                best_idx = i;
            }
        }
    }
    stats.states = masks.len() as u64;
    // reconstruct
    let mut rev = Vec::new();
    let mut cur = best_idx;
    while prevs[cur].1 != u32::MAX {
        rev.push(prevs[cur].1 as usize);
        cur = prevs[cur].0 as usize;
    }
    rev.reverse();
    let seq = ProperSequence {
        member_indices: rev,
    };
    let witness = make_certificate(family, target, &seq)?;
    debug_assert_eq!(witness.value, best);
    Ok(ValResult {
        value: best,
        witness,
        sequence: seq,
        exact,
        stats,
    })
}

/// The equality side conditions of the val upper bound: when
/// `rank(F) = val(F, S)`, removing an element outside the sequence union
/// drops the rank and adding an element of the union keeps it.
pub fn equality_side_conditions_hold(
    m: &Matroid,
    f: ElementSet,
    seq_union: ElementSet,
) -> bool {
    let r = m.rank(f);
    for e in f.difference(seq_union).iter() {
        if m.rank(f.without(e)) != r - 1 {
            return false;
        }
    }
    let full = m.ground().full_set();
    for e in seq_union.intersection(full).iter() {
        if m.rank(f.with(e)) != r {
            return false;
        }
    }
    true
}

/// A weakly saturated sequence: starting from a base set, every member
/// contributes exactly one new element.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WeakSatSequence {
    pub base: Vec<usize>,
    pub steps: Vec<usize>,
}

impl WeakSatSequence {
    pub fn base_set(&self) -> ElementSet {
        ElementSet::from_ids(self.base.iter().copied())
    }
}

/// Validate a weakly saturated sequence; returns the constructed set.
pub fn is_weakly_saturated(family: &CopyFamily, w: &WeakSatSequence) -> Result<ElementSet> {
    let mut built = w.base_set();
    for (i, &idx) in w.steps.iter().enumerate() {
        let member = *family
            .members()
            .get(idx)
            .ok_or_else(|| Error::InvalidInput(format!("member index {idx} out of range")))?;
        let added = member.difference(built).len();
        if added != 1 {
            return Err(Error::NotWeaklySaturated { index: i, added });
        }
        built = built.union(member);
    }
    Ok(built)
}

/// Depth-first search for a weakly saturated sequence from `base` to
/// `target`, extending by the canonically least new element first.
/// `None` means the search space was exhausted; running past the budget is
/// an error instead.
pub fn search_weak_sat(
    family: &CopyFamily,
    base: ElementSet,
    target: ElementSet,
    state_budget: u64,
) -> Result<Option<WeakSatSequence>> {
    if !base.is_subset_of(target) {
        return Err(Error::InvalidInput("base must be contained in the target".into()));
    }
    // index members by element
    let n = family.host().ground().size();
    let mut by_element: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, m) in family.members().iter().enumerate() {
        if m.is_subset_of(target) {
            for e in m.iter() {
                by_element[e].push(i);
            }
        }
    }
    let mut dead: HashSet<u64> = HashSet::new();
    let mut steps: Vec<usize> = Vec::new();
    let found = dfs_weak_sat(
        family,
        &by_element,
        target,
        base,
        &mut steps,
        &mut dead,
        state_budget,
    )?;
    if found {
        Ok(Some(WeakSatSequence {
            base: base.to_ids(),
            steps,
        }))
    } else {
        Ok(None)
    }
}

fn dfs_weak_sat(
    family: &CopyFamily,
    by_element: &[Vec<usize>],
    target: ElementSet,
    built: ElementSet,
    steps: &mut Vec<usize>,
    dead: &mut HashSet<u64>,
    state_budget: u64,
) -> Result<bool> {
    if built == target {
        return Ok(true);
    }
    if dead.contains(&built.0) {
        return Ok(false);
    }
    if dead.len() as u64 >= state_budget {
        return Err(Error::BudgetExceeded {
            op: "searchWeakSat",
            detail: format!("{} dead states", dead.len()),
        });
    }
    for e in target.difference(built).iter() {
        for &mi in &by_element[e] {
            let member = family.members()[mi];
            if member.contains(e) && member.difference(built.with(e)).is_empty() {
                steps.push(mi);
                if dfs_weak_sat(
                    family,
                    by_element,
                    target,
                    built.union(member),
                    steps,
                    dead,
                    state_budget,
                )? {
                    return Ok(true);
                }
                steps.pop();
            }
        }
    }
    dead.insert(built.0);
    Ok(false)
}

/// A local submodularity violation of val.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubmodularityViolation {
    pub f: Vec<usize>,
    pub e: usize,
    pub f2: usize,
    pub v_fe: i64,
    pub v_ff: i64,
    pub v_fef: i64,
    pub v_f: i64,
}

pub enum ScanMode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

/// Scan the two-element local form of submodularity:
/// `val(F+e) + val(F+f) >= val(F+e+f) + val(F)`. For monotone functions
/// this is equivalent to full submodularity.
pub fn val_submodularity_scan(
    family: &CopyFamily,
    mode: ScanMode,
    state_budget: u64,
) -> Result<Vec<SubmodularityViolation>> {
    let n = family.host().ground().size();
    let engine = ValEngine::build(family, state_budget);
    if !engine.exact() {
        return Err(Error::BudgetExceeded {
            op: "valSubmodularityScan",
            detail: "val state budget exceeded".into(),
        });
    }
    let full = family.host().ground().full_set();
    let mut violations = Vec::new();
    match mode {
        ScanMode::Exhaustive => {
            if n > 12 {
                return Err(Error::BudgetExceeded {
                    op: "valSubmodularityScan",
                    detail: format!("exhaustive mode needs ground <= 12, got {n}"),
                });
            }
            let mut table: Vec<i64> = vec![0; 1 << n];
            for mask in 0u64..(1 << n) {
                table[mask as usize] = engine.val(ElementSet(mask));
            }
            for mask in 0u64..(1 << n) {
                let f = ElementSet(mask);
                let outside = full.difference(f);
                for e in outside.iter() {
                    for f2 in outside.iter() {
                        if f2 <= e {
                            continue;
                        }
                        let v_fe = table[f.with(e).0 as usize];
                        let v_ff = table[f.with(f2).0 as usize];
                        let v_fef = table[f.with(e).with(f2).0 as usize];
                        let v_f = table[mask as usize];
                        if v_fe + v_ff < v_fef + v_f {
                            violations.push(SubmodularityViolation {
                                f: f.to_ids(),
                                e,
                                f2,
                                v_fe,
                                v_ff,
                                v_fef,
                                v_f,
                            });
                        }
                    }
                }
            }
        }
        ScanMode::Sampled { samples, seed } => {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let mask = rng.gen::<u64>() & full.0;
                let f = ElementSet(mask);
                let outside: Vec<usize> = full.difference(f).to_ids();
                if outside.len() < 2 {
                    continue;
                }
                let i = rng.gen_range(0..outside.len());
                let mut j = rng.gen_range(0..outside.len() - 1);
                if j >= i {
                    j += 1;
                }
                let (e, f2) = (outside[i.min(j)], outside[i.max(j)]);
                let v_fe = engine.val(f.with(e));
                let v_ff = engine.val(f.with(f2));
                let v_fef = engine.val(f.with(e).with(f2));
                let v_f = engine.val(f);
                if v_fe + v_ff < v_fef + v_f {
                    violations.push(SubmodularityViolation {
                        f: f.to_ids(),
                        e,
                        f2,
                        v_fe,
                        v_ff,
                        v_fef,
                        v_f,
                    });
                }
            }
        }
    }
    Ok(violations)
}

/// Construct the matroid whose rank function is val, after verifying
/// submodularity exhaustively. Every family member ends up cyclic; the
/// construction also axiom-checks the result.
pub fn build_val_matroid(family: &CopyFamily, state_budget: u64) -> Result<Matroid> {
    let violations = val_submodularity_scan(family, ScanMode::Exhaustive, state_budget)?;
    if let Some(v) = violations.into_iter().next() {
        return Err(Error::NotSubmodular {
            f: ElementSet::from_ids(v.f.iter().copied()),
            e: v.e,
            f2: v.f2,
            v_fe: v.v_fe,
            v_ff: v.v_ff,
            v_fef: v.v_fef,
            v_f: v.v_f,
        });
    }
    let n = family.host().ground().size();
    let engine = ValEngine::build(family, state_budget);
    let mut table: Vec<i64> = vec![0; 1 << n];
    for mask in 0u64..(1 << n) {
        table[mask as usize] = engine.val(ElementSet(mask));
    }
    let rank = table[(ElementSet::full(n).0) as usize].max(0) as usize;
    // circuits: dependent sets all of whose maximal proper subsets are independent
    let mut circuits = Vec::new();
    for mask in 1u64..(1 << n) {
        let s = ElementSet(mask);
        if s.len() > rank + 1 {
            continue;
        }
        if table[mask as usize] == s.len() as i64 {
            continue; // independent
        }
        if table[mask as usize] != s.len() as i64 - 1 {
            continue; // dependent but not minimally
        }
        let minimal = s
            .iter()
            .all(|e| table[s.without(e).0 as usize] == s.len() as i64 - 1);
        if minimal {
            circuits.push(s);
        }
    }
    let m = Matroid::explicit(family.host().ground().clone(), rank, circuits)?;
    if n <= 16 {
        if let Some(v) = verify_matroid_axioms(n, |s| m.is_independent(s), 50_000_000)? {
            return Err(Error::AxiomViolation(format!(
                "val matroid construction produced {v:?}"
            )));
        }
    }
    for &x in family.members() {
        if !m.is_cyclic_set(x) {
            return Err(Error::AxiomViolation(format!(
                "family member {x:?} is not cyclic in the val matroid"
            )));
        }
    }
    Ok(m)
}

/// Outcome of certifying the connected flats of a matroid against a family.
#[derive(Clone, Debug)]
pub struct CertifyOutcome {
    pub certificates: Vec<Certificate>,
    /// (flat, val, rank) for flats whose val stayed above the rank
    pub failures: Vec<(ElementSet, i64, usize)>,
    pub flats_checked: usize,
}

impl CertifyOutcome {
    pub fn success(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every connected flat of `m`, find a proper sequence whose val equals
/// the flat's rank. Success implies val coincides with the rank function of
/// `m` on the whole ground set and `m` is the unique maximal matroid with
/// the family as circuits.
pub fn certify_connected_flats(
    m: &Matroid,
    family: &CopyFamily,
    max_flats: usize,
    state_budget: u64,
) -> Result<CertifyOutcome> {
    for e in 0..m.ground_size() {
        if m.rank(ElementSet::singleton(e)) == 0 {
            return Err(Error::InvalidInput(format!("matroid has a loop at {e}")));
        }
    }
    let engine = ValEngine::build(family, state_budget);
    if !engine.exact() {
        return Err(Error::BudgetExceeded {
            op: "certifyConnectedFlats",
            detail: "val state budget exceeded".into(),
        });
    }
    let flats = m.flats(max_flats)?;
    let mut certificates = Vec::new();
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for flat in flats {
        if flat.is_empty() {
            continue;
        }
        if !m.is_connected_set(flat, u64::MAX)? {
            continue;
        }
        checked += 1;
        let rank = m.rank(flat);
        let (value, seq) = engine.val_with_witness(flat);
        if value == rank as i64 {
            certificates.push(make_certificate(family, flat, &seq)?);
        } else {
            failures.push((flat, value, rank));
        }
    }
    Ok(CertifyOutcome {
        certificates,
        failures,
        flats_checked: checked,
    })
}

/// Enumerate val over all subsets of a small ground as a rank table.
pub fn val_table(family: &CopyFamily, state_budget: u64) -> Result<Vec<i64>> {
    let n = family.host().ground().size();
    if n > 20 {
        return Err(Error::BudgetExceeded {
            op: "valTable",
            detail: format!("ground {n} too large for a full table"),
        });
    }
    let engine = ValEngine::build(family, state_budget);
    if !engine.exact() {
        return Err(Error::BudgetExceeded {
            op: "valTable",
            detail: "state budget exceeded".into(),
        });
    }
    let mut table = vec![0i64; 1 << n];
    for mask in 0u64..(1 << n) {
        table[mask as usize] = engine.val(ElementSet(mask));
    }
    Ok(table)
}

/// Random proper sequence for fuzzing: a random walk choosing extendable
/// members until the requested length or exhaustion.
pub fn random_proper_sequence(
    family: &CopyFamily,
    max_len: usize,
    rng: &mut impl rand::Rng,
) -> ProperSequence {
    let mut union = ElementSet::empty();
    let mut out = Vec::new();
    for _ in 0..max_len {
        let extendable: Vec<usize> = (0..family.len())
            .filter(|&i| !family.members()[i].is_subset_of(union))
            .collect();
        if extendable.is_empty() {
            break;
        }
        let pick = extendable[rng.gen_range(0..extendable.len())];
        union = union.union(family.members()[pick]);
        out.push(pick);
    }
    ProperSequence {
        member_indices: out,
    }
}
