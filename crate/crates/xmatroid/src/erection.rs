//! Truncation-inverse machinery: free erection, free elevation chains,
//! erection verification and a brute-force erection enumerator used as the
//! correctness oracle on small grounds.
//!
//! The free erection is computed by constraint propagation on would-be
//! hyperplanes. Every spanning (r+1)-set containing a non-spanning circuit
//! is dependent in any erection; its closure in the erection is a
//! hyperplane. Such generators are saturated under the closure implied by
//! non-spanning circuits, and two generators whose intersection spans must
//! lie in the same hyperplane, so they merge. A final sweep over the bases
//! absorbs forced closures of the form cl(B). What remains independent at
//! rank r+1 is every free spanning set inside no recorded hyperplane. The
//! output is axiom-checked; on small grounds the result provably equals the
//! weak-order maximum of all erections, which the oracle tests enforce.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::{binomial, for_each_k_subset, ElementSet};
use crate::error::{Error, Result};
use crate::matroid::{verify_matroid_axioms, CircuitSet, Matroid};

#[derive(Clone, Debug)]
pub struct ErectionResult {
    pub matroid: Matroid,
    pub trivial: bool,
}

#[derive(Clone, Debug)]
pub struct ElevationChain {
    /// strictly increasing rank; first entry is the input matroid
    pub stages: Vec<Matroid>,
    /// true when a caller-supplied rank cap cut the chain short
    pub aborted_at_cap: bool,
}

impl ElevationChain {
    pub fn final_stage(&self) -> &Matroid {
        self.stages.last().expect("nonempty chain")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ErectionBudget {
    /// cap on generator seeds enumerated from deep circuits
    pub seed_budget: u64,
    /// sampled axiom checks on grounds too large for the exhaustive verifier
    pub sampled_checks: u32,
    pub check_seed: u64,
}

impl Default for ErectionBudget {
    fn default() -> Self {
        ErectionBudget {
            seed_budget: 50_000_000,
            sampled_checks: 2000,
            check_seed: 0x5eed,
        }
    }
}

/// The weak-order-maximum erection of an explicit matroid.
pub fn free_erection(m: &Matroid, budget: &ErectionBudget) -> Result<ErectionResult> {
    let m = m.to_explicit(u64::MAX)?;
    let r = m.rank_full();
    let n = m.ground_size();
    if r + 1 > n {
        return Ok(ErectionResult {
            matroid: m,
            trivial: true,
        });
    }
    let all_circuits = m.circuit_set().expect("explicit").clone();
    let smalls = CircuitSet::new(all_circuits.iter().filter(|c| c.len() <= r).collect());
    let full = m.ground().full_set();

    // hyperplane generators forced by non-spanning circuits
    let mut fam = HyperplaneFamily::new(r);
    let mut seen_seeds: HashSet<u64> = HashSet::new();
    let mut seeds = 0u64;
    for c in smalls.iter() {
        let need = r + 1 - c.len();
        let pool = full.difference(c);
        if binomial(pool.len(), need) > budget.seed_budget {
            return Err(Error::BudgetExceeded {
                op: "freeErection",
                detail: format!(
                    "circuit of size {} needs {} extension sets",
                    c.len(),
                    binomial(pool.len(), need)
                ),
            });
        }
        let mut batch: Vec<ElementSet> = Vec::new();
        for_each_k_subset(pool, need, |ext| {
            let d = c.union(ext);
            if seen_seeds.insert(d.0) && m.rank(d) == r {
                batch.push(d);
            }
        });
        seeds += batch.len() as u64;
        if seeds > budget.seed_budget {
            return Err(Error::BudgetExceeded {
                op: "freeErection",
                detail: "seed budget exceeded".into(),
            });
        }
        for d in batch {
            fam.insert(d, &m, &smalls);
        }
    }

    // bases whose forced closure exceeds themselves generate hyperplanes too
    loop {
        let mut changed = false;
        let mut inserts: Vec<ElementSet> = Vec::new();
        for_each_k_subset(full, r, |b| {
            if smalls.contains_circuit_within(b) {
                return;
            }
            let mut w = b;
            for e in full.difference(b).iter() {
                let ext = b.with(e);
                if smalls.contains_circuit_within(ext) || fam.covered(ext) {
                    w.insert(e);
                }
            }
            if w != b && !fam.covered(w) {
                inserts.push(w);
            }
        });
        for w in inserts {
            if !fam.covered(w) {
                fam.insert(w, &m, &smalls);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    // independent (r+1)-sets of the erection
    let mut ind_next: Vec<ElementSet> = Vec::new();
    for_each_k_subset(full, r + 1, |d| {
        if !smalls.contains_circuit_within(d) && !fam.covered(d) {
            ind_next.push(d);
        }
    });
    if ind_next.is_empty() {
        return Ok(ErectionResult {
            matroid: m,
            trivial: true,
        });
    }

    // assemble the erected matroid
    let ind_hash: HashSet<u64> = ind_next.iter().map(|s| s.0).collect();
    let mut circuits: Vec<ElementSet> = smalls.iter().collect();
    for_each_k_subset(full, r + 1, |d| {
        if !smalls.contains_circuit_within(d) && !ind_hash.contains(&d.0) {
            circuits.push(d);
        }
    });
    if r + 2 <= n {
        for_each_k_subset(full, r + 2, |d| {
            let minimal = d.iter().all(|e| ind_hash.contains(&d.without(e).0));
            if minimal {
                circuits.push(d);
            }
        });
    }
    let erected = Matroid::explicit(m.ground().clone(), r + 1, circuits)?;
    validate_erection(&m, &erected, &ind_hash, budget)?;
    Ok(ErectionResult {
        matroid: erected,
        trivial: false,
    })
}

/// Internal guard: the erected family must satisfy the matroid axioms and
/// truncate back to the input.
fn validate_erection(
    m: &Matroid,
    erected: &Matroid,
    ind_next: &HashSet<u64>,
    budget: &ErectionBudget,
) -> Result<()> {
    let n = m.ground_size();
    if n <= 11 {
        if let Some(v) = verify_matroid_axioms(n, |s| erected.is_independent(s), u64::MAX)? {
            return Err(Error::AxiomViolation(format!("free erection produced {v:?}")));
        }
        if !erected.truncate()?.same_matroid(m)? {
            return Err(Error::AxiomViolation(
                "free erection does not truncate back to its input".into(),
            ));
        }
        return Ok(());
    }
    // sampled augmentation checks: a basis of m must extend into any
    // independent (r+1)-set
    let r = m.rank_full();
    let full = m.ground().full_set();
    let ind_list: Vec<u64> = {
        let mut v: Vec<u64> = ind_next.iter().copied().collect();
        v.sort();
        v
    };
    if ind_list.is_empty() {
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(budget.check_seed);
    for _ in 0..budget.sampled_checks {
        let d = ElementSet(ind_list[rng.gen_range(0..ind_list.len())]);
        // random basis: greedy over a random element order
        let mut ids = full.to_ids();
        for i in (1..ids.len()).rev() {
            ids.swap(i, rng.gen_range(0..=i));
        }
        let mut b = ElementSet::empty();
        for &e in &ids {
            if b.len() == r {
                break;
            }
            if m.is_independent(b.with(e)) {
                b = b.with(e);
            }
        }
        if b.len() < r {
            continue;
        }
        let ok = d
            .difference(b)
            .iter()
            .any(|e| ind_next.contains(&b.with(e).0));
        if !ok {
            return Err(Error::AxiomViolation(format!(
                "augmentation fails from basis {b:?} into {d:?}"
            )));
        }
    }
    Ok(())
}

/// Family of forced hyperplane generators: saturated sets, pairwise
/// intersections never spanning.
struct HyperplaneFamily {
    rank: usize,
    members: Vec<ElementSet>,
}

impl HyperplaneFamily {
    fn new(rank: usize) -> Self {
        HyperplaneFamily {
            rank,
            members: Vec::new(),
        }
    }

    fn covered(&self, s: ElementSet) -> bool {
        self.members.iter().any(|&l| s.is_subset_of(l))
    }

    fn insert(&mut self, s: ElementSet, m: &Matroid, smalls: &CircuitSet) {
        let mut cur = saturate(s, smalls);
        loop {
            let mut merged = false;
            let mut i = 0;
            while i < self.members.len() {
                let l = self.members[i];
                if cur.is_subset_of(l) {
                    return;
                }
                let inter = cur.intersection(l);
                if inter.len() >= self.rank && m.rank(inter) == self.rank {
                    self.members.swap_remove(i);
                    cur = saturate(cur.union(l), smalls);
                    merged = true;
                    // restart: the grown set may now swallow earlier members
                    i = 0;
                    continue;
                }
                i += 1;
            }
            if !merged {
                break;
            }
        }
        self.members.retain(|&l| !l.is_subset_of(cur));
        self.members.push(cur);
    }
}

/// Close `s` under non-spanning circuits: add e whenever some circuit C has
/// e in C and C - e inside the current set.
fn saturate(s: ElementSet, smalls: &CircuitSet) -> ElementSet {
    let mut cur = s;
    loop {
        let mut changed = false;
        for c in smalls.iter() {
            let outside = c.0 & !cur.0;
            if outside != 0 && outside & (outside - 1) == 0 {
                cur.0 |= outside;
                changed = true;
            }
        }
        if !changed {
            return cur;
        }
    }
}

/// Truncation test: `m1` is an erection of `m0` when `m0` is the truncation
/// of `m1`, or trivially when they are equal.
pub fn is_erection_of(m1: &Matroid, m0: &Matroid) -> Result<bool> {
    if m1.ground_size() != m0.ground_size() {
        return Err(Error::GroundMismatch(m1.ground_size(), m0.ground_size()));
    }
    if m1.same_matroid(m0)? {
        return Ok(true);
    }
    if m1.rank_full() != m0.rank_full() + 1 {
        return Ok(false);
    }
    m1.truncate()?.same_matroid(m0)
}

/// Iterated free erections until only the trivial erection remains, or the
/// optional rank cap is exceeded.
pub fn free_elevation(
    m: &Matroid,
    rank_cap: Option<usize>,
    budget: &ErectionBudget,
) -> Result<ElevationChain> {
    let mut stages = vec![m.to_explicit(u64::MAX)?];
    loop {
        let step = free_erection(stages.last().unwrap(), budget)?;
        if step.trivial {
            return Ok(ElevationChain {
                stages,
                aborted_at_cap: false,
            });
        }
        let rank = step.matroid.rank_full();
        stages.push(step.matroid);
        if let Some(cap) = rank_cap {
            if rank >= cap {
                return Ok(ElevationChain {
                    stages,
                    aborted_at_cap: true,
                });
            }
        }
    }
}

/// Exhaustive enumeration of all erections of `m0` (including the trivial
/// one), by searching dependency choices for the free spanning (r+1)-sets
/// and keeping exactly the choices that satisfy the augmentation axiom.
/// Oracle use is limited to small grounds.
pub fn enumerate_erections(m0: &Matroid, max_free: usize) -> Result<Vec<ErectionResult>> {
    let m = m0.to_explicit(u64::MAX)?;
    let n = m.ground_size();
    if n > 9 {
        return Err(Error::BudgetExceeded {
            op: "enumerateErections",
            detail: format!("oracle limited to ground <= 9, got {n}"),
        });
    }
    let r = m.rank_full();
    let full = m.ground().full_set();
    let mut out = vec![ErectionResult {
        matroid: m.clone(),
        trivial: true,
    }];
    if r + 1 > n {
        return Ok(out);
    }
    let all_circuits = m.circuit_set().expect("explicit").clone();
    let smalls = CircuitSet::new(all_circuits.iter().filter(|c| c.len() <= r).collect());
    let mut free: Vec<ElementSet> = Vec::new();
    for_each_k_subset(full, r + 1, |d| {
        if !smalls.contains_circuit_within(d) {
            free.push(d);
        }
    });
    if free.is_empty() {
        return Ok(out);
    }
    if free.len() > max_free.min(63) {
        return Err(Error::BudgetExceeded {
            op: "enumerateErections",
            detail: format!("{} free sets exceed the cap", free.len()),
        });
    }
    let mut bases: Vec<ElementSet> = Vec::new();
    for_each_k_subset(full, r, |b| {
        if !smalls.contains_circuit_within(b) {
            bases.push(b);
        }
    });
    // ext[b][d]: mask over free sets reachable as B + e with e in D \ B
    let fcount = free.len();
    let findex: std::collections::HashMap<u64, usize> =
        free.iter().enumerate().map(|(i, s)| (s.0, i)).collect();
    let mut ext = vec![vec![0u64; fcount]; bases.len()];
    for (bi, &b) in bases.iter().enumerate() {
        for (di, &d) in free.iter().enumerate() {
            let mut mask = 0u64;
            for e in d.difference(b).iter() {
                if let Some(&fi) = findex.get(&b.with(e).0) {
                    mask |= 1u64 << fi;
                }
            }
            ext[bi][di] = mask;
        }
    }
    let all_mask: u64 = if fcount == 64 { u64::MAX } else { (1u64 << fcount) - 1 };
    for dep in 0..=all_mask {
        if dep == all_mask {
            continue; // trivial erection already listed
        }
        let ind = all_mask & !dep;
        let mut valid = true;
        'scan: for (bi, _) in bases.iter().enumerate() {
            let mut remaining = ind;
            while remaining != 0 {
                let di = remaining.trailing_zeros() as usize;
                remaining &= remaining - 1;
                if ext[bi][di] & ind == 0 {
                    valid = false;
                    break 'scan;
                }
            }
        }
        if !valid {
            continue;
        }
        // build the matroid for this dependency choice
        let mut circuits: Vec<ElementSet> = smalls.iter().collect();
        for (di, &d) in free.iter().enumerate() {
            if dep >> di & 1 == 1 {
                circuits.push(d);
            }
        }
        let ind_hash: HashSet<u64> = free
            .iter()
            .enumerate()
            .filter(|(di, _)| ind >> di & 1 == 1)
            .map(|(_, s)| s.0)
            .collect();
        if r + 2 <= n {
            for_each_k_subset(full, r + 2, |d| {
                if d.iter().all(|e| ind_hash.contains(&d.without(e).0)) {
                    circuits.push(d);
                }
            });
        }
        let erected = Matroid::explicit(m.ground().clone(), r + 1, circuits)?;
        out.push(ErectionResult {
            matroid: erected,
            trivial: false,
        });
    }
    Ok(out)
}
