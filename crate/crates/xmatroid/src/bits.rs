//! Fixed-width bit-vector subsets of a ground set of at most 64 elements.
//!
//! `ElementSet` is the universal currency of every engine in this crate:
//! copies of pattern graphs, matroid circuits, search states and
//! certificates are all element sets over a shared ground set.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Hard cap on ground-set size. Everything in this crate fits in one word.
pub const MAX_GROUND: usize = 64;

/// A subset of `{0, .., size-1}` stored as a bit mask.
///
/// The ground size is carried by the surrounding context (a `GroundSet`,
/// a matroid, a host graph); `ElementSet` itself is just the mask, which
/// keeps it `Copy` and hashable. JSON form: sorted id array.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(pub u64);

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_ids().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = ids.iter().find(|&&e| e >= MAX_GROUND) {
            return Err(serde::de::Error::custom(format!("element id {bad} out of range")));
        }
        Ok(ElementSet::from_ids(ids))
    }
}

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn empty() -> Self {
        ElementSet(0)
    }

    pub fn full(size: usize) -> Self {
        debug_assert!(size <= MAX_GROUND);
        if size == 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << size) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!(e < MAX_GROUND);
        ElementSet(1u64 << e)
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        let mut bits = 0u64;
        for e in ids {
            debug_assert!(e < MAX_GROUND);
            bits |= 1u64 << e;
        }
        ElementSet(bits)
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u64 << e;
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u64 << e);
    }

    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1u64 << e)
    }

    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1u64 << e))
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Elements in ascending order.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn to_ids(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Canonical order used everywhere results must be reproducible:
    /// first by cardinality, then by numeric mask value.
    pub fn canonical_key(self) -> (usize, u64) {
        (self.len(), self.0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the set bits of a mask, ascending.
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let e = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(e)
        }
    }
}

/// All subsets of `ground` in an arbitrary but deterministic order
/// (numeric mask order). Only usable for small grounds.
pub fn subsets_of(ground: ElementSet) -> impl Iterator<Item = ElementSet> {
    // Standard subset-of-mask walk: iterates all 2^k submasks.
    let full = ground.0;
    let mut cur: u64 = 0;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = ElementSet(cur);
        if cur == full {
            done = true;
        } else {
            cur = (cur.wrapping_sub(full)) & full;
        }
        Some(out)
    })
}

/// All `k`-element subsets of `ground`, in ascending numeric mask order
/// restricted to the chosen positions.
pub fn k_subsets_of(ground: ElementSet, k: usize) -> Vec<ElementSet> {
    let ids = ground.to_ids();
    let mut out = Vec::new();
    if k > ids.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(ElementSet::from_ids(idx.iter().map(|&i| ids[i])));
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + ids.len() - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Visit every `k`-subset of `ground` without materialising the list.
pub fn for_each_k_subset(ground: ElementSet, k: usize, mut f: impl FnMut(ElementSet)) {
    let ids = ground.to_ids();
    let n = ids.len();
    if k > n {
        return;
    }
    if k == 0 {
        f(ElementSet::empty());
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut mask = ElementSet::from_ids(idx.iter().map(|&i| ids[i]));
    loop {
        f(mask);
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
        mask = ElementSet::from_ids(idx.iter().map(|&i| ids[i]));
    }
}

/// Binomial coefficient, saturating; handy for budget estimates.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}
