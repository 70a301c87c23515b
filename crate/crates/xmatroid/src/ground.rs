//! Ground sets and their canonical element labelling.
//!
//! When the ground set is the edge set of a graph, every element carries its
//! edge label. Complete-graph edges are indexed lexicographically by
//! `(i, j)` with `i < j`; bipartite edges by `(u-index, w-index)`. All
//! certificates and JSON artifacts reference these indices.

use serde::{Deserialize, Serialize};

use crate::bits::{ElementSet, MAX_GROUND};
use crate::error::{Error, Result};

/// Label attached to a ground element.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum EdgeLabel {
    /// Edge `{i, j}` of a graph on `0..n`, stored with `i < j`.
    Pair(usize, usize),
    /// Edge `(u_i, w_j)` of a bipartite graph.
    Bip(usize, usize),
}

/// A finite ground set of at most 64 elements with optional edge labels.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GroundSet {
    size: usize,
    labels: Option<Vec<EdgeLabel>>,
}

impl GroundSet {
    pub fn plain(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyGround);
        }
        if size > MAX_GROUND {
            return Err(Error::GroundTooLarge(size));
        }
        Ok(GroundSet { size, labels: None })
    }

    pub fn labelled(labels: Vec<EdgeLabel>) -> Result<Self> {
        let size = labels.len();
        if size == 0 {
            return Err(Error::EmptyGround);
        }
        if size > MAX_GROUND {
            return Err(Error::GroundTooLarge(size));
        }
        let mut seen = labels.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != labels.len() {
            return Err(Error::InvalidInput("duplicate edge labels".into()));
        }
        Ok(GroundSet {
            size,
            labels: Some(labels),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.size)
    }

    pub fn label(&self, e: usize) -> Option<EdgeLabel> {
        self.labels.as_ref().map(|l| l[e])
    }

    pub fn labels(&self) -> Option<&[EdgeLabel]> {
        self.labels.as_deref()
    }

    /// Index of a labelled element, if present.
    pub fn index_of(&self, label: EdgeLabel) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|l| l.iter().position(|&x| x == label))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_oversized() {
        assert!(GroundSet::plain(0).is_err());
        assert!(GroundSet::plain(65).is_err());
        assert!(GroundSet::plain(64).is_ok());
    }

    #[test]
    fn duplicate_labels_rejected() {
        let labels = vec![EdgeLabel::Pair(0, 1), EdgeLabel::Pair(0, 1)];
        assert!(GroundSet::labelled(labels).is_err());
    }
}
