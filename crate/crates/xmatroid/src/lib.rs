//! Exact combinatorics workbench for matroids prescribed by circuit
//! families, in the weak order.
//!
//! The crate builds and compares matroids on ground sets of at most 64
//! elements: uniform matroids of union-stable copy families, matroids
//! induced by monotone submodular counts, free erections and elevations,
//! and generic row matroids over a large prime field. Its central object is
//! the val bound: the minimum of `|F ∪ ⋃X_i| - k` over proper sequences of
//! family members, which upper-bounds the rank of `F` in every matroid
//! where the members are circuits, and comes with machine-checkable
//! sequence certificates.

pub mod bits;
pub mod checks;
pub mod counts;
pub mod erection;
pub mod error;
pub mod graphs;
pub mod ground;
pub mod json;
pub mod linear;
pub mod matroid;
pub mod pebble;
pub mod valseq;
pub mod weaksat;

pub use bits::ElementSet;
pub use error::{Error, Result};
pub use ground::{EdgeLabel, GroundSet};
pub use matroid::{CompareResult, Matroid, Relation};
