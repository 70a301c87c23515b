//! Shared fixtures for the integration suites.

#![allow(dead_code)]

use xmatroid::counts::{induced_matroid, CountFunction};
use xmatroid::graphs::{enumerate_copies, CopyFamily, HostGraph, PatternSpec};
use xmatroid::matroid::Matroid;

pub fn complete(n: usize) -> HostGraph {
    HostGraph::complete(n).unwrap()
}

pub fn bipartite(m: usize, n: usize) -> HostGraph {
    HostGraph::complete_bipartite(m, n).unwrap()
}

pub fn copies(pattern: PatternSpec, host: &HostGraph) -> CopyFamily {
    enumerate_copies(&pattern, host).unwrap()
}

/// Cycle matroid of the host, as an induced-count oracle.
pub fn graphic(host: &HostGraph) -> Matroid {
    induced_matroid(&CountFunction::vertex_count(1, 1, host.clone()).unwrap())
}

/// Bicircular matroid (each component at most one cycle).
pub fn bicircular(host: &HostGraph) -> Matroid {
    induced_matroid(&CountFunction::vertex_count(1, 0, host.clone()).unwrap())
}

/// Even cycle matroid.
pub fn even_cycle(host: &HostGraph) -> Matroid {
    induced_matroid(&CountFunction::bipartite_count(1, 1, 0, host.clone()).unwrap())
}

/// Generic two-dimensional rigidity counts.
pub fn laman(host: &HostGraph) -> Matroid {
    induced_matroid(&CountFunction::vertex_count(2, 3, host.clone()).unwrap())
}

/// Explicit materialisation helper.
pub fn explicit(m: &Matroid) -> Matroid {
    m.to_explicit(u64::MAX).unwrap()
}
