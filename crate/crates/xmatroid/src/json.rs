//! JSON data-transfer shapes for matroids, graphs, count functions and
//! elevation chains. Element sets travel as sorted id arrays.

use serde::{Deserialize, Serialize};

use crate::bits::ElementSet;
use crate::counts::CountFunction;
use crate::error::{Error, Result};
use crate::graphs::{HostGraph, HostKind};
use crate::ground::GroundSet;
use crate::matroid::Matroid;

/// `{"ground_size": n, "rank": r, "circuits": [[ids...], ...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatroidJson {
    pub ground_size: usize,
    pub rank: usize,
    pub circuits: Vec<Vec<usize>>,
}

impl MatroidJson {
    pub fn from_matroid(m: &Matroid) -> Result<Self> {
        let me = m.to_explicit(u64::MAX)?;
        let circuits = me
            .circuit_set()
            .expect("explicit")
            .circuits_within(me.ground().full_set())
            .into_iter()
            .map(|c| c.to_ids())
            .collect();
        Ok(MatroidJson {
            ground_size: me.ground_size(),
            rank: me.rank_full(),
            circuits,
        })
    }

    pub fn to_matroid(&self) -> Result<Matroid> {
        let ground = GroundSet::plain(self.ground_size)?;
        let circuits = self
            .circuits
            .iter()
            .map(|ids| ElementSet::from_ids(ids.iter().copied()))
            .collect();
        Matroid::explicit(ground, self.rank, circuits)
    }
}

/// Host graph JSON mirrors `HostKind` directly.
pub fn host_to_json(host: &HostGraph) -> HostKind {
    host.kind().clone()
}

pub fn host_from_json(kind: &HostKind) -> Result<HostGraph> {
    match kind {
        HostKind::Complete { n } => HostGraph::complete(*n),
        HostKind::Bipartite { m, n } => HostGraph::complete_bipartite(*m, *n),
        HostKind::Edges { n, edges } => HostGraph::from_edge_list(*n, edges),
    }
}

/// `{"kind":"f","a":2,"b":3} | {"kind":"g",...} | {"kind":"h","k":2}`
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FunctionSpecJson {
    #[serde(rename = "f")]
    VertexCount { a: i64, b: i64 },
    #[serde(rename = "g")]
    BipartiteCount { a: i64, b: i64, c: i64 },
    #[serde(rename = "h")]
    PictureLifting { k: i64 },
}

impl FunctionSpecJson {
    pub fn bind(&self, host: HostGraph) -> Result<CountFunction> {
        match *self {
            FunctionSpecJson::VertexCount { a, b } => CountFunction::vertex_count(a, b, host),
            FunctionSpecJson::BipartiteCount { a, b, c } => {
                CountFunction::bipartite_count(a, b, c, host)
            }
            FunctionSpecJson::PictureLifting { k } => CountFunction::picture_lifting(k, host),
        }
    }
}

/// Elevation chain: matroid stages with their ranks.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElevationChainJson {
    pub stages: Vec<ElevationStageJson>,
    pub aborted_at_cap: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElevationStageJson {
    pub rank: usize,
    pub matroid: MatroidJson,
}

/// Copy family dump: arrays of edge-id arrays.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyJson {
    pub host: HostKind,
    pub members: Vec<Vec<usize>>,
}

pub fn element_set_to_json(s: ElementSet) -> Vec<usize> {
    s.to_ids()
}

pub fn element_set_from_json(ids: &[usize]) -> Result<ElementSet> {
    if ids.iter().any(|&e| e >= 64) {
        return Err(Error::InvalidInput("element id out of range".into()));
    }
    Ok(ElementSet::from_ids(ids.iter().copied()))
}
