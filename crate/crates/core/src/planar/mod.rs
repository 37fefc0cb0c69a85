//! Plane graphs given by rotation systems, and the structural operations the
//! planar solver and the family predicates need.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::{Error, Result, SimpleGraph, Vertex};

mod cycles;
pub(crate) mod embedding;
mod generate;
pub(crate) mod structure;
pub(crate) mod triangulate;

pub use cycles::{canonical_cycle, check_family, enumerate_cycles, CycleSet, Family, MAX_CYCLE_LENGTH};
pub use generate::{gen_planar_triangulation, gen_random_budget, gen_random_cover};
pub use structure::{fan_neighbors, find_chord, find_separating_triangle, split_on_chord, PlanePart};
pub use triangulate::{make_two_connected, triangulate_interior};

use embedding::{same_cycle, Embedding};

/// A connected graph with a rotation system (cyclic neighbor order at every
/// vertex) and a designated outer face.
///
/// The outer face is stored as the face walk in tracing direction; for a
/// 2-connected graph it is a simple cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    graph: SimpleGraph,
    rotation: Vec<Vec<Vertex>>,
    outer: Vec<Vertex>,
}

/// One face of a plane graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub vertices: Vec<Vertex>,
    pub outer: bool,
}

impl PlaneGraph {
    /// Validates and builds a plane graph. `outer` may be given in either
    /// direction; it is stored in tracing direction.
    pub fn new(graph: SimpleGraph, rotation: Vec<Vec<Vertex>>, outer: Vec<Vertex>) -> Result<Self> {
        if rotation.len() != graph.n() {
            return Err(Error::InvalidEmbedding(format!(
                "{} rotation lists for {} vertices",
                rotation.len(),
                graph.n()
            )));
        }
        for (v, rot) in rotation.iter().enumerate() {
            let as_set: BTreeSet<Vertex> = rot.iter().copied().collect();
            if as_set.len() != rot.len() || &as_set != graph.neighbors(v) {
                return Err(Error::InvalidEmbedding(format!("rotation at {v} is not a permutation of its neighbors")));
            }
        }
        let mut pg = PlaneGraph { graph, rotation, outer: Vec::new() };
        let emb = pg.embedding();
        let faces = checked_faces(&pg.graph, &emb)?;
        if pg.graph.edge_count() == 0 {
            if pg.graph.n() == 1 && outer.len() <= 1 {
                pg.outer = outer;
                return Ok(pg);
            }
            return Err(Error::InvalidEmbedding("outer face does not match the graph".into()));
        }
        let reversed: Vec<Vertex> = outer.iter().rev().copied().collect();
        let found = faces
            .iter()
            .find(|face| same_cycle(face, &outer))
            .or_else(|| faces.iter().find(|face| same_cycle(face, &reversed)))
            .ok_or_else(|| Error::InvalidEmbedding("outer cycle is not a face".into()))?;
        // keep the caller's starting vertex when possible
        let start = outer.first().copied().unwrap_or(found[0]);
        let i = found.iter().position(|&x| x == start).unwrap_or(0);
        pg.outer = found[i..].iter().chain(&found[..i]).copied().collect();
        Ok(pg)
    }

    pub(crate) fn from_embedding_unchecked(n: usize, emb: &Embedding, outer: Vec<Vertex>) -> PlaneGraph {
        let mut graph = SimpleGraph::new(n);
        let mut rotation = alloc::vec![Vec::new(); n];
        for (&v, rot) in &emb.rotation {
            rotation[v] = rot.clone();
            for &u in rot {
                if v < u {
                    graph.add_edge(v, u).expect("embedding is simple");
                }
            }
        }
        PlaneGraph { graph, rotation, outer }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rotation[v]
    }

    pub fn outer(&self) -> &[Vertex] {
        &self.outer
    }

    pub(crate) fn embedding(&self) -> Embedding {
        Embedding { rotation: self.rotation.iter().cloned().enumerate().collect() }
    }

    /// Whether the outer face walk is a simple cycle of length at least 3.
    pub fn outer_is_simple_cycle(&self) -> bool {
        let set: BTreeSet<Vertex> = self.outer.iter().copied().collect();
        self.outer.len() >= 3 && set.len() == self.outer.len()
    }
}

fn checked_faces(graph: &SimpleGraph, emb: &Embedding) -> Result<Vec<Vec<Vertex>>> {
    if !graph.is_connected() {
        return Err(Error::InvalidEmbedding("graph is not connected".into()));
    }
    let faces = emb.faces().ok_or_else(|| Error::InvalidEmbedding("face traversal does not close".into()))?;
    let face_count = if graph.edge_count() == 0 { 1 } else { faces.len() };
    let euler = graph.n() as i64 - graph.edge_count() as i64 + face_count as i64;
    if graph.n() > 0 && euler != 2 {
        return Err(Error::InvalidEmbedding(format!("Euler characteristic is {euler}, expected 2")));
    }
    Ok(faces)
}

/// All faces of a connected plane graph, the outer one flagged.
pub fn faces(pg: &PlaneGraph) -> Result<Vec<Face>> {
    let faces = checked_faces(&pg.graph, &pg.embedding())?;
    Ok(faces
        .into_iter()
        .map(|vertices| {
            let outer = same_cycle(&vertices, &pg.outer);
            Face { vertices, outer }
        })
        .collect())
}
