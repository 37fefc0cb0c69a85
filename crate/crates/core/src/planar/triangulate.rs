use alloc::vec::Vec;

use super::embedding::{same_cycle, Embedding};
use super::PlaneGraph;
use crate::{Error, Result, Vertex};

/// Adds edges until no vertex is a cut vertex. Each edge joins two
/// rotation-consecutive neighbors `a, b` of a cut vertex `v` and is drawn
/// inside the angle `a v b`, so the result stays plane.
pub(crate) fn biconnect(emb: &mut Embedding) {
    'restart: loop {
        let vertices: Vec<Vertex> = emb.vertices().collect();
        for v in vertices {
            let rot = emb.neighbors(v).to_vec();
            if rot.len() < 2 {
                continue;
            }
            for &a in &rot {
                let b = emb.succ(v, a).expect("a is a neighbor of v");
                if a == b || emb.has_edge(a, b) || emb.connected_avoiding(a, b, v) {
                    continue;
                }
                let walk = emb.face_from(a, v).expect("faces close");
                emb.add_chord_in_face(&walk, 0, 2);
                continue 'restart;
            }
        }
        return;
    }
}

/// Splits every face other than the outer one (the face holding the dart
/// `outer_dart`) into triangles. Chords fan out from the lowest-numbered
/// vertex of a face; a chord that already exists elsewhere is skipped in
/// favor of the next target or the next apex.
pub(crate) fn triangulate_bounded_faces(emb: &mut Embedding, outer: &[Vertex]) {
    'restart: loop {
        let faces = emb.faces().expect("faces close");
        for walk in faces {
            if walk.len() < 4 || same_cycle(&walk, outer) {
                continue;
            }
            let len = walk.len();
            let mut apexes: Vec<usize> = (0..len).collect();
            apexes.sort_by_key(|&i| (walk[i], i));
            for i in apexes {
                for step in 2..=len - 2 {
                    let j = (i + step) % len;
                    if walk[i] != walk[j] && !emb.has_edge(walk[i], walk[j]) {
                        emb.add_chord_in_face(&walk, i, j);
                        continue 'restart;
                    }
                }
            }
            unreachable!("a face of length >= 4 in a simple plane graph always admits a new chord");
        }
        return;
    }
}

/// Adds edges inside faces until the graph is 2-connected; the outer face
/// becomes the face containing the first dart of the old outer walk.
pub fn make_two_connected(pg: &PlaneGraph) -> Result<PlaneGraph> {
    if pg.n() < 3 {
        return Err(Error::NotTwoConnected);
    }
    let mut emb = pg.embedding();
    if !emb.is_connected() {
        return Err(Error::InvalidEmbedding("graph is not connected".into()));
    }
    biconnect(&mut emb);
    let (a, b) = (pg.outer()[0], pg.outer()[1]);
    let outer = emb.face_with_dart(a, b).expect("darts survive edge insertion");
    Ok(PlaneGraph::from_embedding_unchecked(pg.n(), &emb, outer))
}

/// Triangulates every bounded face of a 2-connected plane graph, keeping the
/// outer cycle.
pub fn triangulate_interior(pg: &PlaneGraph) -> Result<PlaneGraph> {
    let mut emb = pg.embedding();
    if !emb.is_two_connected() || !pg.outer_is_simple_cycle() {
        return Err(Error::NotTwoConnected);
    }
    triangulate_bounded_faces(&mut emb, pg.outer());
    Ok(PlaneGraph::from_embedding_unchecked(pg.n(), &emb, pg.outer().to_vec()))
}
