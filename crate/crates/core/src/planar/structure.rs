use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::embedding::Embedding;
use super::PlaneGraph;
use crate::{Error, Result, Vertex};

/// One side of a chord split, relabeled to `0..labels.len()`; `labels[i]` is
/// the original vertex behind local vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanePart {
    pub graph: PlaneGraph,
    pub labels: Vec<Vertex>,
}

/// A disc: an embedding together with its outer cycle in tracing direction.
pub(crate) type Disc = (Embedding, Vec<Vertex>);

/// First chord `(i, j)` (0-based positions, `i < j`) of the outer cycle in
/// lexicographic order.
pub(crate) fn first_chord(emb: &Embedding, outer: &[Vertex]) -> Option<(usize, usize)> {
    let p = outer.len();
    for i in 0..p {
        for j in i + 2..p {
            if (i, j) != (0, p - 1) && emb.has_edge(outer[i], outer[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Splits a disc along the chord `outer[i] outer[j]`. The first part is
/// bounded by `outer[..=i] ++ outer[j..]`, the second by `outer[i..=j]`.
pub(crate) fn split_disc(emb: &Embedding, outer: &[Vertex], i: usize, j: usize) -> (Disc, Disc) {
    let (a, b) = (outer[i], outer[j]);
    let removed: BTreeSet<Vertex> = [a, b].into_iter().collect();
    let second_seed = outer[i + 1];
    let second: BTreeSet<Vertex> = emb
        .components_without(&removed)
        .into_iter()
        .find(|comp| comp.contains(&second_seed))
        .expect("the seed vertex is not removed");
    let mut second_keep = second.clone();
    second_keep.extend([a, b]);
    let first_keep: BTreeSet<Vertex> = emb.vertices().filter(|v| !second.contains(v)).collect();

    let first_outer: Vec<Vertex> = outer[..=i].iter().chain(&outer[j..]).copied().collect();
    let second_outer: Vec<Vertex> = outer[i..=j].to_vec();
    ((emb.induced(&first_keep), first_outer), (emb.induced(&second_keep), second_outer))
}

fn relabel(emb: &Embedding, outer: &[Vertex]) -> PlanePart {
    let labels: Vec<Vertex> = emb.vertices().collect();
    let local = |v: Vertex| labels.binary_search(&v).expect("vertex of the part");
    let rotation = Embedding {
        rotation: emb.rotation.iter().map(|(&v, rot)| (local(v), rot.iter().map(|&u| local(u)).collect())).collect(),
    };
    let outer = outer.iter().map(|&v| local(v)).collect();
    PlanePart { graph: PlaneGraph::from_embedding_unchecked(labels.len(), &rotation, outer), labels }
}

/// Lexicographically first chord of the outer cycle as 1-based positions
/// `(i, j)` with `1 <= i <= j - 2`, excluding the closing edge `v1 vp`.
pub fn find_chord(pg: &PlaneGraph) -> Option<(usize, usize)> {
    if !pg.outer_is_simple_cycle() {
        return None;
    }
    first_chord(&pg.embedding(), pg.outer()).map(|(i, j)| (i + 1, j + 1))
}

/// Splits along the chord at 1-based outer positions `(i, j)` into the
/// parts bounded by `v1..vi vj..vp` and `vi..vj`.
pub fn split_on_chord(pg: &PlaneGraph, chord: (usize, usize)) -> Result<(PlanePart, PlanePart)> {
    let (i, j) = chord;
    let outer = pg.outer();
    let p = outer.len();
    let vertex_at = |k: usize| if (1..=p).contains(&k) { outer[k - 1] } else { k };
    let not_a_chord = Error::NotAChord(vertex_at(i), vertex_at(j));
    if !pg.outer_is_simple_cycle() || i < 1 || j > p || i + 2 > j || (i, j) == (1, p) {
        return Err(not_a_chord);
    }
    let emb = pg.embedding();
    if !emb.has_edge(outer[i - 1], outer[j - 1]) {
        return Err(not_a_chord);
    }
    let ((e1, o1), (e2, o2)) = split_disc(&emb, outer, i - 1, j - 1);
    Ok((relabel(&e1, &o1), relabel(&e2, &o2)))
}

/// Neighbors of the outer vertex `v` in rotation order, from its outer
/// predecessor to its outer successor: `v1, u1, .., um, v3`.
pub fn fan_neighbors(pg: &PlaneGraph, v: Vertex) -> Result<Vec<Vertex>> {
    let outer = pg.outer();
    let pos = outer.iter().position(|&x| x == v).filter(|_| pg.outer_is_simple_cycle());
    let pos = pos.ok_or(Error::NotOnOuterCycle(v))?;
    let p = outer.len();
    let (before, after) = (outer[(pos + p - 1) % p], outer[(pos + 1) % p]);
    pg.embedding().fan(v, before, after).ok_or(Error::NotOnOuterCycle(v))
}

/// Neighbors of `x` strictly between `from` and `to`, walking the rotation
/// forward.
fn forward_arc(emb: &Embedding, x: Vertex, from: Vertex, to: Vertex) -> Vec<Vertex> {
    let mut out = Vec::new();
    let mut cur = emb.succ(x, from).expect("from is a neighbor");
    while cur != to {
        out.push(cur);
        cur = emb.succ(x, cur).expect("cur is a neighbor");
    }
    out
}

/// A triangle with vertices on both of its sides, lexicographically first,
/// or `None` when every triangle bounds a face region on one side.
pub fn find_separating_triangle(pg: &PlaneGraph) -> Option<[Vertex; 3]> {
    let emb = pg.embedding();
    let g = pg.graph();
    for a in g.vertices() {
        for &b in g.neighbors(a).range(a + 1..) {
            for &c in g.neighbors(b).range(b + 1..) {
                if !g.has_edge(a, c) {
                    continue;
                }
                // Corners of the directed triangle a -> b -> c as (incoming, corner, outgoing).
                let corners = [(c, a, b), (a, b, c), (b, c, a)];
                let one_side = corners.iter().any(|&(x, y, z)| !forward_arc(&emb, y, x, z).is_empty());
                let other_side = corners.iter().any(|&(x, y, z)| !forward_arc(&emb, y, z, x).is_empty());
                if one_side && other_side {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}
