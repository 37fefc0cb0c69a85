use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::{Error, Result, SimpleGraph, Vertex};

/// Longest cycle length [`enumerate_cycles`] accepts.
pub const MAX_CYCLE_LENGTH: usize = 10;

/// Simple cycles grouped by length. Each cycle starts at its smallest vertex
/// and runs in the direction whose second vertex is smaller.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleSet {
    pub by_length: BTreeMap<usize, Vec<Vec<Vertex>>>,
}

impl CycleSet {
    pub fn cycles(&self, len: usize) -> &[Vec<Vertex>] {
        self.by_length.get(&len).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, len: usize) -> usize {
        self.cycles(len).len()
    }

    pub fn total(&self) -> usize {
        self.by_length.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.total() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<Vertex>> + '_ {
        self.by_length.values().flatten()
    }
}

/// Canonical form of a cycle: rotated to start at its smallest vertex and
/// reflected so the second vertex is the smaller neighbor.
pub fn canonical_cycle(cycle: &[Vertex]) -> Vec<Vertex> {
    let n = cycle.len();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n).min_by_key(|&i| cycle[i]).expect("nonempty");
    let forward: Vec<Vertex> = (0..n).map(|k| cycle[(start + k) % n]).collect();
    let backward: Vec<Vertex> = (0..n).map(|k| cycle[(start + n - k) % n]).collect();
    forward.min(backward)
}

/// All simple cycles of length at most `max_len`.
pub fn enumerate_cycles(g: &SimpleGraph, max_len: usize) -> Result<CycleSet> {
    if max_len > MAX_CYCLE_LENGTH {
        return Err(Error::LimitExceeded { limit: MAX_CYCLE_LENGTH, actual: max_len });
    }
    let mut out = CycleSet::default();
    let mut path = Vec::new();
    let mut on_path = alloc::vec![false; g.n()];
    for start in g.vertices() {
        path.push(start);
        on_path[start] = true;
        extend_paths(g, start, max_len, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
        path.pop();
    }
    Ok(out)
}

fn extend_paths(
    g: &SimpleGraph,
    start: Vertex,
    max_len: usize,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    out: &mut CycleSet,
) {
    let last = *path.last().expect("path starts at start");
    for &next in g.neighbors(last).range(start..) {
        if next == start {
            if path.len() >= 3 && path[1] < last {
                out.by_length.entry(path.len()).or_default().push(path.clone());
            }
            continue;
        }
        if on_path[next] || path.len() == max_len {
            continue;
        }
        path.push(next);
        on_path[next] = true;
        extend_paths(g, start, max_len, path, on_path, out);
        on_path[next] = false;
        path.pop();
    }
}

/// Graph families from the extension theorems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// No 3-cycle shares an edge with a 4-cycle.
    NoAdjacent34,
    /// No 3-, 4- and 5-cycle that pairwise share an edge.
    FamilyA,
    /// No cycle whose length lies in the set, which must be `{4, a, b, 9}`
    /// with distinct `a, b` from `{6, 7, 8}`.
    NoCycleLengths(BTreeSet<usize>),
}

fn cycle_edges(cycle: &[Vertex]) -> BTreeSet<(Vertex, Vertex)> {
    let n = cycle.len();
    (0..n)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % n]);
            (a.min(b), a.max(b))
        })
        .collect()
}

fn share_edge(a: &BTreeSet<(Vertex, Vertex)>, b: &BTreeSet<(Vertex, Vertex)>) -> bool {
    a.iter().any(|e| b.contains(e))
}

fn validate_lengths(lengths: &BTreeSet<usize>) -> Result<()> {
    let middle: Vec<usize> = lengths.iter().copied().filter(|&l| l != 4 && l != 9).collect();
    let ok = lengths.len() == 4
        && lengths.contains(&4)
        && lengths.contains(&9)
        && middle.iter().all(|l| (6..=8).contains(l));
    if ok {
        Ok(())
    } else {
        Err(Error::BadSpec(format!(
            "forbidden lengths {lengths:?} are not of the form {{4, a, b, 9}} with a != b in {{6, 7, 8}}"
        )))
    }
}

/// Whether `g` belongs to `family`, with cycles sharing an edge counted as
/// adjacent.
pub fn check_family(g: &SimpleGraph, family: &Family) -> Result<bool> {
    match family {
        Family::NoAdjacent34 => {
            let cycles = enumerate_cycles(g, 4)?;
            let tri: Vec<_> = cycles.cycles(3).iter().map(|c| cycle_edges(c)).collect();
            let quad: Vec<_> = cycles.cycles(4).iter().map(|c| cycle_edges(c)).collect();
            Ok(!tri.iter().any(|t| quad.iter().any(|q| share_edge(t, q))))
        }
        Family::FamilyA => {
            let cycles = enumerate_cycles(g, 5)?;
            let edges = |len| cycles.cycles(len).iter().map(|c| cycle_edges(c)).collect::<Vec<_>>();
            let (tri, quad, pent) = (edges(3), edges(4), edges(5));
            for t in &tri {
                for q in quad.iter().filter(|q| share_edge(t, q)) {
                    if pent.iter().any(|p| share_edge(t, p) && share_edge(q, p)) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        Family::NoCycleLengths(lengths) => {
            validate_lengths(lengths)?;
            let cycles = enumerate_cycles(g, 9)?;
            Ok(lengths.iter().all(|&l| cycles.count(l) == 0))
        }
    }
}
