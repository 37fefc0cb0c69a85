use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::{Error, Result, Vertex};

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<BTreeSet<Vertex>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { adj: alloc::vec![BTreeSet::new(); n] }
    }

    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.adj[u].insert(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[v].insert(u);
        Ok(())
    }

    /// Adds `uv` unless it is already present. Returns whether it was added.
    pub fn ensure_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        if self.has_edge(u, v) {
            return Ok(false);
        }
        self.add_edge(u, v).map(|_| true)
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        let removed = self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        removed
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| nbrs.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.n()
    }

    /// Number of neighbors of `v` inside `set`.
    pub fn degree_in(&self, v: Vertex, set: &BTreeSet<Vertex>) -> usize {
        self.adj[v].iter().filter(|u| set.contains(u)).count()
    }

    /// Vertex sets of the connected components of `G - removed`, each sorted,
    /// listed by smallest vertex.
    pub fn components_without(&self, removed: &BTreeSet<Vertex>) -> Vec<BTreeSet<Vertex>> {
        let mut seen = alloc::vec![false; self.n()];
        for &r in removed {
            if r < self.n() {
                seen[r] = true;
            }
        }
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = BTreeSet::new();
            let mut stack = alloc::vec![start];
            while let Some(x) = stack.pop() {
                comp.insert(x);
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components_without(&BTreeSet::new()).len() <= 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        let mut g = SimpleGraph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(1, 0), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn edge_count_matches_adjacency() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 5);
        let listed: Vec<_> = g.edges().collect();
        assert_eq!(listed, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]);
        for (u, v) in listed {
            assert!(g.has_edge(v, u));
        }
    }

    #[test]
    fn components_after_removal() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let removed: BTreeSet<_> = [2].into_iter().collect();
        let comps = g.components_without(&removed);
        assert_eq!(comps.len(), 2);
        assert!(comps[0].contains(&0) && comps[1].contains(&4));
    }
}
