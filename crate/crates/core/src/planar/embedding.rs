//! Sparse rotation-system embedding over arbitrary vertex ids.
//!
//! Faces are traced with `next(u -> v) = v -> succ_v(u)`, where `succ_v` is
//! the cyclic successor in `v`'s rotation list.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::Vertex;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Embedding {
    pub rotation: BTreeMap<Vertex, Vec<Vertex>>,
}

impl Embedding {
    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.values().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.rotation.keys().copied()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        self.rotation.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).contains(&v)
    }

    fn position(&self, v: Vertex, u: Vertex) -> Option<usize> {
        self.neighbors(v).iter().position(|&x| x == u)
    }

    pub fn succ(&self, v: Vertex, u: Vertex) -> Option<Vertex> {
        let rot = self.neighbors(v);
        let i = self.position(v, u)?;
        Some(rot[(i + 1) % rot.len()])
    }

    pub fn pred(&self, v: Vertex, u: Vertex) -> Option<Vertex> {
        let rot = self.neighbors(v);
        let i = self.position(v, u)?;
        Some(rot[(i + rot.len() - 1) % rot.len()])
    }

    /// Face walk starting with the dart `u -> v`, listed from `u`.
    pub fn face_from(&self, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
        let limit = 2 * self.edge_count() + 1;
        let mut walk = alloc::vec![u];
        let (mut a, mut b) = (u, v);
        loop {
            let c = self.succ(b, a)?;
            a = b;
            b = c;
            if (a, b) == (u, v) {
                return Some(walk);
            }
            walk.push(a);
            if walk.len() > limit {
                return None;
            }
        }
    }

    /// All face walks; `None` when some traversal does not close.
    pub fn faces(&self) -> Option<Vec<Vec<Vertex>>> {
        let mut seen: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
        let mut faces = Vec::new();
        for (&u, rot) in &self.rotation {
            for &v in rot {
                if seen.contains(&(u, v)) {
                    continue;
                }
                let walk = self.face_from(u, v)?;
                for i in 0..walk.len() {
                    seen.insert((walk[i], walk[(i + 1) % walk.len()]));
                }
                faces.push(walk);
            }
        }
        Some(faces)
    }

    /// Inserts `new` into `v`'s rotation directly after `after`.
    fn insert_after(&mut self, v: Vertex, after: Vertex, new: Vertex) {
        let rot = self.rotation.get_mut(&v).expect("vertex present");
        let i = rot.iter().position(|&x| x == after).expect("neighbor present");
        rot.insert(i + 1, new);
    }

    /// Adds the edge `walk[i] walk[j]` inside the face traced by `walk`,
    /// splitting it in two.
    pub fn add_chord_in_face(&mut self, walk: &[Vertex], i: usize, j: usize) {
        let len = walk.len();
        let (a, b) = (walk[i], walk[j]);
        let a_prev = walk[(i + len - 1) % len];
        let b_prev = walk[(j + len - 1) % len];
        self.insert_after(a, a_prev, b);
        self.insert_after(b, b_prev, a);
    }

    pub fn remove_vertex(&mut self, v: Vertex) {
        if let Some(nbrs) = self.rotation.remove(&v) {
            for u in nbrs {
                if let Some(rot) = self.rotation.get_mut(&u) {
                    rot.retain(|&x| x != v);
                }
            }
        }
    }

    /// The sub-embedding induced by `keep`.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Embedding {
        let rotation = self
            .rotation
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, rot)| (v, rot.iter().copied().filter(|u| keep.contains(u)).collect()))
            .collect();
        Embedding { rotation }
    }

    /// Vertex sets of the components of the embedding minus `removed`.
    pub fn components_without(&self, removed: &BTreeSet<Vertex>) -> Vec<BTreeSet<Vertex>> {
        let mut seen: BTreeSet<Vertex> = removed.clone();
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen.contains(&start) {
                continue;
            }
            seen.insert(start);
            let mut comp = BTreeSet::new();
            let mut stack = alloc::vec![start];
            while let Some(x) = stack.pop() {
                comp.insert(x);
                for &y in self.neighbors(x) {
                    if seen.insert(y) {
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

    /// Whether `a` and `b` are joined by a path avoiding `avoid`.
    pub fn connected_avoiding(&self, a: Vertex, b: Vertex, avoid: Vertex) -> bool {
        let mut seen: BTreeSet<Vertex> = [avoid, a].into_iter().collect();
        let mut stack = alloc::vec![a];
        while let Some(x) = stack.pop() {
            if x == b {
                return true;
            }
            for &y in self.neighbors(x) {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        false
    }

    pub fn is_two_connected(&self) -> bool {
        if self.vertex_count() < 3 || !self.is_connected() {
            return false;
        }
        self.vertices().all(|v| {
            let removed: BTreeSet<Vertex> = [v].into_iter().collect();
            self.components_without(&removed).len() == 1
        })
    }

    /// Index of the face walk containing the dart `u -> v`, with the walk
    /// rotated to start at `u`.
    pub fn face_with_dart(&self, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
        if !self.has_edge(u, v) {
            return None;
        }
        self.face_from(u, v)
    }

    /// Neighbors of `v` read backwards through the rotation from `from` to
    /// `to`, both included. For an outer vertex `v2` with outer neighbors `v1`
    /// (before) and `v3` (after), `fan(v2, v1, v3)` lists `v1, u1, .., um, v3`.
    pub fn fan(&self, v: Vertex, from: Vertex, to: Vertex) -> Option<Vec<Vertex>> {
        let mut out = alloc::vec![from];
        let mut cur = from;
        while cur != to {
            cur = self.pred(v, cur)?;
            out.push(cur);
            if out.len() > self.neighbors(v).len() {
                return None;
            }
        }
        Some(out)
    }
}

/// Whether two cyclic sequences are equal up to rotation.
pub(crate) fn same_cycle(a: &[Vertex], b: &[Vertex]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..b.len()).any(|shift| (0..a.len()).all(|i| a[i] == b[(i + shift) % b.len()]))
}
