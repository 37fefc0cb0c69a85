use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::{Color, Error, Pair, Result, SimpleGraph, Vertex};

/// A cover of a graph on `n` vertices with colors `1..=s`.
///
/// Each vertex `v` has a list `L(v)`; each edge `uv` carries a partial
/// bijection between `L(u)` and `L(v)`. The cliques on the fibers
/// `{v} x L(v)` are implicit: a representative set meets every fiber once,
/// so they never contribute edges to an induced pair graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cover {
    s: usize,
    lists: Vec<BTreeSet<Color>>,
    // keyed by (u, v) with u < v; pairs stored as (color at u, color at v)
    matchings: BTreeMap<(Vertex, Vertex), BTreeSet<(Color, Color)>>,
}

impl Cover {
    /// A cover with empty lists and no matchings.
    pub fn new(n: usize, s: usize) -> Self {
        Cover { s, lists: alloc::vec![BTreeSet::new(); n], matchings: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn set_list(&mut self, v: Vertex, colors: impl IntoIterator<Item = Color>) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        let list: BTreeSet<Color> = colors.into_iter().collect();
        if let Some(&c) = list.iter().find(|&&c| c == 0 || c > self.s) {
            return Err(Error::ColorOutOfRange { color: c, s: self.s });
        }
        self.lists[v] = list;
        Ok(())
    }

    pub fn list(&self, v: Vertex) -> &BTreeSet<Color> {
        &self.lists[v]
    }

    /// Adds `(u, cu) ~ (v, cv)` to the matching on `uv`.
    pub fn add_match(&mut self, u: Vertex, v: Vertex, cu: Color, cv: Color) -> Result<()> {
        for (x, c) in [(u, cu), (v, cv)] {
            if x >= self.n() {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n() });
            }
            if !self.lists[x].contains(&c) {
                return Err(Error::BadCover(format!("match uses color {c} not in L({x})")));
            }
        }
        if u == v {
            return Err(Error::BadCover(format!("match between fiber {u} and itself")));
        }
        let (key, pair) = if u < v { ((u, v), (cu, cv)) } else { ((v, u), (cv, cu)) };
        let set = self.matchings.entry(key).or_default();
        if set.contains(&pair) {
            return Ok(());
        }
        if set.iter().any(|&(a, b)| a == pair.0 || b == pair.1) {
            return Err(Error::BadCover(format!(
                "matching on {}{} is not a partial bijection at ({}, {})",
                key.0, key.1, pair.0, pair.1
            )));
        }
        set.insert(pair);
        Ok(())
    }

    /// Color of `v` matched to `(u, cu)`, if any.
    pub fn partner(&self, u: Vertex, cu: Color, v: Vertex) -> Option<Color> {
        if u < v {
            self.matchings.get(&(u, v))?.iter().find(|&&(a, _)| a == cu).map(|&(_, b)| b)
        } else {
            self.matchings.get(&(v, u))?.iter().find(|&&(_, b)| b == cu).map(|&(a, _)| a)
        }
    }

    pub fn adjacent(&self, p: Pair, q: Pair) -> bool {
        p.vertex != q.vertex && self.partner(p.vertex, p.color, q.vertex) == Some(q.color)
    }

    /// Pairs of the matching on `uv`, oriented as `(color at u, color at v)`.
    pub fn matching(&self, u: Vertex, v: Vertex) -> Vec<(Color, Color)> {
        let (key, flip) = if u < v { ((u, v), false) } else { ((v, u), true) };
        match self.matchings.get(&key) {
            None => Vec::new(),
            Some(set) => set.iter().map(|&(a, b)| if flip { (b, a) } else { (a, b) }).collect(),
        }
    }

    /// All matched pairs as `(u, v, cu, cv)` with `u < v`, ascending.
    pub fn matches(&self) -> impl Iterator<Item = (Vertex, Vertex, Color, Color)> + '_ {
        self.matchings.iter().flat_map(|(&(u, v), set)| set.iter().map(move |&(a, b)| (u, v, a, b)))
    }

    /// Checks that the cover belongs to `g`: same vertex count and matchings
    /// only on edges of `g`.
    pub fn validate(&self, g: &SimpleGraph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::BadCover(format!("cover has {} fibers but the graph has {} vertices", self.n(), g.n())));
        }
        for (&(u, v), set) in &self.matchings {
            if !set.is_empty() && !g.has_edge(u, v) {
                return Err(Error::BadCover(format!("matching on non-edge {u} {v}")));
            }
        }
        Ok(())
    }

    /// Relabels the fibers named in `renaming`; lists and matchings move with
    /// their colors.
    pub fn renamed(&self, renaming: &FiberRenaming) -> Cover {
        let mut out = Cover::new(self.n(), self.s);
        for v in 0..self.n() {
            out.lists[v] = self.lists[v].iter().map(|&c| renaming.forward(v, c)).collect();
        }
        for (&(u, v), set) in &self.matchings {
            let mapped = set.iter().map(|&(a, b)| (renaming.forward(u, a), renaming.forward(v, b))).collect();
            out.matchings.insert((u, v), mapped);
        }
        out
    }

    /// Removes every matched pair touching `v`.
    pub fn clear_matchings_at(&mut self, v: Vertex) {
        self.matchings.retain(|&(a, b), _| a != v && b != v);
    }
}

/// Per-vertex permutations of the color labels `1..=s`.
///
/// Vertices without an entry keep the identity labelling. Colorings and
/// orders computed on a renamed cover are mapped back with
/// [`backward`](FiberRenaming::backward).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FiberRenaming {
    // forward[v][c] = new label of old color c; index 0 unused
    forward: BTreeMap<Vertex, Vec<Color>>,
    backward: BTreeMap<Vertex, Vec<Color>>,
}

impl FiberRenaming {
    pub fn identity() -> Self {
        FiberRenaming::default()
    }

    /// Installs a renaming of `v`'s fiber that sends each `old -> new` in
    /// `assignments`; the remaining colors fill the unused labels in
    /// ascending order.
    pub fn assign(&mut self, v: Vertex, s: usize, assignments: &[(Color, Color)]) -> Result<()> {
        let mut fwd = alloc::vec![0; s + 1];
        let mut used = alloc::vec![false; s + 1];
        for &(old, new) in assignments {
            if old == 0 || old > s || new == 0 || new > s {
                return Err(Error::ColorOutOfRange { color: old.max(new), s });
            }
            if fwd[old] != 0 || used[new] {
                return Err(Error::InvalidInput(format!("renaming of fiber {v} is not injective")));
            }
            fwd[old] = new;
            used[new] = true;
        }
        let mut free = (1..=s).filter(|&c| !used[c]);
        for slot in fwd.iter_mut().skip(1).filter(|x| **x == 0) {
            *slot = free.next().expect("free labels match unassigned colors");
        }
        let mut bwd = alloc::vec![0; s + 1];
        for old in 1..=s {
            bwd[fwd[old]] = old;
        }
        self.forward.insert(v, fwd);
        self.backward.insert(v, bwd);
        Ok(())
    }

    pub fn forward(&self, v: Vertex, c: Color) -> Color {
        self.forward.get(&v).and_then(|p| p.get(c).copied()).unwrap_or(c)
    }

    pub fn backward(&self, v: Vertex, c: Color) -> Color {
        self.backward.get(&v).and_then(|p| p.get(c).copied()).unwrap_or(c)
    }

    pub fn forward_pair(&self, p: Pair) -> Pair {
        Pair::new(p.vertex, self.forward(p.vertex, p.color))
    }

    pub fn backward_pair(&self, p: Pair) -> Pair {
        Pair::new(p.vertex, self.backward(p.vertex, p.color))
    }

    /// Renaming that aligns the fibers of `targets` with `center`: after it,
    /// `(center, c)` is matched to `(u, c)` whenever `(center, c)` was matched
    /// to some color of `u`.
    pub fn align_to(cover: &Cover, center: Vertex, targets: &[Vertex]) -> Result<FiberRenaming> {
        let mut ren = FiberRenaming::identity();
        for &u in targets {
            let assignments: Vec<(Color, Color)> =
                cover.matching(center, u).into_iter().map(|(c_center, c_u)| (c_u, c_center)).collect();
            ren.assign(u, cover.s(), &assignments)?;
        }
        Ok(ren)
    }
}
