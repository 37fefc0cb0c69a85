use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::{Color, FiberRenaming, Vertex};

/// A vertex of the cover: vertex `vertex` colored `color`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    pub vertex: Vertex,
    pub color: Color,
}

impl Pair {
    pub const fn new(vertex: Vertex, color: Color) -> Self {
        Pair { vertex, color }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.vertex, self.color)
    }
}

/// A representative set, possibly partial: at most one color per vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Coloring {
    chosen: BTreeMap<Vertex, Color>,
}

impl Coloring {
    pub fn new() -> Self {
        Coloring::default()
    }

    /// Sets the color of `v`, replacing any previous choice.
    pub fn set(&mut self, v: Vertex, color: Color) {
        self.chosen.insert(v, color);
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.chosen.get(&v).copied()
    }

    pub fn remove(&mut self, v: Vertex) -> Option<Color> {
        self.chosen.remove(&v)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.chosen.contains_key(&v)
    }

    pub fn contains_pair(&self, p: Pair) -> bool {
        self.get(p.vertex) == Some(p.color)
    }

    pub fn len(&self) -> usize {
        self.chosen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chosen.is_empty()
    }

    pub fn domain(&self) -> BTreeSet<Vertex> {
        self.chosen.keys().copied().collect()
    }

    pub fn pairs(&self) -> impl Iterator<Item = Pair> + '_ {
        self.chosen.iter().map(|(&v, &c)| Pair::new(v, c))
    }

    pub fn is_total(&self, n: usize) -> bool {
        (0..n).all(|v| self.contains(v))
    }

    pub fn renamed(&self, renaming: &FiberRenaming) -> Coloring {
        self.pairs().map(|p| renaming.forward_pair(p)).collect()
    }

    pub fn restored(&self, renaming: &FiberRenaming) -> Coloring {
        self.pairs().map(|p| renaming.backward_pair(p)).collect()
    }
}

impl FromIterator<Pair> for Coloring {
    fn from_iter<I: IntoIterator<Item = Pair>>(iter: I) -> Self {
        Coloring { chosen: iter.into_iter().map(|p| (p.vertex, p.color)).collect() }
    }
}

impl FromIterator<(Vertex, Color)> for Coloring {
    fn from_iter<I: IntoIterator<Item = (Vertex, Color)>>(iter: I) -> Self {
        Coloring { chosen: iter.into_iter().collect() }
    }
}

/// Candidate strictly F-degenerate order of chosen pairs, lowest first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DegenerateOrder(pub Vec<Pair>);

impl DegenerateOrder {
    pub fn pairs(&self) -> &[Pair] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_coloring(&self) -> Coloring {
        self.0.iter().copied().collect()
    }

    pub fn renamed(&self, renaming: &FiberRenaming) -> DegenerateOrder {
        DegenerateOrder(self.0.iter().map(|&p| renaming.forward_pair(p)).collect())
    }

    pub fn restored(&self, renaming: &FiberRenaming) -> DegenerateOrder {
        DegenerateOrder(self.0.iter().map(|&p| renaming.backward_pair(p)).collect())
    }
}

impl fmt::Display for DegenerateOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("order")?;
        for p in &self.0 {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

/// A coloring together with the order that certifies it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WitnessedColoring {
    pub coloring: Coloring,
    pub order: DegenerateOrder,
}

impl WitnessedColoring {
    /// Builds both parts from an order; the coloring is read off the order.
    pub fn from_order(order: DegenerateOrder) -> Self {
        WitnessedColoring { coloring: order.to_coloring(), order }
    }

    pub fn restored(&self, renaming: &FiberRenaming) -> WitnessedColoring {
        WitnessedColoring { coloring: self.coloring.restored(renaming), order: self.order.restored(renaming) }
    }
}
