//! Strictly degenerate orders on pair graphs.
//!
//! A graph with vertex budgets `b` is strictly `b`-degenerate when its
//! vertices can be ordered so that each has fewer than `b(x)` neighbors
//! earlier in the order. Such an order is found by peeling: repeatedly remove
//! a vertex whose remaining degree is below its budget; the first vertex
//! removed goes last. Removing a vertex only lowers the degrees of the
//! others, so the choice among removable vertices never matters.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{DegenerateOrder, Pair};

/// The graph induced on a set of chosen pairs, with a budget per pair.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairGraph {
    nodes: Vec<Pair>,
    budgets: Vec<u32>,
    adj: Vec<BTreeSet<usize>>,
    index: BTreeMap<Pair, usize>,
}

impl PairGraph {
    pub fn new() -> Self {
        PairGraph::default()
    }

    /// Adds a node, or updates the budget of an existing one. Returns its index.
    pub fn add_node(&mut self, pair: Pair, budget: u32) -> usize {
        if let Some(&i) = self.index.get(&pair) {
            self.budgets[i] = budget;
            return i;
        }
        let i = self.nodes.len();
        self.nodes.push(pair);
        self.budgets.push(budget);
        self.adj.push(BTreeSet::new());
        self.index.insert(pair, i);
        i
    }

    /// Adds an edge between two node indices; loops are ignored.
    pub fn add_edge(&mut self, i: usize, j: usize) {
        if i != j {
            self.adj[i].insert(j);
            self.adj[j].insert(i);
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn node(&self, i: usize) -> Pair {
        self.nodes[i]
    }

    pub fn nodes(&self) -> &[Pair] {
        &self.nodes
    }

    pub fn budget(&self, i: usize) -> u32 {
        self.budgets[i]
    }

    pub fn index_of(&self, pair: Pair) -> Option<usize> {
        self.index.get(&pair).copied()
    }

    pub fn neighbors(&self, i: usize) -> &BTreeSet<usize> {
        &self.adj[i]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(&j)
    }

    /// Checks `order` directly against the definition: it lists every node
    /// exactly once and each node has fewer earlier neighbors than its budget.
    pub fn is_valid_order(&self, order: &DegenerateOrder) -> bool {
        if order.len() != self.len() {
            return false;
        }
        let mut placed = alloc::vec![false; self.len()];
        for &p in order.pairs() {
            let Some(i) = self.index_of(p) else { return false };
            if placed[i] {
                return false;
            }
            let earlier = self.adj[i].iter().filter(|&&j| placed[j]).count();
            if earlier as u64 >= u64::from(self.budgets[i]) {
                return false;
            }
            placed[i] = true;
        }
        true
    }

    fn peel(
        &self,
        removed: &mut [bool],
        degree: &mut [usize],
        eligible: impl Fn(usize) -> bool,
        mut choose: impl FnMut(&[usize]) -> usize,
        peeled: &mut Vec<usize>,
    ) -> bool {
        loop {
            let candidates: Vec<usize> = (0..self.len())
                .filter(|&i| !removed[i] && eligible(i) && (degree[i] as u64) < u64::from(self.budgets[i]))
                .collect();
            if candidates.is_empty() {
                return (0..self.len()).all(|i| removed[i] || !eligible(i));
            }
            let x = candidates[choose(&candidates)];
            removed[x] = true;
            for &y in &self.adj[x] {
                degree[y] -= 1;
            }
            peeled.push(x);
        }
    }

    fn order_from_peeling(&self, mut peeled: Vec<usize>) -> DegenerateOrder {
        peeled.reverse();
        DegenerateOrder(peeled.into_iter().map(|i| self.nodes[i]).collect())
    }

    fn eliminate(
        &self,
        prefix: &BTreeSet<usize>,
        mut choose: impl FnMut(&[usize]) -> usize,
    ) -> Option<DegenerateOrder> {
        let mut removed = alloc::vec![false; self.len()];
        let mut degree: Vec<usize> = self.adj.iter().map(BTreeSet::len).collect();
        let mut peeled = Vec::with_capacity(self.len());
        if !self.peel(&mut removed, &mut degree, |i| !prefix.contains(&i), &mut choose, &mut peeled) {
            return None;
        }
        if !self.peel(&mut removed, &mut degree, |_| true, &mut choose, &mut peeled) {
            return None;
        }
        Some(self.order_from_peeling(peeled))
    }
}

/// A strictly degenerate order of `g`, or `None` when `g` has a subgraph in
/// which every vertex meets its budget. Ties go to the lowest node index.
pub fn strictly_degenerate_order(g: &PairGraph) -> Option<DegenerateOrder> {
    g.eliminate(&BTreeSet::new(), |_| 0)
}

/// Same as [`strictly_degenerate_order`] but breaks ties uniformly at random.
pub fn strictly_degenerate_order_seeded(g: &PairGraph, seed: u64) -> Option<DegenerateOrder> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    g.eliminate(&BTreeSet::new(), |c| rng.gen_range(0..c.len()))
}

/// A strictly degenerate order whose first `prefix.len()` elements are
/// exactly the pairs of `prefix`, if one exists.
///
/// Non-prefix nodes are peeled first, so they land after every prefix node;
/// the prefix is then peeled on its own. Returns `None` when some prefix pair
/// is not a node of `g`.
pub fn order_with_prefix(g: &PairGraph, prefix: &BTreeSet<Pair>) -> Option<DegenerateOrder> {
    let mut indices = BTreeSet::new();
    for &p in prefix {
        indices.insert(g.index_of(p)?);
    }
    g.eliminate(&indices, |_| 0)
}
