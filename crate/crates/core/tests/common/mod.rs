//! Brute-force oracles and seeded instance builders shared by the
//! integration tests and the acceptance suite.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use dpf_core::degeneracy::PairGraph;
use dpf_core::extend::greedy_extend;
use dpf_core::planar::{enumerate_cycles, gen_planar_triangulation, gen_random_cover};
use dpf_core::{Budget, Color, Coloring, Cover, Pair, SimpleGraph, Vertex, WitnessedColoring};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Pair graph on nodes `(i, 1)`, node `i` at index `i`.
pub fn pair_graph(budgets: &[u32], edges: &[(usize, usize)]) -> PairGraph {
    let mut g = PairGraph::new();
    for (i, &b) in budgets.iter().enumerate() {
        g.add_node(Pair::new(i, 1), b);
    }
    for &(a, b) in edges {
        g.add_edge(a, b);
    }
    g
}

pub fn random_pair_graph(rng: &mut ChaCha8Rng, max_nodes: usize, max_budget: u32) -> PairGraph {
    let n = rng.gen_range(0..=max_nodes);
    let budgets: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_budget)).collect();
    let p = rng.gen_range(0.1..0.9);
    let edges: Vec<_> = (0..n).tuple_combinations().filter(|_| rng.gen_bool(p)).collect();
    pair_graph(&budgets, &edges)
}

fn valid_sequence(g: &PairGraph, seq: &[usize]) -> bool {
    let mut placed = vec![false; g.len()];
    for &i in seq {
        let earlier = g.neighbors(i).iter().filter(|&&j| placed[j]).count();
        if earlier as u32 >= g.budget(i) {
            return false;
        }
        placed[i] = true;
    }
    true
}

/// Tries every ordering of the nodes.
pub fn order_exists_by_permutation(g: &PairGraph) -> bool {
    (0..g.len()).permutations(g.len()).any(|seq| valid_sequence(g, &seq))
}

/// Tries every ordering that lists the `prefix` nodes first.
pub fn prefix_order_exists_by_permutation(g: &PairGraph, prefix: &BTreeSet<usize>) -> bool {
    let rest: Vec<usize> = (0..g.len()).filter(|i| !prefix.contains(i)).collect();
    prefix.iter().copied().permutations(prefix.len()).any(|head| {
        rest.iter().copied().permutations(rest.len()).any(|tail| {
            let seq: Vec<usize> = head.iter().chain(&tail).copied().collect();
            valid_sequence(g, &seq)
        })
    })
}

/// The subgraph definition: every nonempty node subset has a node whose
/// degree inside the subset is below its budget.
pub fn degenerate_by_subsets(g: &PairGraph) -> bool {
    let n = g.len();
    assert!(n < 24, "subset oracle is exponential");
    (1u32..1 << n).all(|mask| {
        (0..n).filter(|&i| mask >> i & 1 == 1).any(|i| {
            let inside = g.neighbors(i).iter().filter(|&&j| mask >> j & 1 == 1).count();
            (inside as u32) < g.budget(i)
        })
    })
}

/// Pair graph of a total coloring, built straight from the cover.
pub fn pair_graph_of(g: &SimpleGraph, h: &Cover, f: &Budget, r: &Coloring) -> PairGraph {
    let mut pg = PairGraph::new();
    for v in g.vertices() {
        let c = r.get(v).expect("total coloring");
        pg.add_node(Pair::new(v, c), f.get(v, c));
    }
    for (u, v) in g.edges() {
        if h.partner(u, r.get(u).unwrap(), v) == r.get(v) {
            pg.add_edge(u, v);
        }
    }
    pg
}

/// Enumerates every representative set extending `pre` and checks each one
/// with the subset oracle.
pub fn dpf_exists_by_enumeration(g: &SimpleGraph, h: &Cover, f: &Budget, pre: Option<&Coloring>) -> bool {
    let free: Vec<Vertex> = g.vertices().filter(|&v| pre.is_none_or(|p| !p.contains(v))).collect();
    let base = pre.cloned().unwrap_or_default();
    if free.is_empty() {
        return degenerate_by_subsets(&pair_graph_of(g, h, f, &base));
    }
    free.iter().map(|&v| h.list(v).iter().copied().collect::<Vec<Color>>()).multi_cartesian_product().any(|colors| {
        let mut r = base.clone();
        for (&v, c) in free.iter().zip(colors) {
            r.set(v, c);
        }
        degenerate_by_subsets(&pair_graph_of(g, h, f, &r))
    })
}

pub fn complete(n: usize) -> SimpleGraph {
    let edges: Vec<_> = (0..n).tuple_combinations().collect();
    SimpleGraph::from_edges(n, &edges).unwrap()
}

pub fn full_lists(n: usize, s: usize) -> Vec<BTreeSet<Color>> {
    vec![(1..=s).collect(); n]
}

pub fn identity_cover(g: &SimpleGraph, s: usize) -> Cover {
    dpf_core::reductions::identity_cover(g, &full_lists(g.n(), s), s).unwrap()
}

pub fn constant_budget(n: usize, s: usize, value: u32) -> Budget {
    let mut f = Budget::new(s, value.max(2));
    for v in 0..n {
        for c in 1..=s {
            f.set(v, c, value).unwrap();
        }
    }
    f
}

/// One representative per isomorphism class of graphs on `n <= 6` vertices.
pub fn nonisomorphic_graphs(n: usize) -> Vec<SimpleGraph> {
    assert!(n <= 6);
    let edges: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let index: BTreeMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let perms: Vec<Vec<usize>> = (0..n)
        .permutations(n)
        .map(|p| edges.iter().map(|&(u, v)| index[&(p[u].min(p[v]), p[u].max(p[v]))]).collect())
        .collect();
    let total = 1usize << edges.len();
    let mut seen = vec![false; total];
    let mut out = Vec::new();
    for mask in 0..total {
        if seen[mask] {
            continue;
        }
        for perm in &perms {
            let image = (0..edges.len()).filter(|&e| mask >> e & 1 == 1).fold(0, |acc, e| acc | 1 << perm[e]);
            seen[image] = true;
        }
        let chosen: Vec<_> = (0..edges.len()).filter(|&e| mask >> e & 1 == 1).map(|e| edges[e]).collect();
        out.push(SimpleGraph::from_edges(n, &chosen).unwrap());
    }
    out
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let edges: Vec<_> = (0..n).tuple_combinations().filter(|_| rng.gen_bool(p)).collect();
    SimpleGraph::from_edges(n, &edges).unwrap()
}

/// Random cover with nonempty lists of varying size and random partial
/// matchings, plus budgets in `0..=cap` on listed colors.
pub fn random_instance(rng: &mut ChaCha8Rng, g: &SimpleGraph, s: usize, cap: u32) -> (Cover, Budget) {
    let mut h = Cover::new(g.n(), s);
    let palette: Vec<Color> = (1..=s).collect();
    for v in g.vertices() {
        let size = rng.gen_range(1..=s);
        h.set_list(v, palette.choose_multiple(rng, size).copied()).unwrap();
    }
    let density = rng.gen_range(0.3..=1.0);
    for (u, v) in g.edges() {
        let mut lu: Vec<Color> = h.list(u).iter().copied().collect();
        let mut lv: Vec<Color> = h.list(v).iter().copied().collect();
        lu.shuffle(rng);
        lv.shuffle(rng);
        for (cu, cv) in lu.into_iter().zip(lv) {
            if rng.gen_bool(density) {
                h.add_match(u, v, cu, cv).unwrap();
            }
        }
    }
    let mut f = Budget::new(s, cap);
    for v in g.vertices() {
        for &c in h.list(v) {
            f.set(v, c, rng.gen_range(0..=cap)).unwrap();
        }
    }
    (h, f)
}

/// A fan configuration `v1..vm` (cycle plus chords from `v1`) with a few
/// outside vertices, a cover and budget with `|f| >= k` on the fan, and a
/// greedy coloring of the outside.
pub struct ConfigInstance {
    pub g: SimpleGraph,
    pub h: Cover,
    pub f: Budget,
    pub k: usize,
    pub order: Vec<Vertex>,
    pub outside: WitnessedColoring,
}

pub fn fan_configuration(seed: u64) -> ConfigInstance {
    let mut rng = rng(seed);
    let k = rng.gen_range(3..=4);
    let m = rng.gen_range(3..=6);
    let q = rng.gen_range(0..=4);
    let n = m + q;
    let mut g = SimpleGraph::new(n);
    for i in 0..m {
        g.ensure_edge(i, (i + 1) % m).unwrap();
    }
    for i in 2..m - 1 {
        g.ensure_edge(0, i).unwrap();
    }
    for (a, b) in (m..n).tuple_combinations() {
        if rng.gen_bool(0.5) {
            g.add_edge(a, b).unwrap();
        }
    }
    let outside: Vec<Vertex> = (m..n).collect();
    for i in 0..m {
        let allowance = match i {
            0 => k - 3,
            1 => k - 2,
            _ if i == m - 1 => k - 2,
            _ => k - 3,
        };
        let count = rng.gen_range(0..=allowance.min(q));
        for &x in outside.choose_multiple(&mut rng, count) {
            g.add_edge(i, x).unwrap();
        }
    }

    let s = rng.gen_range(3..=5);
    let list_size = rng.gen_range(k.div_ceil(2).max(2)..=s);
    let density = [0.5, 0.8, 1.0][rng.gen_range(0..3)];
    let h = gen_random_cover(&g, s, list_size, density, rng.gen()).unwrap();
    let mut f = dpf_core::planar::gen_random_budget(&h, k as u32, 2, rng.gen()).unwrap();
    for &x in &outside {
        for &c in h.list(x) {
            f.set(x, c, 2).unwrap();
        }
    }
    let mut colored = WitnessedColoring::default();
    for &x in &outside {
        colored = greedy_extend(&g, &h, &f, &colored, x).unwrap();
    }
    ConfigInstance { g, h, f, k, order: (0..m).collect(), outside: colored }
}

/// A planar graph with no cycle of length 4, 6, 7 or 9: a stacked
/// triangulation on `n` vertices with edges of forbidden cycles removed at
/// random until none is left.
pub fn no_4679_graph(seed: u64, n: usize) -> SimpleGraph {
    let mut rng = rng(seed);
    let mut g = gen_planar_triangulation(n, rng.gen()).unwrap().graph().clone();
    loop {
        let cycles = enumerate_cycles(&g, 9).unwrap();
        let bad: Vec<&Vec<Vertex>> = [4, 6, 7, 9].iter().flat_map(|&l| cycles.cycles(l)).collect();
        let Some(cycle) = bad.choose(&mut rng) else {
            return g;
        };
        let i = rng.gen_range(0..cycle.len());
        g.remove_edge(cycle[i], cycle[(i + 1) % cycle.len()]);
    }
}
