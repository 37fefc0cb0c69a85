//! Encodings of list coloring, list-forested coloring and mixed
//! independent/forest coloring as DP-F-coloring, and checks for the
//! resulting color-class partitions.
//!
//! With the identity cover (same colors matched on every edge):
//! - `f_i(v) = 1` on `L(v)` makes DP-F-colorings exactly the proper `L`-colorings;
//! - `f_i(v) = 2` on `L(v)` makes them the `L`-colorings whose classes induce forests;
//! - the mixed budget forces the first `2d - k` colors to be independent and
//!   the rest to induce forests.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::degeneracy::{strictly_degenerate_order, PairGraph};
use crate::{Budget, Color, Coloring, Cover, Error, Pair, Result, SimpleGraph, Vertex};

/// Cover matching equal colors across every edge.
pub fn identity_cover(g: &SimpleGraph, lists: &[BTreeSet<Color>], s: usize) -> Result<Cover> {
    if lists.len() != g.n() {
        return Err(Error::InvalidInput(format!("{} lists for {} vertices", lists.len(), g.n())));
    }
    let mut h = Cover::new(g.n(), s);
    for (v, list) in lists.iter().enumerate() {
        if list.is_empty() {
            return Err(Error::EmptyList(v));
        }
        h.set_list(v, list.iter().copied())?;
    }
    for (u, v) in g.edges() {
        for &c in lists[u].intersection(&lists[v]) {
            h.add_match(u, v, c, c)?;
        }
    }
    Ok(h)
}

fn constant_on_lists(lists: &[BTreeSet<Color>], s: usize, value: u32) -> Result<Budget> {
    let mut f = Budget::new(s, value);
    for (v, list) in lists.iter().enumerate() {
        for &c in list {
            f.set(v, c, value)?;
        }
    }
    Ok(f)
}

/// `f_i(v) = 1` for `i` in `L(v)`: list coloring.
pub fn budget_list(lists: &[BTreeSet<Color>], s: usize) -> Result<Budget> {
    constant_on_lists(lists, s, 1)
}

/// `f_i(v) = 2` for `i` in `L(v)`: list-forested coloring.
pub fn budget_forest(lists: &[BTreeSet<Color>], s: usize) -> Result<Budget> {
    constant_on_lists(lists, s, 2)
}

/// `f_i(v) = 1` for listed colors `1 <= i <= 2d - k`, `2` for the other
/// listed colors. Needs `k < 2d`, `d <= k` and lists of size exactly `d`,
/// so that `|f(v)| >= k`.
pub fn budget_mixed(lists: &[BTreeSet<Color>], s: usize, d: usize, k: usize) -> Result<Budget> {
    if 2 * d <= k || d > k {
        return Err(Error::BadParameters(format!("need k < 2d and d <= k, got d = {d}, k = {k}")));
    }
    if let Some(v) = lists.iter().position(|l| l.len() != d) {
        return Err(Error::BadParameters(format!("list of vertex {v} has {} colors, expected {d}", lists[v].len())));
    }
    let independent = 2 * d - k;
    let mut f = Budget::new(s, 2);
    for (v, list) in lists.iter().enumerate() {
        for &c in list {
            f.set(v, c, if c <= independent { 1 } else { 2 })?;
        }
    }
    Ok(f)
}

/// Color classes `C(i)` of a total coloring.
pub fn color_classes(g: &SimpleGraph, r: &Coloring) -> Result<BTreeMap<Color, BTreeSet<Vertex>>> {
    let mut classes: BTreeMap<Color, BTreeSet<Vertex>> = BTreeMap::new();
    for v in g.vertices() {
        let c = r.get(v).ok_or(Error::PartialColoring(v))?;
        classes.entry(c).or_default().insert(v);
    }
    Ok(classes)
}

/// Whether `G[V_i]` is strictly `caps[i]`-degenerate for every class `V_i`
/// (cap 1: independent, cap 2: forest).
pub fn check_partition(
    g: &SimpleGraph,
    partition: &BTreeMap<Color, BTreeSet<Vertex>>,
    caps: &BTreeMap<Color, u32>,
) -> Result<bool> {
    let mut seen = BTreeSet::new();
    for (class, members) in partition {
        for &v in members {
            if v >= g.n() || !seen.insert(v) {
                return Err(Error::NotAPartition(format!("vertex {v} is out of range or in two classes")));
            }
        }
        if !caps.contains_key(class) {
            return Err(Error::NotAPartition(format!("no cap given for class {class}")));
        }
    }
    if seen.len() != g.n() {
        return Err(Error::NotAPartition(String::from("classes do not cover every vertex")));
    }
    for (class, members) in partition {
        let mut pg = PairGraph::new();
        for &v in members {
            pg.add_node(Pair::new(v, *class), caps[class]);
        }
        for &v in members {
            for &u in g.neighbors(v).range(v + 1..) {
                if members.contains(&u) {
                    let i = pg.index_of(Pair::new(v, *class)).expect("added");
                    let j = pg.index_of(Pair::new(u, *class)).expect("added");
                    pg.add_edge(i, j);
                }
            }
        }
        if strictly_degenerate_order(&pg).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Relabels arbitrary list symbols to colors `1..=s` by sorted order.
/// Returns the lists and the symbol behind each color.
pub fn canonicalize_lists<T: Ord + Clone>(lists: &[Vec<T>]) -> (Vec<BTreeSet<Color>>, Vec<T>) {
    let symbols: BTreeSet<T> = lists.iter().flatten().cloned().collect();
    let symbols: Vec<T> = symbols.into_iter().collect();
    let canon = lists
        .iter()
        .map(|l| l.iter().map(|x| symbols.binary_search(x).expect("collected above") + 1).collect())
        .collect();
    (canon, symbols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(cs: &[Color]) -> BTreeSet<Color> {
        cs.iter().copied().collect()
    }

    #[test]
    fn identity_cover_matches_common_colors() {
        let g = SimpleGraph::from_edges(2, &[(0, 1)]).unwrap();
        let h = identity_cover(&g, &[set(&[1, 2]), set(&[3])], 3).unwrap();
        assert!(h.matching(0, 1).is_empty());
        let h = identity_cover(&g, &[set(&[1, 2]), set(&[1, 2])], 3).unwrap();
        assert_eq!(h.matching(0, 1), [(1, 1), (2, 2)]);
        let single = identity_cover(&SimpleGraph::new(1), &[set(&[1])], 1).unwrap();
        assert_eq!(single.matches().count(), 0);
        assert_eq!(identity_cover(&g, &[set(&[1]), set(&[])], 1).unwrap_err(), Error::EmptyList(1));
    }

    #[test]
    fn budget_shapes() {
        let f = budget_list(&[set(&[1, 3])], 3).unwrap();
        assert_eq!((f.get(0, 1), f.get(0, 2), f.get(0, 3)), (1, 0, 1));
        let f = budget_forest(&[set(&[2])], 2).unwrap();
        assert_eq!((f.get(0, 1), f.get(0, 2)), (0, 2));
        let f = budget_mixed(&[set(&[1, 2, 3, 4])], 5, 4, 5).unwrap();
        let values: Vec<u32> = (1..=5).map(|c| f.get(0, c)).collect();
        assert_eq!(values, [1, 1, 1, 2, 0]);
        assert!(matches!(budget_mixed(&[set(&[1, 2])], 5, 2, 5), Err(Error::BadParameters(_))));
        assert!(matches!(budget_mixed(&[set(&[1, 2, 3])], 5, 4, 5), Err(Error::BadParameters(_))));
    }

    #[test]
    fn classes_of_colorings() {
        let c4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let alt: Coloring = [(0, 1), (1, 2), (2, 1), (3, 2)].into_iter().collect();
        let classes = color_classes(&c4, &alt).unwrap();
        assert_eq!(classes.len(), 2);
        assert!(classes.values().all(|c| c.len() == 2));
        let mono: Coloring = (0..4).map(|v| (v, 1)).collect();
        assert_eq!(color_classes(&c4, &mono).unwrap().len(), 1);
        assert!(color_classes(&SimpleGraph::new(0), &Coloring::new()).unwrap().is_empty());
        assert_eq!(color_classes(&c4, &Coloring::new()), Err(Error::PartialColoring(0)));
    }

    #[test]
    fn partition_checks() {
        let mut k4 = SimpleGraph::new(4);
        for u in 0..4 {
            for v in u + 1..4 {
                k4.add_edge(u, v).unwrap();
            }
        }
        let two_pairs: BTreeMap<_, _> = [(1, set(&[0, 1])), (2, set(&[2, 3]))].into_iter().collect();
        let caps: BTreeMap<_, _> = [(1, 2), (2, 2)].into_iter().collect();
        assert!(check_partition(&k4, &two_pairs, &caps).unwrap());

        let k3 = SimpleGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let one: BTreeMap<_, _> = [(1, set(&[0, 1, 2]))].into_iter().collect();
        assert!(!check_partition(&k3, &one, &[(1, 2)].into_iter().collect()).unwrap());

        let empty = SimpleGraph::new(3);
        assert!(check_partition(&empty, &one, &[(1, 1)].into_iter().collect()).unwrap());

        let overlap: BTreeMap<_, _> = [(1, set(&[0, 1])), (2, set(&[1, 2]))].into_iter().collect();
        assert!(matches!(check_partition(&k3, &overlap, &caps), Err(Error::NotAPartition(_))));
    }

    #[test]
    fn canonical_lists() {
        let (lists, symbols) = canonicalize_lists(&[alloc::vec!["red", "blue"], alloc::vec!["green"]]);
        assert_eq!(symbols, ["blue", "green", "red"]);
        assert_eq!(lists, [set(&[1, 3]), set(&[2])]);
    }
}
