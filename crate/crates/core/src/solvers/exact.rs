use alloc::vec::Vec;

use crate::degeneracy::strictly_degenerate_order;
use crate::verify::{induced_pair_graph_partial, verify_coloring, verify_partial};
use crate::{Budget, Coloring, Cover, Error, Result, SimpleGraph, Vertex, WitnessedColoring};

/// Largest vertex count [`solve_exact`] accepts by default.
pub const DEFAULT_EXACT_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactOptions {
    pub limit: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions { limit: DEFAULT_EXACT_LIMIT }
    }
}

/// Search effort: color assignments tried and assignments undone.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub backtracks: u64,
}

/// A DP-F-coloring of `g` extending `precolored`, if one exists.
pub fn solve_exact(
    g: &SimpleGraph,
    h: &Cover,
    f: &Budget,
    precolored: Option<&Coloring>,
) -> Result<Option<WitnessedColoring>> {
    solve_exact_with(g, h, f, precolored, &ExactOptions::default()).map(|(r, _)| r)
}

struct Search<'a> {
    g: &'a SimpleGraph,
    h: &'a Cover,
    f: &'a Budget,
    order: Vec<Vertex>,
    stats: SolveStats,
}

impl Search<'_> {
    fn degenerate(&self, r: &Coloring) -> bool {
        let pg = induced_pair_graph_partial(self.g, self.h, self.f, r).expect("colors come from lists");
        strictly_degenerate_order(&pg).is_some()
    }

    /// Every uncolored vertex still has a color that keeps the partial pair
    /// graph strictly degenerate.
    fn viable(&self, r: &mut Coloring, from: usize) -> bool {
        for &u in &self.order[from..] {
            let candidates: Vec<_> = self.h.list(u).iter().copied().filter(|&c| self.f.get(u, c) > 0).collect();
            let ok = candidates.into_iter().any(|c| {
                r.set(u, c);
                let ok = self.degenerate(r);
                r.remove(u);
                ok
            });
            if !ok {
                return false;
            }
        }
        true
    }

    fn run(&mut self, r: &mut Coloring, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let colors: Vec<_> = self.h.list(v).iter().copied().filter(|&c| self.f.get(v, c) > 0).collect();
        for c in colors {
            self.stats.nodes += 1;
            r.set(v, c);
            if self.degenerate(r) && self.viable(r, depth + 1) && self.run(r, depth + 1) {
                return true;
            }
            r.remove(v);
            self.stats.backtracks += 1;
        }
        false
    }
}

/// [`solve_exact`] with an explicit vertex limit, also reporting search
/// statistics.
///
/// Vertices are tried in order of descending degree (ties by index), colors
/// in ascending order. A branch is cut as soon as the colored part is not
/// strictly F-degenerate or some uncolored vertex has no color that would
/// keep it so; both conditions are inherited by every completion.
pub fn solve_exact_with(
    g: &SimpleGraph,
    h: &Cover,
    f: &Budget,
    precolored: Option<&Coloring>,
    options: &ExactOptions,
) -> Result<(Option<WitnessedColoring>, SolveStats)> {
    if g.n() > options.limit {
        return Err(Error::LimitExceeded { limit: options.limit, actual: g.n() });
    }
    h.validate(g)?;
    let mut r = precolored.cloned().unwrap_or_default();
    if r.pairs().any(|p| p.vertex >= g.n()) {
        return Err(Error::InvalidPrecoloring);
    }
    match verify_partial(g, h, f, &r) {
        Ok(Some(_)) => {}
        Ok(None) | Err(Error::ColorNotInList { .. }) => return Err(Error::InvalidPrecoloring),
        Err(e) => return Err(e),
    }
    let mut order: Vec<Vertex> = g.vertices().filter(|&v| !r.contains(v)).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    let mut search = Search { g, h, f, order, stats: SolveStats::default() };
    if !search.viable(&mut r, 0) || !search.run(&mut r, 0) {
        return Ok((None, search.stats));
    }
    let witness = verify_coloring(g, h, f, &r)?
        .ok_or_else(|| Error::InternalInvariantViolated("search returned an unverifiable coloring".into()))?;
    Ok((Some(WitnessedColoring { coloring: r, order: witness }), search.stats))
}
