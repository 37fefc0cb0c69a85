//! Pair graphs induced by a coloring, verification and residual budgets.

use alloc::format;

use crate::degeneracy::{strictly_degenerate_order, PairGraph};
use crate::{Budget, Coloring, Cover, DegenerateOrder, Error, Result, SimpleGraph, Vertex};

fn check_colors(g: &SimpleGraph, h: &Cover, r: &Coloring) -> Result<()> {
    for p in r.pairs() {
        if p.vertex >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: p.vertex, n: g.n() });
        }
        if !h.list(p.vertex).contains(&p.color) {
            return Err(Error::ColorNotInList { vertex: p.vertex, color: p.color });
        }
    }
    Ok(())
}

/// `H[R]` on the domain of `r`, each pair `(v, c)` carrying budget `f_c(v)`.
///
/// Works for partial colorings; this is the graph a precoloring is verified on.
pub fn induced_pair_graph_partial(g: &SimpleGraph, h: &Cover, f: &Budget, r: &Coloring) -> Result<PairGraph> {
    check_colors(g, h, r)?;
    let mut pg = PairGraph::new();
    for p in r.pairs() {
        pg.add_node(p, f.get(p.vertex, p.color));
    }
    for p in r.pairs() {
        let i = pg.index_of(p).expect("node added above");
        for &u in g.neighbors(p.vertex).range(p.vertex + 1..) {
            if let Some(cu) = r.get(u) {
                if h.partner(p.vertex, p.color, u) == Some(cu) {
                    let j = pg.index_of(crate::Pair::new(u, cu)).expect("node added above");
                    pg.add_edge(i, j);
                }
            }
        }
    }
    Ok(pg)
}

/// `H[R]` for a total coloring `r`.
pub fn induced_pair_graph(g: &SimpleGraph, h: &Cover, f: &Budget, r: &Coloring) -> Result<PairGraph> {
    if let Some(v) = g.vertices().find(|&v| !r.contains(v)) {
        return Err(Error::PartialColoring(v));
    }
    induced_pair_graph_partial(g, h, f, r)
}

/// A strictly F-degenerate order of `r` when it is a DP-F-coloring.
pub fn verify_coloring(g: &SimpleGraph, h: &Cover, f: &Budget, r: &Coloring) -> Result<Option<DegenerateOrder>> {
    Ok(strictly_degenerate_order(&induced_pair_graph(g, h, f, r)?))
}

/// Like [`verify_coloring`] but on the subgraph induced by `r`'s domain.
pub fn verify_partial(g: &SimpleGraph, h: &Cover, f: &Budget, r: &Coloring) -> Result<Option<DegenerateOrder>> {
    Ok(strictly_degenerate_order(&induced_pair_graph_partial(g, h, f, r)?))
}

/// Checks a given witness: `order` lists a representative set of its own
/// domain and is strictly F-degenerate.
pub fn check_order(g: &SimpleGraph, h: &Cover, f: &Budget, order: &DegenerateOrder) -> Result<bool> {
    let r = order.to_coloring();
    if r.len() != order.len() {
        return Ok(false);
    }
    Ok(induced_pair_graph_partial(g, h, f, &r)?.is_valid_order(order))
}

/// Residual budget without checking the precoloring.
pub(crate) fn residual_unchecked(g: &SimpleGraph, h: &Cover, f: &Budget, precolored: &Coloring) -> Budget {
    let mut out = Budget::new(f.s(), f.cap());
    for v in g.vertices().filter(|&v| !precolored.contains(v)) {
        for (c, value) in f.entries(v) {
            let hits = matched_colored_neighbors(g, h, precolored, v, c);
            let left = value.saturating_sub(hits);
            out.set(v, c, left).expect("residual never exceeds the original value");
        }
    }
    out
}

/// Number of colored neighbors `x` of `v` whose chosen pair is matched to `(v, c)`.
pub(crate) fn matched_colored_neighbors(g: &SimpleGraph, h: &Cover, r: &Coloring, v: Vertex, c: crate::Color) -> u32 {
    g.neighbors(v).iter().filter(|&&x| matches!(r.get(x), Some(cx) if h.partner(v, c, x) == Some(cx))).count() as u32
}

/// The residual budget `f*` on the uncolored vertices:
/// `f*_i(v) = max(0, f_i(v) - #{colored x : (v, i) ~ (x, r(x))})`.
///
/// The precoloring must be a DP-F-coloring of the subgraph induced by its domain.
pub fn residual_budget(g: &SimpleGraph, h: &Cover, f: &Budget, precolored: &Coloring) -> Result<Budget> {
    match verify_partial(g, h, f, precolored) {
        Ok(Some(_)) => Ok(residual_unchecked(g, h, f, precolored)),
        Ok(None) => Err(Error::InvalidPrecoloring),
        Err(Error::ColorNotInList { vertex, color }) => {
            Err(Error::InvalidInput(format!("precolor {color} of vertex {vertex} is not in its list")))
        }
        Err(e) => Err(e),
    }
}
