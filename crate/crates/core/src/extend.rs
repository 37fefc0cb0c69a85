//! Growing partial DP-F-colorings one vertex or one block at a time.

use alloc::format;

use crate::verify::{check_order, matched_colored_neighbors, residual_unchecked};
use crate::{Budget, Color, Cover, DegenerateOrder, Error, Pair, Result, SimpleGraph, Vertex, WitnessedColoring};

/// Lowest color of `L(v)` with positive residual budget given `colored`.
pub(crate) fn greedy_color(
    g: &SimpleGraph,
    h: &Cover,
    f: &Budget,
    colored: &crate::Coloring,
    v: Vertex,
) -> Option<Color> {
    h.list(v).iter().copied().find(|&c| f.get(v, c) > matched_colored_neighbors(g, h, colored, v, c))
}

/// Appends `(v, c)` for the lowest usable `c`, without re-checking `partial`.
pub(crate) fn greedy_step(
    g: &SimpleGraph,
    h: &Cover,
    f: &Budget,
    partial: &mut WitnessedColoring,
    v: Vertex,
) -> Result<Color> {
    let c = greedy_color(g, h, f, &partial.coloring, v).ok_or(Error::NoColorAvailable(v))?;
    partial.coloring.set(v, c);
    partial.order.0.push(Pair::new(v, c));
    Ok(c)
}

/// Colors the uncolored vertex `v` with any color of positive residual
/// budget and appends it to the end of the witness order.
pub fn greedy_extend(
    g: &SimpleGraph,
    h: &Cover,
    f: &Budget,
    partial: &WitnessedColoring,
    v: Vertex,
) -> Result<WitnessedColoring> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if partial.coloring.contains(v) {
        return Err(Error::InvalidInput(format!("vertex {v} is already colored")));
    }
    if partial.order.to_coloring() != partial.coloring || !check_order(g, h, f, &partial.order)? {
        return Err(Error::InvalidPrecoloring);
    }
    let mut out = partial.clone();
    greedy_step(g, h, f, &mut out, v)?;
    Ok(out)
}

/// Joins a coloring `first` of `G[A]` with a coloring `second` of (part of)
/// `G - A` that is valid for the residual budget left by `first`. The order
/// is `first`'s followed by `second`'s.
pub fn combine_colorings(
    g: &SimpleGraph,
    h: &Cover,
    f: &Budget,
    first: &WitnessedColoring,
    second: &WitnessedColoring,
) -> Result<WitnessedColoring> {
    if let Some(p) = second.coloring.pairs().find(|p| first.coloring.contains(p.vertex)) {
        return Err(Error::DomainOverlap(p.vertex));
    }
    if first.order.to_coloring() != first.coloring || !check_order(g, h, f, &first.order)? {
        return Err(Error::InvalidInput("first coloring is not a DP-F-coloring of its domain".into()));
    }
    let residual = residual_unchecked(g, h, f, &first.coloring);
    if second.order.to_coloring() != second.coloring || !check_order(g, h, &residual, &second.order)? {
        return Err(Error::InvalidInput("second coloring is not a DP-F*-coloring for the residual budget".into()));
    }
    let mut order = first.order.0.clone();
    order.extend_from_slice(&second.order.0);
    let order = DegenerateOrder(order);
    if !check_order(g, h, f, &order)? {
        return Err(Error::InternalInvariantViolated("combined order is not strictly F-degenerate".into()));
    }
    Ok(WitnessedColoring::from_order(order))
}
