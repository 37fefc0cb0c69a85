//! Reducible configurations: an ordered vertex set `K = v1..vm` whose every
//! DP-F-precoloring of `G - K` extends to `G` when `|f(v)| >= k`.
//!
//! Conditions, with `K` the subgraph induced by the listed vertices:
//!
//! 1. `k - (d_G(v1) - d_K(v1)) >= 3`;
//! 2. `d_G(vm) <= k` and the neighbors of `vm` in `K` are exactly `v1` and `v(m-1)`;
//! 3. each `vi` with `2 <= i <= m-1` has at most `k - 1` neighbors among
//!    `v1..v(i-1)` and the vertices outside `K`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::extend::greedy_step;
use crate::verify::{check_order, residual_unchecked};
use crate::{
    Budget, Color, Cover, DegenerateOrder, Error, FiberRenaming, Pair, Result, SimpleGraph, Vertex, WitnessedColoring,
};

/// Which branch of the construction produced an extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionCase {
    /// The chosen color of `v1` leaves `vm` with no budget on the aligned color;
    /// `v2..vm` are colored greedily.
    ZeroAtLast,
    /// `vm` takes its second color at the end of the order.
    LastAppended,
    /// `vm` takes the aligned color and goes first among the vertices of `K`.
    LastInFront,
}

fn validate_shape(g: &SimpleGraph, k: usize, order: &[Vertex]) -> Result<()> {
    if k < 3 {
        return Err(Error::BadIndex(format!("k = {k}, need k >= 3")));
    }
    if order.len() < 3 {
        return Err(Error::BadIndex(format!("configuration has {} vertices, need at least 3", order.len())));
    }
    let mut seen = BTreeSet::new();
    for &v in order {
        if v >= g.n() {
            return Err(Error::NotInduced(format!("vertex {v} is not in the graph")));
        }
        if !seen.insert(v) {
            return Err(Error::NotInduced(format!("vertex {v} listed twice")));
        }
    }
    Ok(())
}

/// Evaluates the three configuration conditions for `K = order` (taken as
/// the subgraph of `g` induced by the listed vertices).
pub fn check_configuration_conditions(g: &SimpleGraph, k: usize, order: &[Vertex]) -> Result<bool> {
    validate_shape(g, k, order)?;
    let members: BTreeSet<Vertex> = order.iter().copied().collect();
    let m = order.len();
    let (first, last, before_last) = (order[0], order[m - 1], order[m - 2]);

    let outside_first = g.degree(first) - g.degree_in(first, &members);
    if k < outside_first + 3 {
        return Ok(false);
    }

    let last_in_k: BTreeSet<Vertex> = g.neighbors(last).iter().copied().filter(|u| members.contains(u)).collect();
    let expected: BTreeSet<Vertex> = [first, before_last].into_iter().collect();
    if g.degree(last) > k || last_in_k != expected {
        return Ok(false);
    }

    for i in 1..m - 1 {
        let earlier: BTreeSet<Vertex> = order[..i].iter().copied().collect();
        let count = g.neighbors(order[i]).iter().filter(|u| earlier.contains(u) || !members.contains(u)).count();
        if count > k - 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Extends a DP-F-coloring `outside` of `G - K` over the configuration `K`.
///
/// Requires the configuration conditions, `|f(v)| >= k` on `K` (counting
/// listed colors only) and budgets of at most 2.
pub fn extend_over_configuration(
    g: &SimpleGraph,
    h: &Cover,
    f: &Budget,
    k: usize,
    order: &[Vertex],
    outside: &WitnessedColoring,
) -> Result<WitnessedColoring> {
    extend_over_configuration_traced(g, h, f, k, order, outside).map(|(r, _)| r)
}

/// [`extend_over_configuration`] that also reports the branch taken.
pub fn extend_over_configuration_traced(
    g: &SimpleGraph,
    h: &Cover,
    f: &Budget,
    k: usize,
    order: &[Vertex],
    outside: &WitnessedColoring,
) -> Result<(WitnessedColoring, ExtensionCase)> {
    if !check_configuration_conditions(g, k, order)? {
        return Err(Error::PreconditionViolated("configuration conditions do not hold".into()));
    }
    h.validate(g)?;
    if f.iter().any(|(_, _, x)| x > 2) {
        return Err(Error::PreconditionViolated("budget values above 2".into()));
    }
    for &v in order {
        if f.usable_total(v, h.list(v)) < k as u32 {
            return Err(Error::PreconditionViolated(format!("|f({v})| < {k}")));
        }
    }
    let members: BTreeSet<Vertex> = order.iter().copied().collect();
    let expected_domain: BTreeSet<Vertex> = g.vertices().filter(|v| !members.contains(v)).collect();
    if outside.coloring.domain() != expected_domain
        || outside.order.to_coloring() != outside.coloring
        || !check_order(g, h, f, &outside.order)?
    {
        return Err(Error::PreconditionViolated("outside coloring is not a DP-F-coloring of G - K".into()));
    }

    let m = order.len();
    let (first, last, before_last) = (order[0], order[m - 1], order[m - 2]);

    // Align the fibers of v1 and v(m-1) with vm: (vm, j) ~ (v1, j) and (vm, j) ~ (v(m-1), j).
    let renaming = FiberRenaming::align_to(h, last, &[first, before_last])?;
    let h_r = h.renamed(&renaming);
    let f_r = f.renamed(&renaming);
    let residual = residual_unchecked(g, &h_r, &f_r, &outside.coloring);

    // Keep exactly two units of residual budget at vm, lowest colors first.
    let mut kept = Budget::new(f.s(), f.cap());
    let mut room = 2u32;
    for &c in h_r.list(last) {
        let take = residual.get(last, c).min(room);
        kept.set(last, c, take).expect("bounded by the residual");
        room -= take;
    }
    if room > 0 {
        return Err(Error::InternalInvariantViolated(format!("|f*({last})| < 2")));
    }

    let first_color: Color = h_r
        .list(first)
        .iter()
        .copied()
        .find(|&c| residual.get(first, c) > kept.get(last, c))
        .ok_or_else(|| Error::InternalInvariantViolated(format!("no color of {first} beats {last}")))?;

    let mut inner = WitnessedColoring { coloring: outside.coloring.clone(), order: DegenerateOrder(Vec::new()) };
    inner.coloring.set(first, first_color);
    inner.order.0.push(Pair::new(first, first_color));
    for &v in &order[1..m - 1] {
        greedy_step(g, &h_r, &f_r, &mut inner, v).map_err(|e| {
            Error::InternalInvariantViolated(format!("greedy step inside the configuration failed: {e}"))
        })?;
    }

    let case;
    let mut k_order = inner.order.0;
    if kept.get(last, first_color) == 0 {
        case = ExtensionCase::ZeroAtLast;
        let mut tail = WitnessedColoring { coloring: inner.coloring, order: DegenerateOrder(Vec::new()) };
        greedy_step(g, &h_r, &f_r, &mut tail, last)
            .map_err(|e| Error::InternalInvariantViolated(format!("last vertex has no color: {e}")))?;
        k_order.extend(tail.order.0);
    } else {
        let second_color = h_r
            .list(last)
            .iter()
            .copied()
            .find(|&c| c != first_color && kept.get(last, c) >= 1)
            .ok_or_else(|| Error::InternalInvariantViolated("vm has a single kept color".into()))?;
        if inner.coloring.get(before_last) != Some(second_color) {
            case = ExtensionCase::LastAppended;
            k_order.push(Pair::new(last, second_color));
        } else {
            case = ExtensionCase::LastInFront;
            k_order.insert(0, Pair::new(last, first_color));
        }
    }

    let mut full = outside.order.0.iter().map(|&p| renaming.forward_pair(p)).collect::<Vec<_>>();
    full.extend(k_order);
    let result = WitnessedColoring::from_order(DegenerateOrder(full)).restored(&renaming);
    if !check_order(g, h, f, &result.order)? || !result.coloring.is_total(g.n()) {
        return Err(Error::InternalInvariantViolated("extended order is not strictly F-degenerate".into()));
    }
    Ok((result, case))
}
