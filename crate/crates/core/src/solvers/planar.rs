//! Constructive coloring of plane graphs with `|f(v)| >= 5` and `f_i(v) <= 2`.
//!
//! The graph is first made 2-connected and its bounded faces triangulated
//! (new edges carry empty matchings, so the coloring problem is unchanged).
//! Two adjacent outer vertices are precolored and the disc recursion below
//! colors the rest, always returning an order that starts with the two
//! precolored pairs.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::extend::greedy_color;
use crate::planar::embedding::Embedding;
use crate::planar::structure::{first_chord, split_disc};
use crate::planar::triangulate::{biconnect, triangulate_bounded_faces};
use crate::planar::PlaneGraph;
use crate::verify::check_order;
use crate::{
    Budget, Color, Coloring, Cover, DegenerateOrder, Error, Pair, Result, SimpleGraph, Vertex, WitnessedColoring,
};

struct Ctx<'a> {
    /// The augmented graph; used for adjacency only.
    graph: SimpleGraph,
    h: &'a Cover,
}

fn invariant(msg: impl Into<alloc::string::String>) -> Error {
    Error::InternalInvariantViolated(msg.into())
}

impl Ctx<'_> {
    /// `f_c(v)` minus the pairs of `colored` matched to `(v, c)`.
    fn residual(&self, f: &Budget, colored: &[Pair], v: Vertex, c: Color) -> u32 {
        let hits = colored
            .iter()
            .filter(|p| self.graph.has_edge(v, p.vertex) && self.h.partner(v, c, p.vertex) == Some(p.color))
            .count() as u32;
        f.get(v, c).saturating_sub(hits)
    }

    fn pair_of(order: &[Pair], v: Vertex) -> Result<Pair> {
        order.iter().copied().find(|p| p.vertex == v).ok_or_else(|| invariant(format!("vertex {v} left uncolored")))
    }

    /// Colors the disc bounded by `outer` (tracing direction) whose first
    /// and last outer vertices carry the pairs `pre`.
    fn color_disc(&self, emb: &Embedding, outer: &[Vertex], pre: [Pair; 2], f: &Budget) -> Result<Vec<Pair>> {
        let p = outer.len();
        if emb.vertex_count() == 3 {
            let v2 = outer[1];
            let c = self
                .h
                .list(v2)
                .iter()
                .copied()
                .find(|&c| self.residual(f, &pre, v2, c) > 0)
                .ok_or_else(|| invariant(format!("no color left for {v2} in a triangle")))?;
            return Ok(alloc::vec![pre[0], pre[1], Pair::new(v2, c)]);
        }

        if let Some((i, j)) = first_chord(emb, outer) {
            let ((e1, o1), (e2, o2)) = split_disc(emb, outer, i, j);
            let s1 = self.color_disc(&e1, &o1, pre, f)?;
            let pre2 = [Self::pair_of(&s1, outer[i])?, Self::pair_of(&s1, outer[j])?];
            let s2 = self.color_disc(&e2, &o2, pre2, f)?;
            let mut s = s1;
            s.extend_from_slice(&s2[2..]);
            return Ok(s);
        }

        let (v1, v2, v3) = (outer[0], outer[1], outer[2]);
        let fan = emb.fan(v2, v1, v3).ok_or_else(|| invariant("outer vertex without a fan"))?;
        let fan_inner = &fan[1..fan.len() - 1];
        let list: Vec<Color> = self.h.list(v2).iter().copied().collect();
        let fs: Vec<u32> = list.iter().map(|&c| self.residual(f, &pre, v2, c)).collect();
        let best = (0..list.len()).max_by_key(|&k| (fs[k], core::cmp::Reverse(k)));
        let best = best.filter(|&k| fs[k] > 0).ok_or_else(|| invariant(format!("|f*({v2})| = 0")))?;
        let c1 = list[best];

        let mut rest = emb.clone();
        rest.remove_vertex(v2);
        let rest_outer: Vec<Vertex> =
            core::iter::once(v1).chain(fan_inner.iter().copied()).chain(outer[2..].iter().copied()).collect();
        if rest.face_from(rest_outer[0], rest_outer[1]).as_deref() != Some(rest_outer.as_slice()) {
            return Err(invariant(format!("removing {v2} does not leave the expected outer cycle")));
        }

        let mut f2 = f.clone();
        let lower = |f2: &mut Budget, u: Vertex, c: Color, to_zero: bool| -> Result<()> {
            if let Some(cu) = self.h.partner(v2, c, u) {
                let value = if to_zero { 0 } else { f2.get(u, cu).saturating_sub(1) };
                f2.set(u, cu, value)?;
            }
            Ok(())
        };

        if p == 3 || fs[best] >= 2 {
            for &u in fan_inner {
                lower(&mut f2, u, c1, true)?;
            }
            let mut s = self.color_disc(&rest, &rest_outer, pre, &f2)?;
            if p == 3 {
                s.insert(2, Pair::new(v2, c1));
            } else {
                s.push(Pair::new(v2, c1));
            }
            return Ok(s);
        }

        let c2 = list
            .iter()
            .zip(&fs)
            .find(|&(&c, &x)| c != c1 && x >= 1)
            .map(|(&c, _)| c)
            .ok_or_else(|| invariant(format!("|f*({v2})| < 2 with p >= 4")))?;
        for &u in fan_inner {
            lower(&mut f2, u, c1, false)?;
            lower(&mut f2, u, c2, false)?;
        }
        let mut s = self.color_disc(&rest, &rest_outer, pre, &f2)?;
        let at_v3 = Self::pair_of(&s, v3)?;
        let t = if self.h.partner(v2, c1, v3) == Some(at_v3.color) { c2 } else { c1 };
        s.insert(2, Pair::new(v2, t));
        Ok(s)
    }
}

fn check_budget(g: &SimpleGraph, h: &Cover, f: &Budget) -> Result<()> {
    if let Some((v, c, x)) = f.iter().find(|&(_, _, x)| x > 2) {
        return Err(Error::BadBudget(format!("f_{c}({v}) = {x} exceeds 2")));
    }
    if let Some(v) = g.vertices().find(|&v| f.usable_total(v, h.list(v)) < 5) {
        return Err(Error::BadBudget(format!("|f({v})| = {} is below 5", f.usable_total(v, h.list(v)))));
    }
    Ok(())
}

/// Colors a connected plane graph for any cover and any budget with
/// `|f(v)| >= 5` (over listed colors) and `f_i(v) <= 2`.
pub fn solve_planar_dpg52(pg: &PlaneGraph, h: &Cover, f: &Budget) -> Result<WitnessedColoring> {
    let g = pg.graph();
    h.validate(g)?;
    check_budget(g, h, f)?;

    let order = if g.n() <= 2 {
        let mut partial = WitnessedColoring::default();
        for v in g.vertices() {
            crate::extend::greedy_step(g, h, f, &mut partial, v)
                .map_err(|e| invariant(format!("greedy coloring of a tiny graph failed: {e}")))?;
        }
        partial.order.0
    } else {
        let mut emb = pg.embedding();
        biconnect(&mut emb);
        let outer = emb
            .face_with_dart(pg.outer()[0], pg.outer()[1])
            .ok_or_else(|| invariant("outer dart lost during augmentation"))?;
        triangulate_bounded_faces(&mut emb, &outer);
        let mut graph = SimpleGraph::new(g.n());
        for v in emb.vertices() {
            for &u in emb.neighbors(v) {
                graph.ensure_edge(v, u)?;
            }
        }
        let ctx = Ctx { graph, h };

        // Precolor the lexicographically smallest outer edge (x, y).
        let p = outer.len();
        let (pos, x, y) = (0..p)
            .flat_map(|k| {
                let (a, b) = (outer[k], outer[(k + 1) % p]);
                [(k, a, b), ((k + 1) % p, b, a)]
            })
            .filter(|&(_, a, b)| a < b)
            .min_by_key(|&(_, a, b)| (a, b))
            .expect("outer cycle has edges");
        let mut colored = Coloring::new();
        let a =
            greedy_color(&ctx.graph, h, f, &colored, x).ok_or_else(|| invariant("no color for the first vertex"))?;
        colored.set(x, a);
        let b =
            greedy_color(&ctx.graph, h, f, &colored, y).ok_or_else(|| invariant("no color for the second vertex"))?;
        let pre = [Pair::new(x, a), Pair::new(y, b)];

        // Rotate the outer cycle so that x and y are its first and last vertices.
        let start = if outer[(pos + 1) % p] == y { (pos + 1) % p } else { pos };
        let rotated: Vec<Vertex> = (0..p).map(|k| outer[(start + k) % p]).collect();
        let ends: BTreeSet<Vertex> = [rotated[0], rotated[p - 1]].into_iter().collect();
        if ends != [x, y].into_iter().collect() {
            return Err(invariant("precolored edge is not at the ends of the outer cycle"));
        }
        let swapped = rotated[0] != x;
        let pre = if swapped { [pre[1], pre[0]] } else { pre };
        let mut order = ctx.color_disc(&emb, &rotated, pre, f)?;
        if swapped {
            order.swap(0, 1);
        }
        order
    };

    let result = WitnessedColoring::from_order(DegenerateOrder(order));
    if !result.coloring.is_total(g.n()) || !check_order(g, h, f, &result.order)? {
        return Err(invariant("planar recursion produced an invalid order"));
    }
    Ok(result)
}
