use alloc::collections::BTreeSet;
use alloc::format;

use super::exact::{solve_exact_with, ExactOptions};
use crate::planar::{check_family, Family, PlaneGraph};
use crate::verify::verify_partial;
use crate::{Budget, Coloring, Cover, Error, Result, Vertex, WitnessedColoring};

/// Extends a DP-F-coloring of the 3-cycle `c0` to all of `pg`, for graphs in
/// family `A` with `|f(v)| >= 4` and `f_i(v) <= 2`.
///
/// The search is exhaustive, so `n` must not exceed `limit`. `None` means no
/// extension exists, which for valid inputs contradicts the extension
/// theorem for family `A`.
pub fn extend_precolored_triangle(
    pg: &PlaneGraph,
    h: &Cover,
    f: &Budget,
    c0: [Vertex; 3],
    precoloring: &Coloring,
    limit: usize,
) -> Result<Option<WitnessedColoring>> {
    let g = pg.graph();
    h.validate(g)?;
    if !check_family(g, &Family::FamilyA)? {
        return Err(Error::NotInFamily);
    }
    let [a, b, c] = c0;
    let corners: BTreeSet<Vertex> = c0.into_iter().collect();
    if corners.len() != 3
        || c0.iter().any(|&v| v >= g.n())
        || !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))
    {
        return Err(Error::InvalidInput(format!("{c0:?} is not a 3-cycle")));
    }
    if precoloring.domain() != corners {
        return Err(Error::InvalidPrecoloring);
    }
    match verify_partial(g, h, f, precoloring) {
        Ok(Some(_)) => {}
        Ok(None) | Err(Error::ColorNotInList { .. }) | Err(Error::VertexOutOfRange { .. }) => {
            return Err(Error::InvalidPrecoloring)
        }
        Err(e) => return Err(e),
    }
    if let Some((v, i, x)) = f.iter().find(|&(_, _, x)| x > 2) {
        return Err(Error::BadBudget(format!("f_{i}({v}) = {x} exceeds 2")));
    }
    if let Some(v) = g.vertices().find(|&v| f.usable_total(v, h.list(v)) < 4) {
        return Err(Error::BadBudget(format!("|f({v})| is below 4")));
    }
    solve_exact_with(g, h, f, Some(precoloring), &ExactOptions { limit }).map(|(r, _)| r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::gen_planar_triangulation;
    use crate::SimpleGraph;

    fn identity(g: &SimpleGraph, s: usize) -> Cover {
        let mut h = Cover::new(g.n(), s);
        for v in g.vertices() {
            h.set_list(v, 1..=s).unwrap();
        }
        for (u, v) in g.edges() {
            for c in 1..=s {
                h.add_match(u, v, c, c).unwrap();
            }
        }
        h
    }

    fn unit(n: usize, s: usize) -> Budget {
        let mut f = Budget::new(s, 2);
        for v in 0..n {
            for c in 1..=s {
                f.set(v, c, 1).unwrap();
            }
        }
        f
    }

    #[test]
    fn k4_extends_any_triangle_precoloring() {
        let pg = gen_planar_triangulation(4, 0).unwrap();
        let (h, f) = (identity(pg.graph(), 4), unit(4, 4));
        let pre: Coloring = [(0, 2), (1, 4), (2, 1)].into_iter().collect();
        let r = extend_precolored_triangle(&pg, &h, &f, [0, 1, 2], &pre, 12).unwrap().unwrap();
        assert_eq!(r.coloring.get(3), Some(3));
    }

    #[test]
    fn outside_family_a_is_rejected() {
        let pg = gen_planar_triangulation(6, 2).unwrap();
        let (h, f) = (identity(pg.graph(), 4), unit(6, 4));
        let pre: Coloring = [(0, 1), (1, 2), (2, 3)].into_iter().collect();
        assert_eq!(extend_precolored_triangle(&pg, &h, &f, [0, 1, 2], &pre, 12), Err(Error::NotInFamily));
    }

    #[test]
    fn clashing_precoloring_is_rejected() {
        let pg = gen_planar_triangulation(4, 0).unwrap();
        let (h, f) = (identity(pg.graph(), 4), unit(4, 4));
        let pre: Coloring = [(0, 1), (1, 1), (2, 3)].into_iter().collect();
        assert_eq!(extend_precolored_triangle(&pg, &h, &f, [0, 1, 2], &pre, 12), Err(Error::InvalidPrecoloring));
    }
}
