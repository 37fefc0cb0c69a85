use alloc::format;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::PlaneGraph;
use crate::{Budget, Color, Cover, Error, Result, SimpleGraph, Vertex};

fn insert_after(rot: &mut Vec<Vertex>, after: Vertex, new: Vertex) {
    let i = rot.iter().position(|&x| x == after).expect("neighbor present");
    rot.insert(i + 1, new);
}

/// Stacked triangulation on `n >= 3` vertices: start from the triangle
/// `0 1 2` (outer face `0 2 1`) and insert each new vertex into a uniformly
/// chosen bounded face, joined to its three corners.
pub fn gen_planar_triangulation(n: usize, seed: u64) -> Result<PlaneGraph> {
    if n < 3 {
        return Err(Error::BadParameters(format!("a triangulation needs n >= 3, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graph = SimpleGraph::from_edges(n, &[(0, 1), (1, 2), (0, 2)])?;
    let mut rotation: Vec<Vec<Vertex>> = alloc::vec![Vec::new(); n];
    rotation[0] = alloc::vec![1, 2];
    rotation[1] = alloc::vec![2, 0];
    rotation[2] = alloc::vec![0, 1];
    // Bounded faces as walks a -> b -> c, so succ_b(a) = c.
    let mut inner: Vec<[Vertex; 3]> = alloc::vec![[0, 1, 2]];
    for x in 3..n {
        let idx = rng.gen_range(0..inner.len());
        let [a, b, c] = inner[idx];
        insert_after(&mut rotation[b], a, x);
        insert_after(&mut rotation[c], b, x);
        insert_after(&mut rotation[a], c, x);
        rotation[x] = alloc::vec![a, c, b];
        for v in [a, b, c] {
            graph.add_edge(v, x)?;
        }
        inner[idx] = [a, b, x];
        inner.push([b, c, x]);
        inner.push([c, a, x]);
    }
    Ok(PlaneGraph { graph, rotation, outer: alloc::vec![0, 2, 1] })
}

/// Random cover with lists of `list_size` colors out of `1..=s`. Each edge
/// gets a random bijection between shuffled copies of the two lists, and
/// every matched pair is kept with probability `density`.
pub fn gen_random_cover(g: &SimpleGraph, s: usize, list_size: usize, density: f64, seed: u64) -> Result<Cover> {
    if list_size == 0 || list_size > s {
        return Err(Error::InfeasibleParameters(format!("list size {list_size} with {s} colors")));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::BadParameters(format!("density {density} is outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cover = Cover::new(g.n(), s);
    let palette: Vec<Color> = (1..=s).collect();
    for v in g.vertices() {
        let mut list: Vec<Color> = palette.choose_multiple(&mut rng, list_size).copied().collect();
        list.sort_unstable();
        cover.set_list(v, list)?;
    }
    for (u, v) in g.edges() {
        let mut lu: Vec<Color> = cover.list(u).iter().copied().collect();
        let mut lv: Vec<Color> = cover.list(v).iter().copied().collect();
        lu.shuffle(&mut rng);
        lv.shuffle(&mut rng);
        for (cu, cv) in lu.into_iter().zip(lv) {
            if rng.gen::<f64>() < density {
                cover.add_match(u, v, cu, cv)?;
            }
        }
    }
    Ok(cover)
}

/// Random budget supported on the cover's lists: `sum_min` units per vertex
/// dropped one at a time on uniformly chosen colors that are still below
/// `cap`.
pub fn gen_random_budget(cover: &Cover, sum_min: u32, cap: u32, seed: u64) -> Result<Budget> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = Budget::new(cover.s(), cap);
    for v in 0..cover.n() {
        let list: Vec<Color> = cover.list(v).iter().copied().collect();
        if (list.len() as u64) * (cap as u64) < sum_min as u64 {
            return Err(Error::InfeasibleParameters(format!(
                "vertex {v}: {} colors with cap {cap} cannot reach {sum_min}",
                list.len()
            )));
        }
        let mut values = alloc::vec![0u32; list.len()];
        for _ in 0..sum_min {
            let open: Vec<usize> = (0..list.len()).filter(|&i| values[i] < cap).collect();
            let i = *open.choose(&mut rng).expect("capacity checked above");
            values[i] += 1;
        }
        for (&c, &x) in list.iter().zip(&values) {
            f.set(v, c, x)?;
        }
    }
    Ok(f)
}
