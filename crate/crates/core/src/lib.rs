//! DP-F-coloring: correspondence coloring with per-color degeneracy budgets.
//!
//! A graph `G` comes with a [`Cover`] (a color list per vertex and a partial
//! matching between the lists of every pair of adjacent vertices) and a
//! [`Budget`] `f_i(v)`. A choice of one color per vertex is a DP-F-coloring
//! when the chosen (vertex, color) pairs, joined along the cover matchings,
//! can be ordered so that each pair `(v, i)` has strictly fewer than
//! `f_i(v)` neighbors earlier in the order.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function of its inputs and an explicit seed.
//!
//! - [`degeneracy`]: pair graphs, strictly degenerate orders, prefix-constrained orders.
//! - [`verify`]: induced pair graphs, coloring verification, residual budgets.
//! - [`extend`]: greedy extension and composition of partial colorings.
//! - [`configuration`]: reducible configurations and their constructive extension.
//! - [`planar`]: plane graphs, triangulation, chords, cycles, family predicates, generators.
//! - [`solvers`]: exhaustive oracle solver and the recursive planar solver.
//! - [`reductions`]: list coloring, list-forested coloring and mixed encodings.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod budget;
mod coloring;
mod cover;
mod error;
mod graph;

pub mod configuration;
pub mod degeneracy;
pub mod extend;
pub mod planar;
pub mod reductions;
pub mod solvers;
pub mod verify;

pub use budget::Budget;
pub use coloring::{Coloring, DegenerateOrder, Pair, WitnessedColoring};
pub use cover::{Cover, FiberRenaming};
pub use error::{Error, Result};
pub use graph::SimpleGraph;

/// Vertex identifier, `0..n`.
pub type Vertex = usize;
/// Color index, `1..=s`.
pub type Color = usize;
