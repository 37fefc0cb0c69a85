//! Solvers: an exhaustive backtracking oracle, the recursive solver for
//! plane graphs with `|f(v)| >= 5` and `f_i(v) <= 2`, and precolored-triangle
//! extension on family `A`.

mod exact;
mod planar;
mod precolored;

pub use exact::{solve_exact, solve_exact_with, ExactOptions, SolveStats, DEFAULT_EXACT_LIMIT};
pub use planar::solve_planar_dpg52;
pub use precolored::extend_precolored_triangle;
