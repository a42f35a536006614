//! Relaxed graph coloring with `r` relaxed and `k - r` proper colors.
//!
//! A coloring is feasible when no edge joins two vertices of the same proper
//! color; its value is the number of covered (non-monochromatic) edges.
//! The crate provides exact and heuristic solvers, the transformations used
//! to relate the problem to independent set and max-cut, generalized
//! conflict costs, and brute-force oracles that certify all of it on small
//! instances.
//!
//! ```
//! use relaxcolor::{solve_exact, ColorScheme, Graph};
//!
//! let k3 = Graph::complete(3);
//! let outcome = solve_exact(&k3, ColorScheme::new(2, 2).unwrap()).unwrap();
//! assert_eq!(outcome.value(), Some(2));
//! ```

pub mod cli;
pub mod conflict;
pub mod error;
pub mod graph;
pub mod reductions;
pub mod solvers;
pub mod verify;

pub use conflict::{
    conflict_profile, conflicted_node_count, covered_edges, defective_cost, generalized_cost, is_feasible,
    kappa_power_sum, ConflictReport, CostParams,
};
pub use error::{Error, Result};
pub use graph::{ColorScheme, Coloring, EdgeSet, Graph, Multigraph};
pub use solvers::{
    max_weight_independent_set, solve_exact, solve_greedy, solve_half_approx, solve_local_search, solve_r12_structural,
    Method, Objective, SearchBudget, Solution, SolveOutcome,
};
