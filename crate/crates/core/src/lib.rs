//! Minimum conflict-free colourings of hypergraphs.
//!
//! A colouring gives every vertex a colour in `0..=k`; it is conflict-free
//! when every hyperedge contains some non-zero colour exactly once. For
//! interval hypergraphs [`solve`] returns an optimal colouring together with
//! evidence of how it was found.
//!
//! ```
//! use cfc_core::{solve, verify_cf, Budgets, IntervalHypergraph};
//!
//! let ih = IntervalHypergraph::from_pairs(4, &[(1, 1), (2, 2), (1, 2)]).unwrap();
//! let result = solve(&ih, &Budgets::default()).unwrap();
//! assert_eq!(result.chi_cf, 2);
//! assert!(verify_cf(ih.hypergraph(), &result.colouring).unwrap().is_cf);
//! ```
//!
//! Besides the solver the crate exposes the objects it is built from: the
//! conflict graph `G_k`, co-occurrence graphs of representative functions,
//! the clique system on `G_1` with its cutting-plane solver, the rounding
//! loop, exact graph searches, and brute-force oracles.

pub mod config;
pub mod conflict;
pub mod cooccurrence;
pub mod error;
pub mod graph;
pub mod hypergraph;
pub mod instances;
pub mod io;
pub mod lp;
pub mod oracles;
pub mod rounding;
pub mod solver;
pub mod sweep;

pub use config::Budgets;
pub use conflict::{build_conflict_graph, cf_number_via_mis, ConflictGraph, ConflictNode, EdgeClass};
pub use cooccurrence::{
    build_cooccurrence, chi_min_bruteforce, extend_colouring, CoOccurrenceGraph, RepresentativeFunction,
};
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use hypergraph::{
    clique_cover_points, is_exact_hitting_set, max_disjoint_intervals, verify_cf, CfReport, Colouring, Hypergraph,
    Interval, IntervalHypergraph,
};
pub use lp::{find_q_min, separation_max_weight_clique, solve_feasibility, LpSolution};
pub use oracles::{chi_cf_bruteforce, min_ehs_partition_bruteforce, OracleBudget};
pub use rounding::round_solution;
pub use solver::{
    colouring_from_partition, exact_hittable_intervals, partition_from_colouring, solve, Branch, CfcResult, Part,
};
pub use sweep::sweep_colouring;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
mod book_introduction {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/colourings.md")]
mod book_colourings {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/conflict-graph.md")]
mod book_conflict_graph {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cooccurrence.md")]
mod book_cooccurrence {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/clique-system.md")]
mod book_clique_system {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/rounding.md")]
mod book_rounding {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/solver.md")]
mod book_solver {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/partitions.md")]
mod book_partitions {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/oracles.md")]
mod book_oracles {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
