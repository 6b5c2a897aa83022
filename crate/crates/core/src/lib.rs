//! Geodetic number of simple connected graphs.
//!
//! A vertex set `S` is *geodetic* when every vertex lies on some shortest path
//! between two members of `S`; the geodetic number `g(G)` is the size of a
//! smallest such set. Computing it is NP-hard, so this crate offers:
//!
//! - [`exact_geodetic`]: pruned subset search (plus [`brute_force_geodetic`]
//!   as a reference) for small graphs,
//! - [`greedy_geodetic`]: greedy upper bound on the full interval table,
//!   optionally adding one vertex at a time,
//! - [`locally_greedy_geodetic`]: a faster upper bound driven by
//!   single-source passes,
//! - closed-form bounds, an LP-format export of the 0-1 programme, seeded
//!   graph generators and a benchmark harness.
//!
//! ```
//! use geodetic::{greedy_geodetic, exact_geodetic, Graph, SearchLimits};
//!
//! let c6 = Graph::cycle(6);
//! let exact = exact_geodetic(&c6, &SearchLimits::unlimited())?;
//! assert_eq!(exact.value(), 2);
//! assert!(greedy_geodetic(&c6, false)?.value() >= exact.value());
//! # Ok::<(), geodetic::SolveError>(())
//! ```
//!
//! The `book/` directory at the repository root explains the algorithms in
//! more depth; its Rust snippets run as doctests of this crate.

pub mod bench;
mod bitset;
pub mod bounds;
pub mod exact;
pub mod geodesy;
pub mod graph;
pub mod greedy;
pub mod local;
mod solution;

#[cfg(test)]
mod testing;

pub use bitset::VertexSet;
pub use bounds::{diameter_bound, trivial_bound};
pub use exact::{brute_force_geodetic, exact_geodetic, export_ilp, forced_vertices, IlpModel, SearchLimits};
pub use geodesy::{all_pairs_distances, sssp_intervals, DistanceMatrix, IntervalTable, PkTable};
pub use graph::{generate, parse_edge_list, write_edge_list, Family, GenSpec, Graph, GraphError, ParseOptions};
pub use greedy::greedy_geodetic;
pub use local::locally_greedy_geodetic;
pub use solution::{Algorithm, GeodeticResult, SolveError};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/intervals.md")]
    struct Intervals;
    #[doc = include_str!("../../../book/src/greedy.md")]
    struct Greedy;
    #[doc = include_str!("../../../book/src/locally-greedy.md")]
    struct LocallyGreedy;
    #[doc = include_str!("../../../book/src/exact.md")]
    struct Exact;
    #[doc = include_str!("../../../book/src/generators.md")]
    struct Generators;
    #[doc = include_str!("../../../book/src/benchmarks.md")]
    struct Benchmarks;
}
