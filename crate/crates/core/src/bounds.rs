//! Closed-form upper bounds on the geodetic number.

use crate::geodesy::DistanceMatrix;
use crate::graph::Graph;

/// `g(G) <= n`; tight for complete graphs.
pub fn trivial_bound(graph: &Graph) -> usize {
    graph.n()
}

/// `g(G) <= n - diam(G) + 1`. The single-vertex graph (diameter 0) is
/// clamped to `n`.
pub fn diameter_bound(dist: &DistanceMatrix) -> usize {
    let n = dist.n();
    (n + 1 - dist.diameter() as usize).min(n)
}
