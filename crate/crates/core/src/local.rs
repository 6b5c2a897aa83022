//! Locally greedy upper bound using single-source passes only.
//!
//! Starting from a degree-one or simplicial vertex, each step runs one
//! breadth-first pass from the most recently added vertex `w`, merges the
//! intervals `I[w, j]` into the accumulated candidate gains, and adds the
//! vertex whose gain contains the most still-uncovered vertices.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::bitset::VertexSet;
use crate::geodesy::{sssp_intervals, IntervalTable};
use crate::graph::Graph;
use crate::solution::{Algorithm, GeodeticResult, SolveError};

/// Smallest degree-one vertex, else smallest simplicial vertex, else the
/// smallest vertex of minimum degree.
pub fn find_start(graph: &Graph) -> usize {
    let n = graph.n();
    if let Some(v) = (0..n).find(|&v| graph.degree(v) == 1) {
        return v;
    }
    if let Some(v) = (0..n).find(|&v| graph.is_simplicial(v)) {
        return v;
    }
    (0..n).min_by_key(|&v| graph.degree(v)).unwrap_or(0)
}

#[derive(Clone, Debug)]
pub struct LocalState {
    selected: VertexSet,
    coverage: VertexSet,
    remaining: VertexSet,
    rows: BTreeMap<usize, Vec<VertexSet>>,
    /// `I_j[S]`, unions of the stored rows at `j`.
    gains: Vec<VertexSet>,
}

impl LocalState {
    /// `S = {start}`, nothing covered yet.
    pub fn new(n: usize, start: usize) -> Self {
        Self {
            selected: VertexSet::from_vertices(n, [start]),
            coverage: VertexSet::new(n),
            remaining: VertexSet::full(n),
            rows: BTreeMap::new(),
            gains: vec![VertexSet::new(n); n],
        }
    }

    pub fn selected(&self) -> &VertexSet {
        &self.selected
    }

    pub fn coverage(&self) -> &VertexSet {
        &self.coverage
    }

    pub fn remaining(&self) -> &VertexSet {
        &self.remaining
    }

    pub fn gain(&self, j: usize) -> &VertexSet {
        &self.gains[j]
    }

    /// Sources whose interval rows have been computed.
    pub fn row_sources(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Runs a pass from `w`, folds its row into the gains and returns the
    /// vertex `u ∉ S` maximising `|I_u[S] \ I[S]|` (smallest index on ties)
    /// with its unreduced gain `I_u[S]`. Returns `None` once every vertex is
    /// selected.
    pub fn largest_local_increase(&mut self, graph: &Graph, w: usize) -> Option<(usize, VertexSet)> {
        debug_assert!(self.selected.contains(w));
        let row = sssp_intervals(graph, w);
        let mut best: Option<(usize, usize)> = None;
        for (j, interval) in row.iter().enumerate() {
            if self.selected.contains(j) {
                continue;
            }
            self.gains[j].union_with(interval);
            let fresh = self.gains[j].difference_len(&self.coverage);
            if best.is_none_or(|(_, b)| fresh > b) {
                best = Some((j, fresh));
            }
        }
        self.rows.insert(w, row);
        best.map(|(u, _)| (u, self.gains[u].clone()))
    }

    /// Adds `endpoints` to the selection and `gain` to the coverage.
    pub fn accept(&mut self, endpoints: &[usize], gain: &VertexSet) {
        for &v in endpoints {
            self.selected.insert(v);
            self.coverage.insert(v);
        }
        self.coverage.union_with(gain);
        self.remaining = VertexSet::full(self.coverage.capacity());
        self.remaining.difference_with(&self.coverage);
    }
}

pub(crate) fn locally_greedy_set(graph: &Graph) -> Result<VertexSet, SolveError> {
    let n = graph.n();
    if n == 1 {
        return Ok(VertexSet::full(1));
    }
    let start = find_start(graph);
    let mut state = LocalState::new(n, start);
    let mut w = start;
    let mut first = true;
    while !state.remaining.is_empty() {
        let before = state.remaining.len();
        let Some((u, gain)) = state.largest_local_increase(graph, w) else {
            return Err(SolveError::Invariant {
                algorithm: Algorithm::LocallyGreedy,
                detail: "every vertex selected while vertices remain uncovered".into(),
            });
        };
        if first {
            state.accept(&[w, u], &gain);
            first = false;
        } else {
            state.accept(&[u], &gain);
        }
        if state.remaining.len() >= before {
            return Err(SolveError::Invariant {
                algorithm: Algorithm::LocallyGreedy,
                detail: format!("no progress after adding {u}"),
            });
        }
        w = u;
    }
    Ok(state.selected)
}

/// Locally greedy upper bound on the geodetic number of a connected graph.
pub fn locally_greedy_geodetic(graph: &Graph) -> Result<GeodeticResult, SolveError> {
    graph.ensure_connected()?;
    let start = Instant::now();
    let set = locally_greedy_set(graph)?;
    let elapsed = start.elapsed();

    if !IntervalTable::for_graph(graph).is_geodetic(&set) {
        return Err(SolveError::Invariant {
            algorithm: Algorithm::LocallyGreedy,
            detail: format!("returned set {set:?} is not geodetic"),
        });
    }
    Ok(GeodeticResult {
        algorithm: Algorithm::LocallyGreedy,
        set,
        optimal: false,
        verified: true,
        elapsed,
    })
}
