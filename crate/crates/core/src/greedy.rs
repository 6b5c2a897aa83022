//! Greedy upper bound built on the full interval table.
//!
//! Degree-at-most-one vertices seed the set. Each step then compares the best
//! single vertex with the best pair of vertices, measured by how many
//! uncovered vertices they would bring into the closure, and adds the single
//! vertex when its gain exceeds half the pair's gain. In add-one mode the pair
//! search is skipped after the first step.
//!
//! The state keeps a *residual* copy of the interval table with every covered
//! vertex deleted, so gains are plain unions of residual intervals.

use std::time::Instant;

use crate::bitset::{words, VertexSet};
use crate::geodesy::IntervalTable;
use crate::graph::Graph;
use crate::solution::{Algorithm, GeodeticResult, SolveError};

/// Best single-vertex extension found by [`GreedyState::largest_increase`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Increase {
    /// `None` when no vertex outside the set would cover anything new.
    pub vertex: Option<usize>,
    pub gain: VertexSet,
}

/// Best pair extension found by [`GreedyState::largest_increase_pair`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairIncrease {
    pub pair: Option<(usize, usize)>,
    pub gain: VertexSet,
}

#[derive(Clone, Debug)]
pub struct GreedyState {
    selected: VertexSet,
    coverage: VertexSet,
    residual: IntervalTable,
    /// `I_i[S]` for `i` outside the selection; refreshed by `largest_increase`.
    gains: Vec<VertexSet>,
}

impl GreedyState {
    /// Selects every vertex of degree at most one and strips the resulting
    /// closure from a copy of `table`.
    pub fn init(graph: &Graph, table: &IntervalTable) -> Self {
        let leaves = (0..graph.n()).filter(|&v| graph.degree(v) <= 1);
        Self::with_selection(table, VertexSet::from_vertices(graph.n(), leaves))
    }

    /// State for an arbitrary starting selection.
    pub fn with_selection(table: &IntervalTable, selected: VertexSet) -> Self {
        let n = table.n();
        let coverage = table.closure(&selected);
        let mut residual = table.clone();
        residual.remove_covered(&coverage);
        Self {
            selected,
            coverage,
            residual,
            gains: vec![VertexSet::new(n); n],
        }
    }

    pub fn selected(&self) -> &VertexSet {
        &self.selected
    }

    pub fn coverage(&self) -> &VertexSet {
        &self.coverage
    }

    pub fn residual(&self) -> &IntervalTable {
        &self.residual
    }

    /// `I_i[S]` as of the last `largest_increase` call.
    pub fn gain(&self, i: usize) -> &VertexSet {
        &self.gains[i]
    }

    fn n(&self) -> usize {
        self.residual.n()
    }

    /// Recomputes `I_i[S] = ∪_{j ∈ S} residual I[i, j]` for every `i ∉ S` and
    /// returns the largest, smallest index first on ties.
    pub fn largest_increase(&mut self) -> Increase {
        let n = self.n();
        let members = self.selected.to_vec();
        let mut best: Option<(usize, usize)> = None;
        for i in 0..n {
            let gain = &mut self.gains[i];
            gain.clear();
            if self.selected.contains(i) {
                continue;
            }
            for &j in &members {
                words::union_into(gain.words_mut(), self.residual.words(i, j));
            }
            let size = gain.len();
            if size > 0 && best.is_none_or(|(_, b)| size > b) {
                best = Some((i, size));
            }
        }
        match best {
            Some((i, _)) => Increase {
                vertex: Some(i),
                gain: self.gains[i].clone(),
            },
            None => Increase {
                vertex: None,
                gain: VertexSet::new(n),
            },
        }
    }

    /// Over pairs `i < j` outside the selection, maximises
    /// `|residual I[i, j] ∪ I_i[S] ∪ I_j[S]|`, lexicographically smallest pair
    /// first on ties. Uses the gains of the latest `largest_increase` call.
    pub fn largest_increase_pair(&self) -> PairIncrease {
        let n = self.n();
        let outside: Vec<usize> = (0..n).filter(|&v| !self.selected.contains(v)).collect();
        let mut best: Option<((usize, usize), usize)> = None;
        for (a, &i) in outside.iter().enumerate() {
            let gi = self.gains[i].words();
            for &j in &outside[a + 1..] {
                let size = words::count_union3(self.residual.words(i, j), gi, self.gains[j].words());
                if size > 0 && best.is_none_or(|(_, b)| size > b) {
                    best = Some(((i, j), size));
                }
            }
        }
        match best {
            Some(((i, j), _)) => {
                let mut gain = self.residual.interval(i, j);
                gain.union_with(&self.gains[i]);
                gain.union_with(&self.gains[j]);
                PairIncrease {
                    pair: Some((i, j)),
                    gain,
                }
            }
            None => PairIncrease {
                pair: None,
                gain: VertexSet::new(n),
            },
        }
    }

    /// Adds `vertices` to the selection and `gain` to the coverage.
    pub fn add(&mut self, vertices: &[usize], gain: &VertexSet) {
        for &v in vertices {
            self.selected.insert(v);
        }
        self.coverage.union_with(gain);
        self.residual.remove_covered(&self.coverage);
    }
}

/// Runs the greedy loop on a prepared pristine table and returns the set.
pub(crate) fn greedy_set(graph: &Graph, table: &IntervalTable, add_one: bool) -> Result<VertexSet, SolveError> {
    let n = graph.n();
    let algorithm = if add_one {
        Algorithm::GreedyAddOne
    } else {
        Algorithm::Greedy
    };
    if n == 1 {
        return Ok(VertexSet::full(1));
    }

    let mut state = GreedyState::init(graph, table);
    let mut single = state.largest_increase();
    // The pair search runs once up front in both modes; with an empty seed set
    // no single vertex has a gain and the first step must add a pair.
    let mut pair = state.largest_increase_pair();

    while single.gain.len() + pair.gain.len() > 0 {
        let before = state.coverage.len();
        if 2 * single.gain.len() > pair.gain.len() {
            let v = single.vertex.expect("non-empty gain has a vertex");
            state.add(&[v], &single.gain);
        } else {
            let (k, h) = pair.pair.expect("non-empty gain has a pair");
            state.add(&[k, h], &pair.gain);
        }
        if state.coverage.len() <= before {
            return Err(SolveError::Invariant {
                algorithm,
                detail: format!("coverage stuck at {before} of {n}"),
            });
        }
        single = state.largest_increase();
        pair = if add_one {
            PairIncrease {
                pair: None,
                gain: VertexSet::new(n),
            }
        } else {
            state.largest_increase_pair()
        };
    }

    if state.coverage.len() != n {
        return Err(SolveError::Invariant {
            algorithm,
            detail: format!("loop ended with {} of {n} vertices covered", state.coverage.len()),
        });
    }
    debug_assert_eq!(state.coverage, table.closure(&state.selected));
    Ok(state.selected)
}

/// Greedy upper bound on the geodetic number of a connected graph.
pub fn greedy_geodetic(graph: &Graph, add_one: bool) -> Result<GeodeticResult, SolveError> {
    graph.ensure_connected()?;
    let start = Instant::now();
    let table = IntervalTable::for_graph(graph);
    let set = greedy_set(graph, &table, add_one)?;
    let elapsed = start.elapsed();

    let algorithm = if add_one {
        Algorithm::GreedyAddOne
    } else {
        Algorithm::Greedy
    };
    if !table.is_geodetic(&set) {
        return Err(SolveError::Invariant {
            algorithm,
            detail: format!("returned set {set:?} is not geodetic"),
        });
    }
    Ok(GeodeticResult {
        algorithm,
        set,
        optimal: false,
        verified: true,
        elapsed,
    })
}
