use std::fmt;
use std::time::Duration;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::GraphError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Exact,
    BruteForce,
    Greedy,
    GreedyAddOne,
    LocallyGreedy,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Exact => "exact",
            Algorithm::BruteForce => "brute",
            Algorithm::Greedy => "greedy",
            Algorithm::GreedyAddOne => "greedy-addone",
            Algorithm::LocallyGreedy => "locally-greedy",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Output of one solver run.
#[derive(Clone, Debug)]
pub struct GeodeticResult {
    pub algorithm: Algorithm,
    pub set: VertexSet,
    /// `set` is known to be a minimum geodetic set.
    pub optimal: bool,
    /// `set` was checked against a pristine interval table.
    pub verified: bool,
    /// Wall-clock time of the solver, including its own distance computation
    /// and excluding the final verification.
    pub elapsed: Duration,
}

impl GeodeticResult {
    /// `|S|`, an upper bound on the geodetic number (exact when `optimal`).
    pub fn value(&self) -> usize {
        self.set.len()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.set.to_vec()
    }
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("brute force refuses graphs with n = {n} > {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("internal invariant violated in {algorithm}: {detail}")]
    Invariant { algorithm: Algorithm, detail: String },
}
