//! Simple undirected graphs, edge-list I/O and seeded random generators.

mod generate;
mod io;

pub use generate::{benchmark_grid, generate, Family, GenSpec, Scheme, DEFAULT_REWIRE_PROB};
pub use io::{parse_edge_list, write_edge_list, ParseOptions};

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("could not generate a connected {family} graph with n={n}, m={m}, seed={seed} after {attempts} attempts")]
    GenerationFailed {
        family: Family,
        n: usize,
        m: usize,
        seed: u64,
        attempts: u32,
    },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted and symmetric; there are no self-loops and no
/// parallel edges. Connectivity is not required by the type itself; solvers
/// check it on entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) collapse to one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Self { adj, m })
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`, for `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Self::from_edges(n, edges).expect("valid clique")
    }

    /// Star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Number of connected components (0 for the empty graph).
    pub fn component_count(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        let mut components = 0;
        for root in 0..n {
            if seen[root] {
                continue;
            }
            components += 1;
            seen[root] = true;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        components
    }

    /// True iff a traversal from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub(crate) fn ensure_connected(&self) -> Result<(), GraphError> {
        match self.component_count() {
            0 | 1 => Ok(()),
            components => Err(GraphError::Disconnected { components }),
        }
    }

    /// True iff the neighbours of `v` are pairwise adjacent. Vertices of
    /// degree 0 or 1 are simplicial.
    pub fn is_simplicial(&self, v: usize) -> bool {
        let nbrs = &self.adj[v];
        nbrs.iter().enumerate().all(|(idx, &a)| {
            let row = &self.adj[a];
            nbrs[idx + 1..].iter().all(|b| row.binary_search(b).is_ok())
        })
    }
}
