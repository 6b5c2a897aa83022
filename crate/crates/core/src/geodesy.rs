//! Distances, geodesic intervals and geodetic closure.
//!
//! The interval `I[i, j]` of a pair is the set of vertices `k` lying on some
//! shortest `i`–`j` path, i.e. `d(i, k) + d(k, j) = d(i, j)`. Endpoints are
//! members and `I[i, i] = {i}`. The closure of a set `S` is the union of the
//! intervals of all pairs (including equal pairs) drawn from `S`.

use std::collections::VecDeque;

use crate::bitset::{words, words_for, VertexSet};
use crate::graph::Graph;

/// Distance value for vertex pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    /// Largest finite distance (0 for graphs with fewer than two vertices).
    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().filter(|&x| x != UNREACHABLE).max().unwrap_or(0)
    }

    pub fn is_finite(&self) -> bool {
        !self.d.contains(&UNREACHABLE)
    }
}

/// Floyd–Warshall over unit edge lengths.
pub fn all_pairs_distances(graph: &Graph) -> DistanceMatrix {
    let n = graph.n();
    let mut d = vec![UNREACHABLE; n * n];
    for i in 0..n {
        d[i * n + i] = 0;
        for &j in graph.neighbors(i) {
            d[i * n + j] = 1;
        }
    }
    for k in 0..n {
        let row_k = d[k * n..(k + 1) * n].to_vec();
        for i in 0..n {
            let dik = d[i * n + k];
            if dik == UNREACHABLE {
                continue;
            }
            let row_i = &mut d[i * n..(i + 1) * n];
            for (dij, &dkj) in row_i.iter_mut().zip(&row_k) {
                let via = dik.saturating_add(dkj);
                if via < *dij {
                    *dij = via;
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

/// Interval sets for every unordered pair, stored in a packed upper
/// triangle (`i <= j`).
///
/// A freshly built table is *pristine*. The greedy solver mutates a copy
/// into a residual table by deleting covered vertices from every interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalTable {
    n: usize,
    stride: usize,
    data: Vec<u64>,
}

impl IntervalTable {
    /// Builds the pristine table from a distance matrix.
    pub fn from_distances(dist: &DistanceMatrix) -> Self {
        let n = dist.n();
        let mut table = Self::empty(n);
        for i in 0..n {
            let row_i = dist.row(i);
            for j in i..n {
                let dij = row_i[j];
                if dij == UNREACHABLE {
                    continue;
                }
                let row_j = dist.row(j);
                let set = table.words_mut(i, j);
                for k in 0..n {
                    if row_i[k].saturating_add(row_j[k]) == dij {
                        words::insert(set, k);
                    }
                }
            }
        }
        table
    }

    /// Convenience: distances followed by intervals.
    pub fn for_graph(graph: &Graph) -> Self {
        Self::from_distances(&all_pairs_distances(graph))
    }

    fn empty(n: usize) -> Self {
        let stride = words_for(n);
        Self {
            n,
            stride,
            data: vec![0; n * (n + 1) / 2 * stride],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn pair_index(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        i * self.n - i * (i + 1) / 2 + j
    }

    #[inline]
    pub(crate) fn words(&self, i: usize, j: usize) -> &[u64] {
        let at = self.pair_index(i, j) * self.stride;
        &self.data[at..at + self.stride]
    }

    #[inline]
    pub(crate) fn words_mut(&mut self, i: usize, j: usize) -> &mut [u64] {
        let at = self.pair_index(i, j) * self.stride;
        &mut self.data[at..at + self.stride]
    }

    /// `I[i, j]` (order of `i`, `j` is irrelevant).
    pub fn interval(&self, i: usize, j: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.words(i, j))
    }

    pub fn contains(&self, i: usize, j: usize, k: usize) -> bool {
        words::contains(self.words(i, j), k)
    }

    /// `|I[i, j]|`
    pub fn interval_len(&self, i: usize, j: usize) -> usize {
        words::count(self.words(i, j))
    }

    /// The intervals `I[v, j]` for `j = 0..n`.
    pub fn row(&self, v: usize) -> Vec<VertexSet> {
        (0..self.n).map(|j| self.interval(v, j)).collect()
    }

    /// Deletes every member of `covered` from every interval.
    pub fn remove_covered(&mut self, covered: &VertexSet) {
        let mask = covered.words();
        for chunk in self.data.chunks_exact_mut(self.stride) {
            words::difference_into(chunk, mask);
        }
    }

    /// Geodetic closure `I[S]`.
    pub fn closure(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        let members = set.to_vec();
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a..] {
                words::union_into(out.words_mut(), self.words(i, j));
            }
        }
        out
    }

    /// `I[S] = V`.
    pub fn is_geodetic(&self, set: &VertexSet) -> bool {
        self.closure(set).len() == self.n
    }
}

/// For each vertex `k`, the pairs `(i, j)` with `i < j` that have a shortest
/// path through `k`. Pairs with `k` as an endpoint are included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PkTable {
    pairs: Vec<Vec<(usize, usize)>>,
}

impl PkTable {
    pub fn from_distances(dist: &DistanceMatrix) -> Self {
        let n = dist.n();
        let mut pairs = vec![Vec::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                let dij = dist.get(i, j);
                if dij == UNREACHABLE {
                    continue;
                }
                for (k, list) in pairs.iter_mut().enumerate() {
                    if dist.get(i, k).saturating_add(dist.get(k, j)) == dij {
                        list.push((i, j));
                    }
                }
            }
        }
        Self { pairs }
    }

    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self, k: usize) -> &[(usize, usize)] {
        &self.pairs[k]
    }
}

/// Intervals `I[v, j]` for every `j`, from a single breadth-first pass.
///
/// The pass records the shortest-path DAG rooted at `v`; `I[v, j]` is then the
/// set of DAG ancestors of `j` (plus `j`), accumulated in BFS order so each
/// vertex unions the sets of its DAG parents. No all-pairs data is used.
/// Vertices unreachable from `v` get an empty set.
pub fn sssp_intervals(graph: &Graph, v: usize) -> Vec<VertexSet> {
    let n = graph.n();
    let mut dist = vec![UNREACHABLE; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    dist[v] = 0;
    queue.push_back(v);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in graph.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }

    let mut rows = vec![VertexSet::new(n); n];
    for &u in &order {
        let mut acc = VertexSet::new(n);
        acc.insert(u);
        for &p in graph.neighbors(u) {
            if dist[p] != UNREACHABLE && dist[p] + 1 == dist[u] {
                acc.union_with(&rows[p]);
            }
        }
        rows[u] = acc;
    }
    rows
}
