//! Test-only strategies and oracles.

use std::collections::VecDeque;
use std::ops::Range;

use proptest::prelude::*;

use crate::graph::Graph;

/// Connected graphs: a random spanning tree plus random extra edges.
pub fn arb_connected_graph(vertices: Range<usize>) -> impl Strategy<Value = Graph> {
    vertices.prop_flat_map(|n| {
        let parents = proptest::collection::vec(any::<u32>(), n.saturating_sub(1));
        let extra = proptest::collection::vec((0..n, 0..n), 0..=(n * 2));
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let tree = parents
                .iter()
                .enumerate()
                .map(|(idx, &p)| (p as usize % (idx + 1), idx + 1));
            let extra = extra.into_iter().filter(|(u, v)| u != v);
            Graph::from_edges(n, tree.chain(extra)).expect("valid edges")
        })
    })
}

/// Hop distances from `source` by plain BFS.
pub fn bfs_levels(graph: &Graph, source: usize) -> Vec<u32> {
    let mut level = vec![u32::MAX; graph.n()];
    let mut queue = VecDeque::from([source]);
    level[source] = 0;
    while let Some(u) = queue.pop_front() {
        for &v in graph.neighbors(u) {
            if level[v] == u32::MAX {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    level
}

/// Interval sets from explicit enumeration of every simple path between each
/// pair, keeping the vertices of the shortest ones. Exponential; small `n` only.
pub fn brute_force_intervals(graph: &Graph) -> Vec<Vec<Vec<usize>>> {
    let n = graph.n();
    let mut out = vec![vec![Vec::new(); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut best = usize::MAX;
            let mut members = vec![false; n];
            let mut path = vec![i];
            let mut on_path = vec![false; n];
            on_path[i] = true;
            walk(graph, j, &mut path, &mut on_path, &mut best, &mut members);
            *cell = (0..n).filter(|&k| members[k]).collect();
        }
    }
    out
}

fn walk(
    graph: &Graph,
    target: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    best: &mut usize,
    members: &mut [bool],
) {
    let last = *path.last().unwrap();
    if last == target {
        let len = path.len();
        if len < *best {
            *best = len;
            members.fill(false);
        }
        if len == *best {
            for &v in path.iter() {
                members[v] = true;
            }
        }
        return;
    }
    for &next in graph.neighbors(last) {
        if !on_path[next] {
            on_path[next] = true;
            path.push(next);
            walk(graph, target, path, on_path, best, members);
            path.pop();
            on_path[next] = false;
        }
    }
}
