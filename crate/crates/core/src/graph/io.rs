//! Whitespace-separated edge lists.
//!
//! Lines starting with `#` or `%` are comments, blank lines are skipped and
//! every other line must hold exactly two non-negative integer ids. The
//! writer emits 0-based ids, one `u v` line per edge with `u < v`, sorted.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{Graph, GraphError};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Ids in the file start at 1.
    pub one_based: bool,
    /// Reject disconnected graphs.
    pub require_connected: bool,
}

impl ParseOptions {
    pub fn strict() -> Self {
        Self {
            one_based: false,
            require_connected: true,
        }
    }
}

/// Parses an edge list.
///
/// If the ids seen form the contiguous range `0..n` they are kept as they
/// are; otherwise they are compacted to `0..n` in order of first appearance.
pub fn parse_edge_list(text: &str, options: ParseOptions) -> Result<Graph, GraphError> {
    let mut raw = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(GraphError::Parse {
                line: line_no,
                message: format!("expected two vertex ids, got {line:?}"),
            });
        };
        let parse = |tok: &str| -> Result<u64, GraphError> {
            let id: u64 = tok.parse().map_err(|_| GraphError::Parse {
                line: line_no,
                message: format!("invalid vertex id {tok:?}"),
            })?;
            if options.one_based {
                id.checked_sub(1).ok_or_else(|| GraphError::Parse {
                    line: line_no,
                    message: "vertex id 0 in a one-based file".to_string(),
                })
            } else {
                Ok(id)
            }
        };
        let (u, v) = (parse(a)?, parse(b)?);
        if u == v {
            let vertex = if options.one_based { u + 1 } else { u };
            return Err(GraphError::SelfLoop {
                vertex: vertex as usize,
            });
        }
        raw.push((u, v));
    }

    let mut order: Vec<u64> = Vec::new();
    let mut index: HashMap<u64, usize> = HashMap::new();
    for &(u, v) in &raw {
        for id in [u, v] {
            index.entry(id).or_insert_with(|| {
                order.push(id);
                order.len() - 1
            });
        }
    }
    let n = order.len();
    let contiguous = order.iter().all(|&id| (id as usize) < n);
    let edges = raw.iter().map(|&(u, v)| {
        if contiguous {
            (u as usize, v as usize)
        } else {
            (index[&u], index[&v])
        }
    });
    let graph = Graph::from_edges(n, edges)?;
    if options.require_connected {
        graph.ensure_connected()?;
    }
    Ok(graph)
}

/// Serialises `graph` in the canonical edge-list form.
pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = String::with_capacity(graph.m() * 8);
    for (u, v) in graph.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String cannot fail");
    }
    out
}
