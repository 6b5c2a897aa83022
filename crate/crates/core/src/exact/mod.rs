//! Exact geodetic number.
//!
//! [`exact_geodetic`] runs an iterative-deepening subset search over supersets
//! of the forced vertices (degree-one and simplicial vertices, which belong to
//! every geodetic set), pruned with an optimistic coverage bound and started
//! from the greedy solution as incumbent. [`brute_force_geodetic`] evaluates
//! the definition directly and serves as the reference for tests.

mod ilp;

pub use ilp::{export_ilp, Constraint, IlpModel, Sense, Var};

use std::time::{Duration, Instant};

use crate::bitset::{words, VertexSet};
use crate::geodesy::IntervalTable;
use crate::graph::{Graph, GraphError};
use crate::greedy::greedy_set;
use crate::solution::{Algorithm, GeodeticResult, SolveError};

/// Largest graph the brute-force enumeration accepts.
pub const BRUTE_FORCE_MAX_N: usize = 25;

/// Optional budgets for [`exact_geodetic`]. When a budget runs out the best
/// set found so far is returned with `optimal = false`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchLimits {
    pub time: Option<Duration>,
    /// Maximum number of search nodes (partial subsets) to evaluate.
    pub nodes: Option<u64>,
}

impl SearchLimits {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_time(time: Duration) -> Self {
        Self {
            time: Some(time),
            nodes: None,
        }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        if self.time.is_some_and(|t| t.is_zero()) || self.nodes == Some(0) {
            return Err(GraphError::InvalidSpec("search budgets must be positive".into()));
        }
        Ok(())
    }
}

/// Degree-one and simplicial vertices.
pub fn forced_vertices(graph: &Graph) -> VertexSet {
    VertexSet::from_vertices(
        graph.n(),
        (0..graph.n()).filter(|&v| graph.degree(v) == 1 || graph.is_simplicial(v)),
    )
}

/// Smallest geodetic set by enumerating subsets in increasing size,
/// lexicographically within each size.
pub fn brute_force_geodetic(graph: &Graph) -> Result<GeodeticResult, SolveError> {
    let n = graph.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(SolveError::TooLarge {
            n,
            limit: BRUTE_FORCE_MAX_N,
        });
    }
    graph.ensure_connected()?;
    let start = Instant::now();
    let table = IntervalTable::for_graph(graph);
    for size in 0..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let set = VertexSet::from_vertices(n, combo.iter().copied());
            if table.is_geodetic(&set) {
                return Ok(GeodeticResult {
                    algorithm: Algorithm::BruteForce,
                    set,
                    optimal: true,
                    verified: true,
                    elapsed: start.elapsed(),
                });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Err(SolveError::Invariant {
        algorithm: Algorithm::BruteForce,
        detail: "no geodetic subset found".into(),
    })
}

/// Advances `combo` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}

enum Outcome {
    Found(Vec<usize>),
    NotFound,
    OutOfBudget,
}

struct Search<'a> {
    table: &'a IntervalTable,
    candidates: Vec<usize>,
    limits: SearchLimits,
    started: Instant,
    nodes: u64,
}

impl Search<'_> {
    fn exhausted(&self) -> bool {
        self.limits.nodes.is_some_and(|max| self.nodes >= max)
            || self.limits.time.is_some_and(|t| self.started.elapsed() >= t)
    }

    /// Looks for `slots` more candidates from `candidates[pos..]` that,
    /// together with `chosen`, cover every vertex.
    fn extend(&mut self, pos: usize, slots: usize, chosen: &mut Vec<usize>, cov: &VertexSet) -> Outcome {
        if self.exhausted() {
            return Outcome::OutOfBudget;
        }
        self.nodes += 1;
        let n = self.table.n();
        if cov.len() == n {
            return Outcome::Found(chosen.clone());
        }
        if slots == 0 || self.candidates.len() - pos < slots {
            return Outcome::NotFound;
        }
        let uncovered = n - cov.len();

        // exact closure after adding each remaining candidate on its own
        let grown: Vec<VertexSet> = self.candidates[pos..]
            .iter()
            .map(|&a| {
                let mut next = cov.clone();
                words::union_into(next.words_mut(), self.table.words(a, a));
                for &x in chosen.iter() {
                    words::union_into(next.words_mut(), self.table.words(a, x));
                }
                next
            })
            .collect();

        if slots == 1 {
            return match grown.iter().position(|g| g.len() == n) {
                Some(idx) => {
                    chosen.push(self.candidates[pos + idx]);
                    let found = chosen.clone();
                    chosen.pop();
                    Outcome::Found(found)
                }
                None => Outcome::NotFound,
            };
        }

        if self.optimistic_gain(pos, slots, cov, &grown) < uncovered {
            return Outcome::NotFound;
        }

        let choices = self.candidates.len() - pos - slots + 1;
        for (offset, next) in grown.iter().enumerate().take(choices) {
            chosen.push(self.candidates[pos + offset]);
            let outcome = self.extend(pos + offset + 1, slots - 1, chosen, next);
            chosen.pop();
            match outcome {
                Outcome::NotFound => {}
                other => return other,
            }
        }
        Outcome::NotFound
    }

    /// Upper bound on how many new vertices any `slots` of the remaining
    /// candidates can cover. Adding a set `A` covers at most the per-vertex
    /// gains against the current selection plus the intervals of pairs inside
    /// `A`, so the `slots` largest single gains plus the `slots·(slots-1)/2`
    /// largest residual pair intervals never undercount.
    fn optimistic_gain(&self, pos: usize, slots: usize, cov: &VertexSet, grown: &[VertexSet]) -> usize {
        let base = cov.len();
        let mut singles: Vec<usize> = grown.iter().map(|g| g.len() - base).collect();
        singles.sort_unstable_by(|a, b| b.cmp(a));
        let single_sum: usize = singles.iter().take(slots).sum();

        let rest = &self.candidates[pos..];
        let mut pairs = Vec::with_capacity(rest.len() * rest.len().saturating_sub(1) / 2);
        for (i, &a) in rest.iter().enumerate() {
            for &b in &rest[i + 1..] {
                pairs.push(words::count_difference(self.table.words(a, b), cov.words()));
            }
        }
        let take = (slots * (slots - 1) / 2).min(pairs.len());
        let pair_sum: usize = if take == 0 {
            0
        } else {
            pairs.select_nth_unstable_by(take - 1, |a, b| b.cmp(a));
            pairs[..take].iter().sum()
        };
        single_sum + pair_sum
    }
}

/// Exact geodetic number, or the best set found within `limits`.
pub fn exact_geodetic(graph: &Graph, limits: &SearchLimits) -> Result<GeodeticResult, SolveError> {
    limits.validate()?;
    graph.ensure_connected()?;
    let started = Instant::now();
    let n = graph.n();
    let finish = |set: VertexSet, optimal: bool, table: &IntervalTable| {
        let elapsed = started.elapsed();
        let verified = table.is_geodetic(&set);
        if !verified {
            return Err(SolveError::Invariant {
                algorithm: Algorithm::Exact,
                detail: format!("returned set {set:?} is not geodetic"),
            });
        }
        Ok(GeodeticResult {
            algorithm: Algorithm::Exact,
            set,
            optimal,
            verified,
            elapsed,
        })
    };

    let table = IntervalTable::for_graph(graph);
    let forced = forced_vertices(graph);
    let forced_cov = table.closure(&forced);
    if forced_cov.len() == n {
        return finish(forced, true, &table);
    }

    let incumbent = greedy_set(graph, &table, false)?;
    let candidates: Vec<usize> = (0..n).filter(|&v| !forced.contains(v)).collect();
    let mut search = Search {
        table: &table,
        candidates,
        limits: *limits,
        started,
        nodes: 0,
    };
    let mut chosen = forced.to_vec();
    // every geodetic set contains the forced vertices, so the incumbent does too
    for extra in 1..incumbent.len().saturating_sub(forced.len()) {
        match search.extend(0, extra, &mut chosen, &forced_cov) {
            Outcome::Found(set) => return finish(VertexSet::from_vertices(n, set), true, &table),
            Outcome::NotFound => {}
            Outcome::OutOfBudget => return finish(incumbent, false, &table),
        }
    }
    finish(incumbent, true, &table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, GenSpec};
    use crate::testing::arb_connected_graph;
    use proptest::prelude::*;

    #[test]
    fn combinations_are_lexicographic() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(
            all,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        let mut empty: Vec<usize> = vec![];
        assert!(!next_combination(&mut empty, 3));
    }

    #[test]
    fn brute_force_fixtures() {
        for n in 2..=8 {
            assert_eq!(brute_force_geodetic(&Graph::path(n)).unwrap().value(), 2);
        }
        let c5 = brute_force_geodetic(&Graph::cycle(5)).unwrap();
        assert_eq!(c5.value(), 3);
        assert_eq!(c5.vertices(), vec![0, 1, 3]);
        assert_eq!(brute_force_geodetic(&Graph::complete(4)).unwrap().value(), 4);
        assert!(brute_force_geodetic(&Graph::path(1)).unwrap().optimal);
    }

    #[test]
    fn no_pair_covers_five_cycle() {
        let t = IntervalTable::for_graph(&Graph::cycle(5));
        for i in 0..5 {
            for j in i + 1..5 {
                assert!(!t.is_geodetic(&VertexSet::from_vertices(5, [i, j])));
            }
        }
    }

    #[test]
    fn brute_force_refuses_large_graphs() {
        assert!(matches!(
            brute_force_geodetic(&Graph::path(26)),
            Err(SolveError::TooLarge { n: 26, limit: 25 })
        ));
    }

    #[test]
    fn exact_fixtures() {
        let star = exact_geodetic(&Graph::star(6), &SearchLimits::unlimited()).unwrap();
        assert_eq!(star.vertices(), vec![1, 2, 3, 4, 5, 6]);
        assert!(star.optimal);
        assert_eq!(
            exact_geodetic(&Graph::cycle(6), &SearchLimits::unlimited())
                .unwrap()
                .value(),
            2
        );
        assert_eq!(
            exact_geodetic(&Graph::cycle(5), &SearchLimits::unlimited())
                .unwrap()
                .value(),
            3
        );
        assert_eq!(
            exact_geodetic(&Graph::path(1), &SearchLimits::unlimited())
                .unwrap()
                .value(),
            1
        );
    }

    #[test]
    fn forced_set() {
        assert_eq!(forced_vertices(&Graph::star(3)).to_vec(), vec![1, 2, 3]);
        assert_eq!(forced_vertices(&Graph::complete(4)).to_vec(), vec![0, 1, 2, 3]);
        assert!(forced_vertices(&Graph::cycle(5)).is_empty());
    }

    #[test]
    fn node_budget_returns_non_optimal_incumbent() {
        let g = generate(&GenSpec::new(Family::WattsStrogatz, 30, 87, 3)).unwrap();
        let limits = SearchLimits {
            time: None,
            nodes: Some(1),
        };
        let r = exact_geodetic(&g, &limits).unwrap();
        let full = exact_geodetic(&g, &SearchLimits::unlimited()).unwrap();
        assert!(full.optimal);
        assert!(r.verified);
        if r.value() > full.value() {
            assert!(!r.optimal);
        }
    }

    #[test]
    fn zero_budget_is_rejected() {
        let limits = SearchLimits {
            time: Some(Duration::ZERO),
            nodes: None,
        };
        assert!(exact_geodetic(&Graph::path(3), &limits).is_err());
    }

    proptest! {
        #[test]
        fn exact_matches_brute_force(g in arb_connected_graph(1..11)) {
            let exact = exact_geodetic(&g, &SearchLimits::unlimited()).unwrap();
            let brute = brute_force_geodetic(&g).unwrap();
            prop_assert!(exact.optimal);
            prop_assert_eq!(exact.value(), brute.value());
            prop_assert!(forced_vertices(&g).is_subset(&exact.set));
        }
    }
}
