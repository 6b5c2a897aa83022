//! Seeded generators for the Erdős–Rényi, Watts–Strogatz and Barabási–Albert
//! families, each producing a connected simple graph with an exact edge count.
//!
//! Randomness comes from `ChaCha8Rng` seeded with `GenSpec::seed`; the retry
//! attempt selects the ChaCha stream, so redraws never collide with the first
//! draw of a neighbouring seed.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError};

pub const DEFAULT_REWIRE_PROB: f64 = 0.05;
const MAX_ATTEMPTS: u32 = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    ErdosRenyi,
    WattsStrogatz,
    BarabasiAlbert,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::ErdosRenyi, Family::WattsStrogatz, Family::BarabasiAlbert];

    pub fn tag(self) -> &'static str {
        match self {
            Family::ErdosRenyi => "er",
            Family::WattsStrogatz => "ws",
            Family::BarabasiAlbert => "ba",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "er" => Ok(Family::ErdosRenyi),
            "ws" => Ok(Family::WattsStrogatz),
            "ba" => Ok(Family::BarabasiAlbert),
            other => Err(GraphError::InvalidSpec(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    /// Rewiring probability; only the Watts–Strogatz family reads it.
    pub rewire_prob: f64,
}

impl GenSpec {
    pub fn new(family: Family, n: usize, m: usize, seed: u64) -> Self {
        Self {
            family,
            n,
            m,
            seed,
            rewire_prob: DEFAULT_REWIRE_PROB,
        }
    }

    /// Edge count for a density given in percent of `n(n-1)/2`, truncated.
    pub fn edges_for_density(n: usize, percent: u32) -> usize {
        max_edges(n) * percent as usize / 100
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let invalid = |msg: String| Err(GraphError::InvalidSpec(msg));
        if self.n < 2 {
            return invalid(format!("n = {} must be at least 2", self.n));
        }
        if self.m < self.n - 1 {
            return invalid(format!("m = {} is below n - 1 = {}", self.m, self.n - 1));
        }
        if self.m > max_edges(self.n) {
            return invalid(format!("m = {} exceeds n(n-1)/2 = {}", self.m, max_edges(self.n)));
        }
        if !(0.0..=1.0).contains(&self.rewire_prob) {
            return invalid(format!("rewire probability {} outside [0, 1]", self.rewire_prob));
        }
        Ok(())
    }
}

fn max_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Draws a connected graph with exactly `spec.n` vertices and `spec.m` edges.
pub fn generate(spec: &GenSpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        rng.set_stream(attempt as u64);
        let edges = match spec.family {
            Family::ErdosRenyi => erdos_renyi(spec.n, spec.m, &mut rng),
            Family::WattsStrogatz => watts_strogatz(spec.n, spec.m, spec.rewire_prob, &mut rng),
            Family::BarabasiAlbert => barabasi_albert(spec.n, spec.m, &mut rng),
        };
        debug_assert_eq!(edges.len(), spec.m);
        let graph = Graph::from_edges(spec.n, edges)?;
        if graph.is_connected() {
            return Ok(graph);
        }
    }
    Err(GraphError::GenerationFailed {
        family: spec.family,
        n: spec.n,
        m: spec.m,
        seed: spec.seed,
        attempts: MAX_ATTEMPTS,
    })
}

type EdgeSet = BTreeSet<(usize, usize)>;

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Decodes the `p`-th pair of the lexicographic enumeration of `i < j`.
fn pair_at(n: usize, mut p: usize) -> (usize, usize) {
    let mut i = 0;
    while p >= n - 1 - i {
        p -= n - 1 - i;
        i += 1;
    }
    (i, i + 1 + p)
}

/// `G(n, m)`: `m` distinct pairs chosen uniformly.
fn erdos_renyi(n: usize, m: usize, rng: &mut ChaCha8Rng) -> EdgeSet {
    index::sample(rng, max_edges(n), m)
        .into_iter()
        .map(|p| pair_at(n, p))
        .collect()
}

/// Adds uniformly chosen non-edges until `edges` has `m` members, or removes
/// uniformly chosen edges if it has too many.
fn adjust_to(n: usize, m: usize, edges: &mut EdgeSet, rng: &mut ChaCha8Rng) {
    if edges.len() < m {
        let missing: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|e| !edges.contains(e))
            .collect();
        let need = m - edges.len();
        for p in index::sample(rng, missing.len(), need) {
            edges.insert(missing[p]);
        }
    } else if edges.len() > m {
        let present: Vec<(usize, usize)> = edges.iter().copied().collect();
        for p in index::sample(rng, present.len(), present.len() - m) {
            edges.remove(&present[p]);
        }
    }
}

/// Ring lattice with `floor(m/n)` neighbours per side, edge-wise rewiring,
/// then exact adjustment to `m` edges.
fn watts_strogatz(n: usize, m: usize, rewire_prob: f64, rng: &mut ChaCha8Rng) -> EdgeSet {
    let half = (m / n).max(1).min((n - 1) / 2);
    let mut edges = EdgeSet::new();
    for d in 1..=half {
        for i in 0..n {
            edges.insert(ordered(i, (i + d) % n));
        }
    }
    for d in 1..=half {
        for i in 0..n {
            let j = (i + d) % n;
            if !edges.contains(&ordered(i, j)) || !rng.random_bool(rewire_prob) {
                continue;
            }
            let choices: Vec<usize> = (0..n).filter(|&w| w != i && !edges.contains(&ordered(i, w))).collect();
            if choices.is_empty() {
                continue;
            }
            let w = choices[rng.random_range(0..choices.len())];
            edges.remove(&ordered(i, j));
            edges.insert(ordered(i, w));
        }
    }
    adjust_to(n, m, &mut edges, rng);
    edges
}

/// Preferential attachment with `floor(m/n)` links per new vertex, grown from
/// a clique, then topped up with uniform extra edges.
fn barabasi_albert(n: usize, m: usize, rng: &mut ChaCha8Rng) -> EdgeSet {
    let links = (m / n).clamp(1, n - 1);
    let mut edges = EdgeSet::new();
    // every edge contributes both endpoints, so a uniform draw is degree-proportional
    let mut endpoints = Vec::new();
    for i in 0..=links {
        for j in i + 1..=links {
            edges.insert((i, j));
            endpoints.extend([i, j]);
        }
    }
    for v in links + 1..n {
        let mut targets = BTreeSet::new();
        while targets.len() < links {
            targets.insert(endpoints[rng.random_range(0..endpoints.len())]);
        }
        for t in targets {
            edges.insert(ordered(t, v));
            endpoints.extend([t, v]);
        }
    }
    adjust_to(n, m, &mut edges, rng);
    edges
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scheme {
    /// `n = 10, 20, ..., 100` at 20/40/60/80 % density.
    Standard,
    /// `n = 115, 135, 150` at 25/50/75 % density.
    Large,
}

impl Scheme {
    pub fn sizes(self) -> &'static [usize] {
        match self {
            Scheme::Standard => &[10, 20, 30, 40, 50, 60, 70, 80, 90, 100],
            Scheme::Large => &[115, 135, 150],
        }
    }

    pub fn density_percents(self) -> &'static [u32] {
        match self {
            Scheme::Standard => &[20, 40, 60, 80],
            Scheme::Large => &[25, 50, 75],
        }
    }
}

impl FromStr for Scheme {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "standard" => Ok(Scheme::Standard),
            "large" => Ok(Scheme::Large),
            other => Err(GraphError::InvalidSpec(format!("unknown scheme {other:?}"))),
        }
    }
}

/// The benchmark cells of `scheme` for each family, in family / n / density
/// order. Cell `k` of the returned list gets seed `seed_base + k`.
pub fn benchmark_grid(scheme: Scheme, families: &[Family], seed_base: u64) -> Vec<GenSpec> {
    let mut cells = Vec::new();
    for &family in families {
        for &n in scheme.sizes() {
            for &pct in scheme.density_percents() {
                let seed = seed_base.wrapping_add(cells.len() as u64);
                cells.push(GenSpec::new(family, n, GenSpec::edges_for_density(n, pct), seed));
            }
        }
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_decoding_is_lexicographic() {
        let n = 6;
        let expected: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let decoded: Vec<_> = (0..max_edges(n)).map(|p| pair_at(n, p)).collect();
        assert_eq!(decoded, expected);
    }

    #[test]
    fn every_family_hits_exact_counts() {
        for family in Family::ALL {
            for (n, m) in [(10, 9), (20, 76), (10, 45), (3, 2), (2, 1), (30, 87)] {
                let g = generate(&GenSpec::new(family, n, m, 7)).unwrap();
                assert_eq!((g.n(), g.m()), (n, m), "{family} n={n} m={m}");
                assert!(g.is_connected());
            }
        }
    }

    #[test]
    fn same_seed_same_graph() {
        for family in Family::ALL {
            let spec = GenSpec::new(family, 40, 156, 99);
            assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        }
    }

    #[test]
    fn different_seeds_differ() {
        let a = generate(&GenSpec::new(Family::ErdosRenyi, 30, 87, 1)).unwrap();
        let b = generate(&GenSpec::new(Family::ErdosRenyi, 30, 87, 2)).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn invalid_specs() {
        for spec in [
            GenSpec::new(Family::ErdosRenyi, 10, 8, 0),
            GenSpec::new(Family::ErdosRenyi, 10, 46, 0),
            GenSpec::new(Family::ErdosRenyi, 1, 0, 0),
            GenSpec {
                rewire_prob: 1.5,
                ..GenSpec::new(Family::WattsStrogatz, 10, 20, 0)
            },
        ] {
            assert!(matches!(generate(&spec), Err(GraphError::InvalidSpec(_))), "{spec:?}");
        }
    }

    #[test]
    fn grid_edge_counts() {
        let standard = benchmark_grid(Scheme::Standard, &[Family::ErdosRenyi], 0);
        assert_eq!(standard.len(), 40);
        let find = |cells: &[GenSpec], n: usize, idx: usize| cells.iter().filter(|c| c.n == n).nth(idx).unwrap().m;
        assert_eq!(find(&standard, 10, 0), 9);
        assert_eq!(find(&standard, 20, 1), 76);
        assert_eq!(find(&standard, 40, 0), 156);

        let large = benchmark_grid(Scheme::Large, &[Family::ErdosRenyi], 0);
        assert_eq!(large.len(), 9);
        assert_eq!(find(&large, 115, 0), 1638);
        assert_eq!(find(&large, 115, 1), 3277);
        assert_eq!(find(&large, 150, 2), 8381);
    }

    #[test]
    fn grid_seeds_are_distinct_across_families() {
        let cells = benchmark_grid(Scheme::Large, &Family::ALL, 1000);
        let seeds: BTreeSet<u64> = cells.iter().map(|c| c.seed).collect();
        assert_eq!(seeds.len(), 27);
        assert_eq!(cells[0].seed, 1000);
    }
}
