//! Benchmark harness: one row per generated instance with the value and
//! running time of every algorithm, in a fixed CSV schema.

use std::io::{self, Write};

use rayon::prelude::*;
use thiserror::Error;

use crate::exact::{exact_geodetic, SearchLimits};
use crate::graph::{benchmark_grid, generate, Family, GenSpec, GraphError, Scheme, DEFAULT_REWIRE_PROB};
use crate::greedy::greedy_geodetic;
use crate::local::locally_greedy_geodetic;
use crate::solution::{Algorithm, GeodeticResult, SolveError};

pub const CSV_HEADER: &str = "family,n,m,seed,exact_value,exact_opt,exact_time,greedy_value,greedy_time,addone_value,addone_time,local_value,local_time";

/// Default largest `n` on which the exact solver runs.
pub const DEFAULT_EXACT_MAX_N: usize = 30;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("{family} n={n} m={m} seed={seed}: {detail}")]
    Inconsistent {
        family: Family,
        n: usize,
        m: usize,
        seed: u64,
        detail: String,
    },
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub scheme: Scheme,
    pub families: Vec<Family>,
    pub seed_base: u64,
    /// Skip grid cells with more vertices than this.
    pub max_n: Option<usize>,
    /// Run the exact solver only up to this many vertices.
    pub exact_max_n: usize,
    pub exact_limits: SearchLimits,
    /// Worker threads; cells are independent.
    pub jobs: usize,
    pub rewire_prob: f64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            scheme: Scheme::Standard,
            families: Family::ALL.to_vec(),
            seed_base: 0,
            max_n: None,
            exact_max_n: DEFAULT_EXACT_MAX_N,
            exact_limits: SearchLimits::unlimited(),
            jobs: 1,
            rewire_prob: DEFAULT_REWIRE_PROB,
        }
    }
}

impl BenchConfig {
    /// The cells this configuration runs, in output order.
    pub fn cells(&self) -> Vec<GenSpec> {
        benchmark_grid(self.scheme, &self.families, self.seed_base)
            .into_iter()
            .filter(|c| self.max_n.is_none_or(|max| c.n <= max))
            .map(|c| GenSpec {
                rewire_prob: self.rewire_prob,
                ..c
            })
            .collect()
    }
}

/// One algorithm's outcome in a row.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Measurement {
    pub value: usize,
    pub seconds: f64,
    /// Optimality for the exact solver, geodetic verification for heuristics.
    pub flag: bool,
}

impl Measurement {
    fn of(result: &GeodeticResult) -> Self {
        let flag = match result.algorithm {
            Algorithm::Exact | Algorithm::BruteForce => result.optimal,
            _ => result.verified,
        };
        Self {
            value: result.value(),
            seconds: result.elapsed.as_secs_f64(),
            flag,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub exact: Option<Measurement>,
    pub greedy: Measurement,
    pub addone: Measurement,
    pub local: Measurement,
}

/// Generates one instance and runs every algorithm on it.
pub fn run_cell(spec: &GenSpec, config: &BenchConfig) -> Result<BenchRecord, BenchError> {
    let graph = generate(spec)?;
    let exact = if spec.n <= config.exact_max_n {
        Some(Measurement::of(&exact_geodetic(&graph, &config.exact_limits)?))
    } else {
        None
    };
    let record = BenchRecord {
        family: spec.family,
        n: graph.n(),
        m: graph.m(),
        seed: spec.seed,
        exact,
        greedy: Measurement::of(&greedy_geodetic(&graph, false)?),
        addone: Measurement::of(&greedy_geodetic(&graph, true)?),
        local: Measurement::of(&locally_greedy_geodetic(&graph)?),
    };
    check_record(&record)?;
    Ok(record)
}

fn check_record(r: &BenchRecord) -> Result<(), BenchError> {
    let fail = |detail: String| {
        Err(BenchError::Inconsistent {
            family: r.family,
            n: r.n,
            m: r.m,
            seed: r.seed,
            detail,
        })
    };
    let heuristics = [("greedy", r.greedy), ("addone", r.addone), ("local", r.local)];
    for (name, h) in heuristics {
        if !h.flag {
            return fail(format!("{name} result not verified geodetic"));
        }
        if let Some(e) = r.exact.filter(|e| e.flag) {
            if e.value > h.value {
                return fail(format!("exact {} exceeds {name} {}", e.value, h.value));
            }
        }
    }
    Ok(())
}

/// Runs every cell of the configured grid. Rows come back in grid order
/// regardless of `jobs`.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>, BenchError> {
    let cells = config.cells();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| io::Error::other(e.to_string()))?;
    pool.install(|| cells.par_iter().map(|c| run_cell(c, config)).collect())
}

fn seconds(s: f64, timing: bool) -> String {
    if timing {
        format!("{s:.6}")
    } else {
        String::new()
    }
}

/// Writes `records` as CSV. With `timing` off the time columns are left
/// empty, which makes the output a pure function of the configuration.
pub fn write_csv<W: Write>(records: &[BenchRecord], timing: bool, mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        let (ev, eo, et) = match r.exact {
            Some(e) => (e.value.to_string(), e.flag.to_string(), seconds(e.seconds, timing)),
            None => Default::default(),
        };
        writeln!(
            out,
            "{},{},{},{},{ev},{eo},{et},{},{},{},{},{},{}",
            r.family,
            r.n,
            r.m,
            r.seed,
            r.greedy.value,
            seconds(r.greedy.seconds, timing),
            r.addone.value,
            seconds(r.addone.seconds, timing),
            r.local.value,
            seconds(r.local.seconds, timing),
        )?;
    }
    Ok(())
}

/// Aligned table for terminals. Non-optimal exact values are shown as `<=v`.
pub fn write_pretty<W: Write>(records: &[BenchRecord], timing: bool, mut out: W) -> io::Result<()> {
    let header = [
        "family", "n", "m", "exact", "time", "greedy", "time", "addone", "time", "local", "time",
    ];
    let mut rows: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    let t = |s: f64| if timing { format!("{s:.3}") } else { "-".into() };
    for r in records {
        let (ev, et) = match r.exact {
            Some(e) if e.flag => (e.value.to_string(), t(e.seconds)),
            Some(e) => (format!("<={}", e.value), t(e.seconds)),
            None => ("-".into(), "-".into()),
        };
        rows.push(vec![
            r.family.to_string(),
            r.n.to_string(),
            r.m.to_string(),
            ev,
            et,
            r.greedy.value.to_string(),
            t(r.greedy.seconds),
            r.addone.value.to_string(),
            t(r.addone.seconds),
            r.local.value.to_string(),
            t(r.local.seconds),
        ]);
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:>w$}"))
            .collect();
        writeln!(out, "{}", line.join("  "))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config() -> BenchConfig {
        BenchConfig {
            families: vec![Family::ErdosRenyi],
            max_n: Some(20),
            seed_base: 11,
            ..Default::default()
        }
    }

    #[test]
    fn cells_respect_max_n() {
        let cfg = BenchConfig {
            max_n: Some(30),
            ..small_config()
        };
        assert_eq!(cfg.cells().len(), 12);
        let large = BenchConfig {
            scheme: Scheme::Large,
            max_n: None,
            ..small_config()
        };
        assert_eq!(large.cells().len(), 9);
    }

    #[test]
    fn rows_hold_bound_relations() {
        let records = run_bench(&small_config()).unwrap();
        assert_eq!(records.len(), 8);
        for r in &records {
            let e = r.exact.unwrap();
            assert!(e.flag);
            assert!(e.value <= r.greedy.value && e.value <= r.addone.value && e.value <= r.local.value);
        }
    }

    #[test]
    fn csv_layout_and_parallel_determinism() {
        let serial = run_bench(&small_config()).unwrap();
        let parallel = run_bench(&BenchConfig {
            jobs: 4,
            ..small_config()
        })
        .unwrap();
        let mut a = Vec::new();
        let mut b = Vec::new();
        write_csv(&serial, false, &mut a).unwrap();
        write_csv(&parallel, false, &mut b).unwrap();
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        let first: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(first.len(), 13);
        assert_eq!(&first[..4], &["er", "10", "9", "11"]);
        assert_eq!(first[5], "true");
        assert_eq!(first[6], "");
    }

    #[test]
    fn skipped_exact_leaves_columns_empty() {
        let cfg = BenchConfig {
            exact_max_n: 5,
            max_n: Some(10),
            ..small_config()
        };
        let records = run_bench(&cfg).unwrap();
        assert!(records.iter().all(|r| r.exact.is_none()));
        let mut out = Vec::new();
        write_csv(&records, true, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
        assert_eq!(&row[4..7], &["", "", ""]);
        assert!(row[8].parse::<f64>().is_ok());

        let mut pretty = Vec::new();
        write_pretty(&records, true, &mut pretty).unwrap();
        assert_eq!(String::from_utf8(pretty).unwrap().lines().count(), 5);
    }
}
