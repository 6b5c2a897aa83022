//! 0-1 integer programme for the geodetic number, written in LP text format.
//!
//! Binary `x_k` marks membership of vertex `k`; binary `y_ij` (`i < j`) stands
//! for the product `x_i x_j` through three McCormick rows. Vertex `k` must be
//! selected or lie on a shortest path between two selected vertices:
//!
//! ```text
//! min  Σ_k x_k
//! s.t. x_k + Σ_{(i,j) ∈ P_k} y_ij >= 1     for every k
//!      y_ij - x_i <= 0                      for every i < j
//!      y_ij - x_j <= 0
//!      x_i + x_j - y_ij <= 1
//! ```
//!
//! where `P_k` holds the pairs with a shortest path through `k`.

use std::fmt::{self, Write as _};

use crate::geodesy::{all_pairs_distances, PkTable};
use crate::graph::Graph;
use crate::solution::SolveError;

const TERMS_PER_LINE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(usize),
    Y(usize, usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(k) => write!(f, "x{k}"),
            Var::Y(i, j) => write!(f, "y{i}_{j}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    /// `(coefficient, variable)`; coefficients are ±1.
    pub terms: Vec<(i32, Var)>,
    pub sense: Sense,
    pub rhs: i32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IlpModel {
    pub n: usize,
    pub objective: Vec<Var>,
    pub constraints: Vec<Constraint>,
    pub binaries: Vec<Var>,
}

impl IlpModel {
    pub fn build(graph: &Graph) -> Result<Self, SolveError> {
        graph.ensure_connected()?;
        let n = graph.n();
        let pk = PkTable::from_distances(&all_pairs_distances(graph));
        let xs: Vec<Var> = (0..n).map(Var::X).collect();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();

        let mut constraints = Vec::with_capacity(n + 3 * pairs.len());
        for k in 0..n {
            let mut terms = vec![(1, Var::X(k))];
            terms.extend(pk.pairs(k).iter().map(|&(i, j)| (1, Var::Y(i, j))));
            constraints.push(Constraint {
                name: format!("cover_{k}"),
                terms,
                sense: Sense::Ge,
                rhs: 1,
            });
        }
        for &(i, j) in &pairs {
            let y = Var::Y(i, j);
            constraints.push(Constraint {
                name: format!("lo_{i}_{j}"),
                terms: vec![(1, y), (-1, Var::X(i))],
                sense: Sense::Le,
                rhs: 0,
            });
            constraints.push(Constraint {
                name: format!("hi_{i}_{j}"),
                terms: vec![(1, y), (-1, Var::X(j))],
                sense: Sense::Le,
                rhs: 0,
            });
            constraints.push(Constraint {
                name: format!("and_{i}_{j}"),
                terms: vec![(1, Var::X(i)), (1, Var::X(j)), (-1, y)],
                sense: Sense::Le,
                rhs: 1,
            });
        }

        let mut binaries = xs.clone();
        binaries.extend(pairs.iter().map(|&(i, j)| Var::Y(i, j)));
        Ok(Self {
            n,
            objective: xs,
            constraints,
            binaries,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.binaries.len()
    }

    pub fn constraint_count(&self) -> usize {
        self.constraints.len()
    }

    /// LP text with sections `Minimize`, `Subject To`, `Binary`, `End`.
    pub fn to_lp(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "\\ Problem: geodetic number, n = {}", self.n);
        let _ = writeln!(w, "Minimize");
        let objective: Vec<(i32, Var)> = self.objective.iter().map(|&v| (1, v)).collect();
        write_row(w, "obj", &objective);
        let _ = writeln!(w);
        let _ = writeln!(w, "Subject To");
        for c in &self.constraints {
            write_row(w, &c.name, &c.terms);
            let op = match c.sense {
                Sense::Le => "<=",
                Sense::Ge => ">=",
            };
            let _ = writeln!(w, " {op} {}", c.rhs);
        }
        let _ = writeln!(w, "Binary");
        for chunk in self.binaries.chunks(TERMS_PER_LINE) {
            let names: Vec<String> = chunk.iter().map(Var::to_string).collect();
            let _ = writeln!(w, " {}", names.join(" "));
        }
        let _ = writeln!(w, "End");
        out
    }
}

/// ` name: t1 + t2 ...` without the trailing newline; long rows wrap onto
/// indented continuation lines.
fn write_row(out: &mut String, name: &str, terms: &[(i32, Var)]) {
    let _ = write!(out, " {name}:");
    for (idx, &(coef, var)) in terms.iter().enumerate() {
        if idx > 0 && idx % TERMS_PER_LINE == 0 {
            out.push_str("\n   ");
        }
        let sign = match (idx, coef < 0) {
            (0, false) => "",
            (0, true) => " -",
            (_, false) => " +",
            (_, true) => " -",
        };
        let _ = write!(out, "{sign} {var}");
    }
}

/// The model for `graph` in LP format.
pub fn export_ilp(graph: &Graph) -> Result<String, SolveError> {
    Ok(IlpModel::build(graph)?.to_lp())
}
