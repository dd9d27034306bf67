//! Standard families, divisor graphs and gcd realizations of sequences.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::graph::{Graph, LabeledGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Complete,
    Path,
    Cycle,
    Empty,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "complete" | "k" => Ok(Family::Complete),
            "path" | "p" => Ok(Family::Path),
            "cycle" | "c" => Ok(Family::Cycle),
            "empty" => Ok(Family::Empty),
            other => input(format!("unknown family `{other}`")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Complete => "complete",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Empty => "empty",
        })
    }
}

/// `K_n`, `P_n`, `C_n` or the edgeless graph on `n` vertices.
pub fn generate_family(family: Family, n: usize) -> Result<Graph> {
    let min = if family == Family::Cycle { 3 } else { 1 };
    if n < min {
        return input(format!("{family} graph needs n >= {min}, got {n}"));
    }
    let edges: Vec<(usize, usize)> = match family {
        Family::Complete => (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect(),
        Family::Path => (1..n).map(|v| (v - 1, v)).collect(),
        Family::Cycle => (0..n).map(|v| (v, (v + 1) % n)).collect(),
        Family::Empty => Vec::new(),
    };
    Graph::from_edges(n, edges)
}

/// Divisors of `n` greater than one, ascending.
pub fn divisors_above_one(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small.retain(|&d| d > 1);
    small
}

/// The divisor graph of `n`: divisors above one, adjacent when they share a
/// prime factor.
pub fn divisor_graph(n: u64) -> Result<LabeledGraph> {
    if n < 2 {
        return input(format!("divisor graph needs n >= 2, got {n}"));
    }
    let labels: Vec<BigUint> = divisors_above_one(n).into_iter().map(BigUint::from).collect();
    Ok(gcd_graph(labels))
}

/// The gcd realization of a sequence: vertex `i` carries `seq[i]`, and
/// distinct vertices are adjacent iff their labels are not coprime.
pub fn realize_sequence(seq: &[BigUint]) -> Result<LabeledGraph> {
    if seq.is_empty() {
        return input("cannot realize an empty sequence");
    }
    if seq.iter().any(|a| a.bits() == 0) {
        return input("sequence entries must be positive");
    }
    Ok(gcd_graph(seq.to_vec()))
}

fn gcd_graph(labels: Vec<BigUint>) -> LabeledGraph {
    let n = labels.len();
    let mut graph = Graph::empty(n);
    for u in 0..n {
        if labels[u].is_one() {
            continue;
        }
        for v in u + 1..n {
            if !labels[u].gcd(&labels[v]).is_one() {
                graph.add_edge(u, v).unwrap();
            }
        }
    }
    LabeledGraph { graph, labels }
}
