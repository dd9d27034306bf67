//! Clique enumeration: maximal cliques and every clique above a size.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;

/// A nonempty set of vertex ids, kept sorted.
///
/// Ordered by size first and then by vertex list, so singletons sort before
/// larger cliques.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Clique(Vec<usize>);

impl Clique {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Clique(vertices)
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        Clique(mask_vertices(mask).collect())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Vertex mask; callers guarantee ids below 64.
    pub(crate) fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }

    /// Whether this is a nonempty, pairwise-adjacent vertex set of `g`.
    pub fn is_clique_of(&self, g: &Graph) -> bool {
        !self.0.is_empty() && g.is_clique(&self.0)
    }
}

impl Ord for Clique {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Clique {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub(crate) fn mask_vertices(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Mask of vertices with id strictly greater than `v`.
#[inline]
fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        u64::MAX << (v + 1)
    }
}

/// Every inclusion-maximal clique of `g`, in clique order. Isolated vertices
/// come out as singletons.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Clique>> {
    let adj = g.adjacency_masks()?;
    let n = g.vertex_count();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    pivot_expand(&adj, 0, all, 0, &mut out);
    out.sort();
    Ok(out)
}

fn pivot_expand(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<Clique>) {
    if p == 0 {
        if x == 0 && r != 0 {
            out.push(Clique::from_mask(r));
        }
        return;
    }
    let pivot = mask_vertices(p | x)
        .max_by_key(|&u| (adj[u] & p).count_ones())
        .unwrap();
    for v in mask_vertices(p & !adj[pivot]) {
        let bit = 1u64 << v;
        pivot_expand(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// Lazily enumerates every clique with at least `min_size` vertices, each
/// exactly once. A clique is only ever extended by higher-indexed common
/// neighbours.
pub fn all_cliques(g: &Graph, min_size: usize) -> Result<AllCliques> {
    let adj = g.adjacency_masks()?;
    let stack = (0..g.vertex_count())
        .rev()
        .map(|v| (1u64 << v, adj[v] & above(v)))
        .collect();
    Ok(AllCliques {
        adj,
        min_size: min_size.max(1),
        stack,
    })
}

pub struct AllCliques {
    adj: Vec<u64>,
    min_size: usize,
    stack: Vec<(u64, u64)>,
}

impl Iterator for AllCliques {
    type Item = Clique;

    fn next(&mut self) -> Option<Clique> {
        while let Some((members, cands)) = self.stack.pop() {
            let mut rest = cands;
            while rest != 0 {
                let u = 63 - rest.leading_zeros() as usize;
                rest &= !(1u64 << u);
                self.stack
                    .push((members | (1u64 << u), cands & self.adj[u] & above(u)));
            }
            if members.count_ones() as usize >= self.min_size {
                return Some(Clique::from_mask(members));
            }
        }
        None
    }
}
