//! Simple undirected graphs on contiguous vertex ids `0..n`.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{input, Result};

/// Simple undirected graph. Adjacency is stored symmetrically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse; self-loops and out-of-range ids are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return input(format!("edge ({u},{v}) references a vertex outside 0..{n}"));
        }
        if u == v {
            return input(format!("self-loop at vertex {u}"));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(BTreeSet::len).collect();
        d.sort_unstable();
        d
    }

    /// Adjacency rows as bit masks. Exact searches in this crate run on
    /// graphs of at most 64 vertices.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        let n = self.vertex_count();
        if n > 64 {
            return input(format!(
                "exact search supports at most 64 vertices, graph has {n}"
            ));
        }
        Ok(self
            .adj
            .iter()
            .map(|s| s.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect())
    }

    /// Whether `vertices` are pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            u < self.vertex_count() && vertices[i + 1..].iter().all(|&v| self.has_edge(u, v))
        })
    }

    pub fn isolated_vertices(&self) -> BTreeSet<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.adj[v].is_empty())
            .collect()
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// A proper 2-colouring (`false`/`true` per vertex), if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.vertex_count();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for v in self.neighbors(u) {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Exact independence number by branch and bound over vertex masks.
    pub fn independence_number(&self, budget: &mut Budget) -> Result<usize> {
        let adj = self.adjacency_masks()?;
        let n = self.vertex_count();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut best = 0;
        max_independent(&adj, all, 0, &mut best, budget)?;
        Ok(best)
    }

    /// Disjoint union, with `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.vertex_count();
        let mut g = Graph::empty(off + other.vertex_count());
        for (u, v) in self.edges() {
            g.add_edge(u, v).unwrap();
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off).unwrap();
        }
        g
    }

    /// Relabels vertex `v` as `p[v]`.
    pub fn permute(&self, p: &Permutation) -> Result<Graph> {
        if p.len() != self.vertex_count() {
            return input(format!(
                "permutation on {} points applied to a graph on {} vertices",
                p.len(),
                self.vertex_count()
            ));
        }
        Graph::from_edges(
            self.vertex_count(),
            self.edges().map(|(u, v)| (p.image(u), p.image(v))),
        )
    }
}

fn max_independent(
    adj: &[u64],
    candidates: u64,
    size: usize,
    best: &mut usize,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    if candidates == 0 {
        *best = (*best).max(size);
        return Ok(());
    }
    if size + candidates.count_ones() as usize <= *best {
        return Ok(());
    }
    let v = candidates.trailing_zeros() as usize;
    let rest = candidates & !(1u64 << v);
    max_independent(adj, rest & !adj[v], size + 1, best, budget)?;
    // Skipping v only helps if v has a neighbour among the candidates.
    if adj[v] & rest != 0 {
        max_independent(adj, rest, size, best, budget)?;
    }
    Ok(())
}

/// Free function form of [`Graph::permute`].
pub fn apply_permutation(g: &Graph, p: &Permutation) -> Result<Graph> {
    g.permute(p)
}

/// A graph with a positive integer label on every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<BigUint>,
}

impl LabeledGraph {
    /// Checks the gcd adjacency rule: `u ~ v` iff `gcd(label u, label v) > 1`.
    pub fn satisfies_gcd_rule(&self) -> bool {
        use num_integer::Integer;
        use num_traits::One;
        let n = self.graph.vertex_count();
        self.labels.len() == n
            && (0..n).all(|u| {
                (u + 1..n).all(|v| {
                    let shared = !self.labels[u].gcd(&self.labels[v]).is_one();
                    shared == self.graph.has_edge(u, v)
                })
            })
    }
}

/// Bijection on `0..n`, stored as the image of each point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut hit = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut hit[i], true) {
                return input(format!("{images:?} is not a permutation of 0..{n}"));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = crate::error::Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}
