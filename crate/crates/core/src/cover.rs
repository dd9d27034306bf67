//! Total clique coverings and the exact total clique covering number.
//!
//! A total clique covering is a set of cliques whose union is the vertex set
//! and which contains every edge inside some clique. Every non-isolated
//! vertex is covered as soon as its edges are, and an isolated vertex can
//! only be covered by its own singleton, so the search below only ever
//! branches on edges.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::clique::{all_cliques, Clique};
use crate::error::{input, Error, Result};
use crate::graph::Graph;

/// Ordered list of cliques. The order of the non-singleton cliques matters
/// for polynomial representations; [`TotalCliqueCovering::canonical`] fixes
/// the canonical order (singletons first, then by size and vertex list).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TotalCliqueCovering {
    cliques: Vec<Clique>,
}

impl TotalCliqueCovering {
    pub fn new(cliques: Vec<Clique>) -> Self {
        TotalCliqueCovering { cliques }
    }

    pub fn cliques(&self) -> &[Clique] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn canonical(mut self) -> Self {
        self.cliques.sort();
        self
    }

    /// Cliques as a set, ignoring order.
    pub fn as_set(&self) -> BTreeSet<Clique> {
        self.cliques.iter().cloned().collect()
    }

    pub fn same_set(&self, other: &TotalCliqueCovering) -> bool {
        self.as_set() == other.as_set()
    }

    /// Parses one clique per line of space-separated vertex ids. Blank lines
    /// and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cliques = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let vs = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse {
                    line: Some(i + 1),
                    msg: e.to_string(),
                })?;
            cliques.push(Clique::new(vs));
        }
        Ok(TotalCliqueCovering::new(cliques))
    }
}

impl fmt::Display for TotalCliqueCovering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cliques {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// True iff every member is a clique of `g` and together they cover all
/// vertices and all edges.
pub fn is_total_clique_covering(g: &Graph, s: &TotalCliqueCovering) -> bool {
    let n = g.vertex_count();
    if !s.cliques.iter().all(|c| c.is_clique_of(g)) {
        return false;
    }
    let mut vertex_hit = vec![false; n];
    for c in &s.cliques {
        for &v in c.vertices() {
            vertex_hit[v] = true;
        }
    }
    vertex_hit.into_iter().all(|h| h)
        && g
            .edges()
            .all(|(u, v)| s.cliques.iter().any(|c| c.contains(u) && c.contains(v)))
}

/// Certificate for `θ_t(G) = α(G) = k` with a unique minimum covering: the
/// independent set and the covering have the same size, and each independent
/// vertex lies in exactly one clique of the covering.
pub fn prop1_certificate(g: &Graph, independent: &[usize], s: &TotalCliqueCovering) -> bool {
    let distinct: BTreeSet<usize> = independent.iter().copied().collect();
    if distinct.len() != independent.len() || independent.len() != s.len() {
        return false;
    }
    if distinct.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    let is_independent = independent
        .iter()
        .enumerate()
        .all(|(i, &u)| independent[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
    is_independent
        && is_total_clique_covering(g, s)
        && independent
            .iter()
            .all(|&v| s.cliques.iter().filter(|c| c.contains(v)).count() == 1)
}

/// Exact total clique covering number.
pub fn theta_t(g: &Graph, budget: &mut Budget) -> Result<usize> {
    let problem = CoverProblem::new(g, budget)?;
    let (depth, _) = problem.solve(budget, false)?;
    Ok(depth)
}

/// Every total clique covering of size `θ_t(g)`, each once, in canonical
/// clique order, sorted.
pub fn minimum_total_coverings(g: &Graph, budget: &mut Budget) -> Result<Vec<TotalCliqueCovering>> {
    let problem = CoverProblem::new(g, budget)?;
    let (_, covers) = problem.solve(budget, true)?;
    Ok(covers)
}

struct Candidate {
    mask: u64,
    edges: Vec<usize>,
}

struct CoverProblem {
    adj: Vec<u64>,
    isolated: Vec<usize>,
    edges: Vec<(usize, usize)>,
    candidates: Vec<Candidate>,
    /// Candidate indices containing each edge, larger cliques first.
    by_edge: Vec<Vec<usize>>,
}

impl CoverProblem {
    fn new(g: &Graph, budget: &mut Budget) -> Result<Self> {
        if g.vertex_count() == 0 {
            return input("total clique covering of the null graph is undefined");
        }
        let adj = g.adjacency_masks()?;
        let n = g.vertex_count();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let mut edge_id = vec![vec![usize::MAX; n]; n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            edge_id[u][v] = i;
        }
        let mut candidates = Vec::new();
        let mut by_edge = vec![Vec::new(); edges.len()];
        for c in all_cliques(g, 2)? {
            budget.tick()?;
            let vs = c.vertices();
            let mut inside = Vec::with_capacity(vs.len() * (vs.len() - 1) / 2);
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    inside.push(edge_id[u][v]);
                }
            }
            for &e in &inside {
                by_edge[e].push(candidates.len());
            }
            candidates.push(Candidate {
                mask: c.mask(),
                edges: inside,
            });
        }
        for list in &mut by_edge {
            list.sort_by_key(|&i| {
                (
                    std::cmp::Reverse(candidates[i].mask.count_ones()),
                    candidates[i].mask.reverse_bits(),
                )
            });
        }
        Ok(CoverProblem {
            adj,
            isolated: g.isolated_vertices().into_iter().collect(),
            edges,
            candidates,
            by_edge,
        })
    }

    fn edge_mask(&self, e: usize) -> u64 {
        let (u, v) = self.edges[e];
        (1u64 << u) | (1u64 << v)
    }

    fn is_clique_mask(&self, mask: u64) -> bool {
        crate::clique::mask_vertices(mask).all(|v| self.adj[v] & mask == mask & !(1u64 << v))
    }

    /// Size of a greedily built set of uncovered edges no two of which fit in
    /// a common clique.
    fn lower_bound(&self, hits: &[u32]) -> usize {
        let mut picked: Vec<u64> = Vec::new();
        for (e, &h) in hits.iter().enumerate() {
            if h > 0 {
                continue;
            }
            let m = self.edge_mask(e);
            if picked.iter().all(|&p| !self.is_clique_mask(p | m)) {
                picked.push(m);
            }
        }
        picked.len()
    }

    fn solve(&self, budget: &mut Budget, collect_all: bool) -> Result<(usize, Vec<TotalCliqueCovering>)> {
        let s = self.isolated.len();
        let mut hits = vec![0u32; self.edges.len()];
        let mut depth = self.lower_bound(&hits);
        loop {
            let mut state = SearchState {
                hits: &mut hits,
                forbidden: vec![false; self.candidates.len()],
                chosen: Vec::with_capacity(depth),
                found: BTreeSet::new(),
                collect_all,
            };
            self.search(depth, &mut state, budget)?;
            if !state.found.is_empty() {
                let covers = state
                    .found
                    .into_iter()
                    .map(|chosen| self.to_covering(&chosen))
                    .collect();
                return Ok((depth + s, covers));
            }
            depth += 1;
        }
    }

    fn to_covering(&self, chosen: &[usize]) -> TotalCliqueCovering {
        let cliques = self
            .isolated
            .iter()
            .map(|&v| Clique::new(vec![v]))
            .chain(chosen.iter().map(|&i| Clique::from_mask(self.candidates[i].mask)))
            .collect();
        TotalCliqueCovering::new(cliques).canonical()
    }

    /// Returns `true` once a covering is found in find-one mode.
    fn search(&self, left: usize, st: &mut SearchState<'_>, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        let Some(e) = st.hits.iter().position(|&h| h == 0) else {
            let mut key = st.chosen.clone();
            key.sort_unstable();
            st.found.insert(key);
            return Ok(!st.collect_all);
        };
        if left == 0 || self.lower_bound(st.hits) > left {
            return Ok(false);
        }
        let mut newly_forbidden = Vec::new();
        let mut done = false;
        for &c in &self.by_edge[e] {
            if st.forbidden[c] {
                continue;
            }
            for &x in &self.candidates[c].edges {
                st.hits[x] += 1;
            }
            st.chosen.push(c);
            done = self.search(left - 1, st, budget)?;
            st.chosen.pop();
            for &x in &self.candidates[c].edges {
                st.hits[x] -= 1;
            }
            if done {
                break;
            }
            st.forbidden[c] = true;
            newly_forbidden.push(c);
        }
        for c in newly_forbidden {
            st.forbidden[c] = false;
        }
        Ok(done)
    }
}

struct SearchState<'a> {
    hits: &'a mut Vec<u32>,
    forbidden: Vec<bool>,
    chosen: Vec<usize>,
    found: BTreeSet<Vec<usize>>,
    collect_all: bool,
}
