//! Brute-force ground truth at small scale.
//!
//! Nothing here reuses the search code of the other modules: cliques come
//! from plain subset enumeration, coverings from unpruned combinations of
//! cliques, codes from every permutation of the primes, and isomorphism from
//! vertex-by-vertex permutation search.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::Serialize;

use crate::budget::Budget;
use crate::clique::Clique;
use crate::coding::CodingSequence;
use crate::cover::TotalCliqueCovering;
use crate::error::{input, Result};
use crate::graph::{Graph, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    Permutation(Permutation),
    Covering(TotalCliqueCovering),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub verdict: bool,
    pub witness: Option<Witness>,
    pub nodes_explored: u64,
}

/// Largest vertex count the subset-based routines accept.
const MAX_ORACLE_VERTICES: usize = 16;

/// Isomorphism by trying every degree-compatible bijection. On success the
/// witness `p` satisfies `g1.permute(p) == g2`.
pub fn brute_force_isomorphic(g1: &Graph, g2: &Graph, budget: &mut Budget) -> Result<OracleReport> {
    let start = budget.spent();
    let n = g1.vertex_count();
    let mismatch = n != g2.vertex_count()
        || g1.edge_count() != g2.edge_count()
        || g1.degree_sequence() != g2.degree_sequence();
    if mismatch {
        return Ok(OracleReport {
            verdict: false,
            witness: None,
            nodes_explored: 0,
        });
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let found = extend_map(g1, g2, 0, &mut image, &mut used, budget)?;
    let witness = if found {
        let p = Permutation::new(image)?;
        debug_assert_eq!(g1.permute(&p)?, *g2);
        Some(Witness::Permutation(p))
    } else {
        None
    };
    Ok(OracleReport {
        verdict: found,
        witness,
        nodes_explored: budget.spent() - start,
    })
}

fn extend_map(
    g1: &Graph,
    g2: &Graph,
    v: usize,
    image: &mut [usize],
    used: &mut [bool],
    budget: &mut Budget,
) -> Result<bool> {
    if v == image.len() {
        return Ok(true);
    }
    for w in 0..image.len() {
        if used[w] || g1.degree(v) != g2.degree(w) {
            continue;
        }
        budget.tick()?;
        let consistent = (0..v).all(|u| g1.has_edge(u, v) == g2.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend_map(g1, g2, v + 1, image, used, budget)? {
            return Ok(true);
        }
        used[w] = false;
        image[v] = usize::MAX;
    }
    Ok(false)
}

/// Every clique of `g`, singletons included, by testing each vertex subset.
pub fn brute_force_cliques(g: &Graph) -> Result<Vec<Clique>> {
    let n = g.vertex_count();
    if n > MAX_ORACLE_VERTICES {
        return input(format!("oracle handles at most {MAX_ORACLE_VERTICES} vertices"));
    }
    let mut out = Vec::new();
    for subset in 1u32..(1u32 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| subset >> v & 1 == 1).collect();
        let complete = vs
            .iter()
            .all(|&u| vs.iter().all(|&w| u == w || g.has_edge(u, w)));
        if complete {
            out.push(Clique::new(vs));
        }
    }
    Ok(out)
}

fn covers_everything(g: &Graph, chosen: &[&Clique]) -> bool {
    let n = g.vertex_count();
    (0..n).all(|v| chosen.iter().any(|c| c.vertices().contains(&v)))
        && g.edges().all(|(u, v)| {
            chosen
                .iter()
                .any(|c| c.vertices().contains(&u) && c.vertices().contains(&v))
        })
}

/// `θ_t` and all minimum total clique coverings, by checking every
/// combination of cliques in order of increasing size.
pub fn brute_force_minimum_coverings(
    g: &Graph,
    budget: &mut Budget,
) -> Result<(usize, Vec<TotalCliqueCovering>)> {
    if g.vertex_count() == 0 {
        return input("graph has no vertices");
    }
    let cliques = brute_force_cliques(g)?;
    for size in 1..=cliques.len() {
        let mut found: BTreeSet<Vec<Clique>> = BTreeSet::new();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            budget.tick()?;
            let chosen: Vec<&Clique> = idx.iter().map(|&i| &cliques[i]).collect();
            if covers_everything(g, &chosen) {
                let mut set: Vec<Clique> = chosen.into_iter().cloned().collect();
                set.sort();
                found.insert(set);
            }
            if !next_combination(&mut idx, cliques.len()) {
                break;
            }
        }
        if !found.is_empty() {
            let covers = found.into_iter().map(TotalCliqueCovering::new).collect();
            return Ok((size, covers));
        }
    }
    unreachable!("the singletons and edges always form a covering")
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn nth_primes(k: usize) -> Vec<u128> {
    let mut out = Vec::new();
    let mut c: u128 = 1;
    while out.len() < k {
        c += 1;
        if (2..c).take_while(|d| d * d <= c).all(|d| !c.is_multiple_of(d)) {
            out.push(c);
        }
    }
    out
}

/// The canonical code by exhaustion: every minimum covering, every
/// permutation of the first `k` primes over its non-trivial cliques.
pub fn brute_force_code(g: &Graph, budget: &mut Budget) -> Result<CodingSequence> {
    let n = g.vertex_count();
    let (_, covers) = brute_force_minimum_coverings(g, budget)?;
    let mut best: Option<Vec<u128>> = None;
    for s in &covers {
        let cliques: Vec<&Clique> = s
            .cliques()
            .iter()
            .filter(|c| !(c.len() == 1 && g.degree(c.vertices()[0]) == 0))
            .collect();
        let k = cliques.len();
        if k > 25 {
            return input("oracle label arithmetic is limited to 25 primes");
        }
        let primes = nth_primes(k);
        let mut perm: Vec<usize> = (0..k).collect();
        // Heap's algorithm
        let mut counters = vec![0usize; k];
        let mut score = |perm: &[usize], budget: &mut Budget| -> Result<()> {
            budget.tick()?;
            let mut labels = vec![1u128; n];
            for (ci, c) in cliques.iter().enumerate() {
                for &v in c.vertices() {
                    labels[v] *= primes[perm[ci]];
                }
            }
            labels.sort_unstable();
            if best.as_ref().is_none_or(|b| labels < *b) {
                best = Some(labels);
            }
            Ok(())
        };
        score(&perm, budget)?;
        let mut i = 0;
        while i < k {
            if counters[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(counters[i], i);
                }
                score(&perm, budget)?;
                counters[i] += 1;
                i = 0;
            } else {
                counters[i] = 0;
                i += 1;
            }
        }
    }
    let labels = best.unwrap_or_default();
    Ok(CodingSequence::new(labels.into_iter().map(BigUint::from).collect()))
}

/// Largest independent set size by checking every vertex subset.
pub fn brute_force_independence_number(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > MAX_ORACLE_VERTICES {
        return input(format!("oracle handles at most {MAX_ORACLE_VERTICES} vertices"));
    }
    let mut best = 0;
    for subset in 0u32..(1u32 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| subset >> v & 1 == 1).collect();
        if vs.len() > best && vs.iter().all(|&u| vs.iter().all(|&w| !g.has_edge(u, w))) {
            best = vs.len();
        }
    }
    Ok(best)
}

/// All `2^(n choose 2)` graphs on vertex set `0..n`, each exactly once.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 64, "too many labelled graphs to enumerate");
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap()
    })
}
