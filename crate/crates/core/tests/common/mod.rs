#![allow(dead_code)]

use cliquecode::{all_cliques, Clique, Graph, Permutation, PrimeAssignment, TotalCliqueCovering};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::new(images).unwrap()
}

/// A random (not necessarily minimum) total clique covering, in random
/// order: isolated singletons, one random clique per still-uncovered edge,
/// and occasionally a redundant extra clique.
pub fn random_covering(rng: &mut impl Rng, g: &Graph) -> TotalCliqueCovering {
    let pool: Vec<Clique> = all_cliques(g, 2).unwrap().collect();
    let mut chosen: Vec<Clique> = g
        .isolated_vertices()
        .into_iter()
        .map(|v| Clique::new(vec![v]))
        .collect();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.shuffle(rng);
    for (u, v) in edges {
        if chosen.iter().any(|c| c.contains(u) && c.contains(v)) {
            continue;
        }
        let options: Vec<&Clique> = pool.iter().filter(|c| c.contains(u) && c.contains(v)).collect();
        chosen.push((*options.choose(rng).unwrap()).clone());
    }
    if !pool.is_empty() && rng.gen_bool(0.3) {
        let extra = pool.choose(rng).unwrap().clone();
        if !chosen.contains(&extra) {
            chosen.push(extra);
        }
    }
    chosen.shuffle(rng);
    TotalCliqueCovering::new(chosen)
}

pub fn random_assignment(rng: &mut impl Rng, k: usize) -> PrimeAssignment {
    let mut images: Vec<usize> = (0..k).collect();
    images.shuffle(rng);
    PrimeAssignment::new(images).unwrap()
}
