mod common;

use std::collections::BTreeSet;

use cliquecode::coding::{non_trivial_cliques, vertex_labels};
use cliquecode::generate::divisors_above_one;
use cliquecode::oracle::{
    all_labeled_graphs, brute_force_cliques, brute_force_independence_number,
    brute_force_isomorphic, brute_force_minimum_coverings,
};
use cliquecode::primes::{first_primes, prime_factors};
use cliquecode::verify::{all_cliques_essential, covering_round_trip, run_invariant_suite};
use cliquecode::*;
use num_bigint::BigUint;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn arb_graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Permutation)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|(g, p)| (g, Permutation::new(p).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn permutation_preserves_invariants((g, p) in arb_graph_and_perm(8)) {
        let h = apply_permutation(&g, &p).unwrap();
        prop_assert_eq!(h.degree_sequence(), g.degree_sequence());
        prop_assert_eq!(h.is_connected(), g.is_connected());
        prop_assert_eq!(h.is_bipartite(), g.is_bipartite());
        let mut b = Budget::default();
        prop_assert_eq!(h.independence_number(&mut b).unwrap(), g.independence_number(&mut b).unwrap());
        prop_assert_eq!(h.permute(&p.inverse()).unwrap(), g);
    }

    #[test]
    fn code_is_permutation_invariant((g, p) in arb_graph_and_perm(7)) {
        let mut b = Budget::default();
        prop_assert_eq!(code(&g, &mut b).unwrap(), code(&g.permute(&p).unwrap(), &mut b).unwrap());
    }

    #[test]
    fn code_realizes_the_graph(g in arb_graph(7)) {
        let mut b = Budget::default();
        let sigma = code(&g, &mut b).unwrap();
        prop_assert!(validate_coding_sequence(&sigma, &g, &mut b).unwrap());
        let canonical = canonical_polynomial(&g, &mut b).unwrap();
        prop_assert_eq!(canonical.mass() as usize, g.vertex_count());
        prop_assert_eq!(canonical.constant_term() as usize, g.isolated_vertices().len());
    }

    #[test]
    fn minimum_coverings_are_minimum_and_irredundant(g in arb_graph(7)) {
        let mut b = Budget::default();
        let theta = theta_t(&g, &mut b).unwrap();
        let covers = minimum_total_coverings(&g, &mut b).unwrap();
        prop_assert!(!covers.is_empty());
        let distinct: BTreeSet<_> = covers.iter().map(|s| s.as_set()).collect();
        prop_assert_eq!(distinct.len(), covers.len());
        for s in &covers {
            prop_assert!(is_total_clique_covering(&g, s));
            prop_assert_eq!(s.len(), theta);
            prop_assert!(all_cliques_essential(&g, s));
            for c in s.cliques().iter().filter(|c| c.len() == 1) {
                prop_assert_eq!(g.degree(c.vertices()[0]), 0);
            }
            // singletons lead the canonical order
            let first_big = s.cliques().iter().position(|c| c.len() > 1).unwrap_or(s.len());
            prop_assert!(s.cliques()[first_big..].iter().all(|c| c.len() > 1));
        }
        prop_assert!(theta >= g.independence_number(&mut b).unwrap());
    }

    #[test]
    fn sigma_ignores_clique_order(g in arb_graph(7), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let s = common::random_covering(&mut rng, &g);
        let mut reversed = s.cliques().to_vec();
        reversed.reverse();
        let mut b = Budget::default();
        prop_assert_eq!(
            sigma_of_covering(&g, &s, &mut b).unwrap(),
            sigma_of_covering(&g, &TotalCliqueCovering::new(reversed), &mut b).unwrap()
        );
    }

    #[test]
    fn sequence_polynomial_matches_covering_polynomial(g in arb_graph(7), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let s = common::random_covering(&mut rng, &g);
        let k = non_trivial_cliques(&g, &s).len();
        let seq = coding_sequence_from_covering(&g, &s, &PrimeAssignment::identity(k)).unwrap();
        prop_assert_eq!(poly_from_sequence(&seq).unwrap(), poly_from_covering(&g, &s).unwrap());
        let a = common::random_assignment(&mut rng, k);
        prop_assert!(covering_round_trip(&g, &s, &a).unwrap());
    }

    #[test]
    fn realized_labels_read_back(entries in proptest::collection::vec(1u64..400, 1..10)) {
        let big: Vec<BigUint> = entries.iter().map(|&a| BigUint::from(a)).collect();
        let lg = realize_sequence(&big).unwrap();
        prop_assert!(lg.satisfies_gcd_rule());
        let mut got = lg.labels.clone();
        got.sort();
        let mut want = big;
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn shared_prime_sequences_realize_complete_graphs(
        base in 1usize..6,
        extra in proptest::collection::vec(1u64..50, 1..8),
    ) {
        let p = first_primes(base)[base - 1];
        let seq: Vec<BigUint> = extra.iter().map(|&e| BigUint::from(p * e)).collect();
        let n = seq.len();
        let lg = realize_sequence(&seq).unwrap();
        prop_assert_eq!(lg.graph.edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn polynomial_text_round_trip(terms in proptest::collection::vec(
        (1u64..20, proptest::collection::btree_set(1u32..9, 0..4)), 0..8)
    ) {
        let mut p = GraphPolynomial::new();
        for (c, vars) in terms {
            p.add_term(Monomial::new(vars.into_iter().collect()), c);
        }
        prop_assert_eq!(p.to_string().parse::<GraphPolynomial>().unwrap(), p);
    }
}

#[test]
fn maximal_and_all_cliques_match_subset_enumeration() {
    for g in all_labeled_graphs(5) {
        let all: BTreeSet<Clique> = all_cliques(&g, 1).unwrap().collect();
        let oracle: BTreeSet<Clique> = brute_force_cliques(&g).unwrap().into_iter().collect();
        assert_eq!(all, oracle);
        let maximal: BTreeSet<Clique> = maximal_cliques(&g).unwrap().into_iter().collect();
        let oracle_maximal: BTreeSet<Clique> = oracle
            .iter()
            .filter(|c| {
                !oracle
                    .iter()
                    .any(|d| d.len() > c.len() && c.vertices().iter().all(|&v| d.contains(v)))
            })
            .cloned()
            .collect();
        assert_eq!(maximal, oracle_maximal);
    }
}

#[test]
fn theta_and_coverings_match_naive_oracle_up_to_six_vertices() {
    let mut rng = common::rng(61);
    let mut graphs: Vec<Graph> = all_labeled_graphs(4).collect();
    graphs.extend((0..150).map(|_| common::random_graph(&mut rng, 6, 0.5)));
    graphs.extend((0..50).map(|_| common::random_graph(&mut rng, 6, 0.8)));
    for g in graphs {
        let mut b = Budget::default();
        let (theta, covers) = brute_force_minimum_coverings(&g, &mut b).unwrap();
        assert_eq!(theta_t(&g, &mut b).unwrap(), theta);
        let got: BTreeSet<_> = minimum_total_coverings(&g, &mut b).unwrap().iter().map(|s| s.as_set()).collect();
        let want: BTreeSet<_> = covers.iter().map(|s| s.as_set()).collect();
        assert_eq!(got, want, "graph {:?}", g.edges().collect::<Vec<_>>());
    }
}

#[test]
fn independence_number_matches_oracle() {
    let mut rng = common::rng(62);
    for _ in 0..200 {
        let n = 1 + (rand::Rng::gen_range(&mut rng, 0..10));
        let g = common::random_graph(&mut rng, n, 0.4);
        assert_eq!(
            g.independence_number(&mut Budget::default()).unwrap(),
            brute_force_independence_number(&g).unwrap()
        );
    }
}

/// σ[S] by trying all k! assignments directly.
fn exhaustive_sigma(g: &Graph, s: &TotalCliqueCovering) -> CodingSequence {
    fn permutations(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(k - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k - 1);
                out.push(q);
            }
        }
        out
    }
    let k = non_trivial_cliques(g, s).len();
    permutations(k)
        .into_iter()
        .map(|p| {
            let labels = vertex_labels(g, s, &PrimeAssignment::new(p).unwrap()).unwrap();
            CodingSequence::from_labels(labels)
        })
        .min()
        .unwrap()
}

#[test]
fn branch_and_bound_sigma_matches_exhaustion_on_arbitrary_coverings() {
    let mut rng = common::rng(63);
    for _ in 0..150 {
        let n = rand::Rng::gen_range(&mut rng, 2..=7);
        let g = common::random_graph(&mut rng, n, 0.5);
        let s = common::random_covering(&mut rng, &g);
        if non_trivial_cliques(&g, &s).len() > 7 {
            continue;
        }
        assert_eq!(
            sigma_of_covering(&g, &s, &mut Budget::default()).unwrap(),
            exhaustive_sigma(&g, &s)
        );
    }
}

#[test]
fn divisor_graphs_have_omega_cliques() {
    for n in 2..=400u64 {
        if divisors_above_one(n).len() > 16 {
            continue;
        }
        let g = divisor_graph(n).unwrap();
        let mut b = Budget::default();
        let k = prime_factors(&n.into()).unwrap().len();
        let covers = minimum_total_coverings(&g.graph, &mut b).unwrap();
        assert_eq!((covers.len(), covers[0].len()), (1, k), "n = {n}");
        assert_eq!(g.graph.vertex_count(), divisors_above_one(n).len());
        // the prime vertices form an independent set certifying uniqueness
        let primes: Vec<usize> = g
            .labels
            .iter()
            .enumerate()
            .filter(|(_, l)| prime_factors(l).unwrap() == vec![(*l).clone()])
            .map(|(i, _)| i)
            .collect();
        assert!(prop1_certificate(&g.graph, &primes, &covers[0]), "n = {n}");
    }
}

#[test]
fn theorem1_labels_embed_every_small_graph() {
    for g in all_labeled_graphs(5) {
        let (lg, n) = theorem1_labels(&g).unwrap();
        assert!(lg.satisfies_gcd_rule());
        let distinct: BTreeSet<_> = lg.labels.iter().collect();
        assert_eq!(distinct.len(), g.vertex_count());
        let divisors: BTreeSet<BigUint> = divisors_above_one(u64::try_from(&n).unwrap())
            .into_iter()
            .map(BigUint::from)
            .collect();
        assert!(lg.labels.iter().all(|l| divisors.contains(l)));
        // induced subgraph of G(n) on the labels is the graph itself
        let sub = realize_sequence(&lg.labels).unwrap();
        assert_eq!(sub.graph, g);
    }
}

#[test]
fn wide_coverings_use_arbitrary_precision() {
    // 30 disjoint edges: 30 primes, product far beyond 128 bits
    let m = 30;
    let matching = Graph::from_edges(2 * m, (0..m).map(|i| (2 * i, 2 * i + 1))).unwrap();
    let sigma = code(&matching, &mut Budget::default()).unwrap();
    let want: Vec<BigUint> = first_primes(m)
        .into_iter()
        .flat_map(|p| [BigUint::from(p), BigUint::from(p)])
        .collect();
    assert_eq!(sigma.entries(), &want[..]);

    // star with 30 leaves: the centre carries the product of all 30 primes
    let star = Graph::from_edges(m + 1, (1..=m).map(|v| (0, v))).unwrap();
    let sigma = code(&star, &mut Budget::default()).unwrap();
    let primes = first_primes(m);
    let mut want: Vec<BigUint> = primes.iter().map(|&p| BigUint::from(p)).collect();
    want.push(primes.iter().map(|&p| BigUint::from(p)).product());
    assert_eq!(sigma.entries(), &want[..]);
    assert!(sigma.entries().last().unwrap().bits() > 128);
}

#[test]
fn codes_separate_all_graphs_on_six_vertices_sampled() {
    let mut rng = common::rng(64);
    let graphs: Vec<Graph> = (0..120).map(|_| common::random_graph(&mut rng, 6, 0.5)).collect();
    let codes: Vec<CodingSequence> = graphs
        .iter()
        .map(|g| code(g, &mut Budget::default()).unwrap())
        .collect();
    for i in 0..graphs.len() {
        for j in i + 1..graphs.len() {
            let iso = brute_force_isomorphic(&graphs[i], &graphs[j], &mut Budget::default())
                .unwrap()
                .verdict;
            assert_eq!(iso, codes[i] == codes[j]);
        }
    }
}

#[test]
fn invariant_suite_passes_on_random_graphs() {
    let mut rng = common::rng(65);
    for _ in 0..40 {
        let n = rand::Rng::gen_range(&mut rng, 1..=7);
        let g = common::random_graph(&mut rng, n, 0.45);
        for c in run_invariant_suite(&g, &mut Budget::default()).unwrap() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
