//! Invariant checks on a single graph, as run by `cliquecode verify`.

use serde::Serialize;

use crate::budget::Budget;
use crate::clique::Clique;
use crate::coding::{
    code, coding_sequence_with_order, covering_from_sequence, lambda_of, non_trivial_cliques,
    theorem1_labels, PrimeAssignment,
};
use crate::cover::{is_total_clique_covering, minimum_total_coverings, TotalCliqueCovering};
use crate::error::Result;
use crate::generate::realize_sequence;
use crate::graph::{Graph, Permutation};
use crate::oracle::brute_force_isomorphic;
use crate::polynomial::{
    detect_bipartite_poly, detect_disconnected_poly, poly_from_covering, poly_from_sequence,
};
use crate::primes::prime_factors;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name,
        passed,
        detail: detail.into(),
    }
}

/// Round trip: label `g` from `s` under `a`, rebuild the covering of
/// the resulting sequence, and map it back through the sort order. True when
/// the two coverings agree as sets of cliques.
pub fn covering_round_trip(g: &Graph, s: &TotalCliqueCovering, a: &PrimeAssignment) -> Result<bool> {
    let (seq, order) = coding_sequence_with_order(g, s, a)?;
    let rebuilt = covering_from_sequence(&seq)?;
    let mapped = TotalCliqueCovering::new(
        rebuilt
            .cliques()
            .iter()
            .map(|c| Clique::new(c.vertices().iter().map(|&pos| order[pos]).collect()))
            .collect(),
    );
    Ok(mapped.same_set(s))
}

/// Whether every clique of `s` is needed for coverage.
pub fn all_cliques_essential(g: &Graph, s: &TotalCliqueCovering) -> bool {
    (0..s.len()).all(|skip| {
        let rest: Vec<Clique> = s
            .cliques()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, c)| c.clone())
            .collect();
        !is_total_clique_covering(g, &TotalCliqueCovering::new(rest))
    })
}

/// Runs the invariant suite. Budget errors abort the whole run.
pub fn run_invariant_suite(g: &Graph, budget: &mut Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let sigma = code(g, budget)?;
    let covers = minimum_total_coverings(g, budget)?;
    let theta = covers.first().map_or(0, |c| c.len());
    let isolated = g.isolated_vertices().len();

    let structure_ok = sigma.check_structure().is_ok() && sigma.trivial_count() == isolated;
    out.push(check("code_structure", structure_ok, sigma.to_string()));

    let realized = realize_sequence(sigma.entries())?;
    let iso = brute_force_isomorphic(&realized.graph, g, budget)?;
    out.push(check(
        "code_realizes_graph",
        iso.verdict,
        format!("{} oracle nodes", iso.nodes_explored),
    ));

    let k = prime_factors(&lambda_of(&sigma))?.len();
    out.push(check(
        "theta_equals_k_plus_s",
        k + isolated == theta,
        format!("k={k} s={isolated} theta_t={theta}"),
    ));

    let alpha = g.independence_number(budget)?;
    out.push(check("theta_at_least_alpha", theta >= alpha, format!("alpha={alpha}")));

    let covers_ok = covers.iter().all(|s| {
        is_total_clique_covering(g, s)
            && s.len() == theta
            && s.cliques()
                .iter()
                .filter(|c| c.len() == 1)
                .all(|c| g.degree(c.vertices()[0]) == 0)
            && all_cliques_essential(g, s)
    });
    out.push(check(
        "minimum_coverings_valid",
        covers_ok,
        format!("{} minimum coverings", covers.len()),
    ));

    let mut round_trips = true;
    let mut poly_agree = true;
    let mut observations = true;
    for s in &covers {
        let a = PrimeAssignment::identity(non_trivial_cliques(g, s).len());
        round_trips &= covering_round_trip(g, s, &a)?;
        let f = poly_from_covering(g, s)?;
        let (seq, _) = coding_sequence_with_order(g, s, &a)?;
        poly_agree &= poly_from_sequence(&seq)? == f;
        observations &= detect_disconnected_poly(&f) == !g.is_connected()
            && detect_bipartite_poly(&f) == g.is_bipartite();
    }
    out.push(check("covering_round_trip", round_trips, ""));
    out.push(check("polynomial_from_sequence_matches", poly_agree, ""));

    let canonical = poly_from_sequence(&sigma)?;
    observations &= detect_disconnected_poly(&canonical) == !g.is_connected()
        && detect_bipartite_poly(&canonical) == g.is_bipartite();
    out.push(check(
        "polynomial_observations",
        observations,
        format!("connected={} bipartite={}", g.is_connected(), g.is_bipartite()),
    ));
    out.push(check(
        "polynomial_mass",
        canonical.mass() as usize == g.vertex_count() && canonical.constant_term() as usize == isolated,
        canonical.to_string(),
    ));

    let n = g.vertex_count();
    let reversal = Permutation::new((0..n).rev().collect())?;
    let shifted = Permutation::new((0..n).map(|v| (v + 1) % n).collect())?;
    let mut invariant = true;
    for p in [reversal, shifted] {
        invariant &= code(&g.permute(&p)?, budget)? == sigma;
    }
    out.push(check("permutation_invariance", invariant, ""));

    let (labelled, lcm) = theorem1_labels(g)?;
    let mut distinct = labelled.labels.clone();
    distinct.sort();
    distinct.dedup();
    let divides = labelled.labels.iter().all(|l| (&lcm % l).bits() == 0);
    out.push(check(
        "prime_labelling_embeds",
        labelled.satisfies_gcd_rule() && distinct.len() == n && divides,
        format!("n={lcm}"),
    ));
    Ok(out)
}
