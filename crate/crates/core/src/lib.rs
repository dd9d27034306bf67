//! Canonical integer codes and polynomial representations of simple
//! undirected graphs.
//!
//! A total clique covering assigns a prime to each of its cliques and labels
//! every vertex by the product of the primes of the cliques it lies in. The
//! labels reproduce the graph through `gcd > 1` adjacency. Minimising the
//! sorted label sequence over all prime assignments and all minimum total
//! clique coverings gives [`code`], which is equal for two graphs exactly
//! when they are isomorphic. Replacing the `i`-th prime by `x_i` gives the
//! canonical polynomial [`canonical_polynomial`].
//!
//! ```
//! use cliquecode::{code, canonical_polynomial, fixtures, Budget};
//!
//! let g = fixtures::example1();
//! let mut budget = Budget::default();
//! assert_eq!(code(&g, &mut budget).unwrap().to_string(), "(2,2,3,3,5,7,10,10,10,11,231)");
//! assert_eq!(
//!     canonical_polynomial(&g, &mut budget).unwrap().to_string(),
//!     "2*x1 + 2*x2 + x3 + x4 + x5 + 3*x1*x3 + x2*x4*x5"
//! );
//! ```

pub mod budget;
pub mod clique;
pub mod coding;
pub mod cover;
pub mod error;
pub mod fixtures;
pub mod formats;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod polynomial;
pub mod primes;
pub mod verify;

pub use budget::{Budget, DEFAULT_BUDGET};
pub use clique::{all_cliques, maximal_cliques, Clique};
pub use coding::{
    code, coding_sequence_from_covering, covering_from_sequence, is_isomorphic_by_code, lambda_of,
    sigma_of_covering, theorem1_labels, theorem1_labels_with_cliques, validate_coding_sequence,
    CodingSequence, PrimeAssignment,
};
pub use cover::{
    is_total_clique_covering, minimum_total_coverings, prop1_certificate, theta_t,
    TotalCliqueCovering,
};
pub use error::{Error, Result};
pub use generate::{divisor_graph, generate_family, realize_sequence, Family};
pub use graph::{apply_permutation, Graph, LabeledGraph, Permutation};
pub use polynomial::{
    canonical_polynomial, closed_form_family, detect_bipartite_poly, detect_disconnected_poly,
    divisor_graph_polynomial_closed_form, poly_from_covering, poly_from_sequence, GraphPolynomial,
    Monomial,
};
