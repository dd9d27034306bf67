//! Polynomial representations over the semiring of nonnegative integers.
//!
//! Every vertex contributes the square-free monomial of the variables of the
//! cliques containing it (`x_i` for the `i`-th non-trivial clique, or for the
//! `i`-th smallest prime of a coding sequence); isolated vertices contribute
//! the constant 1.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::coding::{code, lambda_of, non_trivial_cliques, CodingSequence};
use crate::cover::{is_total_clique_covering, TotalCliqueCovering};
use crate::error::{input, Error, Result};
use crate::generate::{divisors_above_one, Family};
use crate::graph::Graph;
use crate::primes::{factorize, first_primes, prime_factors};

/// Square-free monomial: a sorted set of 1-based variable indices. The empty
/// set is the constant 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut vars: Vec<u32>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        Monomial(vars)
    }

    pub fn constant() -> Self {
        Monomial(Vec::new())
    }

    pub fn vars(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_constant(&self) -> bool {
        self.0.is_empty()
    }

    fn shares_variable(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Equal => return true,
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
            }
        }
        false
    }
}

/// Ascending degree, then lexicographic on the variable tuple.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sum of monomials with positive integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GraphPolynomial {
    terms: BTreeMap<Monomial, u64>,
}

/// One `(coefficient, variables)` entry of the structured form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coefficient: u64,
    pub variables: Vec<u32>,
}

impl GraphPolynomial {
    pub fn new() -> Self {
        GraphPolynomial::default()
    }

    pub fn add_term(&mut self, m: Monomial, coefficient: u64) {
        if coefficient > 0 {
            *self.terms.entry(m).or_insert(0) += coefficient;
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> u64 {
        self.coefficient(&Monomial::constant())
    }

    /// Sum of all coefficients; the vertex count of the represented graph.
    pub fn mass(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Largest variable index present.
    pub fn num_vars(&self) -> u32 {
        self.terms
            .keys()
            .filter_map(|m| m.0.last().copied())
            .max()
            .unwrap_or(0)
    }

    /// Terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn terms(&self) -> Vec<Term> {
        self.iter()
            .map(|(m, c)| Term {
                coefficient: c,
                variables: m.0.clone(),
            })
            .collect()
    }
}

impl fmt::Display for GraphPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.is_constant() {
                write!(f, "{c}")?;
                continue;
            }
            if c != 1 {
                write!(f, "{c}*")?;
            }
            for (j, x) in m.0.iter().enumerate() {
                if j > 0 {
                    f.write_str("*")?;
                }
                write!(f, "x{x}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for GraphPolynomial {
    type Err = Error;

    /// Parses the rendered form, e.g. `2*x1 + x3 + 3*x1*x3`. Like terms are
    /// merged; whitespace is free.
    fn from_str(s: &str) -> Result<Self> {
        let err = |msg: String| Error::Parse { line: None, msg };
        let s = s.trim();
        if s.is_empty() {
            return Err(err("empty polynomial".into()));
        }
        let mut p = GraphPolynomial::new();
        if s == "0" {
            return Ok(p);
        }
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(err(format!("empty term in `{s}`")));
            }
            let mut coefficient: Option<u64> = None;
            let mut vars = Vec::new();
            for factor in term.split('*').map(str::trim) {
                if let Some(idx) = factor.strip_prefix('x') {
                    let i: u32 = idx
                        .parse()
                        .map_err(|_| err(format!("bad variable `{factor}`")))?;
                    if i == 0 {
                        return Err(err("variables are numbered from x1".into()));
                    }
                    if vars.contains(&i) {
                        return Err(err(format!("`{term}` is not square-free")));
                    }
                    vars.push(i);
                } else {
                    let c: u64 = factor
                        .parse()
                        .map_err(|_| err(format!("bad factor `{factor}`")))?;
                    if coefficient.replace(c).is_some() {
                        return Err(err(format!("two coefficients in `{term}`")));
                    }
                }
            }
            match coefficient {
                Some(0) => return Err(err(format!("zero coefficient in `{term}`"))),
                c => p.add_term(Monomial::new(vars), c.unwrap_or(1)),
            }
        }
        Ok(p)
    }
}

impl Serialize for GraphPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GraphPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(deserializer)?;
        let mut p = GraphPolynomial::new();
        for t in terms {
            p.add_term(Monomial::new(t.variables), t.coefficient);
        }
        Ok(p)
    }
}

/// `f(G, S)`: the `i`-th non-trivial clique of `s` becomes `x_i`.
pub fn poly_from_covering(g: &Graph, s: &TotalCliqueCovering) -> Result<GraphPolynomial> {
    if !is_total_clique_covering(g, s) {
        return input("not a total clique covering of the graph");
    }
    let mut vars: Vec<Vec<u32>> = vec![Vec::new(); g.vertex_count()];
    for (i, c) in non_trivial_cliques(g, s).into_iter().enumerate() {
        for &v in c.vertices() {
            vars[v].push(i as u32 + 1);
        }
    }
    let mut p = GraphPolynomial::new();
    for v in vars {
        p.add_term(Monomial::new(v), 1);
    }
    Ok(p)
}

/// Replaces the `i`-th smallest prime factor of `λ(σ)` by `x_i`; entries
/// equal to 1 feed the constant term.
pub fn poly_from_sequence(seq: &CodingSequence) -> Result<GraphPolynomial> {
    seq.check_structure()?;
    let primes = prime_factors(&lambda_of(seq))?;
    let mut p = GraphPolynomial::new();
    for a in seq.entries() {
        let vars = primes
            .iter()
            .enumerate()
            .filter(|(_, q)| (a % *q).bits() == 0)
            .map(|(i, _)| i as u32 + 1)
            .collect();
        p.add_term(Monomial(vars), 1);
    }
    Ok(p)
}

/// `F(G)`, the polynomial of the canonical code.
pub fn canonical_polynomial(g: &Graph, budget: &mut Budget) -> Result<GraphPolynomial> {
    poly_from_sequence(&code(g, budget)?)
}

/// `F(G(n))` from the factorization `n = p1^r1 .. pk^rk` with the exponents
/// sorted so that `r1 >= .. >= rk`: the monomial of every nonempty variable
/// subset, weighted by the product of its exponents. Constant 1 for prime `n`.
pub fn divisor_graph_polynomial_closed_form(n: u64) -> Result<GraphPolynomial> {
    if n < 2 {
        return input(format!("divisor graph needs n >= 2, got {n}"));
    }
    let mut exps: Vec<u64> = factorize(&BigUint::from(n))?
        .into_iter()
        .map(|(_, e)| e as u64)
        .collect();
    exps.sort_unstable_by(|a, b| b.cmp(a));
    let mut p = GraphPolynomial::new();
    if exps == [1] {
        p.add_term(Monomial::constant(), 1);
        return Ok(p);
    }
    let k = exps.len();
    for subset in 1u32..(1 << k) {
        let vars: Vec<u32> = (0..k as u32).filter(|i| subset >> i & 1 == 1).collect();
        let coefficient = vars.iter().map(|&i| exps[i as usize]).product();
        p.add_term(Monomial(vars.iter().map(|i| i + 1).collect()), coefficient);
    }
    debug_assert_eq!(p.mass() as usize, divisors_above_one(n).len());
    Ok(p)
}

/// Known code and canonical polynomial of `K_n` (n >= 1), `P_n` (n >= 3),
/// `C_n` (n >= 4) and the edgeless graph (n >= 1).
pub fn closed_form_family(family: Family, n: usize) -> Result<(CodingSequence, GraphPolynomial)> {
    let min = match family {
        Family::Complete | Family::Empty => 1,
        Family::Path => 3,
        Family::Cycle => 4,
    };
    if n < min {
        return input(format!("closed form for {family} needs n >= {min}, got {n}"));
    }
    // Each vertex as a set of 1-based prime / variable indices.
    let vertices: Vec<Vec<u32>> = match family {
        Family::Empty => vec![vec![]; n],
        Family::Complete if n == 1 => vec![vec![]],
        Family::Complete => vec![vec![1]; n],
        Family::Path => {
            let n = n as u32;
            let mut v = vec![vec![1], vec![2]];
            v.extend((1..=n - 3).map(|i| vec![i, i + 2]));
            v.push(vec![n - 2, n - 1]);
            v
        }
        Family::Cycle => {
            let n = n as u32;
            let mut v = vec![vec![1, 2]];
            v.extend((1..=n - 2).map(|i| vec![i, i + 2]));
            v.push(vec![n - 1, n]);
            v
        }
    };
    let k = vertices.iter().flatten().copied().max().unwrap_or(0) as usize;
    let primes = first_primes(k);
    let labels = vertices
        .iter()
        .map(|vs| vs.iter().map(|&i| BigUint::from(primes[i as usize - 1])).product())
        .collect();
    let mut poly = GraphPolynomial::new();
    for vs in vertices {
        poly.add_term(Monomial::new(vs), 1);
    }
    Ok((CodingSequence::from_labels(labels), poly))
}

/// Expands coefficients into individual monomial copies.
fn copies(p: &GraphPolynomial) -> (u64, Vec<&Monomial>) {
    let mut constants = 0;
    let mut out = Vec::new();
    for (m, c) in p.iter() {
        if m.is_constant() {
            constants += c;
        } else {
            out.extend(std::iter::repeat_n(m, c as usize));
        }
    }
    (constants, out)
}

/// Whether the terms split into two nonempty parts sharing no variable. A
/// constant unit shares no variable with anything and may join either side.
pub fn detect_disconnected_poly(p: &GraphPolynomial) -> bool {
    let (constants, _) = copies(p);
    // Variable-sharing components of the non-constant monomials.
    let monomials: Vec<&Monomial> = p.terms.keys().filter(|m| !m.is_constant()).collect();
    let mut parent: Vec<usize> = (0..monomials.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for i in 0..monomials.len() {
        for j in i + 1..monomials.len() {
            if monomials[i].shares_variable(monomials[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let roots: BTreeSet<usize> = (0..monomials.len()).map(|i| find(&mut parent, i)).collect();
    roots.len() as u64 + constants >= 2
}

/// Whether the monomial copies split into two parts, each made of pairwise
/// variable-disjoint copies. A coefficient `c` counts as `c` copies.
pub fn detect_bipartite_poly(p: &GraphPolynomial) -> bool {
    let (_, items) = copies(p);
    let n = items.len();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let si = side[i].unwrap();
            for j in 0..n {
                if j == i || !items[i].shares_variable(items[j]) {
                    continue;
                }
                match side[j] {
                    None => {
                        side[j] = Some(!si);
                        stack.push(j);
                    }
                    Some(sj) if sj == si => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}
