//! Coding sequences, the per-covering code `σ[S]`, the canonical code
//! `σ(G)` and the maximal-clique prime labelling.
//!
//! A covering's non-trivial cliques (every clique except the singleton of an
//! isolated vertex) receive distinct primes; a vertex is labelled by the
//! product of the primes of the cliques containing it, and isolated vertices
//! get 1. Sorting the labels gives a coding sequence, whose gcd realization is
//! isomorphic to the graph. The code of a graph is the lexicographically
//! least such sequence over all prime assignments and all minimum coverings.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::clique::{maximal_cliques, Clique};
use crate::cover::{is_total_clique_covering, minimum_total_coverings, TotalCliqueCovering};
use crate::error::{input, Error, Result};
use crate::generate::realize_sequence;
use crate::graph::{Graph, LabeledGraph};
use crate::oracle;
use crate::primes::{first_primes, is_square_free, prime_factors};

/// Non-decreasing sequence of positive integers. Written `(a1,a2,...)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CodingSequence(Vec<BigUint>);

impl CodingSequence {
    /// Wraps entries as given. Use [`CodingSequence::check_structure`] to
    /// validate untrusted input.
    pub fn new(entries: Vec<BigUint>) -> Self {
        CodingSequence(entries)
    }

    pub fn from_u64s(entries: &[u64]) -> Self {
        CodingSequence(entries.iter().map(|&a| BigUint::from(a)).collect())
    }

    /// Sorts labels into a sequence.
    pub fn from_labels(mut labels: Vec<BigUint>) -> Self {
        labels.sort();
        CodingSequence(labels)
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of leading ones.
    pub fn trivial_count(&self) -> usize {
        self.0.iter().take_while(|a| a.is_one()).count()
    }

    /// Nonempty, positive, non-decreasing, and square-free above one.
    pub fn check_structure(&self) -> Result<()> {
        if self.0.is_empty() {
            return input("coding sequence is empty");
        }
        if self.0.iter().any(|a| a.bits() == 0) {
            return input("coding sequence entries must be positive");
        }
        if self.0.windows(2).any(|w| w[0] > w[1]) {
            return input(format!("{self} is not non-decreasing"));
        }
        for a in self.0.iter().filter(|a| !a.is_one()) {
            if !is_square_free(a)? {
                return input(format!("entry {a} of {self} is not square-free"));
            }
        }
        Ok(())
    }
}

impl fmt::Display for CodingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for CodingSequence {
    type Err = Error;

    /// Accepts `(2,3,10)`, `2,3,10` or whitespace-separated entries.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(inner);
        let entries = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<BigUint>().map_err(|e| Error::Parse {
                    line: None,
                    msg: format!("bad sequence entry `{t}`: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if entries.is_empty() {
            return Err(Error::Parse {
                line: None,
                msg: "empty sequence".into(),
            });
        }
        Ok(CodingSequence(entries))
    }
}

/// Least common multiple of the entries above one; 1 if there are none.
pub fn lambda_of(seq: &CodingSequence) -> BigUint {
    seq.0
        .iter()
        .filter(|a| !a.is_one())
        .fold(BigUint::one(), |acc, a| acc.lcm(a))
}

/// Bijection from a covering's non-trivial cliques (in covering order) to
/// prime indices: clique `i` receives the `prime_index(i)`-th prime, 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeAssignment(Vec<usize>);

impl PrimeAssignment {
    pub fn new(prime_index: Vec<usize>) -> Result<Self> {
        let k = prime_index.len();
        let distinct: BTreeSet<usize> = prime_index.iter().copied().collect();
        if distinct.len() != k || distinct.iter().any(|&p| p >= k) {
            return input(format!("{prime_index:?} is not a bijection onto the first {k} primes"));
        }
        Ok(PrimeAssignment(prime_index))
    }

    /// Clique `i` gets the `i`-th prime.
    pub fn identity(k: usize) -> Self {
        PrimeAssignment((0..k).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn prime_index(&self, clique: usize) -> usize {
        self.0[clique]
    }
}

/// Cliques of `s` other than singletons of isolated vertices, in order.
pub fn non_trivial_cliques<'a>(g: &Graph, s: &'a TotalCliqueCovering) -> Vec<&'a Clique> {
    s.cliques()
        .iter()
        .filter(|c| !(c.len() == 1 && g.degree(c.vertices()[0]) == 0))
        .collect()
}

/// Per-vertex labels (not sorted) for covering `s` under assignment `a`.
pub fn vertex_labels(g: &Graph, s: &TotalCliqueCovering, a: &PrimeAssignment) -> Result<Vec<BigUint>> {
    if !is_total_clique_covering(g, s) {
        return input("not a total clique covering of the graph");
    }
    let cliques = non_trivial_cliques(g, s);
    if cliques.len() != a.len() {
        return input(format!(
            "assignment covers {} cliques, covering has {} non-trivial cliques",
            a.len(),
            cliques.len()
        ));
    }
    let primes = first_primes(cliques.len());
    let mut labels = vec![BigUint::one(); g.vertex_count()];
    for (i, c) in cliques.iter().enumerate() {
        let p = primes[a.prime_index(i)];
        for &v in c.vertices() {
            labels[v] *= p;
        }
    }
    Ok(labels)
}

/// The coding sequence of `s` under `a`, together with the vertex that sits
/// at each position of the sorted sequence.
pub fn coding_sequence_with_order(
    g: &Graph,
    s: &TotalCliqueCovering,
    a: &PrimeAssignment,
) -> Result<(CodingSequence, Vec<usize>)> {
    let labels = vertex_labels(g, s, a)?;
    let mut order: Vec<usize> = (0..labels.len()).collect();
    order.sort_by(|&x, &y| labels[x].cmp(&labels[y]).then(x.cmp(&y)));
    let seq = order.iter().map(|&v| labels[v].clone()).collect();
    Ok((CodingSequence(seq), order))
}

pub fn coding_sequence_from_covering(
    g: &Graph,
    s: &TotalCliqueCovering,
    a: &PrimeAssignment,
) -> Result<CodingSequence> {
    Ok(coding_sequence_with_order(g, s, a)?.0)
}

/// The covering `S_σ` of the realization of `seq`: a singleton for each
/// leading one, then one clique per prime factor of `λ(σ)` in ascending
/// prime order, holding the positions whose entry that prime divides.
pub fn covering_from_sequence(seq: &CodingSequence) -> Result<TotalCliqueCovering> {
    seq.check_structure()?;
    let s = seq.trivial_count();
    let mut cliques: Vec<Clique> = (0..s).map(|v| Clique::new(vec![v])).collect();
    for p in prime_factors(&lambda_of(seq))? {
        let members = seq
            .0
            .iter()
            .enumerate()
            .filter(|(_, a)| (*a % &p).bits() == 0)
            .map(|(i, _)| i)
            .collect();
        cliques.push(Clique::new(members));
    }
    Ok(TotalCliqueCovering::new(cliques))
}

/// Lexicographically least coding sequence of `s` over every assignment of
/// the first `k` primes to its `k` non-trivial cliques.
pub fn sigma_of_covering(g: &Graph, s: &TotalCliqueCovering, budget: &mut Budget) -> Result<CodingSequence> {
    if !is_total_clique_covering(g, s) {
        return input("not a total clique covering of the graph");
    }
    let mut search = LeastSequence::new(g);
    search.add_covering(g, s, budget)?;
    Ok(search.finish())
}

/// The canonical code `σ(G)`: least `σ[S]` over all minimum total clique
/// coverings.
pub fn code(g: &Graph, budget: &mut Budget) -> Result<CodingSequence> {
    let covers = minimum_total_coverings(g, budget)?;
    let mut search = LeastSequence::new(g);
    for s in &covers {
        search.add_covering(g, s, budget)?;
    }
    Ok(search.finish())
}

/// Decides isomorphism by comparing canonical codes.
pub fn is_isomorphic_by_code(g1: &Graph, g2: &Graph, budget: &mut Budget) -> Result<bool> {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    Ok(code(g1, budget)? == code(g2, budget)?)
}

/// Checks that `seq` is a coding sequence of `g`: structure, leading-one
/// rule, and a brute-force isomorphism between its realization and `g`.
pub fn validate_coding_sequence(seq: &CodingSequence, g: &Graph, budget: &mut Budget) -> Result<bool> {
    if seq.check_structure().is_err() || seq.len() != g.vertex_count() {
        return Ok(false);
    }
    let realized = realize_sequence(seq.entries())?;
    let isolated = realized.graph.isolated_vertices();
    if isolated.len() != seq.trivial_count() {
        return Ok(false);
    }
    Ok(oracle::brute_force_isomorphic(&realized.graph, g, budget)?.verdict)
}

/// Label arithmetic for the assignment search: `u128` while the product of
/// the first `k` primes fits, arbitrary precision beyond.
trait Label: Clone + Ord {
    fn from_prime(p: u64) -> Self;
    fn unit() -> Self;
    fn times(&self, other: &Self) -> Self;
}

impl Label for u128 {
    fn from_prime(p: u64) -> Self {
        p as u128
    }
    fn unit() -> Self {
        1
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
}

impl Label for BigUint {
    fn from_prime(p: u64) -> Self {
        BigUint::from(p)
    }
    fn unit() -> Self {
        One::one()
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
}

/// Running minimum of `σ[S]` over a stream of coverings of one graph.
struct LeastSequence {
    isolated: usize,
    /// Best non-trivial tail found so far.
    best: Option<Vec<BigUint>>,
}

impl LeastSequence {
    fn new(g: &Graph) -> Self {
        LeastSequence {
            isolated: g.isolated_vertices().len(),
            best: None,
        }
    }

    fn add_covering(&mut self, g: &Graph, s: &TotalCliqueCovering, budget: &mut Budget) -> Result<()> {
        let cliques = non_trivial_cliques(g, s);
        let k = cliques.len();
        // Search positions index the non-isolated vertices only.
        let active: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) > 0).collect();
        let mut index = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in active.iter().enumerate() {
            index[v] = i;
        }
        let members: Vec<Vec<usize>> = cliques
            .iter()
            .map(|c| c.vertices().iter().map(|&v| index[v]).collect())
            .collect();
        let primorial_bits: f64 = first_primes(k).iter().map(|&p| (p as f64).log2()).sum();
        let small_incumbent: Option<Option<Vec<u128>>> = match &self.best {
            None => Some(None),
            Some(b) => b
                .iter()
                .map(|x| u128::try_from(x).ok())
                .collect::<Option<Vec<u128>>>()
                .map(Some),
        };
        match small_incumbent {
            Some(incumbent) if primorial_bits < 120.0 => {
                let best = AssignmentSearch::<u128>::new(active.len(), members).run(incumbent, budget)?;
                self.best = best.map(|b| b.into_iter().map(BigUint::from).collect());
            }
            _ => {
                let incumbent = self.best.take();
                self.best = AssignmentSearch::<BigUint>::new(active.len(), members).run(incumbent, budget)?;
            }
        }
        Ok(())
    }

    fn finish(self) -> CodingSequence {
        let mut entries = vec![BigUint::one(); self.isolated];
        entries.extend(self.best.unwrap_or_default());
        CodingSequence(entries)
    }
}

/// Branch and bound over prime assignments. Primes are handed out in
/// ascending order; at depth `j` the `j`-th prime goes to one of the
/// unassigned cliques. A vertex with `r` cliques still unassigned will end
/// with at least its partial product times the next `r` consecutive primes,
/// so the sorted vector of these products is componentwise (hence
/// lexicographically) below every completion.
///
/// Two unassigned cliques are interchangeable when swapping them maps the
/// multiset of (partial product, unassigned cliques) vertex states onto
/// itself; only one clique per interchangeable class is branched on.
struct AssignmentSearch<T: Label> {
    members: Vec<Vec<usize>>,
    cliques_of: Vec<Vec<usize>>,
    primes: Vec<T>,
    /// `window[j][r]` is the product of primes `j..j+r`.
    window: Vec<Vec<T>>,
    partial: Vec<T>,
    remaining: Vec<usize>,
    assigned: Vec<bool>,
    best: Option<Vec<T>>,
}

impl<T: Label> AssignmentSearch<T> {
    fn new(vertex_count: usize, members: Vec<Vec<usize>>) -> Self {
        let k = members.len();
        let primes: Vec<T> = first_primes(k).into_iter().map(T::from_prime).collect();
        let window = (0..=k)
            .map(|j| {
                let mut row = vec![T::unit()];
                for r in 0..k - j {
                    let next = row[r].times(&primes[j + r]);
                    row.push(next);
                }
                row
            })
            .collect();
        let mut remaining = vec![0; vertex_count];
        let mut cliques_of = vec![Vec::new(); vertex_count];
        for (c, m) in members.iter().enumerate() {
            for &v in m {
                remaining[v] += 1;
                cliques_of[v].push(c);
            }
        }
        AssignmentSearch {
            members,
            cliques_of,
            primes,
            window,
            partial: vec![T::unit(); vertex_count],
            remaining,
            assigned: vec![false; k],
            best: None,
        }
    }

    fn run(mut self, incumbent: Option<Vec<T>>, budget: &mut Budget) -> Result<Option<Vec<T>>> {
        self.best = incumbent;
        self.descend(0, budget)?;
        Ok(self.best)
    }

    fn bound(&self, next_prime: usize) -> Vec<T> {
        let mut b: Vec<T> = self
            .partial
            .iter()
            .zip(&self.remaining)
            .map(|(p, &r)| if r == 0 { p.clone() } else { p.times(&self.window[next_prime][r]) })
            .collect();
        b.sort_unstable();
        b
    }

    fn beaten(&self, bound: &[T]) -> bool {
        self.best
            .as_ref()
            .is_some_and(|best| bound.cmp(best) != Ordering::Less)
    }

    fn assign(&mut self, c: usize, j: usize) {
        self.assigned[c] = true;
        for &v in &self.members[c] {
            self.partial[v] = self.partial[v].times(&self.primes[j]);
            self.remaining[v] -= 1;
        }
    }

    fn unassign(&mut self, c: usize, j: usize, saved: Vec<T>) {
        self.assigned[c] = false;
        for (&v, old) in self.members[c].iter().zip(saved) {
            debug_assert!(self.partial[v] == old.times(&self.primes[j]));
            self.partial[v] = old;
            self.remaining[v] += 1;
        }
    }

    /// State of `v` with cliques `a` and `b` exchanged.
    fn swapped_state(&self, v: usize, a: usize, b: usize) -> (T, Vec<usize>) {
        let mut open: Vec<usize> = self.cliques_of[v]
            .iter()
            .filter(|&&c| !self.assigned[c])
            .map(|&c| if c == a { b } else if c == b { a } else { c })
            .collect();
        open.sort_unstable();
        (self.partial[v].clone(), open)
    }

    fn interchangeable(&self, a: usize, b: usize) -> bool {
        let mut touched: Vec<usize> = self.members[a].iter().chain(&self.members[b]).copied().collect();
        touched.sort_unstable();
        touched.dedup();
        let mut before: Vec<(T, Vec<usize>)> = touched.iter().map(|&v| self.swapped_state(v, a, a)).collect();
        let mut after: Vec<(T, Vec<usize>)> = touched.iter().map(|&v| self.swapped_state(v, a, b)).collect();
        before.sort_unstable();
        after.sort_unstable();
        before == after
    }

    fn descend(&mut self, j: usize, budget: &mut Budget) -> Result<()> {
        let k = self.members.len();
        if j == k {
            let leaf = self.bound(k);
            if !self.beaten(&leaf) {
                self.best = Some(leaf);
            }
            return Ok(());
        }
        let mut children: Vec<(Vec<T>, usize)> = Vec::new();
        let mut representatives: Vec<usize> = Vec::new();
        for c in 0..k {
            if self.assigned[c] {
                continue;
            }
            budget.tick()?;
            if representatives.iter().any(|&r| self.interchangeable(r, c)) {
                continue;
            }
            representatives.push(c);
            let saved: Vec<T> = self.members[c].iter().map(|&v| self.partial[v].clone()).collect();
            self.assign(c, j);
            let b = self.bound(j + 1);
            self.unassign(c, j, saved);
            if !self.beaten(&b) {
                children.push((b, c));
            }
        }
        children.sort();
        for (b, c) in children {
            if self.beaten(&b) {
                continue;
            }
            let saved: Vec<T> = self.members[c].iter().map(|&v| self.partial[v].clone()).collect();
            self.assign(c, j);
            self.descend(j + 1, budget)?;
            self.unassign(c, j, saved);
        }
        Ok(())
    }
}

/// The prime labelling built from maximal cliques: the `i`-th maximal clique
/// (ordered by smallest vertex, then size, then vertex list) receives the
/// `i`-th prime. Returns the labelled graph and the lcm `n` of the labels;
/// the labels induce a copy of `g` inside the divisor graph of `n`.
pub fn theorem1_labels(g: &Graph) -> Result<(LabeledGraph, BigUint)> {
    let mut cliques = maximal_cliques(g)?;
    cliques.sort_by(|a, b| {
        a.vertices()[0]
            .cmp(&b.vertices()[0])
            .then(a.len().cmp(&b.len()))
            .then_with(|| a.vertices().cmp(b.vertices()))
    });
    theorem1_labels_with_cliques(g, &cliques)
}

/// As [`theorem1_labels`] with an explicit clique order. Any total clique
/// covering works in place of the maximal cliques.
///
/// Vertices that would share a product `s` are separated by multiplying the
/// `j`-th of them (by id, from 0) with the `j`-th term of the stream
/// `1, q1, q2, .., q1^2, q1 q2, ..` of monomials in the primes `q1 < q2 < ..`
/// of `s`, in graded lexicographic order.
pub fn theorem1_labels_with_cliques(g: &Graph, cliques: &[Clique]) -> Result<(LabeledGraph, BigUint)> {
    let n = g.vertex_count();
    if n == 0 {
        return input("graph has no vertices");
    }
    let s = TotalCliqueCovering::new(cliques.to_vec());
    if !is_total_clique_covering(g, &s) {
        return input("cliques do not form a total clique covering");
    }
    let primes = first_primes(cliques.len());
    let mut support: Vec<Vec<u64>> = vec![Vec::new(); n];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c.vertices() {
            support[v].push(primes[i]);
        }
    }
    let mut labels = vec![BigUint::one(); n];
    let mut seen: Vec<(Vec<u64>, usize)> = Vec::new();
    for v in 0..n {
        let mut qs = support[v].clone();
        qs.sort_unstable();
        qs.dedup();
        let rank = match seen.iter_mut().find(|(q, _)| *q == qs) {
            Some((_, count)) => {
                *count += 1;
                *count - 1
            }
            None => {
                seen.push((qs.clone(), 1));
                0
            }
        };
        let base: BigUint = qs.iter().map(|&q| BigUint::from(q)).product();
        labels[v] = base * multiplier(&qs, rank);
    }
    let lcm = labels.iter().fold(BigUint::one(), |acc, l| acc.lcm(l));
    Ok((
        LabeledGraph {
            graph: g.clone(),
            labels,
        },
        lcm,
    ))
}

/// The `rank`-th monomial (graded lexicographic, starting at 1) in `qs`.
fn multiplier(qs: &[u64], rank: usize) -> BigUint {
    let mut remaining = rank;
    let mut degree = 0usize;
    loop {
        let count = multisets(qs.len(), degree);
        if remaining < count {
            break;
        }
        remaining -= count;
        degree += 1;
    }
    // Unrank the combination with replacement of size `degree`.
    let mut out = BigUint::one();
    let mut start = 0;
    for slot in 0..degree {
        let left = degree - slot - 1;
        for i in start..qs.len() {
            let block = multisets(qs.len() - i, left);
            if remaining < block {
                out *= qs[i];
                start = i;
                break;
            }
            remaining -= block;
        }
    }
    out
}

/// Number of multisets of size `d` drawn from `r` kinds.
fn multisets(r: usize, d: usize) -> usize {
    if d == 0 {
        return 1;
    }
    if r == 0 {
        return 0;
    }
    // C(r + d - 1, d)
    let mut c: usize = 1;
    for i in 0..d {
        c = c * (r + i) / (i + 1);
    }
    c
}
