//! Certifying, refuting, and measuring `(c, t)`-sparseness, plus the clique
//! quantities that accompany it: clique number, clique covers, and the
//! subfield cliques of quadratic-residue hosts.
//!
//! A graph is `(c, t)`-sparse when every pair of vertex subsets `A, B` with
//! `|A|, |B| >= t` satisfies `e(A, B) <= (1 - c) |A| |B|`, where `e(A, B)`
//! counts ordered adjacent pairs so edges inside `A ∩ B` contribute twice.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::field::Gfp2;
use crate::graph::{Graph, VertexSet};
use crate::rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    SparseCertified,
    Violated,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::SparseCertified => "sparse-certified",
            Verdict::Violated => "violated",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Exhaustive,
    Randomized,
}

#[derive(Clone, Debug)]
pub struct SparsenessReport {
    pub verdict: Verdict,
    pub c: f64,
    pub t: usize,
    pub witness: Option<(VertexSet, VertexSet)>,
    pub method: Method,
}

impl SparsenessReport {
    /// Re-checks the witness against the graph it came from: both sides at
    /// least `t`, pair density strictly above `1 - c`. Reports without a
    /// witness re-validate trivially.
    pub fn revalidate(&self, gamma: &Graph) -> Result<bool> {
        match &self.witness {
            None => Ok(self.verdict != Verdict::Violated),
            Some((a, b)) => {
                if a.len() < self.t || b.len() < self.t {
                    return Ok(false);
                }
                let e = gamma.pair_count(a, b)?;
                Ok(e as f64 > (1.0 - self.c) * (a.len() * b.len()) as f64)
            }
        }
    }
}

fn validate_c_t(c: f64, t: usize) -> Result<()> {
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::param("c", "sparseness constant must lie in (0, 1)"));
    }
    if t == 0 {
        return Err(Error::param("t", "threshold size must be at least 1"));
    }
    Ok(())
}

/// Pairs of size-t subsets scanned before `check_exact` gives up.
pub const DEFAULT_PAIR_BUDGET: u128 = 200_000_000;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Exhaustive sparseness decision via subsets of size exactly `t`.
///
/// A violating pair with both sides of size at least `t` exists iff one with
/// both sides of size exactly `t` does: restricting a violating pair to a
/// uniformly random t-subset of each side preserves expected density, so
/// some size-t restriction attains it. That reduction is what keeps this
/// scan sound, and the test suite checks it against an all-sizes oracle.
pub fn check_exact(gamma: &Graph, c: f64, t: usize, exec: Exec) -> Result<SparsenessReport> {
    check_exact_budgeted(gamma, c, t, DEFAULT_PAIR_BUDGET, exec)
}

/// [`check_exact`] with an explicit budget on scanned subset pairs. Budget
/// overruns yield an inconclusive report, never a wrong one.
pub fn check_exact_budgeted(
    gamma: &Graph,
    c: f64,
    t: usize,
    pair_budget: u128,
    exec: Exec,
) -> Result<SparsenessReport> {
    validate_c_t(c, t)?;
    let n = gamma.n();
    let report = |verdict, witness| SparsenessReport {
        verdict,
        c,
        t,
        witness,
        method: Method::Exhaustive,
    };
    // No subsets of size >= t at all: the condition holds vacuously.
    if t > n {
        return Ok(report(Verdict::SparseCertified, None));
    }
    let subsets = binomial(n, t);
    if subsets * (subsets + 1) / 2 > pair_budget {
        return Ok(report(Verdict::Inconclusive, None));
    }

    let subsets: Vec<VertexSet> = t_subsets(n, t);
    let threshold = (1.0 - c) * (t * t) as f64;
    let hit = exec::find_map_first(exec, subsets.len(), |ai| {
        let a = &subsets[ai];
        for b in &subsets[ai..] {
            let e = gamma
                .pair_count(a, b)
                .expect("size-t subsets of the host are valid pair arguments");
            if e as f64 > threshold {
                return Some((a.clone(), b.clone()));
            }
        }
        None
    });
    Ok(match hit {
        Some(pair) => report(Verdict::Violated, Some(pair)),
        None => report(Verdict::SparseCertified, None),
    })
}

/// All t-subsets of `0..n` in lexicographic order of their sorted members.
fn t_subsets(n: usize, t: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(t);
    fn rec(n: usize, t: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        if current.len() == t {
            out.push(
                VertexSet::from_indices(n, current.iter().copied())
                    .expect("members are below n by construction"),
            );
            return;
        }
        let remaining = t - current.len();
        for v in start..=n - remaining {
            current.push(v);
            rec(n, t, v + 1, current, out);
            current.pop();
        }
    }
    if t <= n {
        rec(n, t, 0, &mut current, &mut out);
    }
    out
}

/// Randomized witness search: greedy density ascent from random size-t seed
/// pairs, restarted `trials` times. Returns a violated report with a checked
/// witness, or inconclusive; it can never certify.
pub fn refute_random(
    gamma: &Graph,
    c: f64,
    t: usize,
    trials: u64,
    seed: u64,
    exec: Exec,
) -> Result<SparsenessReport> {
    validate_c_t(c, t)?;
    let n = gamma.n();
    if t > n {
        return Err(Error::param("t", "threshold size exceeds the vertex count"));
    }
    let threshold = (1.0 - c) * (t * t) as f64;
    let hit = exec::find_map_first(exec, trials as usize, |trial| {
        let mut rng = rng::substream(seed, &[0x5eed, trial as u64]);
        let mut ids: Vec<usize> = (0..n).collect();
        ids.shuffle(&mut rng);
        let mut a: Vec<usize> = ids[..t].to_vec();
        ids.shuffle(&mut rng);
        let mut b: Vec<usize> = ids[..t].to_vec();

        let set = |v: &[usize]| {
            VertexSet::from_indices(n, v.iter().copied()).expect("ids are in range")
        };
        let mut improved = true;
        while improved {
            improved = false;
            for side in 0..2 {
                let (this, other) = if side == 0 { (&mut a, &b) } else { (&mut b, &a) };
                let other_set = set(other);
                // Contribution of a member of `this` is its degree into the
                // other side; e(A, B) = sum over A of those degrees.
                let (worst_pos, worst_deg) = this
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| (i, gamma.degree_in(v, &other_set)))
                    .min_by_key(|&(i, d)| (d, i))
                    .expect("sides are nonempty");
                let this_set = set(this);
                let best_outside = (0..n)
                    .filter(|v| !this_set.contains(*v))
                    .map(|v| (gamma.degree_in(v, &other_set), v))
                    .max_by_key(|&(d, v)| (d, std::cmp::Reverse(v)));
                if let Some((gain_deg, v)) = best_outside {
                    if gain_deg > worst_deg {
                        this[worst_pos] = v;
                        improved = true;
                    }
                }
            }
            let (sa, sb) = (set(&a), set(&b));
            let e = gamma.pair_count(&sa, &sb).expect("sides are nonempty");
            if e as f64 > threshold {
                return Some((sa, sb));
            }
        }
        None
    });
    Ok(SparsenessReport {
        verdict: if hit.is_some() {
            Verdict::Violated
        } else {
            Verdict::Inconclusive
        },
        c,
        t,
        witness: hit,
        method: Method::Randomized,
    })
}

/// Exact clique number by branch and bound over a degeneracy order with
/// bitset candidate sets. `node_budget` caps search nodes; on overrun the
/// error carries the best clique size found so far.
pub fn clique_number(gamma: &Graph, node_budget: u64) -> Result<usize> {
    let n = gamma.n();
    if n == 0 {
        return Ok(0);
    }
    let order = degeneracy_order(gamma);
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut best = 0usize;
    let mut nodes = 0u64;

    // Vertices later in the degeneracy order have few later neighbors, so
    // anchoring the search at each vertex keeps candidate sets small.
    for (i, &v) in order.iter().enumerate() {
        let mut cands = VertexSet::empty(n);
        for u in gamma.neighbors(v).iter() {
            if pos[u] > i {
                cands.insert(u);
            }
        }
        if 1 + cands.len() <= best {
            continue;
        }
        extend_clique(gamma, &cands, 1, &mut best, &mut nodes, node_budget).map_err(|_| {
            Error::SearchBudget {
                what: "clique branch and bound",
                best_lower_bound: Some(best),
            }
        })?;
    }
    Ok(best)
}

fn extend_clique(
    gamma: &Graph,
    cands: &VertexSet,
    size: usize,
    best: &mut usize,
    nodes: &mut u64,
    budget: u64,
) -> std::result::Result<(), ()> {
    *nodes += 1;
    if *nodes > budget {
        return Err(());
    }
    if cands.is_empty() {
        *best = (*best).max(size);
        return Ok(());
    }
    if size + cands.len() <= *best {
        return Ok(());
    }
    let mut rest = cands.clone();
    while let Some(v) = rest.first() {
        if size + rest.len() <= *best {
            break;
        }
        rest.remove(v);
        let next = rest.intersection(&gamma.neighbors(v));
        extend_clique(gamma, &next, size + 1, best, nodes, budget)?;
    }
    *best = (*best).max(size);
    Ok(())
}

/// Vertices in degeneracy order: repeatedly remove a minimum-degree vertex
/// (lowest id on ties).
fn degeneracy_order(gamma: &Graph) -> Vec<usize> {
    let n = gamma.n();
    let mut alive = gamma.full_vertex_set();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = alive
            .iter()
            .min_by_key(|&v| (gamma.degree_in(v, &alive), v))
            .expect("alive set is nonempty until all vertices are ordered");
        order.push(v);
        alive.remove(v);
    }
    order
}

#[derive(Clone, Debug)]
pub struct CliqueCover {
    parts: Vec<VertexSet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverMode {
    Greedy,
    /// Minimum cover by exhaustive coloring of the complement; n <= 20.
    ExactSmall,
}

impl CliqueCover {
    /// Builds a cover from externally constructed parts, validating the
    /// partition-into-cliques invariants against `gamma`.
    pub fn from_parts(gamma: &Graph, parts: Vec<VertexSet>) -> Result<CliqueCover> {
        let cover = CliqueCover { parts };
        cover.validate(gamma)?;
        Ok(cover)
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.len()
    }

    /// Checks the defining invariants: parts are pairwise disjoint cliques
    /// covering every vertex.
    pub fn validate(&self, gamma: &Graph) -> Result<()> {
        let mut seen = VertexSet::empty(gamma.n());
        for part in &self.parts {
            if part.is_empty() {
                return Err(Error::Internal("cover contains an empty part".into()));
            }
            if !seen.is_disjoint_from(part) {
                return Err(Error::Internal("cover parts overlap".into()));
            }
            seen.union_with(part);
            let members = part.to_vec();
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    if !gamma.adjacent(u, v) {
                        return Err(Error::Internal(format!(
                            "cover part is not a clique: {u} !~ {v}"
                        )));
                    }
                }
            }
        }
        if seen != gamma.full_vertex_set() {
            return Err(Error::Internal("cover misses vertices".into()));
        }
        Ok(())
    }
}

/// Partitions the vertices into cliques. Greedy mode grows each clique from
/// the lowest unassigned id, scanning ids upward (ties in every choice go to
/// the lowest id, so the result is deterministic). ExactSmall mode finds a
/// minimum partition, i.e. an optimal coloring of the complement.
pub fn clique_cover(gamma: &Graph, mode: CoverMode) -> Result<CliqueCover> {
    let n = gamma.n();
    match mode {
        CoverMode::Greedy => {
            let mut unassigned = gamma.full_vertex_set();
            let mut parts = Vec::new();
            while let Some(v) = unassigned.first() {
                let mut part = VertexSet::singleton(n, v);
                unassigned.remove(v);
                // Candidates must be adjacent to every member; intersecting
                // neighborhoods maintains that incrementally.
                let mut cands = unassigned.intersection(&gamma.neighbors(v));
                while let Some(u) = cands.first() {
                    part.insert(u);
                    unassigned.remove(u);
                    cands.remove(u);
                    cands.intersect_with(&gamma.neighbors(u));
                }
                parts.push(part);
            }
            Ok(CliqueCover { parts })
        }
        CoverMode::ExactSmall => {
            if n > 20 {
                return Err(Error::Budget {
                    what: "exact clique cover",
                    needed: n as u128,
                    budget: 20,
                });
            }
            if n == 0 {
                return Ok(CliqueCover { parts: Vec::new() });
            }
            let comp = gamma.complement();
            for k in 1..=n {
                if let Some(coloring) = color_with(&comp, k) {
                    let mut parts = vec![Vec::new(); k];
                    for (v, &col) in coloring.iter().enumerate() {
                        parts[col].push(v);
                    }
                    let parts = parts
                        .into_iter()
                        .filter(|p| !p.is_empty())
                        .map(|p| {
                            VertexSet::from_indices(n, p).expect("colors hold valid vertices")
                        })
                        .collect();
                    return Ok(CliqueCover { parts });
                }
            }
            unreachable!("n colors always suffice");
        }
    }
}

/// Proper k-coloring of `g` by backtracking, vertices in id order, each
/// vertex limited to colors `0..=used+1` to break color symmetry.
fn color_with(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn rec(g: &Graph, k: usize, v: usize, used: usize, colors: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        let cap = k.min(used + 1);
        for col in 0..cap {
            if g.neighbors(v).iter().all(|u| u >= v || colors[u] != col) {
                colors[v] = col;
                if rec(g, k, v + 1, used.max(col + 1), colors) {
                    return true;
                }
            }
        }
        false
    }
    let mut colors = vec![usize::MAX; g.n()];
    rec(g, k, 0, 0, &mut colors).then_some(colors)
}

/// Uniform sample of `count` subfield cliques of the quadratic-residue host
/// on GF(p²): sets `a·GF(p) + b` with `a` a nonzero square. Each is a clique
/// of size p, and there are (p+1)/2 · p distinct ones; squaring a uniform
/// nonzero element and translating by a uniform element hits them uniformly.
pub fn subfield_cliques(q: u64, count: usize, seed: u64) -> Result<Vec<VertexSet>> {
    let p = q.isqrt();
    if p * p != q {
        return Err(Error::param("q", "order must be the square of a prime"));
    }
    let f = Gfp2::new(p)?;
    let n = q as usize;
    let mut rng = rng::rng_for(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let z = f.element(rng.random_range(1..q));
        let a = f.mul(z, z);
        let b = f.element(rng.random_range(0..q));
        let members = (0..p).map(|i| f.index(f.add(f.mul(a, f.from_base(i)), b)) as usize);
        out.push(VertexSet::from_indices(n, members).expect("field indices are below q"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::oracle;

    fn is_clique(g: &Graph, s: &VertexSet) -> bool {
        let v = s.to_vec();
        v.iter()
            .enumerate()
            .all(|(i, &a)| v[i + 1..].iter().all(|&b| g.adjacent(a, b)))
    }

    #[test]
    fn k4_is_refuted_with_edge_witness() {
        let k4 = Graph::complete(4);
        let rep = check_exact(&k4, 0.6, 2, Exec::Sequential).unwrap();
        assert_eq!(rep.verdict, Verdict::Violated);
        assert!(rep.revalidate(&k4).unwrap());
        let (a, b) = rep.witness.unwrap();
        assert_eq!((a.len(), b.len()), (2, 2));
    }

    #[test]
    fn clique_union_blocks_are_sparse() {
        let g = generators::clique_union(4, 2).unwrap();
        let rep = check_exact(&g, 0.5, 8, Exec::Sequential).unwrap();
        assert_eq!(rep.verdict, Verdict::SparseCertified);
    }

    #[test]
    fn empty_graph_certifies_and_t_above_n_is_vacuous() {
        let g = Graph::empty(6);
        for t in 1..=6 {
            let rep = check_exact(&g, 0.9, t, Exec::Sequential).unwrap();
            assert_eq!(rep.verdict, Verdict::SparseCertified);
        }
        let k = Graph::complete(5);
        let rep = check_exact(&k, 0.5, 6, Exec::Sequential).unwrap();
        assert_eq!(rep.verdict, Verdict::SparseCertified);
    }

    #[test]
    fn budget_overrun_is_inconclusive() {
        let g = Graph::empty(40);
        let rep = check_exact_budgeted(&g, 0.5, 10, 1000, Exec::Sequential).unwrap();
        assert_eq!(rep.verdict, Verdict::Inconclusive);
        assert!(rep.witness.is_none());
    }

    #[test]
    fn parameter_validation() {
        let g = Graph::empty(4);
        assert!(check_exact(&g, 0.0, 2, Exec::Sequential).is_err());
        assert!(check_exact(&g, 1.0, 2, Exec::Sequential).is_err());
        assert!(check_exact(&g, 0.5, 0, Exec::Sequential).is_err());
        assert!(refute_random(&g, 0.5, 5, 10, 0, Exec::Sequential).is_err());
    }

    #[test]
    fn refuter_finds_clique_and_biclique_witnesses() {
        // K_8 at t = 4: density of a clique pair is at least 1 - 1/t.
        let k8 = Graph::complete(8);
        let rep = refute_random(&k8, 0.3, 4, 20, 1, Exec::Sequential).unwrap();
        assert_eq!(rep.verdict, Verdict::Violated);
        assert!(rep.revalidate(&k8).unwrap());

        // K_{4,4}: the two sides form a density-1 pair.
        let b = Graph::complete_bipartite(4, 4);
        let rep = refute_random(&b, 0.5, 4, 50, 2, Exec::Sequential).unwrap();
        assert_eq!(rep.verdict, Verdict::Violated);
        assert!(rep.revalidate(&b).unwrap());
    }

    #[test]
    fn refuter_stays_inconclusive_on_sparse_host() {
        let g = generators::clique_union(6, 2).unwrap();
        let rep = refute_random(&g, 0.5, 8, 200, 3, Exec::Sequential).unwrap();
        assert_eq!(rep.verdict, Verdict::Inconclusive);
        assert!(rep.witness.is_none());
    }

    #[test]
    fn exact_checker_agrees_with_all_sizes_oracle() {
        // The size-exactly-t scan relies on the averaging reduction; compare
        // against the oracle that scans every size.
        let mut checked = 0;
        for n in [6usize, 8, 10] {
            for seed in 0..4u64 {
                let g = generators::gnp(n, 0.4 + 0.1 * (seed as f64), seed).unwrap();
                for t in 2..=4usize {
                    for c in [0.25, 0.5] {
                        let exact = check_exact(&g, c, t, Exec::Sequential).unwrap();
                        let oracle_hit =
                            oracle::sparse_violation_all_sizes(&g, c, t, Exec::Sequential)
                                .unwrap();
                        assert_eq!(
                            exact.verdict == Verdict::Violated,
                            oracle_hit.is_some(),
                            "disagreement at n={n} seed={seed} t={t} c={c}"
                        );
                        checked += 1;
                    }
                }
            }
        }
        assert_eq!(checked, 72);
    }

    #[test]
    fn clique_number_matches_bruteforce() {
        assert_eq!(clique_number(&Graph::complete(5), 1 << 20).unwrap(), 5);
        assert_eq!(clique_number(&Graph::cycle(5), 1 << 20).unwrap(), 2);
        assert_eq!(clique_number(&Graph::empty(3), 1 << 20).unwrap(), 1);
        let p25 = generators::paley(25).unwrap();
        assert_eq!(clique_number(&p25, 1 << 24).unwrap(), 5);
        assert_eq!(oracle::clique_number_bruteforce(&p25), 5);
    }

    #[test]
    fn clique_number_budget_carries_lower_bound() {
        let g = generators::gnp(40, 0.5, 9).unwrap();
        match clique_number(&g, 10) {
            Err(Error::SearchBudget {
                best_lower_bound, ..
            }) => assert!(best_lower_bound.is_some()),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn covers_validate_and_hit_known_sizes() {
        let matching = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        let cover = clique_cover(&matching, CoverMode::Greedy).unwrap();
        cover.validate(&matching).unwrap();
        assert_eq!(cover.size(), 3);

        let kn = Graph::complete(7);
        assert_eq!(clique_cover(&kn, CoverMode::Greedy).unwrap().size(), 1);
        assert_eq!(clique_cover(&kn, CoverMode::ExactSmall).unwrap().size(), 1);

        let c5 = Graph::cycle(5);
        let exact = clique_cover(&c5, CoverMode::ExactSmall).unwrap();
        exact.validate(&c5).unwrap();
        assert_eq!(exact.size(), 3);

        let big = Graph::empty(25);
        assert!(clique_cover(&big, CoverMode::ExactSmall).is_err());
        let trivial = clique_cover(&Graph::empty(0), CoverMode::Greedy).unwrap();
        assert_eq!(trivial.size(), 0);
    }

    #[test]
    fn greedy_cover_never_smaller_than_exact() {
        for seed in 0..6u64 {
            let g = generators::gnp(12, 0.5, seed).unwrap();
            let greedy = clique_cover(&g, CoverMode::Greedy).unwrap();
            let exact = clique_cover(&g, CoverMode::ExactSmall).unwrap();
            greedy.validate(&g).unwrap();
            exact.validate(&g).unwrap();
            assert!(greedy.size() >= exact.size());
        }
    }

    #[test]
    fn subfield_cliques_are_uniform_cliques() {
        let g9 = generators::paley(9).unwrap();
        let cliques = subfield_cliques(9, 300, 5).unwrap();
        assert_eq!(cliques.len(), 300);
        let mut seen = std::collections::HashSet::new();
        for s in &cliques {
            assert_eq!(s.len(), 3);
            assert!(is_clique(&g9, s));
            seen.insert(s.to_vec());
        }
        // (p+1)/2 * p = 6 distinct cliques; 300 samples hit them all.
        assert_eq!(seen.len(), 6);

        // The base field itself (a = 1, b = 0) is one of them.
        for q in [9u64, 25] {
            let g = generators::paley(q).unwrap();
            let p = q.isqrt() as usize;
            let base = VertexSet::from_indices(q as usize, 0..p).unwrap();
            assert!(is_clique(&g, &base));
        }

        assert!(subfield_cliques(9, 0, 0).unwrap().is_empty());
        assert!(subfield_cliques(10, 1, 0).is_err());
    }

    #[test]
    fn sparse_certificate_is_monotone_in_c_and_subgraphs() {
        let g = generators::gnp(10, 0.3, 4).unwrap();
        for t in [3usize, 4] {
            let strong = check_exact(&g, 0.5, t, Exec::Sequential).unwrap();
            if strong.verdict == Verdict::SparseCertified {
                let weak = check_exact(&g, 0.3, t, Exec::Sequential).unwrap();
                assert_eq!(weak.verdict, Verdict::SparseCertified);
                let sub = g.filter_edges(|u, v| (u + v) % 3 != 0);
                let sub_rep = check_exact(&sub, 0.5, t, Exec::Sequential).unwrap();
                assert_eq!(sub_rep.verdict, Verdict::SparseCertified);
            }
        }
    }
}
