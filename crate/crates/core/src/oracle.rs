//! Brute-force ground truth at desk scale.
//!
//! Everything here recomputes adjacency from the public edge iterator into a
//! plain boolean matrix and runs exhaustive or branch-and-bound searches over
//! it. Nothing in this module calls the bitset kernels or the subsystem
//! implementations it is used to check, so agreement between the two routes
//! is meaningful evidence.

use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::graph::Graph;

/// Dense adjacency rebuilt from scratch.
struct Adj {
    n: usize,
    a: Vec<bool>,
}

impl Adj {
    fn of(g: &Graph) -> Adj {
        let n = g.n();
        let mut a = vec![false; n * n];
        for (u, v) in g.edges() {
            a[u * n + v] = true;
            a[v * n + u] = true;
        }
        Adj { n, a }
    }

    #[inline(always)]
    fn at(&self, u: usize, v: usize) -> bool {
        self.a[u * self.n + v]
    }

    fn set(&mut self, u: usize, v: usize, val: bool) {
        self.a[u * self.n + v] = val;
        self.a[v * self.n + u] = val;
    }

    fn edge_count(&self) -> usize {
        (0..self.n)
            .map(|u| (u + 1..self.n).filter(|&v| self.at(u, v)).count())
            .sum()
    }
}

const MAX_PATTERN: usize = 8;
const MAX_HOST: usize = 32;
const NODE_BUDGET: u64 = 50_000_000;

fn check_sizes(what: &'static str, host_n: usize, pattern_n: usize) -> Result<()> {
    if pattern_n > MAX_PATTERN {
        return Err(Error::Budget {
            what,
            needed: pattern_n as u128,
            budget: MAX_PATTERN as u128,
        });
    }
    if host_n > MAX_HOST {
        return Err(Error::Budget {
            what,
            needed: host_n as u128,
            budget: MAX_HOST as u128,
        });
    }
    Ok(())
}

/// Counts labeled injective maps of `h` into `g` whose `h`-edges land on
/// `g`-edges and whose `h`-non-edges land on `gamma`-non-edges.
pub fn count_induced_in(gamma: &Graph, g: &Graph, h: &Graph) -> Result<u64> {
    if gamma.n() != g.n() {
        return Err(Error::UniverseMismatch {
            left: g.n(),
            right: gamma.n(),
        });
    }
    check_sizes("count_induced_in", g.n(), h.n())?;
    let ag = Adj::of(g);
    let agam = Adj::of(gamma);
    let ah = Adj::of(h);
    let mut count = 0u64;
    let mut nodes = 0u64;
    let mut img = vec![usize::MAX; h.n()];
    let mut used = vec![false; g.n()];
    count_rec(
        &ag,
        Some(&agam),
        &ah,
        0,
        &mut img,
        &mut used,
        &mut count,
        &mut nodes,
    )?;
    Ok(count)
}

/// Counts labeled injective maps of `h` into `g` preserving edges only
/// (ordinary subgraph copies, non-edges unconstrained).
pub fn count_subgraph(g: &Graph, h: &Graph) -> Result<u64> {
    check_sizes("count_subgraph", g.n(), h.n())?;
    let ag = Adj::of(g);
    let ah = Adj::of(h);
    let mut count = 0u64;
    let mut nodes = 0u64;
    let mut img = vec![usize::MAX; h.n()];
    let mut used = vec![false; g.n()];
    count_rec(&ag, None, &ah, 0, &mut img, &mut used, &mut count, &mut nodes)?;
    Ok(count)
}

#[allow(clippy::too_many_arguments)]
fn count_rec(
    ag: &Adj,
    agam: Option<&Adj>,
    ah: &Adj,
    depth: usize,
    img: &mut [usize],
    used: &mut [bool],
    count: &mut u64,
    nodes: &mut u64,
) -> Result<()> {
    if depth == ah.n {
        *count += 1;
        return Ok(());
    }
    for cand in 0..ag.n {
        if used[cand] {
            continue;
        }
        *nodes += 1;
        if *nodes > NODE_BUDGET {
            return Err(Error::SearchBudget {
                what: "induced-copy enumeration",
                best_lower_bound: None,
            });
        }
        let ok = (0..depth).all(|j| {
            if ah.at(depth, j) {
                ag.at(cand, img[j])
            } else {
                match agam {
                    Some(gam) => !gam.at(cand, img[j]),
                    None => true,
                }
            }
        });
        if ok {
            img[depth] = cand;
            used[cand] = true;
            count_rec(ag, agam, ah, depth + 1, img, used, count, nodes)?;
            used[cand] = false;
            img[depth] = usize::MAX;
        }
    }
    Ok(())
}

/// First copy of `h` found in `g` (induced in `gamma` when given), as images
/// of the pattern vertices in order.
fn find_copy(ag: &Adj, agam: Option<&Adj>, ah: &Adj) -> Option<Vec<usize>> {
    fn rec(
        ag: &Adj,
        agam: Option<&Adj>,
        ah: &Adj,
        depth: usize,
        img: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        if depth == ah.n {
            return true;
        }
        for cand in 0..ag.n {
            if used[cand] {
                continue;
            }
            let ok = (0..depth).all(|j| {
                if ah.at(depth, j) {
                    ag.at(cand, img[j])
                } else {
                    match agam {
                        Some(gam) => !gam.at(cand, img[j]),
                        None => true,
                    }
                }
            });
            if ok {
                img.push(cand);
                used[cand] = true;
                if rec(ag, agam, ah, depth + 1, img, used) {
                    return true;
                }
                used[cand] = false;
                img.pop();
            }
        }
        false
    }
    let mut img = Vec::with_capacity(ah.n);
    let mut used = vec![false; ag.n];
    rec(ag, agam, ah, 0, &mut img, &mut used).then_some(img)
}

/// Maximum edge count of a spanning subgraph of `gamma` containing no copy of
/// `h` induced in `gamma`, together with a witness subgraph.
///
/// Branch and bound: find one offending copy, branch over deleting each of
/// its pattern-edge images; edges kept on earlier branches are locked so the
/// subsets explored on different branches are disjoint.
pub fn max_subgraph_avoiding(gamma: &Graph, h: &Graph) -> Result<(u64, Graph)> {
    if gamma.edge_count() > 24 {
        return Err(Error::Budget {
            what: "max_subgraph_avoiding host edges",
            needed: gamma.edge_count() as u128,
            budget: 24,
        });
    }
    check_sizes("max_subgraph_avoiding", gamma.n(), h.n())?;
    let agam = Adj::of(gamma);
    let ah = Adj::of(h);
    let mut g = Adj::of(gamma);
    let mut locked = vec![false; gamma.n() * gamma.n()];
    let mut best_m = 0u64;
    let mut best_edges: Vec<(usize, usize)> = Vec::new();

    fn rec(
        g: &mut Adj,
        agam: &Adj,
        ah: &Adj,
        locked: &mut [bool],
        m: u64,
        best_m: &mut u64,
        best_edges: &mut Vec<(usize, usize)>,
    ) {
        if m <= *best_m && !best_edges.is_empty() {
            return;
        }
        match find_copy(g, Some(agam), ah) {
            None => {
                if m > *best_m || best_edges.is_empty() {
                    *best_m = m;
                    best_edges.clear();
                    for u in 0..g.n {
                        for v in u + 1..g.n {
                            if g.at(u, v) {
                                best_edges.push((u, v));
                            }
                        }
                    }
                }
            }
            Some(img) => {
                // Pattern-edge images of the found copy, deduplicated.
                let mut copy_edges: Vec<(usize, usize)> = Vec::new();
                for i in 0..ah.n {
                    for j in i + 1..ah.n {
                        if ah.at(i, j) {
                            let (u, v) = (img[i].min(img[j]), img[i].max(img[j]));
                            if !copy_edges.contains(&(u, v)) {
                                copy_edges.push((u, v));
                            }
                        }
                    }
                }
                let mut newly_locked = Vec::new();
                for &(u, v) in &copy_edges {
                    if !locked[u * g.n + v] {
                        g.set(u, v, false);
                        rec(g, agam, ah, locked, m - 1, best_m, best_edges);
                        g.set(u, v, true);
                    }
                    // Later branches keep this edge for good.
                    if !locked[u * g.n + v] {
                        locked[u * g.n + v] = true;
                        newly_locked.push((u, v));
                    }
                }
                for (u, v) in newly_locked {
                    locked[u * g.n + v] = false;
                }
            }
        }
    }

    let m0 = g.edge_count() as u64;
    rec(
        &mut g,
        &agam,
        &ah,
        &mut locked,
        m0,
        &mut best_m,
        &mut best_edges,
    );
    let witness = Graph::from_edges(gamma.n(), best_edges)?;
    Ok((best_m, witness))
}

/// Classical Turan number: maximum edges of a graph on `n` vertices with no
/// subgraph copy of `h`, plus a witness.
pub fn turan_number(n: usize, h: &Graph) -> Result<(u64, Graph)> {
    if n > 9 {
        return Err(Error::Budget {
            what: "turan_number host size",
            needed: n as u128,
            budget: 9,
        });
    }
    if h.n() > 5 {
        return Err(Error::Budget {
            what: "turan_number pattern size",
            needed: h.n() as u128,
            budget: 5,
        });
    }
    if h.edge_count() == 0 {
        return Err(Error::param(
            "pattern",
            "edgeless patterns occur in every graph with enough vertices",
        ));
    }
    let ah = Adj::of(h);
    let mut g = Adj::of(&Graph::complete(n));
    let mut locked = vec![false; n * n];
    let mut best_m = 0u64;
    let mut best_edges: Vec<(usize, usize)> = Vec::new();

    fn rec(
        g: &mut Adj,
        ah: &Adj,
        locked: &mut [bool],
        m: u64,
        best_m: &mut u64,
        best_edges: &mut Vec<(usize, usize)>,
    ) {
        if m <= *best_m && !best_edges.is_empty() {
            return;
        }
        match find_copy(g, None, ah) {
            None => {
                if m > *best_m || best_edges.is_empty() {
                    *best_m = m;
                    best_edges.clear();
                    for u in 0..g.n {
                        for v in u + 1..g.n {
                            if g.at(u, v) {
                                best_edges.push((u, v));
                            }
                        }
                    }
                }
            }
            Some(img) => {
                let mut copy_edges: Vec<(usize, usize)> = Vec::new();
                for i in 0..ah.n {
                    for j in i + 1..ah.n {
                        if ah.at(i, j) {
                            let (u, v) = (img[i].min(img[j]), img[i].max(img[j]));
                            if !copy_edges.contains(&(u, v)) {
                                copy_edges.push((u, v));
                            }
                        }
                    }
                }
                let mut newly_locked = Vec::new();
                for &(u, v) in &copy_edges {
                    if !locked[u * g.n + v] {
                        g.set(u, v, false);
                        rec(g, ah, locked, m - 1, best_m, best_edges);
                        g.set(u, v, true);
                    }
                    if !locked[u * g.n + v] {
                        locked[u * g.n + v] = true;
                        newly_locked.push((u, v));
                    }
                }
                for (u, v) in newly_locked {
                    locked[u * g.n + v] = false;
                }
            }
        }
    }

    let m0 = (n * (n - 1) / 2) as u64;
    rec(&mut g, &ah, &mut locked, m0, &mut best_m, &mut best_edges);
    let witness = Graph::from_edges(n, best_edges)?;
    Ok((best_m, witness))
}

/// Exact clique number by plain recursive extension. Desk scale only; no
/// budget, callers keep inputs small.
pub fn clique_number_bruteforce(g: &Graph) -> usize {
    let adj = Adj::of(g);
    fn extend(adj: &Adj, cands: &[usize], size: usize, best: &mut usize) {
        if size + cands.len() <= *best {
            return;
        }
        if cands.is_empty() {
            *best = (*best).max(size);
            return;
        }
        for (i, &v) in cands.iter().enumerate() {
            if size + (cands.len() - i) <= *best {
                break;
            }
            let next: Vec<usize> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&u| adj.at(u, v))
                .collect();
            extend(adj, &next, size + 1, best);
        }
    }
    let mut best = 0;
    let all: Vec<usize> = (0..g.n()).collect();
    extend(&adj, &all, 0, &mut best);
    best
}

/// Searches every pair of vertex subsets `A, B` with `|A|, |B| >= t` for a
/// sparseness violation `e(A, B) > (1 - c) |A| |B|`, over all sizes, not just
/// size exactly `t`. Returns the first violating pair in mask order. Hosts
/// are capped at 16 vertices so subsets fit in one machine word.
pub fn sparse_violation_all_sizes(
    gamma: &Graph,
    c: f64,
    t: usize,
    exec: Exec,
) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let n = gamma.n();
    if n > 16 {
        return Err(Error::Budget {
            what: "all-sizes sparseness scan",
            needed: n as u128,
            budget: 16,
        });
    }
    let rows: Vec<u32> = {
        let mut rows = vec![0u32; n];
        for (u, v) in gamma.edges() {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        rows
    };
    let full: u32 = (1u32 << n) - 1;
    let candidates: Vec<u32> = (0..=full)
        .filter(|m| (m.count_ones() as usize) >= t)
        .collect();

    let hit = exec::find_map_first(exec, candidates.len(), |ai| {
        let a = candidates[ai];
        let asz = a.count_ones() as u64;
        // e(A, B) is symmetric in (A, B), so only scan B at or after A.
        for &b in &candidates[ai..] {
            let bsz = b.count_ones() as u64;
            let mut e = 0u64;
            let mut bits = a;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                e += (rows[v] & b).count_ones() as u64;
            }
            if e as f64 > (1.0 - c) * (asz * bsz) as f64 {
                let unpack = |m: u32| (0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>();
                return Some((unpack(a), unpack(b)));
            }
        }
        None
    });
    Ok(hit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_count_is_twice_edge_count() {
        let g = Graph::cycle(6);
        let k2 = Graph::complete(2);
        assert_eq!(count_induced_in(&g, &g, &k2).unwrap(), 2 * 6);
    }

    #[test]
    fn path_count_in_five_cycle() {
        // Labeled induced paths on 3 vertices in C5: one center choice per
        // vertex, two endpoint orders.
        let c5 = Graph::cycle(5);
        let p3 = Graph::path(3);
        assert_eq!(count_induced_in(&c5, &c5, &p3).unwrap(), 10);
    }

    #[test]
    fn induced_vs_subgraph_counts_differ_on_k4() {
        let k4 = Graph::complete(4);
        let p3 = Graph::path(3);
        assert_eq!(count_induced_in(&k4, &k4, &p3).unwrap(), 0);
        assert_eq!(count_subgraph(&k4, &p3).unwrap(), 24);
    }

    #[test]
    fn max_avoiding_c4_in_c4() {
        // Dropping any one edge of C4 kills its only induced copy.
        let c4 = Graph::cycle(4);
        let (m, witness) = max_subgraph_avoiding(&c4, &c4).unwrap();
        assert_eq!(m, 3);
        assert_eq!(count_induced_in(&c4, &witness, &c4).unwrap(), 0);
    }

    #[test]
    fn turan_values() {
        let k3 = Graph::complete(3);
        let (m, witness) = turan_number(5, &k3).unwrap();
        assert_eq!(m, 6);
        assert_eq!(count_subgraph(&witness, &k3).unwrap(), 0);

        let c4 = Graph::cycle(4);
        let (m, _) = turan_number(4, &c4).unwrap();
        assert_eq!(m, 4);
    }

    #[test]
    fn clique_number_values() {
        assert_eq!(clique_number_bruteforce(&Graph::complete(5)), 5);
        assert_eq!(clique_number_bruteforce(&Graph::cycle(5)), 2);
        assert_eq!(clique_number_bruteforce(&Graph::empty(4)), 1);
    }

    #[test]
    fn all_sizes_scan_finds_clique_violation() {
        // K4 at (c, t) = (0.6, 2): any edge pair A = B = {u, v} already has
        // density 1/2 < 0.6 threshold... the full graph is denser. The scan
        // must find some violating pair.
        let k4 = Graph::complete(4);
        let hit = sparse_violation_all_sizes(&k4, 0.6, 2, Exec::Sequential).unwrap();
        let (a, b) = hit.expect("K4 is not (0.6, 2)-sparse");
        assert!(a.len() >= 2 && b.len() >= 2);

        // A perfect matching on 8 vertices is (1/2, 2)-sparse.
        let m4 = Graph::from_edges(8, [(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        assert!(
            sparse_violation_all_sizes(&m4, 0.5, 2, Exec::Sequential)
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn budget_errors_are_typed() {
        let big = Graph::empty(40);
        let k2 = Graph::complete(2);
        assert!(matches!(
            count_induced_in(&big, &big, &k2),
            Err(Error::Budget { .. })
        ));
        assert!(matches!(
            turan_number(12, &k2),
            Err(Error::Budget { .. })
        ));
    }
}
