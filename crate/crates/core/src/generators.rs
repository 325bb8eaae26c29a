//! Seeded host-graph families.
//!
//! All randomness comes from ChaCha8, a counter-based generator with
//! explicit streams; random families iterate vertex pairs in lexicographic
//! order, so a (parameters, seed) pair identifies one graph bit for bit,
//! here and in any reimplementation that honors the same conventions.

use std::collections::HashSet;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{self, Gfp2};
use crate::graph::Graph;
use crate::rng;

/// Erdos-Renyi graph: each unordered pair is an edge independently with
/// probability `p`, pairs visited in lexicographic order.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::param("p", "edge probability must lie in [0, 1]"));
    }
    let mut rng = rng::rng_for(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Quadratic-residue graph on GF(q): vertices are field elements, `x ~ y`
/// iff `x − y` is a nonzero square. Requires `q ≡ 1 (mod 4)` so that
/// adjacency is symmetric; `q` must be prime or the square of a prime.
pub fn paley(q: u64) -> Result<Graph> {
    if q % 4 != 1 {
        return Err(Error::param("q", "order must be 1 mod 4"));
    }
    if q > 1 << 20 {
        return Err(Error::param("q", "order too large"));
    }
    let n = q as usize;
    if field::is_prime(q) {
        let square = {
            let mut square = vec![false; n];
            for x in 1..q {
                square[(x * x % q) as usize] = true;
            }
            square
        };
        let mut edges = Vec::new();
        for u in 0..q {
            for v in u + 1..q {
                let diff = (v - u) % q;
                debug_assert_eq!(square[diff as usize], square[(q - diff) as usize]);
                if square[diff as usize] {
                    edges.push((u as usize, v as usize));
                }
            }
        }
        return Graph::from_edges(n, edges);
    }
    let p = q.isqrt();
    if p * p != q || !field::is_prime(p) {
        return Err(Error::param(
            "q",
            "order must be prime or the square of a prime",
        ));
    }
    let f = Gfp2::new(p)?;
    let square = {
        let mut square = vec![false; n];
        for i in 1..q {
            if f.is_nonzero_square(f.element(i)) {
                square[i as usize] = true;
            }
        }
        square
    };
    let mut edges = Vec::new();
    for u in 0..q {
        for v in u + 1..q {
            let diff = f.index(f.sub(f.element(v), f.element(u)));
            debug_assert_eq!(
                square[diff as usize],
                square[f.index(f.sub(f.element(u), f.element(v))) as usize]
            );
            if square[diff as usize] {
                edges.push((u as usize, v as usize));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// `k` disjoint cliques of size `s`; vertex `i` belongs to block `i / s`.
pub fn clique_union(k: usize, s: usize) -> Result<Graph> {
    if k == 0 || s == 0 {
        return Err(Error::param("k, s", "need at least one clique of size one"));
    }
    let mut edges = Vec::new();
    for block in 0..k {
        let base = block * s;
        for i in 0..s {
            for j in i + 1..s {
                edges.push((base + i, base + j));
            }
        }
    }
    Graph::from_edges(k * s, edges)
}

/// Point-line incidence graph of the projective plane over GF(p): bipartite,
/// (p+1)-regular, on 2(p² + p + 1) vertices, with no K_{2,2} subgraph since
/// two points lie on exactly one common line. Points come first, then lines.
pub fn projective_incidence(p: u64) -> Result<Graph> {
    if !field::is_prime(p) {
        return Err(Error::param("p", "plane order must be prime"));
    }
    if p > 101 {
        return Err(Error::param("p", "plane order capped at 101"));
    }
    // Normalized homogeneous triples: (1, y, z), (0, 1, z), (0, 0, 1).
    let mut triples: Vec<[u64; 3]> = Vec::new();
    for y in 0..p {
        for z in 0..p {
            triples.push([1, y, z]);
        }
    }
    for z in 0..p {
        triples.push([0, 1, z]);
    }
    triples.push([0, 0, 1]);
    let count = triples.len();
    debug_assert_eq!(count as u64, p * p + p + 1);

    let mut edges = Vec::new();
    for (pi, point) in triples.iter().enumerate() {
        for (li, line) in triples.iter().enumerate() {
            let dot: u64 = point.iter().zip(line).map(|(a, b)| a * b).sum();
            if dot % p == 0 {
                edges.push((pi, count + li));
            }
        }
    }
    Graph::from_edges(2 * count, edges)
}

/// Random bipartite graph on `k` vertices with no K_{s,r} subgraph, verified
/// exhaustively. Sampled at density k^{−(s+r−2)/(sr−1)}, then one edge of
/// each violating copy is deleted until none remain. For `k < s + r` the
/// complete balanced bipartite graph already fits the bill.
pub fn random_ksr_free(k: usize, s: usize, r: usize, seed: u64) -> Result<Graph> {
    if s < 2 || s > r {
        return Err(Error::param("s, r", "need 2 <= s <= r"));
    }
    if k > 64 {
        return Err(Error::Budget {
            what: "random_ksr_free vertex count",
            needed: k as u128,
            budget: 64,
        });
    }
    let left = k / 2;
    let right = k - left;
    if k < s + r {
        return Ok(Graph::complete_bipartite(left, right));
    }
    if binomial(left.max(right), s) > 2_000_000 {
        return Err(Error::Budget {
            what: "random_ksr_free subset enumeration",
            needed: binomial(left.max(right), s),
            budget: 2_000_000,
        });
    }

    let density = (k as f64).powf(-((s + r - 2) as f64) / ((s * r - 1) as f64));
    let mut rng = rng::rng_for(seed);
    // Left side is 0..left, right side is left..k; cross pairs in
    // lexicographic order.
    let mut adj: Vec<HashSet<usize>> = vec![HashSet::new(); k];
    for u in 0..left {
        for v in left..k {
            if rng.random_bool(density) {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
    }

    // Delete one random edge of each violating copy until a full pass over
    // both orientations finds none. Edge count strictly decreases, so this
    // terminates.
    loop {
        let violation = find_ksr(&adj, 0..left, left..k, s, r)
            .or_else(|| find_ksr(&adj, left..k, 0..left, s, r));
        match violation {
            None => break,
            Some((side_s, common)) => {
                let u = side_s[rng.random_range(0..side_s.len())];
                let v = common[rng.random_range(0..common.len())];
                adj[u].remove(&v);
                adj[v].remove(&u);
            }
        }
    }

    let mut edges = Vec::new();
    for u in 0..left {
        for &v in &adj[u] {
            edges.push((u, v));
        }
    }
    edges.sort_unstable();
    Graph::from_edges(k, edges)
}

/// First `s`-subset of `side_s` whose common neighborhood in `side_r` has at
/// least `r` vertices, returned with that common neighborhood.
fn find_ksr(
    adj: &[HashSet<usize>],
    side_s: std::ops::Range<usize>,
    side_r: std::ops::Range<usize>,
    s: usize,
    r: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let verts: Vec<usize> = side_s.collect();
    if verts.len() < s || side_r.len() < r {
        return None;
    }
    let mut chosen = Vec::with_capacity(s);
    fn rec(
        adj: &[HashSet<usize>],
        verts: &[usize],
        start: usize,
        s: usize,
        r: usize,
        side_r: &std::ops::Range<usize>,
        chosen: &mut Vec<usize>,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        if chosen.len() == s {
            let common: Vec<usize> = side_r
                .clone()
                .filter(|v| chosen.iter().all(|&u| adj[u].contains(v)))
                .collect();
            if common.len() >= r {
                return Some((chosen.clone(), common));
            }
            return None;
        }
        for i in start..verts.len() {
            chosen.push(verts[i]);
            if let Some(hit) = rec(adj, verts, i + 1, s, r, side_r, chosen) {
                return Some(hit);
            }
            chosen.pop();
        }
        None
    }
    rec(adj, &verts, 0, s, r, &side_r, &mut chosen)
}

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
