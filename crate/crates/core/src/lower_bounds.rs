//! Constructions bounding from below how many edges an induced-H-free
//! subgraph of a host can have: random-bijection quotient subgraphs, partial
//! covers of vertex-transitive hosts by sampled maximum cliques, and the
//! clique-quotient families that tell us which auxiliary graphs are safe.

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rng;
use crate::sparseness::CliqueCover;

/// Bipartite clique quotients of a pattern, deduplicated up to isomorphism.
#[derive(Clone, Debug)]
pub struct QuotientFamily {
    source: Graph,
    members: Vec<Graph>,
}

impl QuotientFamily {
    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }
}

/// Output of [`build_random_quotient_subgraph`].
#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub subgraph: Graph,
    pub cover_size: usize,
    pub auxiliary: Graph,
    pub bijection_seed: u64,
    /// Exact expectation bound e(Γ)·e(F)/C(k,2) as a fraction.
    pub bound_num: u128,
    pub bound_den: u128,
    /// Whether the auxiliary graph was bipartite; a non-bipartite F still
    /// yields a subgraph but no induced-freeness guarantee.
    pub aux_bipartite: bool,
}

impl ConstructionResult {
    pub fn guaranteed_bound(&self) -> f64 {
        self.bound_num as f64 / self.bound_den as f64
    }
}

/// Keeps all intra-clique edges of the cover, plus the Γ-edges between
/// cliques `i, j` whenever the uniform random bijection `f` sends them to an
/// edge `(f(i), f(j))` of `F`. In expectation the result has at least
/// e(Γ)·e(F)/C(k,2) edges, and it is induced K_{s,r}-free whenever F has no
/// K_{s,r} subgraph with 2 <= s <= r and r != 2.
pub fn build_random_quotient_subgraph(
    gamma: &Graph,
    cover: &CliqueCover,
    aux: &Graph,
    seed: u64,
) -> Result<ConstructionResult> {
    cover.validate(gamma)?;
    let k = cover.size();
    if aux.n() != k {
        return Err(Error::UniverseMismatch {
            left: aux.n(),
            right: k,
        });
    }

    let mut part_of = vec![usize::MAX; gamma.n()];
    for (i, part) in cover.parts().iter().enumerate() {
        for v in part.iter() {
            part_of[v] = i;
        }
    }

    let mut f: Vec<usize> = (0..k).collect();
    f.shuffle(&mut rng::rng_for(seed));

    let edges: Vec<(usize, usize)> = gamma
        .edges()
        .filter(|&(u, v)| {
            let (i, j) = (part_of[u], part_of[v]);
            i == j || aux.adjacent(f[i], f[j])
        })
        .collect();
    let subgraph = Graph::from_edges(gamma.n(), edges)?;
    debug_assert!(subgraph.is_spanning_subgraph_of(gamma));

    let den = (k * k.saturating_sub(1) / 2) as u128;
    Ok(ConstructionResult {
        subgraph,
        cover_size: k,
        auxiliary: aux.clone(),
        bijection_seed: seed,
        bound_num: if den == 0 {
            0
        } else {
            gamma.edge_count() as u128 * aux.edge_count() as u128
        },
        bound_den: den.max(1),
        aux_bipartite: aux.bipartition().is_some(),
    })
}

/// Covers at least 3/4 of a vertex-transitive host with `k = ⌈ln4·n/ω⌉`
/// independently sampled maximum cliques, retrying whole batches until the
/// coverage threshold is met. The sampler receives (count, seed) and must
/// yield uniform maximum cliques; every returned set is re-checked.
pub fn vt_partial_cover<S>(
    gamma: &Graph,
    mut sampler: S,
    seed: u64,
    retry_budget: u64,
) -> Result<(Vec<VertexSet>, VertexSet)>
where
    S: FnMut(usize, u64) -> Result<Vec<VertexSet>>,
{
    let n = gamma.n();
    if n == 0 {
        return Err(Error::EmptySet { context: "host" });
    }
    let probe = sampler(1, rng::mix_seed(seed, u64::MAX))?;
    let omega = probe
        .first()
        .ok_or(Error::EmptySet {
            context: "clique sampler output",
        })?
        .len();
    if omega == 0 {
        return Err(Error::EmptySet {
            context: "sampled clique",
        });
    }
    let k = ((4f64.ln() * n as f64) / omega as f64).ceil() as usize;

    for attempt in 0..retry_budget {
        let cliques = sampler(k, rng::mix_seed(seed, attempt))?;
        if cliques.len() != k {
            return Err(Error::Internal(format!(
                "sampler returned {} cliques, asked for {k}",
                cliques.len()
            )));
        }
        let mut covered = VertexSet::empty(n);
        for clique in &cliques {
            let members = clique.to_vec();
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    if !gamma.adjacent(u, v) {
                        return Err(Error::Internal(format!(
                            "sampler output is not a clique: {u} !~ {v}"
                        )));
                    }
                }
            }
            covered.union_with(clique);
        }
        if covered.len() * 4 >= 3 * n {
            return Ok((cliques, covered));
        }
    }
    Err(Error::RetriesExhausted("partial cover coverage threshold"))
}

/// Turns possibly overlapping cliques into disjoint ones: processed in
/// order, each keeps only its not-yet-covered vertices (subsets of cliques
/// are cliques). Empty remainders are dropped. The union is unchanged.
pub fn disjointify(parts: &[VertexSet], n: usize) -> Vec<VertexSet> {
    let mut covered = VertexSet::empty(n);
    let mut out = Vec::new();
    for part in parts {
        let rest = part.difference(&covered);
        if !rest.is_empty() {
            covered.union_with(&rest);
            out.push(rest);
        }
    }
    out
}

/// Restricts `gamma` to the union of `parts` (compacting vertex ids) and
/// packages the disjointified parts as a full cover of the restriction.
/// Returns the compacted host, the new-to-old id map, and the cover.
pub fn compact_cover(
    gamma: &Graph,
    parts: &[VertexSet],
) -> Result<(Graph, Vec<usize>, CliqueCover)> {
    let disjoint = disjointify(parts, gamma.n());
    let mut covered = VertexSet::empty(gamma.n());
    for p in &disjoint {
        covered.union_with(p);
    }
    let (sub, ids) = gamma.induced_compact(&covered);
    let mut old_to_new = vec![usize::MAX; gamma.n()];
    for (new, &old) in ids.iter().enumerate() {
        old_to_new[old] = new;
    }
    let remapped: Result<Vec<VertexSet>> = disjoint
        .iter()
        .map(|p| VertexSet::from_indices(sub.n(), p.iter().map(|v| old_to_new[v])))
        .collect();
    let cover = CliqueCover::from_parts(&sub, remapped?)?;
    Ok((sub, ids, cover))
}

/// All bipartite clique quotients of `h`, up to isomorphism.
///
/// A quotient contracts a set of vertex-disjoint cliques (each part of a
/// partition of V(H) into cliques); for bipartite H those sets are exactly
/// the matchings. Members are deduplicated by isomorphism testing within
/// invariant buckets and sorted by (order, size, degree sequence).
pub fn clique_quotients(h: &Graph) -> Result<QuotientFamily> {
    if h.n() > 12 {
        return Err(Error::Budget {
            what: "clique_quotients pattern size",
            needed: h.n() as u128,
            budget: 12,
        });
    }
    if h.n() == 0 {
        return Err(Error::EmptySet { context: "pattern" });
    }

    const PARTITION_BUDGET: u64 = 2_000_000;
    let mut members: Vec<Graph> = Vec::new();
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut count = 0u64;

    fn rec(
        h: &Graph,
        v: usize,
        parts: &mut Vec<Vec<usize>>,
        members: &mut Vec<Graph>,
        count: &mut u64,
    ) -> Result<()> {
        if v == h.n() {
            *count += 1;
            if *count > PARTITION_BUDGET {
                return Err(Error::Budget {
                    what: "clique partition enumeration",
                    needed: *count as u128,
                    budget: PARTITION_BUDGET as u128,
                });
            }
            if let Some(q) = quotient_graph(h, parts) {
                if !members.iter().any(|m| isomorphic(m, &q)) {
                    members.push(q);
                }
            }
            return Ok(());
        }
        // Join an existing part if v is adjacent to all of it, or start a
        // new one; parts are created in vertex order, so each partition is
        // visited exactly once.
        for i in 0..parts.len() {
            if parts[i].iter().all(|&u| h.adjacent(u, v)) {
                parts[i].push(v);
                rec(h, v + 1, parts, members, count)?;
                parts[i].pop();
            }
        }
        parts.push(vec![v]);
        rec(h, v + 1, parts, members, count)?;
        parts.pop();
        Ok(())
    }
    rec(h, 0, &mut parts, &mut members, &mut count)?;

    members.sort_by_key(|g| {
        let mut degs = g.degrees();
        degs.sort_unstable();
        (g.n(), g.edge_count(), degs)
    });
    Ok(QuotientFamily {
        source: h.clone(),
        members,
    })
}

/// Contracts each part to one vertex; `None` when the quotient is not
/// bipartite.
fn quotient_graph(h: &Graph, parts: &[Vec<usize>]) -> Option<Graph> {
    let k = parts.len();
    let mut part_of = vec![usize::MAX; h.n()];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            part_of[v] = i;
        }
    }
    let mut edges = Vec::new();
    for (u, v) in h.edges() {
        let (i, j) = (part_of[u], part_of[v]);
        if i != j {
            let e = (i.min(j), i.max(j));
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
    }
    let q = Graph::from_edges(k, edges).expect("contracted edges are in range");
    q.bipartition().is_some().then_some(q)
}

/// Label-preserving isomorphism test by backtracking, with degree-sequence
/// and size pre-checks. Exhaustive permutation search is avoided on purpose;
/// the candidate filtering keeps this fast at the sizes quotients can have.
fn isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return false;
    }
    let n = g1.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(g1: &Graph, g2: &Graph, v: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if v == g1.n() {
            return true;
        }
        for cand in 0..g2.n() {
            if used[cand] || g1.degree(v) != g2.degree(cand) {
                continue;
            }
            let consistent =
                (0..v).all(|u| g1.adjacent(u, v) == g2.adjacent(map[u], cand));
            if consistent {
                map[v] = cand;
                used[cand] = true;
                if rec(g1, g2, v + 1, map, used) {
                    return true;
                }
                used[cand] = false;
                map[v] = usize::MAX;
            }
        }
        false
    }
    rec(g1, g2, 0, &mut map, &mut used)
}

/// True iff no family member occurs in `f` as a (not necessarily induced)
/// subgraph.
pub fn family_subgraph_free(f: &Graph, family: &QuotientFamily) -> Result<bool> {
    if f.n() > 64 {
        return Err(Error::param("F", "auxiliary graph capped at 64 vertices"));
    }
    for member in &family.members {
        if has_subgraph(f, member) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Backtracking subgraph embedding test (edges must map to edges, non-edges
/// unconstrained). Pattern vertices are ordered so each, after the first of
/// its component, has an already placed neighbor.
fn has_subgraph(host: &Graph, pattern: &Graph) -> bool {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return false;
    }
    let order = connectivity_order(pattern);
    let mut map = vec![usize::MAX; pattern.n()];
    let mut used = vec![false; host.n()];
    fn rec(
        host: &Graph,
        pattern: &Graph,
        order: &[usize],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let pv = order[depth];
        // Any placed pattern-neighbor constrains candidates to a host
        // neighborhood; otherwise scan all hosts.
        let anchor = pattern
            .neighbors(pv)
            .iter()
            .find(|&u| map[u] != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(u) => host.neighbors(map[u]).iter().collect(),
            None => (0..host.n()).collect(),
        };
        for cand in candidates {
            if used[cand] || host.degree(cand) < pattern.degree(pv) {
                continue;
            }
            let ok = pattern
                .neighbors(pv)
                .iter()
                .all(|u| map[u] == usize::MAX || host.adjacent(map[u], cand));
            if ok {
                map[pv] = cand;
                used[cand] = true;
                if rec(host, pattern, order, depth + 1, map, used) {
                    return true;
                }
                used[cand] = false;
                map[pv] = usize::MAX;
            }
        }
        false
    }
    rec(host, pattern, &order, 0, &mut map, &mut used)
}

/// Pattern vertices ordered so that each one after a component's start has
/// a neighbor earlier in the order; components start at their highest-degree
/// vertex.
fn connectivity_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let root = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertices remain");
        let mut queue = std::collections::VecDeque::from([root]);
        placed[root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for u in g.neighbors(v).iter() {
                if !placed[u] {
                    placed[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::oracle;
    use crate::sparseness::{clique_cover, subfield_cliques, CoverMode};

    #[test]
    fn empty_aux_keeps_exactly_the_cliques() {
        let gamma = Graph::complete(6);
        let cover = clique_cover(
            &Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap(),
            CoverMode::Greedy,
        )
        .unwrap();
        let f = Graph::empty(3);
        let res = build_random_quotient_subgraph(&gamma, &cover, &f, 0).unwrap();
        assert_eq!(res.subgraph.edge_count(), 3);
        assert_eq!(res.bound_num, 0);
        assert!(res.aux_bipartite);
    }

    #[test]
    fn k2_aux_on_two_cliques_keeps_everything() {
        let gamma = Graph::complete(4);
        let cover = CliqueCover::from_parts(
            &gamma,
            vec![
                VertexSet::from_indices(4, [0, 1]).unwrap(),
                VertexSet::from_indices(4, [2, 3]).unwrap(),
            ],
        )
        .unwrap();
        let f = Graph::complete(2);
        for seed in 0..4 {
            let res = build_random_quotient_subgraph(&gamma, &cover, &f, seed).unwrap();
            assert_eq!(res.subgraph.edge_count(), 6);
            assert_eq!((res.bound_num, res.bound_den), (6, 1));
        }
    }

    #[test]
    fn size_mismatch_is_an_input_error() {
        let gamma = Graph::complete(4);
        let cover = clique_cover(&gamma, CoverMode::Greedy).unwrap();
        let f = Graph::empty(3);
        assert!(matches!(
            build_random_quotient_subgraph(&gamma, &cover, &f, 0),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn quotient_subgraph_is_induced_free_with_safe_aux() {
        // F is K_{2,3}-subgraph-free with r = 3 > 2, so every output must be
        // induced-K_{2,3}-free; check exhaustively at oracle scale.
        let k23 = Graph::complete_bipartite(2, 3);
        for seed in 0..10u64 {
            let gamma = generators::gnp(13, 0.6, 100 + seed).unwrap();
            let cover = clique_cover(&gamma, CoverMode::Greedy).unwrap();
            let f = generators::random_ksr_free(cover.size(), 2, 3, seed).unwrap();
            let res = build_random_quotient_subgraph(&gamma, &cover, &f, seed).unwrap();
            assert!(res.subgraph.is_spanning_subgraph_of(&gamma));
            assert_eq!(
                oracle::count_induced_in(&res.subgraph, &res.subgraph, &k23).unwrap(),
                0,
                "seed {seed}"
            );
        }
    }

    #[test]
    fn expectation_bound_holds_on_average() {
        let gamma = generators::gnp(20, 0.5, 42).unwrap();
        let cover = clique_cover(&gamma, CoverMode::Greedy).unwrap();
        let f = generators::random_ksr_free(cover.size(), 2, 3, 7).unwrap();
        let mut total = 0u64;
        let trials = 200;
        let mut bound = 0.0;
        for seed in 0..trials {
            let res = build_random_quotient_subgraph(&gamma, &cover, &f, seed).unwrap();
            total += res.subgraph.edge_count() as u64;
            bound = res.guaranteed_bound();
        }
        let mean = total as f64 / trials as f64;
        assert!(
            mean >= 0.9 * bound,
            "mean {mean} fell below 0.9x the expectation bound {bound}"
        );
    }

    #[test]
    fn vt_cover_on_complete_host() {
        let gamma = Graph::complete(10);
        let full = gamma.full_vertex_set();
        let sampler =
            |count: usize, _seed: u64| Ok(vec![full.clone(); count]);
        let (cliques, covered) = vt_partial_cover(&gamma, sampler, 0, 5).unwrap();
        assert_eq!(cliques.len(), 2); // ceil(ln4) = 2
        assert_eq!(covered.len(), 10);
    }

    #[test]
    fn vt_cover_on_quadratic_residue_host() {
        let gamma = generators::paley(25).unwrap();
        let sampler = |count: usize, seed: u64| subfield_cliques(25, count, seed);
        let (cliques, covered) = vt_partial_cover(&gamma, sampler, 3, 50).unwrap();
        assert_eq!(cliques.len(), 7); // ceil(ln4 * 25 / 5)
        assert!(covered.len() * 4 >= 75);

        // Regular host: the induced subgraph on covered keeps half the edges.
        let keep = covered.clone();
        let sub = gamma.induced_zeroed(&keep);
        assert!(sub.edge_count() * 2 >= gamma.edge_count());

        // Disjointified parts still cover the same set and compact into a
        // valid full cover of the restriction.
        let (sub_c, ids, cover) = compact_cover(&gamma, &cliques).unwrap();
        assert_eq!(sub_c.n(), covered.len());
        assert_eq!(ids.len(), covered.len());
        cover.validate(&sub_c).unwrap();
    }

    #[test]
    fn vt_cover_retries_exhaust_on_bad_sampler() {
        let gamma = Graph::complete(8);
        // A sampler stuck on one vertex never reaches 3/4 coverage.
        let lone = VertexSet::singleton(8, 0);
        let sampler = |count: usize, _| Ok(vec![lone.clone(); count]);
        assert!(matches!(
            vt_partial_cover(&gamma, sampler, 0, 3),
            Err(Error::RetriesExhausted("partial cover coverage threshold"))
        ));
    }

    #[test]
    fn quotients_of_even_cycle() {
        let fam = clique_quotients(&Graph::cycle(6)).unwrap();
        // Bipartite quotients of C_6: itself and C_4.
        assert_eq!(fam.members().len(), 2);
        assert!(fam.members().iter().any(|m| isomorphic(m, &Graph::cycle(6))));
        assert!(fam.members().iter().any(|m| isomorphic(m, &Graph::cycle(4))));
    }

    #[test]
    fn quotients_of_k2_and_k23() {
        let fam = clique_quotients(&Graph::complete(2)).unwrap();
        assert_eq!(fam.members().len(), 2);
        assert!(fam.members().iter().any(|m| m.n() == 1));
        assert!(fam
            .members()
            .iter()
            .any(|m| isomorphic(m, &Graph::complete(2))));

        let k23 = Graph::complete_bipartite(2, 3);
        let fam = clique_quotients(&k23).unwrap();
        assert_eq!(fam.members().len(), 1);
        assert!(isomorphic(&fam.members()[0], &k23));

        // A bipartite source is always its own quotient (empty matching).
        for h in [Graph::path(5), Graph::complete_bipartite(2, 2)] {
            let fam = clique_quotients(&h).unwrap();
            assert!(fam.members().iter().any(|m| isomorphic(m, &h)));
        }

        assert!(clique_quotients(&Graph::empty(13)).is_err());
    }

    #[test]
    fn family_freeness_checks() {
        let fam_c6 = clique_quotients(&Graph::cycle(6)).unwrap();
        // Forests contain no cycle at all.
        assert!(family_subgraph_free(&Graph::path(10), &fam_c6).unwrap());
        // C_4 is a member, so any graph containing C_4 fails.
        assert!(!family_subgraph_free(&Graph::cycle(4), &fam_c6).unwrap());
        assert!(!family_subgraph_free(&Graph::complete_bipartite(3, 3), &fam_c6).unwrap());
        // Girth 6 kills C_4 but the source C_6 is a member too, and a
        // girth-6 graph contains hexagons by definition.
        let heawood = generators::projective_incidence(2).unwrap();
        assert_eq!(heawood.girth(), Some(6));
        assert!(!family_subgraph_free(&heawood, &fam_c6).unwrap());

        // Girth 8 clears both members. The lone cycle of C_8 is C_8.
        assert!(family_subgraph_free(&Graph::cycle(8), &fam_c6).unwrap());

        let too_big = Graph::empty(65);
        assert!(family_subgraph_free(&too_big, &fam_c6).is_err());
    }

    #[test]
    fn isomorphism_test_basics() {
        assert!(isomorphic(&Graph::cycle(4), &Graph::complete_bipartite(2, 2)));
        assert!(!isomorphic(&Graph::cycle(6), &Graph::complete_bipartite(3, 3)));
        assert!(!isomorphic(&Graph::path(4), &Graph::cycle(4)));
        // Same degree sequence, different graphs: C_6 vs two triangles.
        let two_triangles = generators::clique_union(2, 3).unwrap();
        assert!(!isomorphic(&Graph::cycle(6), &two_triangles));
    }
}
