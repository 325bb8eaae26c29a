//! Immutable simple graphs with bitset adjacency rows, vertex sets over a
//! fixed universe, and labeled embeddings of pattern graphs.
//!
//! Adjacency is stored as one bit row per vertex so neighborhood
//! intersections, differences and pair counts run word-parallel. Graphs are
//! built once and never mutated; derived graphs (induced subgraphs,
//! complements, edge-filtered copies) are new values.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline(always)]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// Mask selecting the valid bits of the last word of an n-bit row.
#[inline(always)]
fn tail_mask(n: usize) -> u64 {
    let rem = n % WORD_BITS;
    if rem == 0 {
        !0u64
    } else {
        (1u64 << rem) - 1
    }
}

/// Subset of the vertices of a graph on `n` vertices, stored as a bitset.
///
/// All binary operations require both operands to share the same universe
/// size; mixing universes is a programming error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Box<[u64]>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0u64; words_for(n)].into_boxed_slice(),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut words = vec![!0u64; words_for(n)].into_boxed_slice();
        if let Some(last) = words.last_mut() {
            *last &= tail_mask(n);
        }
        VertexSet { n, words }
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = VertexSet::empty(n);
        s.insert(v);
        s
    }

    /// Builds a set from vertex indices, rejecting out-of-range entries.
    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = VertexSet::empty(n);
        for v in indices {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub(crate) fn from_words(n: usize, words: Box<[u64]>) -> Self {
        debug_assert_eq!(words.len(), words_for(n));
        VertexSet { n, words }
    }

    #[inline(always)]
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline(always)]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Inserts `v`, returning whether it was new. Panics if `v` is out of
    /// range; validated inputs should go through `from_indices`.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} out of universe {}", self.n);
        let w = &mut self.words[v / WORD_BITS];
        let bit = 1u64 << (v % WORD_BITS);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} out of universe {}", self.n);
        let w = &mut self.words[v / WORD_BITS];
        let bit = 1u64 << (v % WORD_BITS);
        let present = *w & bit != 0;
        *w &= !bit;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn check_universe(&self, other: &VertexSet) {
        assert_eq!(
            self.n, other.n,
            "vertex sets over different universes ({} vs {})",
            self.n, other.n
        );
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.subtract(other);
        out
    }

    pub fn complement(&self) -> VertexSet {
        let mut words: Box<[u64]> = self.words.iter().map(|w| !w).collect();
        if let Some(last) = words.last_mut() {
            *last &= tail_mask(self.n);
        }
        VertexSet { n: self.n, words }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn intersection_size(&self, other: &VertexSet) -> usize {
        self.check_universe(other);
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Lowest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// The k-th member in increasing order (0-based). Panics if `k >= len()`.
    pub fn nth_member(&self, mut k: usize) -> usize {
        for (i, &w) in self.words.iter().enumerate() {
            let c = w.count_ones() as usize;
            if k < c {
                let mut w = w;
                for _ in 0..k {
                    w &= w - 1;
                }
                return i * WORD_BITS + w.trailing_zeros() as usize;
            }
            k -= c;
        }
        panic!("nth_member index out of range");
    }

    pub fn iter(&self) -> VertexSetIter<'_> {
        VertexSetIter {
            set: self,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet({:?} of {})", self.to_vec(), self.n)
    }
}

pub struct VertexSetIter<'a> {
    set: &'a VertexSet,
    word_idx: usize,
    current: u64,
}

impl Iterator for VertexSetIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD_BITS + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_idx];
        }
    }
}

/// Immutable simple graph. Vertices are `0..n`; adjacency is symmetric with
/// no self-loops.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    row_words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            row_words: words_for(n),
            rows: vec![0u64; n * words_for(n)],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting out-of-range endpoints,
    /// self-loops and duplicate edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop { v });
        }
        if self.adjacent(u, v) {
            return Err(Error::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            });
        }
        self.rows[u * self.row_words + v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
        self.rows[v * self.row_words + u / WORD_BITS] |= 1u64 << (u % WORD_BITS);
        self.m += 1;
        Ok(())
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// Cycle on `n >= 3` vertices in index order.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|u| (u, (u + 1) % n))).unwrap()
    }

    /// Path 0 - 1 - ... - (n-1).
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (0..n.saturating_sub(1)).map(|u| (u, u + 1))).unwrap()
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::from_edges(a + b, (0..a).flat_map(move |u| (a..a + b).map(move |v| (u, v))))
            .unwrap()
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline(always)]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline(always)]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.row_words..(v + 1) * self.row_words]
    }

    #[inline(always)]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.rows[u * self.row_words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        assert!(v < self.n, "vertex {v} out of range");
        VertexSet::from_words(self.n, self.row(v).to_vec().into_boxed_slice())
    }

    /// Neighbors of `v` inside `within`.
    pub fn neighbors_in(&self, v: usize, within: &VertexSet) -> VertexSet {
        assert_eq!(within.universe(), self.n);
        let words: Box<[u64]> = self
            .row(v)
            .iter()
            .zip(within.words().iter())
            .map(|(a, b)| a & b)
            .collect();
        VertexSet::from_words(self.n, words)
    }

    pub fn degree_in(&self, v: usize, within: &VertexSet) -> usize {
        assert_eq!(within.universe(), self.n);
        self.row(v)
            .iter()
            .zip(within.words().iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Edges in ascending `(u, v)` order with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
                .collect::<Vec<_>>()
        })
    }

    pub fn full_vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::UniverseMismatch {
                left: s.universe(),
                right: self.n,
            });
        }
        Ok(())
    }

    /// Ordered-pair edge count `e(A, B) = |{(a, b) : a in A, b in B, ab is an
    /// edge}|`. Edges with both endpoints in `A` and `B` are counted in both
    /// orientations. Errors on an empty side or a universe mismatch.
    pub fn pair_count(&self, a: &VertexSet, b: &VertexSet) -> Result<u64> {
        self.check_set(a)?;
        self.check_set(b)?;
        if a.is_empty() {
            return Err(Error::EmptySet {
                context: "pair_count side A",
            });
        }
        if b.is_empty() {
            return Err(Error::EmptySet {
                context: "pair_count side B",
            });
        }
        let mut total = 0u64;
        for v in a.iter() {
            total += self
                .row(v)
                .iter()
                .zip(b.words().iter())
                .map(|(x, y)| (x & y).count_ones() as u64)
                .sum::<u64>();
        }
        Ok(total)
    }

    /// `e(A, B) / (|A| |B|)`.
    pub fn pair_density(&self, a: &VertexSet, b: &VertexSet) -> Result<f64> {
        let e = self.pair_count(a, b)?;
        Ok(e as f64 / (a.len() as f64 * b.len() as f64))
    }

    /// Intersection of the neighborhoods of the vertices in `s`. The empty
    /// set has no well-defined common neighborhood and is rejected.
    pub fn common_neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        let mut it = s.iter();
        let first = it.next().ok_or(Error::EmptySet {
            context: "common_neighborhood",
        })?;
        let mut acc = self.neighbors(first);
        for v in it {
            let words: Box<[u64]> = acc
                .words()
                .iter()
                .zip(self.row(v).iter())
                .map(|(a, b)| a & b)
                .collect();
            acc = VertexSet::from_words(self.n, words);
        }
        Ok(acc)
    }

    /// Union of the neighborhoods of the vertices in `s`. Empty input yields
    /// the empty set. Members of `s` are included only if some other member
    /// (or they themselves via a neighbor) is adjacent to them.
    pub fn union_neighborhood(&self, s: &VertexSet) -> VertexSet {
        assert_eq!(s.universe(), self.n);
        let mut acc = VertexSet::empty(self.n);
        for v in s.iter() {
            for (a, b) in acc.words.iter_mut().zip(self.row(v).iter()) {
                *a |= b;
            }
        }
        acc
    }

    /// Subgraph on the same vertex set keeping only edges with both endpoints
    /// in `keep`.
    pub fn induced_zeroed(&self, keep: &VertexSet) -> Graph {
        assert_eq!(keep.universe(), self.n);
        let mut g = Graph::empty(self.n);
        for u in keep.iter() {
            let row = &mut g.rows[u * g.row_words..(u + 1) * g.row_words];
            for (out, (a, b)) in row
                .iter_mut()
                .zip(self.row(u).iter().zip(keep.words().iter()))
            {
                *out = a & b;
            }
        }
        g.m = (0..self.n).map(|v| g.degree(v)).sum::<usize>() / 2;
        g
    }

    /// Induced subgraph relabeled to `0..keep.len()`. The returned map sends
    /// new labels to original vertex ids (ascending).
    pub fn induced_compact(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        assert_eq!(keep.universe(), self.n);
        let old_ids = keep.to_vec();
        let mut g = Graph::empty(old_ids.len());
        for (i, &u) in old_ids.iter().enumerate() {
            for (j, &v) in old_ids.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.add_edge_checked(i, j).unwrap();
                }
            }
        }
        (g, old_ids)
    }

    /// Whether every edge of `self` is an edge of `host` (same vertex set).
    pub fn is_spanning_subgraph_of(&self, host: &Graph) -> bool {
        self.n == host.n
            && self
                .rows
                .iter()
                .zip(host.rows.iter())
                .all(|(a, b)| a & !b == 0)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    g.add_edge_checked(u, v).unwrap();
                }
            }
        }
        g
    }

    /// New graph keeping exactly the edges approved by `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            if keep(u, v) {
                g.add_edge_checked(u, v).unwrap();
            }
        }
        g
    }

    /// Two-coloring if the graph is bipartite. Each component's lowest vertex
    /// lands on the first side, so the split is deterministic.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..self.n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u).iter() {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        let mut a = VertexSet::empty(self.n);
        let mut b = VertexSet::empty(self.n);
        for (v, &s) in side.iter().enumerate() {
            if s == 0 {
                a.insert(v);
            } else {
                b.insert(v);
            }
        }
        Some((a, b))
    }

    /// Length of a shortest cycle, or `None` for a forest. BFS from every
    /// vertex; the minimum over starts on a shortest cycle is exact.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u).iter() {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m)
    }
}

/// Injective assignment of pattern vertices to host vertices.
///
/// Injectivity is a construction invariant: `insert` and `from_pairs` reject
/// colliding images, so a value of this type never maps two pattern vertices
/// to the same host vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Embedding {
    map: BTreeMap<usize, usize>,
    source: String,
}

impl Embedding {
    pub fn new(source: impl Into<String>) -> Self {
        Embedding {
            map: BTreeMap::new(),
            source: source.into(),
        }
    }

    pub fn from_pairs(
        source: impl Into<String>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut e = Embedding::new(source);
        for (p, g) in pairs {
            e.insert(p, g)?;
        }
        Ok(e)
    }

    /// Maps pattern vertex `p` to host vertex `g`. Rejects reassignment of
    /// `p` and any image collision.
    pub fn insert(&mut self, p: usize, g: usize) -> Result<()> {
        if let Some(&prev) = self.map.get(&p) {
            return Err(Error::Internal(format!(
                "pattern vertex {p} already mapped to {prev}"
            )));
        }
        if let Some((&other, _)) = self.map.iter().find(|(_, &img)| img == g) {
            return Err(Error::NotInjective {
                pattern_vertex: p,
                other,
                image: g,
            });
        }
        self.map.insert(p, g);
        Ok(())
    }

    pub fn get(&self, p: usize) -> Option<usize> {
        self.map.get(&p).copied()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map.iter().map(|(&p, &g)| (p, g))
    }

    pub fn domain(&self) -> Vec<usize> {
        self.map.keys().copied().collect()
    }

    pub fn image_vec(&self) -> Vec<usize> {
        self.map.values().copied().collect()
    }

    pub fn image_set(&self, n: usize) -> Result<VertexSet> {
        VertexSet::from_indices(n, self.map.values().copied())
    }

    /// Restriction to the pattern vertices in `keys`.
    pub fn restrict(&self, keys: &[usize]) -> Embedding {
        let mut e = Embedding::new(self.source.clone());
        for &k in keys {
            if let Some(&g) = self.map.get(&k) {
                e.map.insert(k, g);
            }
        }
        e
    }

    /// Copy with pattern vertex `p` removed.
    pub fn without(&self, p: usize) -> Embedding {
        let mut e = self.clone();
        e.map.remove(&p);
        e
    }
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Embedding[{}]{:?}", self.source, self.map)
    }
}

/// Checks that `phi` is a copy of `pattern` in `g` that is induced in
/// `gamma`: pattern edges map to `g`-edges and pattern non-edges map to
/// `gamma`-non-edges.
///
/// `g` is expected to be a spanning subgraph of `gamma` over the same vertex
/// set (callers validate that once at host construction); this function
/// checks the mapping itself. Errors if `phi` does not cover every pattern
/// vertex or maps outside the host.
pub fn is_copy_induced_in(
    g: &Graph,
    gamma: &Graph,
    pattern: &Graph,
    phi: &Embedding,
) -> Result<bool> {
    if g.n() != gamma.n() {
        return Err(Error::UniverseMismatch {
            left: g.n(),
            right: gamma.n(),
        });
    }
    let mut images = Vec::with_capacity(pattern.n());
    for p in 0..pattern.n() {
        let img = phi.get(p).ok_or(Error::NotTotal { missing: p })?;
        if img >= g.n() {
            return Err(Error::VertexOutOfRange { v: img, n: g.n() });
        }
        images.push(img);
    }
    for i in 0..pattern.n() {
        for j in i + 1..pattern.n() {
            if pattern.adjacent(i, j) {
                if !g.adjacent(images[i], images[j]) {
                    return Ok(false);
                }
            } else if gamma.adjacent(images[i], images[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_ops() {
        let mut a = VertexSet::empty(130);
        assert!(a.insert(0));
        assert!(a.insert(64));
        assert!(a.insert(129));
        assert!(!a.insert(129));
        assert_eq!(a.len(), 3);
        assert_eq!(a.to_vec(), vec![0, 64, 129]);

        let b = VertexSet::from_indices(130, [64, 65]).unwrap();
        assert_eq!(a.intersection(&b).to_vec(), vec![64]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 129]);
        assert_eq!(a.union(&b).len(), 4);
        assert!(!a.is_disjoint_from(&b));
        assert!(VertexSet::empty(130).is_subset_of(&a));

        let full = VertexSet::full(130);
        assert_eq!(full.len(), 130);
        assert_eq!(full.complement().len(), 0);
        assert_eq!(a.nth_member(1), 64);
    }

    #[test]
    fn vertex_set_rejects_out_of_range() {
        assert!(matches!(
            VertexSet::from_indices(5, [5]),
            Err(Error::VertexOutOfRange { v: 5, n: 5 })
        ));
    }

    #[test]
    fn graph_construction_validates() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 0)]),
            Err(Error::SelfLoop { v: 0 })
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { v: 3, n: 3 })
        ));
    }

    #[test]
    fn pair_count_examples() {
        // Whole triangle against itself: every ordered adjacent pair, 2e = 6.
        let k3 = Graph::complete(3);
        let all = k3.full_vertex_set();
        assert_eq!(k3.pair_count(&all, &all).unwrap(), 6);

        // A = B = a single edge: counted once per orientation.
        let g = Graph::from_edges(4, [(0, 1)]).unwrap();
        let ab = VertexSet::from_indices(4, [0, 1]).unwrap();
        assert_eq!(g.pair_count(&ab, &ab).unwrap(), 2);

        // Clique density on A = B of size a is 1 - 1/a.
        let k5 = Graph::complete(5);
        let a = VertexSet::from_indices(5, [0, 1, 2, 3]).unwrap();
        let d = k5.pair_density(&a, &a).unwrap();
        assert!((d - (1.0 - 1.0 / 4.0)).abs() < 1e-12);
    }

    #[test]
    fn pair_count_rejects_empty_side() {
        let g = Graph::complete(3);
        let all = g.full_vertex_set();
        let empty = VertexSet::empty(3);
        assert!(matches!(
            g.pair_count(&empty, &all),
            Err(Error::EmptySet { .. })
        ));
    }

    #[test]
    fn neighborhood_kernels() {
        let c5 = Graph::cycle(5);
        // Adjacent pair on a 5-cycle has no common neighbor.
        let pair = VertexSet::from_indices(5, [0, 1]).unwrap();
        assert!(c5.common_neighborhood(&pair).unwrap().is_empty());
        // Distance-2 pair has exactly one.
        let pair2 = VertexSet::from_indices(5, [0, 2]).unwrap();
        assert_eq!(c5.common_neighborhood(&pair2).unwrap().to_vec(), vec![1]);
        // Empty input is an error for the intersection and fine for the union.
        assert!(matches!(
            c5.common_neighborhood(&VertexSet::empty(5)),
            Err(Error::EmptySet { .. })
        ));
        assert!(c5.union_neighborhood(&VertexSet::empty(5)).is_empty());
        assert_eq!(c5.union_neighborhood(&pair).to_vec(), vec![0, 1, 2, 4]);
    }

    #[test]
    fn induced_copy_checks() {
        // A path on 3 vertices sits induced on consecutive vertices of C6.
        let c6 = Graph::cycle(6);
        let p3 = Graph::path(3);
        let phi = Embedding::from_pairs("p3", [(0, 0), (1, 1), (2, 2)]).unwrap();
        assert!(is_copy_induced_in(&c6, &c6, &p3, &phi).unwrap());

        // In K4 the same pattern is a copy but never induced.
        let k4 = Graph::complete(4);
        let phi = Embedding::from_pairs("p3", [(0, 0), (1, 1), (2, 2)]).unwrap();
        assert!(!is_copy_induced_in(&k4, &k4, &p3, &phi).unwrap());

        // Missing pattern vertex is an input error.
        let partial = Embedding::from_pairs("p3", [(0, 0), (1, 1)]).unwrap();
        assert!(matches!(
            is_copy_induced_in(&c6, &c6, &p3, &partial),
            Err(Error::NotTotal { missing: 2 })
        ));
    }

    #[test]
    fn embedding_rejects_collisions() {
        let mut e = Embedding::new("t");
        e.insert(0, 7).unwrap();
        assert!(matches!(
            e.insert(1, 7),
            Err(Error::NotInjective {
                pattern_vertex: 1,
                other: 0,
                image: 7
            })
        ));
    }

    #[test]
    fn induced_and_subgraph_helpers() {
        let c6 = Graph::cycle(6);
        let keep = VertexSet::from_indices(6, [0, 1, 2]).unwrap();
        let z = c6.induced_zeroed(&keep);
        assert_eq!(z.edge_count(), 2);
        assert!(z.is_spanning_subgraph_of(&c6));

        let (compact, ids) = c6.induced_compact(&keep);
        assert_eq!(compact.n(), 3);
        assert_eq!(compact.edge_count(), 2);
        assert_eq!(ids, vec![0, 1, 2]);

        let comp = Graph::cycle(5).complement();
        assert_eq!(comp.edge_count(), 5);
    }

    #[test]
    fn bipartition_and_girth() {
        let c6 = Graph::cycle(6);
        let (left, right) = c6.bipartition().expect("even cycle is bipartite");
        assert_eq!(left.to_vec(), vec![0, 2, 4]);
        assert_eq!(right.to_vec(), vec![1, 3, 5]);
        assert_eq!(c6.girth(), Some(6));

        assert!(Graph::cycle(5).bipartition().is_none());
        assert!(Graph::complete(4).bipartition().is_none());

        assert_eq!(Graph::path(7).girth(), None);
        assert_eq!(Graph::complete(4).girth(), Some(3));
        assert_eq!(Graph::complete_bipartite(2, 3).girth(), Some(4));

        // Isolated vertices land on the left side and do not disturb girth.
        let mixed = Graph::from_edges(5, [(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(mixed.bipartition().is_none());
        assert_eq!(mixed.girth(), Some(3));
    }
}
