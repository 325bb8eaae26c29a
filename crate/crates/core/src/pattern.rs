//! Bounded bipartite patterns: the shapes the apex embedder knows how to
//! place.
//!
//! A pattern has parts `A = A0 ∪ A1` and `B`. The `ℓ = |A0|` apex vertices
//! are complete to `B`; every other A-vertex has degree at most `d`, where
//! `d = max(ℓ, max degree over A1)`. Internally B is indexed `0..b` and each
//! A1 vertex carries its sorted neighbor list into B.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartitePattern {
    l: usize,
    a1_adj: Vec<Vec<usize>>,
    b: usize,
}

impl BipartitePattern {
    /// `l` apex vertices, `b` B-vertices, and one A1 vertex per entry of
    /// `a1_adj` holding its neighbors as indices into `0..b`.
    pub fn new(l: usize, b: usize, a1_adj: Vec<Vec<usize>>) -> Result<BipartitePattern> {
        if l == 0 {
            return Err(Error::param("l", "need at least one apex vertex"));
        }
        if b == 0 {
            return Err(Error::param("b", "need at least one B vertex"));
        }
        let mut a1_adj = a1_adj;
        for adj in &mut a1_adj {
            adj.sort_unstable();
            adj.dedup();
            if adj.is_empty() {
                return Err(Error::param(
                    "a1_adj",
                    "every A1 vertex needs at least one neighbor",
                ));
            }
            if adj.iter().any(|&v| v >= b) {
                return Err(Error::param("a1_adj", "neighbor index out of range"));
            }
        }
        Ok(BipartitePattern { l, b, a1_adj })
    }

    /// Complete bipartite pattern K_{l,b}: all of A is apex.
    pub fn complete(l: usize, b: usize) -> Result<BipartitePattern> {
        BipartitePattern::new(l, b, Vec::new())
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn a(&self) -> usize {
        self.a1_adj.len()
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn vertex_count(&self) -> usize {
        self.l + self.a1_adj.len() + self.b
    }

    pub fn edge_count(&self) -> usize {
        self.l * self.b + self.a1_adj.iter().map(Vec::len).sum::<usize>()
    }

    /// `d = max(ℓ, max A1 degree)`: the boundedness parameter.
    pub fn d(&self) -> usize {
        self.a1_adj
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .max(self.l)
    }

    pub fn a1_neighbors(&self, i: usize) -> &[usize] {
        &self.a1_adj[i]
    }

    /// Pattern as a concrete graph. Vertex layout: apexes `0..l`, then A1
    /// `l..l+a`, then B `l+a..l+a+b`.
    pub fn to_graph(&self) -> Graph {
        let l = self.l;
        let a = self.a1_adj.len();
        let b_base = l + a;
        let mut edges = Vec::new();
        for apex in 0..l {
            for v in 0..self.b {
                edges.push((apex, b_base + v));
            }
        }
        for (i, adj) in self.a1_adj.iter().enumerate() {
            for &v in adj {
                edges.push((l + i, b_base + v));
            }
        }
        Graph::from_edges(b_base + self.b, edges).expect("pattern layout has no duplicates")
    }

    /// Index of the first B vertex in the [`to_graph`](Self::to_graph)
    /// layout.
    pub fn b_base(&self) -> usize {
        self.l + self.a1_adj.len()
    }

    /// Pattern with one apex removed; the recursion peels apexes until one
    /// is left.
    pub fn drop_one_apex(&self) -> Result<BipartitePattern> {
        if self.l < 2 {
            return Err(Error::param("l", "cannot drop the last apex"));
        }
        Ok(BipartitePattern {
            l: self.l - 1,
            b: self.b,
            a1_adj: self.a1_adj.clone(),
        })
    }

    /// Recovers a pattern from a concrete bipartite graph, along with the
    /// map from [`to_graph`](Self::to_graph) vertex ids back to ids of `g`.
    ///
    /// Both orientations of the bipartition are tried; the one with the
    /// smaller `d` wins (smaller A side on a tie). Isolated vertices are
    /// rejected: they cannot sit in B under a nonempty apex set, and A-side
    /// placement would be arbitrary.
    pub fn from_graph(g: &Graph) -> Result<(BipartitePattern, Vec<usize>)> {
        if (0..g.n()).any(|v| g.degree(v) == 0) {
            return Err(Error::param("pattern", "isolated pattern vertices"));
        }
        let (left, right) = g
            .bipartition()
            .ok_or_else(|| Error::param("pattern", "pattern graph is not bipartite"))?;
        let attempt = |aside: &[usize], bside: &[usize]| -> Option<(BipartitePattern, Vec<usize>)> {
            let bpos: std::collections::HashMap<usize, usize> =
                bside.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let mut apexes = Vec::new();
            let mut a1 = Vec::new();
            for &u in aside {
                if bside.iter().all(|&v| g.adjacent(u, v)) {
                    apexes.push(u);
                } else {
                    a1.push(u);
                }
            }
            if apexes.is_empty() {
                return None;
            }
            let a1_adj: Vec<Vec<usize>> = a1
                .iter()
                .map(|&u| g.neighbors(u).iter().map(|v| bpos[&v]).collect())
                .collect();
            let pattern = BipartitePattern::new(apexes.len(), bside.len(), a1_adj).ok()?;
            let mut relabel = apexes;
            relabel.extend(a1);
            relabel.extend_from_slice(bside);
            Some((pattern, relabel))
        };
        let left_v = left.to_vec();
        let right_v = right.to_vec();
        let forward = attempt(&left_v, &right_v);
        let backward = attempt(&right_v, &left_v);
        match (forward, backward) {
            (None, None) => Err(Error::param(
                "pattern",
                "no orientation has a vertex complete to the other side",
            )),
            (Some(x), None) | (None, Some(x)) => Ok(x),
            (Some(x), Some(y)) => {
                let key = |p: &BipartitePattern| (p.d(), p.l + p.a1_adj.len());
                Ok(if key(&y.0) < key(&x.0) { y } else { x })
            }
        }
    }

    /// Parses the spec string `bip l=<ℓ> B=<b> A1=<deg-list>`, where the
    /// degree list is comma-separated (possibly empty) and a degree-k A1
    /// vertex attaches to the first k B vertices.
    pub fn parse_spec(spec: &str) -> Result<BipartitePattern> {
        let bad = |msg: &str| Error::param("pattern spec", msg);
        let mut tokens = spec.split_whitespace();
        if tokens.next() != Some("bip") {
            return Err(bad("expected leading `bip`"));
        }
        let mut l = None;
        let mut b = None;
        let mut degs: Option<Vec<usize>> = None;
        for tok in tokens {
            let (key, value) = tok
                .split_once('=')
                .ok_or_else(|| bad("expected key=value tokens"))?;
            match key {
                "l" => {
                    l = Some(value.parse().map_err(|_| bad("bad value for l"))?);
                }
                "B" => {
                    b = Some(value.parse().map_err(|_| bad("bad value for B"))?);
                }
                "A1" => {
                    let mut list = Vec::new();
                    if !value.is_empty() {
                        for part in value.split(',') {
                            list.push(part.parse().map_err(|_| bad("bad degree in A1 list"))?);
                        }
                    }
                    degs = Some(list);
                }
                _ => return Err(bad("unknown key")),
            }
        }
        let l = l.ok_or_else(|| bad("missing l"))?;
        let b: usize = b.ok_or_else(|| bad("missing B"))?;
        let degs = degs.unwrap_or_default();
        if degs.iter().any(|&deg| deg > b) {
            return Err(bad("A1 degree exceeds B size"));
        }
        let a1_adj = degs.iter().map(|&deg| (0..deg).collect()).collect();
        BipartitePattern::new(l, b, a1_adj)
    }
}
