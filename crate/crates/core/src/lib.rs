//! Workbench for Turan-type experiments in sparse host graphs.
//!
//! The central objects are a host graph `Gamma` that is `(c, t)`-sparse
//! (every pair of vertex subsets of size at least `t` spans ordered-pair
//! density at most `1 - c`) and a subgraph `G` of `Gamma` on the same vertex
//! set. The crate certifies or refutes sparseness, builds dense subgraphs of
//! `Gamma` free of induced copies of a forbidden pattern, embeds bounded
//! bipartite patterns and trees of `G` induced in `Gamma`, and checks all of
//! it against brute-force oracles at small scale.

pub mod edgelist;
pub mod embed;
pub mod error;
pub mod exec;
pub mod experiments;
pub mod field;
pub mod generators;
pub mod graph;
pub mod lower_bounds;
pub mod oracle;
pub mod pattern;
pub mod sparseness;
pub mod trees;

pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::{is_copy_induced_in, Embedding, Graph, VertexSet};

pub(crate) mod rng {
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Seeded counter-based generator used everywhere randomness is consumed.
    /// ChaCha8 streams let workers derive independent substreams from one run
    /// seed without coordination: substream `k` of seed `s` is reproducible
    /// regardless of how many other substreams are drawn.
    pub fn rng_for(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// Derives a child seed from (seed, tag) for APIs that take a plain
    /// seed; splitmix-style finalizer so nearby tags decorrelate.
    pub fn mix_seed(seed: u64, tag: u64) -> u64 {
        let mut z = seed ^ tag.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Substream addressed by a tag path, e.g. `(seed, [level, attempt])`.
    /// Enlarging an attempt budget never perturbs earlier attempts because
    /// each attempt owns its stream.
    pub fn substream(seed: u64, tags: &[u64]) -> ChaCha8Rng {
        let mut stream = 0xa076_1d64_78bd_642fu64;
        for &t in tags {
            stream ^= t.wrapping_add(0x9e37_79b9_7f4a_7c15);
            stream = stream.wrapping_mul(0xbf58_476d_1ce4_e5b9);
            stream ^= stream >> 27;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        rng
    }
}
