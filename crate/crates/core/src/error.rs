use thiserror::Error;

/// Crate-wide error type. Input validation failures, parse failures and
/// exhausted budgets are all values; panics are reserved for broken internal
/// invariants.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },

    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("empty vertex set: {context}")]
    EmptySet { context: &'static str },

    #[error("vertex-set universe mismatch ({left} vs {right})")]
    UniverseMismatch { left: usize, right: usize },

    #[error("invalid parameter `{name}`: {msg}")]
    Param { name: &'static str, msg: String },

    #[error("embedding is not injective: {pattern_vertex} and {other} share image {image}")]
    NotInjective {
        pattern_vertex: usize,
        other: usize,
        image: usize,
    },

    #[error("embedding is not total: pattern vertex {missing} has no image")]
    NotTotal { missing: usize },

    #[error("{what} needs {needed} units against a budget of {budget}")]
    Budget {
        what: &'static str,
        needed: u128,
        budget: u128,
    },

    #[error("search budget exhausted for {what}{}", bound_note(.best_lower_bound))]
    SearchBudget {
        what: &'static str,
        best_lower_bound: Option<usize>,
    },

    #[error("retry budget exhausted: {0}")]
    RetriesExhausted(&'static str),

    #[error("guard `{guard}` violated: {detail}")]
    GuardViolated { guard: &'static str, detail: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

fn bound_note(best: &Option<usize>) -> String {
    match best {
        Some(b) => format!(" (best bound found so far: {b})"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Convenience constructor for parameter validation failures.
    pub fn param(name: &'static str, msg: impl Into<String>) -> Self {
        Error::Param {
            name,
            msg: msg.into(),
        }
    }
}
