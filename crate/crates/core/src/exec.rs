//! Execution policy for data-parallel loops.
//!
//! Hot loops (subset enumeration, restart batches, seed sweeps) are expressed
//! against the helpers below. With the `parallel` feature (on by default) the
//! `Parallel` policy fans work out through rayon; without the feature the same
//! code compiles and every policy runs serially. Results are merged in input
//! order, so the outcome never depends on scheduling.

/// Which engine drives a data-parallel loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    /// Plain sequential iteration.
    Sequential,
    /// Rayon work-stealing pool when the `parallel` feature is enabled,
    /// otherwise an alias for `Sequential`.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..len`, collecting results in index order.
pub(crate) fn map_range<U, F>(exec: Exec, len: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    match exec {
        Exec::Sequential => (0..len).map(f).collect(),
        Exec::Parallel => {
            #[cfg(feature = "parallel")]
            {
                (0..len).into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..len).map(f).collect()
            }
        }
    }
}

/// Returns the first (lowest-index) `Some` produced by `f` over `0..len`.
/// The parallel path uses `find_map_first`, so the winner is the same one the
/// sequential scan would find.
pub(crate) fn find_map_first<U, F>(exec: Exec, len: usize, f: F) -> Option<U>
where
    U: Send,
    F: Fn(usize) -> Option<U> + Sync + Send,
{
    match exec {
        Exec::Sequential => (0..len).find_map(f),
        Exec::Parallel => {
            #[cfg(feature = "parallel")]
            {
                (0..len).into_par_iter().find_map_first(f)
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..len).find_map(f)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_range_preserves_order() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            let out = map_range(exec, 100, |i| i * i);
            assert_eq!(out, (0..100).map(|i| i * i).collect::<Vec<_>>());
        }
    }

    #[test]
    fn find_map_first_is_position_minimal() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            let hit = find_map_first(exec, 1000, |i| if i % 37 == 5 { Some(i) } else { None });
            assert_eq!(hit, Some(5));
        }
    }
}
