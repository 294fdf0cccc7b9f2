use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Evaluation strategy for the data-parallel loops (oracle enumeration,
/// partition sums, verification grids).
///
/// `Parallel` runs on the rayon global pool when the `parallel` feature is
/// enabled and silently degrades to `Sequential` otherwise. Results never
/// depend on the strategy: all reductions are exact integer sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

impl Strategy {
    /// Whether this strategy will actually fan out to worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Strategy::Parallel
    }
}

pub(crate) fn map_reduce<T, A, I, M, R>(
    strategy: Strategy,
    items: &[T],
    identity: I,
    map: M,
    reduce: R,
) -> A
where
    T: Sync,
    A: Send,
    I: Fn() -> A + Sync + Send,
    M: Fn(&T) -> A + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        return items.par_iter().map(map).reduce(identity, reduce);
    }
    let _ = strategy;
    items.iter().map(map).fold(identity(), reduce)
}

/// Order-preserving map.
pub(crate) fn map_collect<T, B, M>(strategy: Strategy, items: &[T], map: M) -> Vec<B>
where
    T: Sync,
    B: Send,
    M: Fn(&T) -> B + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        return items.par_iter().map(map).collect();
    }
    let _ = strategy;
    items.iter().map(map).collect()
}

/// Splits `0..total` into contiguous, disjoint chunks covering the range.
pub(crate) fn split_range(total: u64, strategy: Strategy) -> Vec<Range<u64>> {
    let pieces: u64 = if strategy.is_parallel() {
        #[cfg(feature = "parallel")]
        {
            (rayon::current_num_threads() as u64 * 8).max(1)
        }
        #[cfg(not(feature = "parallel"))]
        {
            1
        }
    } else {
        1
    };
    let pieces = pieces.min(total.max(1));
    let step = total.div_ceil(pieces).max(1);
    (0..pieces)
        .map(|i| (i * step).min(total)..((i + 1) * step).min(total))
        .filter(|r| !r.is_empty())
        .collect()
}
