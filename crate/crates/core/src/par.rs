//! Execution strategy for the data-parallel loops.
//!
//! Every reduction is split into fixed-size chunks whose partial sums are
//! combined in index order, so `Sequential` and `Parallel` produce
//! bit-identical results regardless of thread count. Without the `parallel`
//! feature, `Parallel` silently runs sequentially.

use std::ops::Range;

use num_complex::Complex64;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Terms per reduction chunk.
pub const CHUNK: usize = 1 << 12;

/// Below this many elements the parallel path is not worth the dispatch.
#[cfg(feature = "parallel")]
const PAR_THRESHOLD: usize = 1 << 13;

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

#[cfg(feature = "parallel")]
impl Strategy {
    fn parallel_for(self, len: usize) -> bool {
        self == Strategy::Parallel && len >= PAR_THRESHOLD
    }
}

/// Sums `term_block(range)` over `0..len` in `CHUNK`-sized ranges.
pub fn chunked_sum<F>(len: usize, strategy: Strategy, term_block: F) -> Complex64
where
    F: Fn(Range<usize>) -> Complex64 + Sync,
{
    let chunks = len.div_ceil(CHUNK);
    let block = |c: usize| term_block(c * CHUNK..((c + 1) * CHUNK).min(len));

    #[cfg(feature = "parallel")]
    if strategy.parallel_for(len) {
        let partials: Vec<Complex64> = (0..chunks).into_par_iter().map(block).collect();
        return partials.into_iter().sum();
    }
    let _ = strategy;
    (0..chunks).map(block).sum()
}

/// Fills `out[i] = f(i)`.
pub fn fill_indexed<T, F>(out: &mut [T], strategy: Strategy, f: F)
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    #[cfg(feature = "parallel")]
    if strategy.parallel_for(out.len()) {
        out.par_chunks_mut(CHUNK)
            .enumerate()
            .for_each(|(c, chunk)| {
                for (offset, slot) in chunk.iter_mut().enumerate() {
                    *slot = f(c * CHUNK + offset);
                }
            });
        return;
    }
    let _ = strategy;
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = f(i);
    }
}

/// Applies `f` to every chunk of `data`, passing the chunk's starting index.
pub fn for_each_chunk_mut<T, F>(data: &mut [T], chunk: usize, strategy: Strategy, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync,
{
    #[cfg(feature = "parallel")]
    if strategy.parallel_for(data.len()) && data.len() > chunk {
        data.par_chunks_mut(chunk)
            .enumerate()
            .for_each(|(c, block)| f(c * chunk, block));
        return;
    }
    let _ = strategy;
    for (c, block) in data.chunks_mut(chunk).enumerate() {
        f(c * chunk, block);
    }
}

/// Maps `f` over `0..count`, preserving index order in the output.
pub fn map_trials<T, F>(count: usize, strategy: Strategy, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy == Strategy::Parallel && count > 1 {
        return (0..count).into_par_iter().map(f).collect();
    }
    let _ = strategy;
    (0..count).map(f).collect()
}
