//! Deterministic range scans over odd integers.
//!
//! A range is cut into fixed-size chunks whose boundaries do not depend on
//! the worker count. Chunks are mapped in parallel and the partial results
//! are folded in chunk order, so floating-point sums come out bit-identical
//! for any number of workers.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Odd values per chunk.
pub const CHUNK_ODDS: u64 = 4096;

/// Inclusive odd sub-ranges covering the odd integers in `[lo, hi]`.
pub fn odd_chunks(lo: u64, hi: u64) -> Vec<(u64, u64)> {
    let first = if lo % 2 == 1 { lo } else { lo + 1 };
    let mut chunks = Vec::new();
    let mut start = first;
    while start <= hi {
        let end = start
            .saturating_add(2 * (CHUNK_ODDS - 1))
            .min(if hi % 2 == 1 { hi } else { hi - 1 });
        chunks.push((start, end));
        match end.checked_add(2) {
            Some(next) => start = next,
            None => break,
        }
    }
    chunks
}

/// Maps every chunk of odd integers in `[lo, hi]` and folds the results in
/// ascending chunk order. `workers == 1` runs on the calling thread.
pub fn map_fold<T, M, F>(lo: u64, hi: u64, workers: usize, map: M, init: T, fold: F) -> Result<T>
where
    T: Send,
    M: Fn(u64, u64) -> Result<T> + Sync,
    F: Fn(T, T) -> T,
{
    if workers == 0 {
        return Err(Error::param("workers", "must be at least 1"));
    }
    let chunks = odd_chunks(lo, hi);
    let parts: Vec<T> = if workers == 1 {
        chunks
            .iter()
            .map(|&(a, b)| map(a, b))
            .collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::param("workers", e.to_string()))?;
        pool.install(|| {
            chunks
                .par_iter()
                .map(|&(a, b)| map(a, b))
                .collect::<Result<_>>()
        })?
    };
    Ok(parts.into_iter().fold(init, fold))
}
