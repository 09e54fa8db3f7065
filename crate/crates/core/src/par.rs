//! Execution backend: rayon when the `parallel` feature is on, plain iteration otherwise.
//!
//! All scans split their index range into blocks of fixed size and return the
//! per-block results in block order. Reductions over those results are done
//! sequentially by the caller, so outputs do not depend on the thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Number of consecutive moduli handled by one task.
pub const BLOCK: u64 = 64;

/// Splits `lo..=hi` into blocks of `block` values and maps `f(first, last)` over them.
pub(crate) fn map_blocks<T, F>(lo: u64, hi: u64, block: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, u64) -> T + Sync + Send,
{
    if lo > hi {
        return Vec::new();
    }
    let block = block.max(1);
    let n_blocks = (hi - lo) / block + 1;
    let bounds = move |i: u64| {
        let first = lo + i * block;
        (first, (first + block - 1).min(hi))
    };
    #[cfg(feature = "parallel")]
    {
        (0..n_blocks)
            .into_par_iter()
            .map(|i| {
                let (a, b) = bounds(i);
                f(a, b)
            })
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n_blocks)
            .map(|i| {
                let (a, b) = bounds(i);
                f(a, b)
            })
            .collect()
    }
}

/// Order-preserving map over a slice.
pub(crate) fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Runs `f` on a pool of `threads` workers (`None` keeps the current pool).
///
/// Without the `parallel` feature this simply calls `f`.
pub fn with_threads<R, F>(threads: Option<usize>, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    {
        match threads {
            Some(n) => match rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
            {
                Ok(pool) => pool.install(f),
                Err(_) => f(),
            },
            None => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}

/// Worker count that scans will use in the current context.
pub fn current_threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}
