//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) work items are spread over the
//! current rayon pool; without it, or with [`Execution::Sequential`], they
//! run in order on the calling thread. Results are always returned in input
//! order, so every reduction downstream is independent of the worker count.

use std::ops::Range;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// `Parallel` only when the crate was built with the `parallel` feature.
    pub fn effective(self) -> Execution {
        if cfg!(feature = "parallel") {
            self
        } else {
            Execution::Sequential
        }
    }
}

pub fn map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec.effective() {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// Maps `f` over `range` split into contiguous chunks of `chunk` indices.
pub fn map_chunks<R, F>(exec: Execution, range: Range<u64>, chunk: u64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(Range<u64>) -> R + Sync + Send,
{
    let chunk = chunk.max(1);
    let chunks: Vec<Range<u64>> =
        (range.start..range.end).step_by(chunk as usize).map(|s| s..(s + chunk).min(range.end)).collect();
    map(exec, &chunks, |r| f(r.clone()))
}

/// Runs `f` inside a pool of `workers` threads (or directly when building
/// without the `parallel` feature).
pub fn with_workers<R: Send>(workers: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        match rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = workers;
        f()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_and_keep_order() {
        let items: Vec<u64> = (0..1000).collect();
        let a = map(Execution::Sequential, &items, |x| x * x);
        let b = map(Execution::Parallel, &items, |x| x * x);
        assert_eq!(a, b);
        let c = map_chunks(Execution::Parallel, 0..103, 10, |r| r.sum::<u64>());
        assert_eq!(c.len(), 11);
        assert_eq!(c.iter().sum::<u64>(), (0..103).sum());
    }
}
