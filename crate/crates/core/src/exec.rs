//! Execution helpers: data-parallel maps over independent work items.
//!
//! With the `parallel` feature (the default) [`Parallelism::Auto`] fans work
//! out over rayon; without it every mode degrades to a sequential loop, so
//! the crate builds and behaves identically with `--no-default-features`.
//! Results are collected in input order either way, which keeps sweep and
//! generation output independent of the worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a batched operation should schedule its work items.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum Parallelism {
    /// Use the rayon pool when the `parallel` feature is enabled.
    #[default]
    Auto,
    /// Force a single-threaded loop.
    Sequential,
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(mode: Parallelism, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if mode == Parallelism::Auto {
            return items.par_iter().map(f).collect();
        }
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// Maps `f` over `0..count`, preserving order.
pub fn map_range<R, F>(mode: Parallelism, count: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if mode == Parallelism::Auto {
            return (0..count).into_par_iter().map(f).collect();
        }
    }
    let _ = mode;
    (0..count).map(f).collect()
}

/// Sizes the global worker pool. Returns the worker count actually in
/// effect; calling it twice (or after the pool has been used) keeps the
/// existing pool.
pub fn configure_workers(workers: Option<usize>) -> usize {
    #[cfg(feature = "parallel")]
    {
        if let Some(w) = workers {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build_global();
        }
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = workers;
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order_in_both_modes() {
        let items: Vec<usize> = (0..1000).collect();
        let seq = map(Parallelism::Sequential, &items, |&x| x * x);
        let auto = map(Parallelism::Auto, &items, |&x| x * x);
        assert_eq!(seq, auto);
        assert_eq!(seq[10], 100);
    }
}
