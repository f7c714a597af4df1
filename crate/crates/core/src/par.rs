//! Data-parallel helpers with a sequential fallback.
//!
//! Without the `parallel` feature every mode runs sequentially. Results never
//! depend on the mode: maps keep input order and minima break ties by index.

/// How index-parallel loops are executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

/// Name of the environment variable that caps the worker pool.
pub const THREADS_ENV: &str = "COSYS_THREADS";

#[cfg(feature = "parallel")]
fn ensure_pool() {
    use std::sync::Once;
    static INIT: Once = Once::new();
    INIT.call_once(|| {
        if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            if n > 0 {
                // Fails only if a global pool already exists; keep that one.
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    });
}

/// `f(0), ..., f(n-1)` in index order.
pub fn map<T, F>(n: usize, mode: ExecMode, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode == ExecMode::Parallel {
        use rayon::prelude::*;
        ensure_pool();
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = mode;
    (0..n).map(f).collect()
}

/// Like [`map`] over a slice.
pub fn map_slice<S, T, F>(items: &[S], mode: ExecMode, f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    map(items.len(), mode, |i| f(&items[i]))
}

/// The smallest `(f(i), i)` over `0..n`, so ties go to the lowest index.
pub fn argmin<K, F>(n: usize, mode: ExecMode, f: F) -> Option<(K, usize)>
where
    K: Ord + Send,
    F: Fn(usize) -> K + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode == ExecMode::Parallel {
        use rayon::prelude::*;
        ensure_pool();
        return (0..n).into_par_iter().map(|i| (f(i), i)).min();
    }
    let _ = mode;
    (0..n).map(|i| (f(i), i)).min()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let key = |i: usize| (i * 7919) % 13;
        for mode in [ExecMode::Sequential, ExecMode::Parallel] {
            assert_eq!(map(20, mode, key), (0..20).map(key).collect::<Vec<_>>());
            assert_eq!(argmin(1000, mode, key), Some((0, 0)));
            assert_eq!(argmin(1000, mode, |i| (i % 5 == 3, 1000 - i % 17)), Some(((false, 984), 16)));
            assert_eq!(argmin(0, mode, key), None);
        }
    }
}
