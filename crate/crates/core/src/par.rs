//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) the helpers run on the rayon pool;
//! without it, or when [`Strategy::Sequential`] is requested, they run on the
//! calling thread. Output order always matches input order, so callers that
//! sort or dedup afterwards get byte-identical results either way.

/// Execution strategy for the batch loops in this crate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    Parallel,
    Sequential,
}

impl Strategy {
    /// Whether this strategy actually fans out in the current build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Strategy::Parallel
    }
}

/// Order-preserving map over a slice.
pub fn map<T, R, F>(strategy: Strategy, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = strategy;
    items.iter().map(f).collect()
}

/// Order-preserving flat map over a slice.
pub fn flat_map<T, R, F>(strategy: Strategy, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Vec<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().flat_map_iter(f).collect();
    }
    let _ = strategy;
    items.iter().flat_map(f).collect()
}

/// `true` iff `f` holds for every item.
pub fn all<T, F>(strategy: Strategy, items: &[T], f: F) -> bool
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().all(f);
    }
    let _ = strategy;
    items.iter().all(f)
}
