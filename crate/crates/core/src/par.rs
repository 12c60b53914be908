//! Execution strategy for the data-parallel entry points.
//!
//! Every parallel code path in this crate is a map over an index range whose
//! results are merged in canonical order, so outputs are identical for any
//! worker count. Building without the `parallel` feature removes the rayon
//! dependency and leaves only the sequential strategy.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    #[cfg(feature = "parallel")]
    Rayon,
}

impl Default for Strategy {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Strategy::Rayon
        }
        #[cfg(not(feature = "parallel"))]
        {
            Strategy::Sequential
        }
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map_collect<T, R, F>(strategy: Strategy, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    match strategy {
        Strategy::Sequential => items.into_iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Strategy::Rayon => {
            use rayon::prelude::*;
            items.into_par_iter().map(f).collect()
        }
    }
}
