//! Data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature, [`Execution::Parallel`] runs on the current
//! rayon pool; without it every execution is sequential. Results always come
//! back in input order, so output never depends on the worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

pub fn map_collect<T, R, I, F>(exec: Execution, items: I, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    I: IntoIterator<Item = T>,
    F: Fn(T) -> R + Sync + Send,
{
    let items: Vec<T> = items.into_iter().collect();
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.into_par_iter().map(f).collect(),
        _ => items.into_iter().map(f).collect(),
    }
}
