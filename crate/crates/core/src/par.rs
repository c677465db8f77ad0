//! Execution policy for the enumeration kernels.
//!
//! With the `parallel` feature (default) work is spread over a rayon pool;
//! without it, or under [`Execution::Sequential`], everything runs on the
//! calling thread. Output never depends on the policy.

/// Selects how enumeration work is scheduled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
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

/// True when this build can actually run work in parallel.
pub fn parallel_available() -> bool {
    cfg!(feature = "parallel")
}

/// Sizes the global worker pool. Only the first call has any effect; later
/// calls (and calls in sequential builds) return `false`.
pub fn init_threads(n: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = n;
        false
    }
}

pub(crate) fn for_each<T, F>(exec: Execution, items: Vec<T>, f: F)
where
    T: Send,
    F: Fn(T) + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.into_par_iter().for_each(f);
        }
        _ => items.into_iter().for_each(f),
    }
}

/// Maps `f` over `items`, keeping the input order in the output.
pub(crate) fn map<T, R, F>(exec: Execution, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.into_par_iter().map(f).collect()
        }
        _ => items.into_iter().map(f).collect(),
    }
}
