//! Sequential or data-parallel execution of independent work items.
//!
//! Results are always returned in input order, so the choice of mode never
//! changes an output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Defaults to `Parallel` when the `parallel` feature is on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Execution {
    pub fn available() -> &'static [Execution] {
        #[cfg(feature = "parallel")]
        {
            &[Execution::Sequential, Execution::Parallel]
        }
        #[cfg(not(feature = "parallel"))]
        {
            &[Execution::Sequential]
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Execution::Sequential => "sequential",
            #[cfg(feature = "parallel")]
            Execution::Parallel => "parallel",
        }
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
        }
    }

    pub fn filter_map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter().filter_map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().filter_map(f).collect(),
        }
    }
}
