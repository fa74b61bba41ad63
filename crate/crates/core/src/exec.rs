//! Execution strategy for the data-parallel loops.
//!
//! With the `parallel` feature (on by default) work is spread with rayon;
//! without it every strategy runs sequentially. Results always come back in
//! input order, so output does not depend on scheduling.

use std::ops::Range;

/// Environment variable selecting the worker count; `1` means sequential.
pub const WORKERS_ENV: &str = "QUIPU_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    /// Global rayon pool.
    #[default]
    Parallel,
    Workers(usize),
}

impl Exec {
    pub fn from_env() -> Exec {
        match std::env::var(WORKERS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            Some(0) | None => Exec::Parallel,
            Some(1) => Exec::Sequential,
            Some(k) => Exec::Workers(k),
        }
    }

    pub fn is_parallel(&self) -> bool {
        cfg!(feature = "parallel") && *self != Exec::Sequential
    }

    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return self.install(|| items.par_iter().map(&f).collect());
        }
        items.iter().map(f).collect()
    }

    /// Maps over `range` in chunks and keeps the `Some` results, in order.
    pub fn filter_map_range<R, F>(&self, range: Range<u64>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u64) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return self.install(|| range.into_par_iter().filter_map(&f).collect());
        }
        range.filter_map(f).collect()
    }

    #[cfg(feature = "parallel")]
    fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        match self {
            Exec::Workers(k) => match rayon::ThreadPoolBuilder::new().num_threads(*k).build() {
                Ok(pool) => pool.install(op),
                Err(_) => op(),
            },
            _ => op(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = Exec::Sequential.map(&items, |x| x * x);
        assert_eq!(Exec::Parallel.map(&items, |x| x * x), seq);
        assert_eq!(Exec::Workers(3).map(&items, |x| x * x), seq);
        let odd = |x: u64| (x % 2 == 1).then_some(x);
        assert_eq!(
            Exec::Sequential.filter_map_range(0..100, odd),
            Exec::Parallel.filter_map_range(0..100, odd)
        );
    }
}
