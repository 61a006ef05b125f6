//! Scheduling for grid work.
//!
//! Every grid operation maps a pure function over an index range and
//! collects the results in index order, so the output does not depend on
//! how the range is split across threads. Reductions run afterwards,
//! sequentially, over the collected vector.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Exec {
    Sequential,
    /// Rayon work-stealing over the current pool. Without the `parallel`
    /// feature this behaves like [`Exec::Sequential`].
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// `(0..n).map(f).collect()`, possibly in parallel; order is preserved.
    pub fn map_indexed<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            Exec::Sequential => (0..n).map(f).collect(),
            Exec::Parallel => par_map(n, f),
        }
    }

    /// Like [`Exec::map_indexed`], stopping at the lowest-index error.
    pub fn try_map_indexed<T, E, F>(self, n: usize, f: F) -> Result<Vec<T>, E>
    where
        T: Send,
        E: Send,
        F: Fn(usize) -> Result<T, E> + Sync + Send,
    {
        self.map_indexed(n, f).into_iter().collect()
    }
}

#[cfg(feature = "parallel")]
fn par_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Runs `op` on a dedicated pool of `threads` workers.
#[cfg(feature = "parallel")]
pub fn with_threads<R: Send>(threads: usize, op: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
    {
        Ok(pool) => pool.install(op),
        Err(_) => op(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_threads<R: Send>(_threads: usize, op: impl FnOnce() -> R + Send) -> R {
    op()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let f = |i: usize| (i as f64).sqrt().sin();
        let seq = Exec::Sequential.map_indexed(10_000, f);
        let par = Exec::Parallel.map_indexed(10_000, f);
        assert_eq!(seq, par);
        let pooled = with_threads(3, || Exec::Parallel.map_indexed(10_000, f));
        assert_eq!(seq, pooled);
    }

    #[test]
    fn first_error_wins() {
        let r: Result<Vec<usize>, usize> =
            Exec::Parallel.try_map_indexed(100, |i| if i % 30 == 29 { Err(i) } else { Ok(i) });
        assert_eq!(r, Err(29));
    }
}
