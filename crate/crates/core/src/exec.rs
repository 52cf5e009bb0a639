//! Execution strategy for the batch sweeps.
//!
//! Every batch routine in this crate takes an [`Execution`] and produces the
//! same result under either strategy: work items are indexed, results are
//! collected in index order, and searches report the lowest matching index.
//! With the `parallel` feature disabled, [`Execution::Parallel`] runs
//! sequentially.

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

impl Execution {
    /// Maps `f` over `0..n`, preserving index order.
    pub fn map<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..n).into_par_iter().map(f).collect(),
            _ => (0..n).map(f).collect(),
        }
    }

    /// First index in `0..n` (lowest, not first-finished) for which `f`
    /// yields a value.
    pub fn find_first<T, F>(self, n: usize, f: F) -> Option<(usize, T)>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..n)
                .into_par_iter()
                .filter_map(|i| f(i).map(|t| (i, t)))
                .find_first(|_| true),
            _ => (0..n).find_map(|i| f(i).map(|t| (i, t))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let seq = Execution::Sequential.map(1000, |i| i * i);
        let par = Execution::Parallel.map(1000, |i| i * i);
        assert_eq!(seq, par);

        let hit = |i: usize| (i % 97 == 13 && i > 200).then_some(i * 2);
        assert_eq!(
            Execution::Sequential.find_first(5000, hit),
            Some((207, 414))
        );
        assert_eq!(Execution::Parallel.find_first(5000, hit), Some((207, 414)));
        assert_eq!(Execution::Parallel.find_first(10, |_| None::<()>), None);
    }
}
