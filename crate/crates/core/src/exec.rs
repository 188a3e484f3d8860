//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) the `Parallel` strategy runs on
//! the rayon global pool; without it every strategy runs sequentially. Results
//! are always returned in input order, so output never depends on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a bulk computation is scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when this strategy will actually use worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Maps `f` over `items`, keeping order.
pub fn map_slice<T, U, F>(exec: Execution, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Evaluates `f` on `0..len` and keeps the `Some` results in index order.
pub fn filter_map_range<U, F>(exec: Execution, len: u64, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(u64) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len).into_par_iter().filter_map(f).collect();
    }
    let _ = exec;
    (0..len).filter_map(f).collect()
}

/// Like [`filter_map_range`] but each index may fail; the first error in
/// index order wins.
pub fn try_filter_map_range<U, E, F>(exec: Execution, len: u64, f: F) -> Result<Vec<U>, E>
where
    U: Send,
    E: Send,
    F: Fn(u64) -> Result<Option<U>, E> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        let results: Vec<Result<Option<U>, E>> = (0..len).into_par_iter().map(f).collect();
        return results.into_iter().filter_map(Result::transpose).collect();
    }
    let _ = exec;
    (0..len).filter_map(|i| f(i).transpose()).collect()
}

/// Maps a fallible `f` over `items`; the first error in input order wins.
pub fn try_map_slice<T, U, E, F>(exec: Execution, items: &[T], f: F) -> Result<Vec<U>, E>
where
    T: Sync,
    U: Send,
    E: Send,
    F: Fn(&T) -> Result<U, E> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        let results: Vec<Result<U, E>> = items.par_iter().map(f).collect();
        return results.into_iter().collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_and_keep_order() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = map_slice(Execution::Sequential, &items, |x| x * x);
        let par = map_slice(Execution::Parallel, &items, |x| x * x);
        assert_eq!(seq, par);
        let seq = filter_map_range(Execution::Sequential, 500, |i| (i % 7 == 0).then_some(i));
        let par = filter_map_range(Execution::Parallel, 500, |i| (i % 7 == 0).then_some(i));
        assert_eq!(seq, par);
        assert!(seq.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn first_error_in_order_wins() {
        let r: Result<Vec<u64>, u64> = try_filter_map_range(Execution::Parallel, 100, |i| {
            if i == 30 || i == 60 {
                Err(i)
            } else {
                Ok(Some(i))
            }
        });
        assert_eq!(r, Err(30));
    }
}
