//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) the helpers fan work out over
//! the rayon pool when asked to; without it every [`Execution`] runs
//! sequentially. Callers pick the mode per call so benchmarks can compare
//! both paths inside one binary.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether work will actually be spread across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    pub fn from_flag(parallel: bool) -> Self {
        if parallel {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// `(0..n).map(f).collect()`.
pub fn map_indexed<R, Fun>(exec: Execution, n: usize, f: Fun) -> Vec<R>
where
    R: Send,
    Fun: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// `items.iter().map(f).collect()`.
pub fn map_slice<T, R, Fun>(exec: Execution, items: &[T], f: Fun) -> Vec<R>
where
    T: Sync,
    R: Send,
    Fun: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// The first `Some` in slice order (deterministic under both modes).
pub fn find_map_first<T, R, Fun>(exec: Execution, items: &[T], f: Fun) -> Option<R>
where
    T: Sync,
    R: Send,
    Fun: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().find_map_first(f);
    }
    let _ = exec;
    items.iter().find_map(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u64> = (0..1000).collect();
        for exec in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(map_indexed(exec, 5, |i| i * i), vec![0, 1, 4, 9, 16]);
            assert_eq!(map_slice(exec, &items, |x| x + 1)[999], 1000);
            assert_eq!(
                find_map_first(exec, &items, |&x| (x % 97 == 96).then_some(x)),
                Some(96)
            );
            assert_eq!(find_map_first(exec, &items, |_| None::<u64>), None);
        }
    }
}
