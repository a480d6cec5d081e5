//! Data-parallel helpers. With the `parallel` feature these run on rayon;
//! without it, or under [`Execution::Sequential`], they run on one thread.

/// How a brute-force scan is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when the `parallel` feature is off.
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Sums `f(lo, hi)` over consecutive ranges covering `0..total`.
pub fn sum_ranges<F>(total: u64, shards: u64, exec: Execution, f: F) -> u64
where
    F: Fn(u64, u64) -> u64 + Sync + Send,
{
    let shards = shards.clamp(1, total.max(1));
    let width = total.div_ceil(shards).max(1);
    let range = move |i: u64| (i * width, ((i + 1) * width).min(total));
    let count = total.div_ceil(width);
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..count)
            .into_par_iter()
            .map(|i| {
                let (lo, hi) = range(i);
                f(lo, hi)
            })
            .sum();
    }
    let _ = exec;
    (0..count)
        .map(|i| {
            let (lo, hi) = range(i);
            f(lo, hi)
        })
        .sum()
}

/// Maps `f` over `items`, keeping input order.
pub fn map_ordered<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}
