//! Deterministic data-parallel helpers.
//!
//! All parallelism in this crate goes through these functions so that the
//! results are byte-identical regardless of worker count or the `parallel`
//! feature flag:
//!
//! * work is split by index and collected back in index order — never with
//!   cross-thread floating-point reductions whose association could vary;
//! * the only reductions performed in parallel are exact ones (max of
//!   finite floats);
//! * with the `parallel` feature disabled (or `parallel == false`) the same
//!   closures run sequentially in the same order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `0..n`, returning results in index order.
///
/// Runs on the rayon pool when the `parallel` feature is enabled and
/// `parallel` is true; otherwise sequentially. Output is identical either
/// way.
pub fn maybe_par_map<T, F>(n: usize, parallel: bool, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel {
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    let _ = parallel;
    (0..n).map(f).collect()
}

/// Map `f` over a slice of items, returning results in item order.
pub fn maybe_par_map_items<I, T, F>(items: &[I], parallel: bool, f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel {
            return items.par_iter().map(f).collect();
        }
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

/// Exact parallel max of a per-index evaluation (floats must be finite).
///
/// Max is associative and commutative on finite floats, so a parallel
/// reduction is bit-identical to the sequential one.
pub fn maybe_par_max<F>(n: usize, parallel: bool, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel {
            return (0..n)
                .into_par_iter()
                .map(f)
                .reduce(|| f64::NEG_INFINITY, f64::max);
        }
    }
    let _ = parallel;
    (0..n).map(f).fold(f64::NEG_INFINITY, f64::max)
}
