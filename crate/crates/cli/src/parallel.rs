//! Worker-pool helpers. Results are always assembled in input order, so
//! the output does not depend on the number of threads.

use cayley_core::classify::{classify_candidate, enumerate_dominant, supported_systems, ClassificationRow, ClassifyError};
use cayley_core::matrep::MatrixRep;
use cayley_core::powerspan::{triple_in_span, SpanVerdict};
use cayley_core::rootsys::{Family, RootSystem};
use rayon::prelude::*;

pub const THREADS_ENV: &str = "CAYLEY_REP_THREADS";

/// Worker count from `CAYLEY_REP_THREADS`, if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|&n: &usize| n > 0)
}

/// Runs `f` inside a pool capped by [`thread_cap`].
pub fn with_pool<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_cap() {
        builder = builder.num_threads(n);
    }
    match builder.build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Triple-product test split over the first index. Each worker scans its
/// `(j, k)` range in order and the smallest failing `i` wins, so the result
/// equals the sequential one.
pub fn power_span(r: &MatrixRep) -> SpanVerdict {
    let span = r.span();
    let n = r.algebra_basis.len();
    let hit = (0..n)
        .into_par_iter()
        .filter_map(|i| {
            (0..n).find_map(|j| (i..n).find_map(|k| triple_in_span(r, &span, i, j, k).map(|w| ((i, j, k), w))))
        })
        .find_first(|_| true);
    match hit {
        Some((t, w)) => SpanVerdict { verdict: false, failing_triple: Some(t), residual_witness: Some(w) },
        None => SpanVerdict { verdict: true, failing_triple: None, residual_witness: None },
    }
}

/// Classification rows for the given systems, in system order then
/// lexicographic coefficient order.
pub fn classify_systems(systems: &[(Family, usize)], bound: u32) -> Result<Vec<ClassificationRow>, ClassifyError> {
    if bound < 1 {
        return Err(ClassifyError::ZeroBound);
    }
    let built = systems.iter().map(|&(f, n)| RootSystem::build(f, n)).collect::<Result<Vec<_>, _>>()?;
    let jobs: Vec<(usize, Vec<i64>, _)> = built
        .iter()
        .enumerate()
        .flat_map(|(s, rs)| enumerate_dominant(rs, bound).into_iter().map(move |(c, w)| (s, c, w)))
        .collect();
    jobs.into_par_iter().map(|(s, c, w)| classify_candidate(&built[s], c, w)).collect()
}

pub fn classify_window(max_rank: usize, bound: u32) -> Result<Vec<ClassificationRow>, ClassifyError> {
    classify_systems(&supported_systems(max_rank), bound)
}
