//! Exact applicability tests on matrix realizations.
//!
//! A Lie subalgebra `𝔲 ⊆ 𝔤𝔩(V)` has the power span property (`u^{2k+1} ∈ 𝔲`
//! for all `u ∈ 𝔲`) iff `abc + cba ∈ 𝔲` for all `a, b, c ∈ 𝔲`; by
//! trilinearity it suffices to test basis triples. On a diagonal Cartan the
//! same question reduces to `H_i H_j H_k ∈ span(H)`.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{ExactMatrix, GaussRat, SpanBasis};
use crate::matrep::MatrixRep;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PowerSpanError {
    #[error("Cartan elements {0} and {1} do not commute")]
    NonCommutingCartan(usize, usize),
    #[error("Cartan element {0} is not diagonal")]
    NonDiagonalCartan(usize),
    #[error("max_k and samples must both be at least 1")]
    EmptySampling,
}

/// Outcome of the triple-product test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanVerdict {
    pub verdict: bool,
    /// Lexicographically smallest `(i, j, k)` with `i ≤ k` whose symmetrized
    /// product leaves the span.
    pub failing_triple: Option<(usize, usize, usize)>,
    /// `B_i B_j B_k + B_k B_j B_i` for the failing triple.
    pub residual_witness: Option<ExactMatrix>,
}

fn symmetrized_triple(b: &[ExactMatrix], i: usize, j: usize, k: usize) -> ExactMatrix {
    let ij = b[i].mul(&b[j]);
    let kj = b[k].mul(&b[j]);
    ij.mul(&b[k]).add(&kj.mul(&b[i]))
}

/// Tests `B_i B_j B_k + B_k B_j B_i ∈ span(B)` over all basis triples.
pub fn check_power_span(r: &MatrixRep) -> SpanVerdict {
    let span = r.span();
    let b = &r.algebra_basis;
    for i in 0..b.len() {
        for j in 0..b.len() {
            for k in i..b.len() {
                let t = symmetrized_triple(b, i, j, k);
                if !span.contains(t.entries()).expect("basis matrices share a shape") {
                    return SpanVerdict { verdict: false, failing_triple: Some((i, j, k)), residual_witness: Some(t) };
                }
            }
        }
    }
    SpanVerdict { verdict: true, failing_triple: None, residual_witness: None }
}

/// Checks a single triple; used by parallel drivers that split the index
/// space and then keep the smallest failure.
pub fn triple_in_span(r: &MatrixRep, span: &SpanBasis<GaussRat>, i: usize, j: usize, k: usize) -> Option<ExactMatrix> {
    let t = symmetrized_triple(&r.algebra_basis, i, j, k);
    (!span.contains(t.entries()).expect("basis matrices share a shape")).then_some(t)
}

/// `Σ c_i B_i`.
pub fn combine(r: &MatrixRep, coeffs: &[i64]) -> ExactMatrix {
    let mut u = ExactMatrix::zeros(r.dim_v, r.dim_v);
    for (c, b) in coeffs.iter().zip(&r.algebra_basis) {
        if *c != 0 {
            u = u.add(&b.scale(&GaussRat::from_int(*c)));
        }
    }
    u
}

/// Smallest `k ≤ max_k` with `u^{2k+1} ∉ span`, if any.
pub fn odd_power_failure(span: &SpanBasis<GaussRat>, u: &ExactMatrix, max_k: u32) -> Option<u32> {
    let u2 = u.mul(u);
    let mut p = u.clone();
    for k in 0..=max_k {
        if !span.contains(p.entries()).expect("same shape") {
            return Some(k);
        }
        p = p.mul(&u2);
    }
    None
}

/// Draws `samples` combinations with coefficients in `{−2, …, 2}` from a
/// ChaCha8 stream seeded by `seed`, and checks `u^{2k+1} ∈ span` for
/// `k ≤ max_k`.
pub fn check_odd_powers(r: &MatrixRep, max_k: u32, samples: usize, seed: u64) -> Result<bool, PowerSpanError> {
    if max_k < 1 || samples < 1 {
        return Err(PowerSpanError::EmptySampling);
    }
    let span = r.span();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let coeffs: Vec<i64> = (0..r.algebra_basis.len()).map(|_| rng.random_range(-2..=2)).collect();
        if odd_power_failure(&span, &combine(r, &coeffs), max_k).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Tests `H_i H_j H_k ∈ span(H)` for all Cartan triples.
pub fn check_cartan_s3(r: &MatrixRep) -> Result<bool, PowerSpanError> {
    let h = &r.cartan_basis;
    for (i, x) in h.iter().enumerate() {
        if !x.is_diagonal() {
            return Err(PowerSpanError::NonDiagonalCartan(i));
        }
    }
    for i in 0..h.len() {
        for j in i + 1..h.len() {
            if !h[i].commutator(&h[j]).is_zero() {
                return Err(PowerSpanError::NonCommutingCartan(i, j));
            }
        }
    }
    let Some(first) = h.first() else {
        return Ok(true);
    };
    let span = SpanBasis::<GaussRat>::from_vectors(first.rows() * first.cols(), h.iter().map(ExactMatrix::entries))
        .expect("same shape");
    for i in 0..h.len() {
        for j in i..h.len() {
            let hij = h[i].mul(&h[j]);
            for hk in &h[j..] {
                if !span.contains(hij.mul(hk).entries()).expect("same shape") {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
