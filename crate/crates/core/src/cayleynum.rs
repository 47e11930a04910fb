//! Floating-point Cayley transform, matrix logarithm and exponential series,
//! the log-membership residual and the Padé-order probe.
//!
//! Norm conventions: domain guards use the operator 2-norm estimated by 20
//! steps of power iteration on `AᴴA`; Padé errors use the Frobenius norm.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::ExactMatrix;
use crate::matrep::MatrixRep;

const POWER_ITERATIONS: usize = 20;
const LOG_MAX_TERMS: usize = 200;
const LOG_REL_TOL: f64 = 1e-16;
const EXP_TERM_TOL: f64 = 1e-15;
/// Largest `‖u‖` accepted by the residual before rescaling.
pub const RESIDUAL_NORM_BOUND: f64 = 0.95 / 3.0;
/// Condition estimates above this are treated as singular.
const MAX_CONDITION: f64 = 1e-3 / f64::EPSILON;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumError {
    #[error("I - u is singular or too ill-conditioned (condition estimate {0:e})")]
    Singular(f64),
    #[error("logarithm series needs ||a - I|| < 1, got {0}")]
    OutsideLogDomain(f64),
    #[error("logarithm series did not converge in {0} terms")]
    NonConvergence(usize),
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("matrix has non-finite entries")]
    NonFinite,
}

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct NumMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl NumMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: alloc::vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(dim: usize, data: Vec<Complex64>) -> Result<Self, NumError> {
        if data.len() != dim * dim {
            return Err(NumError::DimensionMismatch);
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(NumError::NonFinite);
        }
        Ok(Self { dim, data })
    }

    pub fn from_exact(m: &ExactMatrix) -> Self {
        assert!(m.is_square(), "square matrix expected");
        let data = m.entries().iter().map(|z| Complex64::new(z.re.to_f64(), z.im.to_f64())).collect();
        Self { dim: m.rows(), data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.dim + c]
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * o.data[k * n + j];
                }
            }
        }
        out
    }

    fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        let n = self.dim;
        (0..n).map(|i| (0..n).map(|j| self.data[i * n + j] * v[j]).sum()).collect()
    }

    fn adjoint_mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        let n = self.dim;
        (0..n).map(|j| (0..n).map(|i| self.data[i * n + j].conj() * v[i]).sum()).collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(Complex64::norm_sqr).sum())
    }

    /// Maximum absolute column sum.
    pub fn one_norm(&self) -> f64 {
        let n = self.dim;
        (0..n).map(|j| (0..n).map(|i| self.data[i * n + j].norm()).sum::<f64>()).fold(0.0, f64::max)
    }

    /// Operator 2-norm estimate by power iteration on `AᴴA`.
    pub fn op_norm(&self) -> f64 {
        let n = self.dim;
        if n == 0 {
            return 0.0;
        }
        let mut v: Vec<Complex64> = (0..n).map(|i| Complex64::new(1.0 + 0.1 * i as f64, 0.05 * i as f64)).collect();
        let mut sigma = 0.0;
        for _ in 0..POWER_ITERATIONS {
            let nv = libm::sqrt(v.iter().map(Complex64::norm_sqr).sum());
            if nv == 0.0 {
                return 0.0;
            }
            v.iter_mut().for_each(|x| *x /= nv);
            let av = self.mul_vec(&v);
            sigma = libm::sqrt(av.iter().map(Complex64::norm_sqr).sum());
            v = self.adjoint_mul_vec(&av);
        }
        sigma.max(self.frobenius_norm() / libm::sqrt(n as f64)).min(self.frobenius_norm())
    }

    /// Inverse by LU with partial pivoting, with a 1-norm condition estimate.
    pub fn inverse(&self) -> Result<(Self, f64), NumError> {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut inv = Self::identity(n).data;
        for col in 0..n {
            let piv = (col..n)
                .max_by(|&x, &y| a[x * n + col].norm().total_cmp(&a[y * n + col].norm()))
                .expect("nonempty range");
            if a[piv * n + col].norm() == 0.0 {
                return Err(NumError::Singular(f64::INFINITY));
            }
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                    inv.swap(piv * n + j, col * n + j);
                }
            }
            let p = a[col * n + col];
            for j in 0..n {
                a[col * n + j] /= p;
                inv[col * n + j] /= p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col];
                if f == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    let (ac, ic) = (a[col * n + j], inv[col * n + j]);
                    a[r * n + j] -= f * ac;
                    inv[r * n + j] -= f * ic;
                }
            }
        }
        let inv = Self { dim: n, data: inv };
        let cond = self.one_norm() * inv.one_norm();
        if !cond.is_finite() || cond > MAX_CONDITION {
            return Err(NumError::Singular(cond));
        }
        Ok((inv, cond))
    }

    pub fn max_abs_diff(&self, o: &Self) -> f64 {
        self.data.iter().zip(&o.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

/// `C(u) = (I + u)(I − u)⁻¹`.
pub fn cayley(u: &NumMatrix) -> Result<NumMatrix, NumError> {
    let id = NumMatrix::identity(u.dim());
    let (inv, _) = id.sub(u).inverse()?;
    Ok(id.add(u).mul(&inv))
}

/// `log a = Σ (−1)^{k+1} (a − I)^k / k`. Stops once a term's Frobenius norm
/// is below `1e-16` times the running sum's, or after 200 terms. Returns the
/// logarithm and the number of terms summed.
pub fn log_series(a: &NumMatrix) -> Result<(NumMatrix, usize), NumError> {
    let x = a.sub(&NumMatrix::identity(a.dim()));
    let nx = x.op_norm();
    if nx >= 1.0 {
        return Err(NumError::OutsideLogDomain(nx));
    }
    let mut sum = NumMatrix::zeros(a.dim());
    let mut pow = x.clone();
    for k in 1..=LOG_MAX_TERMS {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let term = pow.scale_re(sign / k as f64);
        sum = sum.add(&term);
        if term.frobenius_norm() <= LOG_REL_TOL * sum.frobenius_norm() {
            return Ok((sum, k));
        }
        pow = pow.mul(&x);
    }
    if pow.frobenius_norm() > 1e-12 * sum.frobenius_norm().max(1.0) {
        return Err(NumError::NonConvergence(LOG_MAX_TERMS));
    }
    Ok((sum, LOG_MAX_TERMS))
}

/// Matrix exponential by scaling and squaring on the Taylor series.
pub fn exp_series(a: &NumMatrix) -> NumMatrix {
    let mut n = a.frobenius_norm();
    let mut s = 0u32;
    while n > 0.5 {
        n /= 2.0;
        s += 1;
    }
    let scaled = a.scale_re(libm::pow(0.5, f64::from(s)));
    let mut sum = NumMatrix::identity(a.dim());
    let mut term = NumMatrix::identity(a.dim());
    for k in 1..100 {
        term = term.mul(&scaled).scale_re(1.0 / k as f64);
        sum = sum.add(&term);
        if term.frobenius_norm() <= EXP_TERM_TOL * sum.frobenius_norm() {
            break;
        }
    }
    for _ in 0..s {
        sum = sum.mul(&sum);
    }
    sum
}

/// Outcome of a log-membership residual computation.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    /// Operator norm of `u` before any rescaling.
    pub input_norm: f64,
    /// Factor applied to `u` to bring it inside the domain (1 if none).
    pub scale: f64,
    /// Frobenius distance of `log(I+u) − log(I−u)` to `span(B)`, divided by
    /// its norm.
    pub residual: f64,
    /// Total series terms for both logarithms.
    pub series_terms: usize,
    /// Number of basis matrices dropped as numerically dependent.
    pub dropped_basis_vectors: usize,
}

/// Pivoted modified Gram–Schmidt over the vectorized basis; returns the
/// orthonormal vectors and how many inputs were dropped as dependent.
fn orthonormalize(vectors: &[Vec<Complex64>]) -> (Vec<Vec<Complex64>>, usize) {
    let norm = |v: &[Complex64]| libm::sqrt(v.iter().map(Complex64::norm_sqr).sum());
    let mut rest: Vec<(Vec<Complex64>, f64)> = vectors.iter().map(|v| (v.clone(), norm(v))).collect();
    let mut q: Vec<Vec<Complex64>> = Vec::new();
    let mut dropped = 0;
    while !rest.is_empty() {
        let (idx, _) = rest
            .iter()
            .enumerate()
            .map(|(i, (v, n0))| (i, if *n0 > 0.0 { norm(v) / n0 } else { 0.0 }))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("nonempty");
        let (v, n0) = rest.swap_remove(idx);
        let nv = norm(&v);
        if n0 == 0.0 || nv <= 1e-10 * n0 {
            dropped += 1 + rest.len();
            break;
        }
        let e: Vec<Complex64> = v.iter().map(|x| x / nv).collect();
        for (w, _) in rest.iter_mut() {
            // two passes of projection for stability
            for _ in 0..2 {
                let c: Complex64 = e.iter().zip(w.iter()).map(|(a, b)| a.conj() * b).sum();
                w.iter_mut().zip(&e).for_each(|(x, a)| *x -= c * a);
            }
        }
        q.push(e);
    }
    (q, dropped)
}

fn distance_to_span(q: &[Vec<Complex64>], v: &[Complex64]) -> f64 {
    let mut r = v.to_vec();
    for _ in 0..2 {
        for e in q {
            let c: Complex64 = e.iter().zip(&r).map(|(a, b)| a.conj() * b).sum();
            r.iter_mut().zip(e).for_each(|(x, a)| *x -= c * a);
        }
    }
    libm::sqrt(r.iter().map(Complex64::norm_sqr).sum())
}

/// `Σ c_i B_i` in floating point.
pub fn combine_f64(r: &MatrixRep, coeffs: &[f64]) -> NumMatrix {
    let mut u = NumMatrix::zeros(r.dim_v);
    for (c, b) in coeffs.iter().zip(&r.algebra_basis) {
        if *c != 0.0 {
            u = u.add(&NumMatrix::from_exact(b).scale_re(*c));
        }
    }
    u
}

/// Residual of `log(I+u) − log(I−u)` against `span(B)` for
/// `u = Σ u_coeffs[i]·B_i`, rescaled into `‖u‖ ≤ 0.95/3` when needed.
pub fn log_membership_residual(u_coeffs: &[f64], r: &MatrixRep) -> Result<ResidualReport, NumError> {
    if u_coeffs.len() != r.algebra_basis.len() {
        return Err(NumError::DimensionMismatch);
    }
    let u = combine_f64(r, u_coeffs);
    let input_norm = u.op_norm();
    let scale = if input_norm > RESIDUAL_NORM_BOUND { RESIDUAL_NORM_BOUND / input_norm } else { 1.0 };
    let u = u.scale_re(scale);
    let id = NumMatrix::identity(r.dim_v);
    let (lp, tp) = log_series(&id.add(&u))?;
    let (lm, tm) = log_series(&id.sub(&u))?;
    let v = lp.sub(&lm);
    let basis: Vec<Vec<Complex64>> = r.algebra_basis.iter().map(|b| NumMatrix::from_exact(b).data).collect();
    let (q, dropped) = orthonormalize(&basis);
    let nv = v.frobenius_norm();
    let residual = if nv == 0.0 { 0.0 } else { distance_to_span(&q, &v.data) / nv };
    Ok(ResidualReport { input_norm, scale, residual, series_terms: tp + tm, dropped_basis_vectors: dropped })
}

/// Direction coefficients uniform in `[−1, 1)` from a ChaCha8 stream.
pub fn random_direction(len: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len).map(|_| rng.random_range(-1.0..1.0)).collect()
}

/// Coefficients of `random_direction(seed)` rescaled so that the combined
/// matrix has operator norm `target`. Returns `None` for a zero direction.
pub fn direction_with_norm(r: &MatrixRep, seed: u64, target: f64) -> Option<Vec<f64>> {
    let c = random_direction(r.algebra_basis.len(), seed);
    let n = combine_f64(r, &c).op_norm();
    (n > 0.0).then(|| c.iter().map(|x| x * target / n).collect())
}

/// `(t, ‖C(t·u/2) − exp(t·u)‖_F)` for each scale, where `u` is the
/// direction normalized to operator norm 1 (left as is when zero).
pub fn pade_order_probe(r: &MatrixRep, direction_coeffs: &[f64], scales: &[f64]) -> Result<Vec<(f64, f64)>, NumError> {
    if direction_coeffs.len() != r.algebra_basis.len() {
        return Err(NumError::DimensionMismatch);
    }
    let mut u = combine_f64(r, direction_coeffs);
    let n = u.op_norm();
    if n > 0.0 {
        u = u.scale_re(1.0 / n);
    }
    scales
        .iter()
        .map(|&t| {
            let c = cayley(&u.scale_re(t / 2.0))?;
            Ok((t, c.sub(&exp_series(&u.scale_re(t))).frobenius_norm()))
        })
        .collect()
}

/// Least-squares slope of `log err` against `log t`, ignoring zero errors.
/// `None` when fewer than two usable points remain.
pub fn fit_loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> =
        points.iter().filter(|(t, e)| *t > 0.0 && *e > 0.0).map(|&(t, e)| (libm::log(t), libm::log(e))).collect();
    if pts.len() < 2 {
        return None;
    }
    let m = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let sxx: f64 = pts.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    let sxy: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrep::build_by_label;

    fn diag(v: &[f64]) -> NumMatrix {
        let n = v.len();
        let mut data = alloc::vec![Complex64::new(0.0, 0.0); n * n];
        for (i, x) in v.iter().enumerate() {
            data[i * n + i] = Complex64::new(*x, 0.0);
        }
        NumMatrix::from_rows(n, data).unwrap()
    }

    #[test]
    fn cayley_basics() {
        assert_eq!(cayley(&NumMatrix::zeros(3)).unwrap(), NumMatrix::identity(3));
        assert!(matches!(cayley(&NumMatrix::identity(2)), Err(NumError::Singular(_))));
        let r = build_by_label("unipotent-upper:3").unwrap();
        let c = cayley(&combine_f64(&r, &[0.3, -0.2, 0.1])).unwrap();
        for i in 0..3 {
            assert_eq!(c.get(i, i), Complex64::new(1.0, 0.0));
            for j in 0..i {
                assert_eq!(c.get(i, j), Complex64::new(0.0, 0.0));
            }
        }
    }

    #[test]
    fn log_of_diagonal() {
        let a = diag(&[libm::exp(0.1), libm::exp(-0.1)]);
        let (l, _) = log_series(&a).unwrap();
        assert!(l.max_abs_diff(&diag(&[0.1, -0.1])) < 1e-12);
        assert_eq!(log_series(&NumMatrix::identity(2)).unwrap().0, NumMatrix::zeros(2));
        assert!(matches!(log_series(&diag(&[2.5, 1.0])), Err(NumError::OutsideLogDomain(_))));
    }

    #[test]
    fn op_norm_of_diagonal() {
        assert!((diag(&[0.5, -3.0, 1.0]).op_norm() - 3.0).abs() < 1e-9);
    }

    #[test]
    fn residual_splits_exact_verdicts() {
        let b2 = build_by_label("soN-standard:B2").unwrap();
        let s3 = build_by_label("sl2-sym-3").unwrap();
        let c = direction_with_norm(&b2, 7, 0.2).unwrap();
        assert!(log_membership_residual(&c, &b2).unwrap().residual < 1e-10);
        let c = direction_with_norm(&s3, 7, 0.2).unwrap();
        assert!(log_membership_residual(&c, &s3).unwrap().residual > 1e-3);
    }

    #[test]
    fn pade_slope_and_nilpotent() {
        let b2 = build_by_label("soN-standard:B2").unwrap();
        let pts = pade_order_probe(&b2, &random_direction(10, 3), &[0.1, 0.05, 0.025, 0.0125]).unwrap();
        let s = fit_loglog_slope(&pts).unwrap();
        assert!((s - 3.0).abs() < 0.2, "{s}");
        let zero = pade_order_probe(&b2, &[0.0; 10], &[0.1, 0.05]).unwrap();
        assert!(zero.iter().all(|&(_, e)| e == 0.0));
        let u3 = build_by_label("unipotent-upper:3").unwrap();
        let pts = pade_order_probe(&u3, &[1.0, 0.5, -1.0], &[0.1, 0.05]).unwrap();
        assert!(pts.iter().all(|&(_, e)| e < 1e-15));
    }
}
