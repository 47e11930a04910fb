//! Exact arithmetic and exact dense linear algebra.
//!
//! Everything here works over ℚ ([`Rat`]) or ℚ(i) ([`GaussRat`]); there is no
//! tolerance anywhere. The [`Field`] trait lets the elimination code run over
//! either field.

mod gauss;
mod lp;
mod matrix;
mod rat;

use alloc::vec;
use alloc::vec::Vec;

pub use gauss::{GaussRat, ParseGaussError};
pub use lp::lp_feasible_convex_combination;
pub use matrix::ExactMatrix;
pub use rat::{ParseRatError, Rat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactLinError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty point set")]
    EmptyPointSet,
}

/// Minimal field interface shared by [`Rat`] and [`GaussRat`].
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
    fn neg(&self) -> Self;
}

impl Field for Rat {
    fn zero() -> Self {
        Rat::ZERO
    }
    fn one() -> Self {
        Rat::ONE
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn neg(&self) -> Self {
        -self
    }
}

#[derive(Debug, Clone)]
struct PivotRow<F> {
    pivot: usize,
    /// Dense row with a 1 at `pivot` and 0 at every earlier row's pivot.
    vec: Vec<F>,
    /// Indices of the nonzero entries of `vec`.
    support: Vec<usize>,
    /// The row as a combination of the inserted vectors.
    combo: Vec<F>,
}

/// Incrementally built echelon form of a list of vectors, supporting exact
/// rank updates and span-membership queries with coefficients.
#[derive(Debug, Clone)]
pub struct SpanBasis<F> {
    len: usize,
    inserted: usize,
    rows: Vec<PivotRow<F>>,
}

impl<F: Field> SpanBasis<F> {
    pub fn new(len: usize) -> Self {
        SpanBasis { len, inserted: 0, rows: Vec::new() }
    }

    pub fn from_vectors<'a, I>(len: usize, vectors: I) -> Result<Self, ExactLinError>
    where
        I: IntoIterator<Item = &'a [F]>,
        F: 'a,
    {
        let mut b = Self::new(len);
        for v in vectors {
            b.insert(v)?;
        }
        Ok(b)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn vector_len(&self) -> usize {
        self.len
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Reduces `v` in place against the basis; returns the coefficients of
    /// the removed part in terms of the inserted vectors.
    fn reduce(&self, v: &mut [F]) -> Vec<F> {
        let mut coeffs = vec![F::zero(); self.inserted];
        for row in &self.rows {
            let c = v[row.pivot].clone();
            if c.is_zero() {
                continue;
            }
            for &j in &row.support {
                v[j] = v[j].sub(&c.mul(&row.vec[j]));
            }
            for (k, r) in row.combo.iter().enumerate() {
                if !r.is_zero() {
                    coeffs[k] = coeffs[k].add(&c.mul(r));
                }
            }
        }
        coeffs
    }

    /// Adds a vector; returns `true` when it increased the rank.
    pub fn insert(&mut self, v: &[F]) -> Result<bool, ExactLinError> {
        if v.len() != self.len {
            return Err(ExactLinError::DimensionMismatch { expected: self.len, found: v.len() });
        }
        let mut w = v.to_vec();
        let coeffs = self.reduce(&mut w);
        let idx = self.inserted;
        self.inserted += 1;
        for row in &mut self.rows {
            row.combo.push(F::zero());
        }
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let scale = w[pivot].inv();
        let mut support = Vec::new();
        for (j, x) in w.iter_mut().enumerate() {
            if !x.is_zero() {
                *x = x.mul(&scale);
                support.push(j);
            }
        }
        // row = (v - Σ coeffs·inputs) * scale
        let mut combo: Vec<F> = coeffs.iter().map(|c| c.neg().mul(&scale)).collect();
        combo.push(scale);
        debug_assert_eq!(combo.len(), idx + 1);
        self.rows.push(PivotRow { pivot, vec: w, support, combo });
        Ok(true)
    }

    /// Coefficients `c` with `x = Σ c_k · inserted_k` when `x` lies in the
    /// span, `None` otherwise.
    pub fn membership(&self, x: &[F]) -> Result<Option<Vec<F>>, ExactLinError> {
        if x.len() != self.len {
            return Err(ExactLinError::DimensionMismatch { expected: self.len, found: x.len() });
        }
        let mut w = x.to_vec();
        let coeffs = self.reduce(&mut w);
        Ok(w.iter().all(Field::is_zero).then_some(coeffs))
    }

    pub fn contains(&self, x: &[F]) -> Result<bool, ExactLinError> {
        if x.len() != self.len {
            return Err(ExactLinError::DimensionMismatch { expected: self.len, found: x.len() });
        }
        let mut w = x.to_vec();
        for row in &self.rows {
            let c = w[row.pivot].clone();
            if c.is_zero() {
                continue;
            }
            for &j in &row.support {
                w[j] = w[j].sub(&c.mul(&row.vec[j]));
            }
        }
        Ok(w.iter().all(Field::is_zero))
    }
}

/// Exact rank over ℚ(i).
pub fn rank(m: &ExactMatrix) -> usize {
    let mut b = SpanBasis::new(m.cols());
    for r in 0..m.rows() {
        b.insert(m.row(r)).expect("row length equals column count");
    }
    b.rank()
}

/// Exact rank of a list of rational vectors of equal length.
pub fn rank_of_vectors(vectors: &[Vec<Rat>]) -> Result<usize, ExactLinError> {
    let len = vectors.first().map_or(0, Vec::len);
    SpanBasis::from_vectors(len, vectors.iter().map(Vec::as_slice)).map(|b| b.rank())
}

/// A solution of `a·x = b` over ℚ (free variables set to zero), or `None`
/// when the system is inconsistent.
pub fn solve_rational(a: &[Vec<Rat>], b: &[Rat]) -> Result<Option<Vec<Rat>>, ExactLinError> {
    if a.len() != b.len() {
        return Err(ExactLinError::DimensionMismatch { expected: a.len(), found: b.len() });
    }
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rat>> = Vec::with_capacity(a.len());
    for (row, rhs) in a.iter().zip(b) {
        if row.len() != cols {
            return Err(ExactLinError::DimensionMismatch { expected: cols, found: row.len() });
        }
        let mut r = row.clone();
        r.push(rhs.clone());
        m.push(r);
    }
    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..cols {
        let Some(p) = (pr..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(pr, p);
        let inv = m[pr][c].recip();
        for x in m[pr].iter_mut() {
            *x *= &inv;
        }
        let prow = m[pr].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != pr && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(c);
        pr += 1;
    }
    if m[pr..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![Rat::ZERO; cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Ok(Some(x))
}

/// Decides whether `x` is a linear combination of `basis`, returning the
/// coefficients when it is.
pub fn span_membership(
    x: &ExactMatrix,
    basis: &[ExactMatrix],
) -> Result<Option<Vec<GaussRat>>, ExactLinError> {
    let len = x.rows() * x.cols();
    let mut sb = SpanBasis::new(len);
    for b in basis {
        if b.rows() != x.rows() || b.cols() != x.cols() {
            return Err(ExactLinError::DimensionMismatch {
                expected: len,
                found: b.rows() * b.cols(),
            });
        }
        sb.insert(b.entries())?;
    }
    sb.membership(x.entries())
}
