//! Symmetric powers of `sl₂`, the quadratic standard representations, `Λ²ℂ⁴`
//! of `sl₄`, and two non-semisimple fixtures.
//!
//! The quadratic algebras preserve the form `J` with ones on the
//! anti-diagonal (orthogonal case) or `[[0, K], [−K, 0]]` with `K`
//! anti-diagonal (symplectic case). The projection `X ↦ X − J⁻¹XᵀJ` maps
//! `gl(V)` onto the algebra, and the slots are ordered
//! `L₁, …, L_n, (0), −L_n, …, −L₁`.

use alloc::format;
use alloc::vec::Vec;

use crate::exactlin::{ExactMatrix, Field, GaussRat, Rat, SpanBasis};
use crate::rootsys::{Family, RootSystem, Weight};

use super::{MatRepError, MatrixRep};

fn int(n: i64) -> GaussRat {
    GaussRat::from_int(n)
}

/// `S^d ℂ²` with basis `H, E, F`, `F v_k = v_{k+1}` and
/// `E v_k = k(d − k + 1) v_{k−1}`.
pub fn build_sl2_symmetric_power(d: usize) -> Result<MatrixRep, MatRepError> {
    if d < 1 {
        return Err(MatRepError::Unsupported("symmetric power d must be at least 1".into()));
    }
    let n = d + 1;
    let di = d as i64;
    let h = ExactMatrix::diagonal(&(0..n as i64).map(|k| int(di - 2 * k)).collect::<Vec<_>>());
    let mut e = ExactMatrix::zeros(n, n);
    let mut f = ExactMatrix::zeros(n, n);
    for k in 1..n {
        let ki = k as i64;
        e.set(k - 1, k, int(ki * (di - ki + 1)));
        f.set(k, k - 1, int(1));
    }
    let label = if d == 2 { "sl2-adjoint".into() } else { format!("sl2-sym-{d}") };
    Ok(MatrixRep {
        label,
        dim_v: n,
        algebra_basis: alloc::vec![h.clone(), e, f],
        cartan_basis: alloc::vec![h],
        cartan_coords: alloc::vec![Weight::from_ints(&[1, -1])],
        weight_labels: (0..n as i64)
            .map(|k| {
                let c = Rat::new(di - 2 * k, 2);
                Weight::new(alloc::vec![c.clone(), -c])
            })
            .collect(),
        root_data: Some((Family::A, 1)),
        highest_coeffs: Some(alloc::vec![di]),
    })
}

fn form(family: Family, n: usize) -> (usize, ExactMatrix, ExactMatrix) {
    match family {
        Family::C => {
            let dim = 2 * n;
            let mut j = ExactMatrix::zeros(dim, dim);
            for k in 0..n {
                j.set(k, dim - 1 - k, int(1));
                j.set(dim - 1 - k, k, int(-1));
            }
            let jinv = j.scale(&int(-1));
            (dim, j, jinv)
        }
        _ => {
            let dim = if family == Family::B { 2 * n + 1 } else { 2 * n };
            let mut j = ExactMatrix::zeros(dim, dim);
            for k in 0..dim {
                j.set(k, dim - 1 - k, int(1));
            }
            (dim, j.clone(), j)
        }
    }
}

/// Standard representation of `so_{2n+1}`, `sp_{2n}` or `so_{2n}` in split
/// form.
pub fn build_quadratic_standard(family: Family, n: usize) -> Result<MatrixRep, MatRepError> {
    if family == Family::A {
        return Err(MatRepError::Unsupported("quadratic standard representation needs family B, C or D".into()));
    }
    RootSystem::build(family, n)?;
    let (dim, j, jinv) = form(family, n);
    let project = |x: &ExactMatrix| x.sub(&jinv.mul(&x.transpose()).mul(&j));
    let mut cartan = Vec::with_capacity(n);
    for k in 0..n {
        let mut h = ExactMatrix::zeros(dim, dim);
        h.set(k, k, int(1));
        h.set(dim - 1 - k, dim - 1 - k, int(-1));
        cartan.push(h);
    }
    let mut span = SpanBasis::<GaussRat>::new(dim * dim);
    let mut basis = Vec::new();
    for h in &cartan {
        span.insert(h.entries()).expect("square");
        basis.push(h.clone());
    }
    for a in 0..dim {
        for b in 0..dim {
            let g = project(&ExactMatrix::elementary(dim, a, b));
            if !g.is_zero() && span.insert(g.entries()).expect("square") {
                basis.push(g);
            }
        }
    }
    let mut labels: Vec<Weight> = (0..n).map(|k| Weight::unit(n, k)).collect();
    if family == Family::B {
        labels.push(Weight::zero(n));
    }
    labels.extend((0..n).rev().map(|k| Weight::unit(n, k).neg()));
    let name = match family {
        Family::C => "sp2n-standard",
        _ => "soN-standard",
    };
    let mut coeffs = alloc::vec![0; n];
    coeffs[0] = 1;
    Ok(MatrixRep {
        label: format!("{name}:{family}{n}"),
        dim_v: dim,
        algebra_basis: basis,
        cartan_basis: cartan,
        cartan_coords: (0..n).map(|k| Weight::unit(n, k)).collect(),
        weight_labels: labels,
        root_data: Some((family, n)),
        highest_coeffs: Some(coeffs),
    })
}

const WEDGE_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Action of a 4×4 matrix on `Λ²ℂ⁴` in the basis `e₁∧e₂, e₁∧e₃, e₁∧e₄,
/// e₂∧e₃, e₂∧e₄, e₃∧e₄`.
fn wedge_action(x: &ExactMatrix) -> ExactMatrix {
    let idx = |a: usize, b: usize| WEDGE_PAIRS.iter().position(|&p| p == (a, b));
    let mut out = ExactMatrix::zeros(6, 6);
    for (col, &(i, j)) in WEDGE_PAIRS.iter().enumerate() {
        // X(e_i ∧ e_j) = Xe_i ∧ e_j + e_i ∧ Xe_j
        for r in 0..4 {
            for (a, b, c) in [(r, j, x.get(r, i)), (i, r, x.get(r, j))] {
                if Field::is_zero(c) || a == b {
                    continue;
                }
                let (row, sign) = if a < b { (idx(a, b), 1) } else { (idx(b, a), -1) };
                let row = row.expect("valid pair");
                let cur = out.get(row, col).clone();
                out.set(row, col, &cur + &(c * &int(sign)));
            }
        }
    }
    out
}

/// `Λ²ℂ⁴` as a representation of `sl₄`.
pub fn build_sl4_lambda2() -> MatrixRep {
    let mut defining = Vec::with_capacity(15);
    for i in 0..3 {
        let mut h = ExactMatrix::zeros(4, 4);
        h.set(i, i, int(1));
        h.set(i + 1, i + 1, int(-1));
        defining.push(h);
    }
    for a in 0..4 {
        for b in 0..4 {
            if a != b {
                defining.push(ExactMatrix::elementary(4, a, b));
            }
        }
    }
    let basis: Vec<ExactMatrix> = defining.iter().map(wedge_action).collect();
    let rs = RootSystem::build(Family::A, 3).expect("A3 exists");
    let weight_labels = WEDGE_PAIRS
        .iter()
        .map(|&(i, j)| {
            let w = Weight::unit(4, i).add(&Weight::unit(4, j));
            rs.weight(w.into_coords()).expect("dimension 4")
        })
        .collect();
    let cartan_coords = (0..3).map(|i| Weight::unit(4, i).sub(&Weight::unit(4, i + 1))).collect();
    MatrixRep {
        label: "sl4-lambda2".into(),
        dim_v: 6,
        cartan_basis: basis[..3].to_vec(),
        algebra_basis: basis,
        cartan_coords,
        weight_labels,
        root_data: Some((Family::A, 3)),
        highest_coeffs: Some(alloc::vec![0, 1, 0]),
    }
}

/// The diagonal matrices `E₁₁, …, E_nn`.
pub fn build_diagonal_group_algebra(n: usize) -> Result<MatrixRep, MatRepError> {
    if n < 2 {
        return Err(MatRepError::Unsupported("diagonal fixture needs n ≥ 2".into()));
    }
    let basis: Vec<ExactMatrix> = (0..n).map(|k| ExactMatrix::elementary(n, k, k)).collect();
    Ok(MatrixRep {
        label: format!("gl-diagonal:{n}"),
        dim_v: n,
        cartan_basis: basis.clone(),
        algebra_basis: basis,
        cartan_coords: (0..n).map(|k| Weight::unit(n, k)).collect(),
        weight_labels: (0..n).map(|k| Weight::unit(n, k)).collect(),
        root_data: None,
        highest_coeffs: None,
    })
}

/// Strictly upper triangular `n × n` matrices, basis `E_ij` for `i < j`.
pub fn build_unipotent_upper(n: usize) -> Result<MatrixRep, MatRepError> {
    if n < 2 {
        return Err(MatRepError::Unsupported("unipotent fixture needs n ≥ 2".into()));
    }
    let mut basis = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            basis.push(ExactMatrix::elementary(n, i, j));
        }
    }
    Ok(MatrixRep {
        label: format!("unipotent-upper:{n}"),
        dim_v: n,
        algebra_basis: basis,
        cartan_basis: Vec::new(),
        cartan_coords: Vec::new(),
        weight_labels: alloc::vec![Weight::zero(0); n],
        root_data: None,
        highest_coeffs: None,
    })
}
