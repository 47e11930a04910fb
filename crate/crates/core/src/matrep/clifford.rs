//! Gamma matrices and spin representations.
//!
//! With `m` tensor factors, `γ_{2k} = σ₃^{⊗k} ⊗ σ₁ ⊗ I`, `γ_{2k+1} = σ₃^{⊗k} ⊗ σ₂ ⊗ I`,
//! and for an odd number of generators the last one is `σ₃^{⊗m}`. The spin
//! generators are `¼[γ_a, γ_b]`. The Cartan element `H_k = −i·¼[γ_{2k}, γ_{2k+1}]`
//! equals `½·σ₃` on factor `k`, so a basis vector whose factor-`k` bit is 0
//! (resp. 1) has `L_k`-coordinate `+½` (resp. `−½`).
//!
//! For `so₈` the chirality operator `γ₁⋯γ₈ = σ₃^{⊗4}` is diagonal; the plus
//! half-spin block is its `+1` eigenspace, i.e. the weights `½(±1,±1,±1,±1)`
//! with an even number of minus signs.

use alloc::format;
use alloc::vec::Vec;

use crate::exactlin::{ExactMatrix, Field, GaussRat, Rat, SpanBasis};
use crate::rootsys::{Family, Weight};

use super::{MatRepError, MatrixRep};

fn pauli(k: u8) -> ExactMatrix {
    let z = GaussRat::zero();
    let one = GaussRat::one();
    let i = GaussRat::i();
    let entries = match k {
        1 => alloc::vec![z.clone(), one.clone(), one, z],
        2 => alloc::vec![z.clone(), Field::neg(&i), i, z],
        _ => alloc::vec![one, z.clone(), z, GaussRat::from_int(-1)],
    };
    ExactMatrix::from_entries(2, 2, entries).expect("2x2")
}

fn kron_all(factors: &[ExactMatrix]) -> ExactMatrix {
    factors.iter().skip(1).fold(factors[0].clone(), |acc, f| acc.kron(f))
}

/// `count` mutually anticommuting matrices squaring to the identity, of size
/// `2^⌊count/2⌋`.
pub fn gamma_matrices(count: usize) -> Vec<ExactMatrix> {
    let m = count / 2;
    let id = ExactMatrix::identity(2);
    let mut out = Vec::with_capacity(count);
    for k in 0..m {
        for p in [1u8, 2] {
            let factors: Vec<ExactMatrix> = (0..m)
                .map(|j| match j.cmp(&k) {
                    core::cmp::Ordering::Less => pauli(3),
                    core::cmp::Ordering::Equal => pauli(p),
                    core::cmp::Ordering::Greater => id.clone(),
                })
                .collect();
            out.push(kron_all(&factors));
        }
    }
    if count % 2 == 1 {
        if m == 0 {
            out.push(ExactMatrix::identity(1));
        } else {
            out.push(kron_all(&alloc::vec![pauli(3); m]));
        }
    }
    out
}

/// Spin weights of the `2^m` tensor basis vectors.
fn spin_weights(m: usize) -> Vec<Weight> {
    (0..1usize << m)
        .map(|s| {
            Weight::new(
                (0..m)
                    .map(|k| if (s >> (m - 1 - k)) & 1 == 0 { Rat::half() } else { -Rat::half() })
                    .collect(),
            )
        })
        .collect()
}

/// Cartan elements first, then the remaining generators `¼[γ_a, γ_b]`,
/// keeping only those that enlarge the span.
fn spin_generators(gammas: &[ExactMatrix], m: usize) -> (Vec<ExactMatrix>, Vec<ExactMatrix>) {
    let quarter = GaussRat::real(Rat::new(1, 4));
    let minus_i = Field::neg(&GaussRat::i());
    let gen = |a: usize, b: usize| gammas[a].commutator(&gammas[b]).scale(&quarter);
    let cartan: Vec<ExactMatrix> = (0..m).map(|k| gen(2 * k, 2 * k + 1).scale(&minus_i)).collect();
    let dim = gammas[0].rows();
    let mut span = SpanBasis::<GaussRat>::new(dim * dim);
    let mut basis = Vec::new();
    for h in &cartan {
        span.insert(h.entries()).expect("square matrices of equal size");
        basis.push(h.clone());
    }
    for a in 0..gammas.len() {
        for b in a + 1..gammas.len() {
            let g = gen(a, b);
            if span.insert(g.entries()).expect("square matrices of equal size") {
                basis.push(g);
            }
        }
    }
    (basis, cartan)
}

/// Half-spin selector for `so₈`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chirality {
    Plus,
    Minus,
}

/// Spin representation of `so₅` (`B₂`, dimension 4) or a half-spin
/// representation of `so₈` (`D₄`, dimension 8).
pub fn build_spin(family: Family, rank: usize, chirality: Option<Chirality>) -> Result<MatrixRep, MatRepError> {
    match (family, rank, chirality) {
        (Family::B, 2, None) => {
            let gammas = gamma_matrices(5);
            let (basis, cartan) = spin_generators(&gammas, 2);
            Ok(MatrixRep {
                label: "spin-so5".into(),
                dim_v: 4,
                algebra_basis: basis,
                cartan_basis: cartan,
                cartan_coords: (0..2).map(|k| Weight::unit(2, k)).collect(),
                weight_labels: spin_weights(2),
                root_data: Some((Family::B, 2)),
                highest_coeffs: Some(alloc::vec![0, 1]),
            })
        }
        (Family::D, 4, Some(ch)) => {
            let gammas = gamma_matrices(8);
            let (basis, cartan) = spin_generators(&gammas, 4);
            let weights = spin_weights(4);
            let want_even = ch == Chirality::Plus;
            let keep: Vec<usize> = (0..16)
                .filter(|&s| {
                    let minus = weights[s].coords().iter().filter(|c| c.is_negative()).count();
                    (minus % 2 == 0) == want_even
                })
                .collect();
            let label = match ch {
                Chirality::Plus => "spin8-plus",
                Chirality::Minus => "spin8-minus",
            };
            Ok(MatrixRep {
                label: label.into(),
                dim_v: 8,
                algebra_basis: basis.iter().map(|b| b.submatrix(&keep)).collect(),
                cartan_basis: cartan.iter().map(|h| h.submatrix(&keep)).collect(),
                cartan_coords: (0..4).map(|k| Weight::unit(4, k)).collect(),
                weight_labels: keep.iter().map(|&s| weights[s].clone()).collect(),
                root_data: Some((Family::D, 4)),
                highest_coeffs: Some(match ch {
                    Chirality::Plus => alloc::vec![0, 0, 0, 1],
                    Chirality::Minus => alloc::vec![0, 0, 1, 0],
                }),
            })
        }
        _ => Err(MatRepError::Unsupported(format!(
            "spin representation for {family}{rank} (only B2, and D4 plus/minus)"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_relations_hold_exactly() {
        for count in [2, 3, 4, 5, 8] {
            let g = gamma_matrices(count);
            let id = ExactMatrix::identity(g[0].rows());
            for a in 0..count {
                for b in 0..count {
                    let anti = g[a].mul(&g[b]).add(&g[b].mul(&g[a]));
                    let want = if a == b { id.scale(&GaussRat::from_int(2)) } else { ExactMatrix::zeros(id.rows(), id.cols()) };
                    assert_eq!(anti, want, "count {count} a {a} b {b}");
                }
            }
        }
    }

    #[test]
    fn chirality_operator_is_diagonal_sign() {
        let g = gamma_matrices(8);
        let chi = g.iter().skip(1).fold(g[0].clone(), |acc, x| acc.mul(x));
        assert!(chi.is_diagonal());
        let w = spin_weights(4);
        for (s, d) in chi.diag().iter().enumerate() {
            let minus = w[s].coords().iter().filter(|c| c.is_negative()).count() as i64;
            let sign = if minus % 2 == 0 { 1 } else { -1 };
            assert_eq!(*d, GaussRat::from_int(sign));
        }
    }

    #[test]
    fn spin_shapes() {
        let r = build_spin(Family::B, 2, None).unwrap();
        assert_eq!((r.dim_v, r.algebra_basis.len()), (4, 10));
        let p = build_spin(Family::D, 4, Some(Chirality::Plus)).unwrap();
        assert_eq!((p.dim_v, p.algebra_basis.len()), (8, 28));
        assert!(p.weight_labels.iter().all(|w| w.coords().iter().filter(|c| c.is_negative()).count() % 2 == 0));
        let m = build_spin(Family::D, 4, Some(Chirality::Minus)).unwrap();
        assert!(m.weight_labels.iter().all(|w| w.coords().iter().filter(|c| c.is_negative()).count() % 2 == 1));
        assert!(build_spin(Family::D, 5, Some(Chirality::Plus)).is_err());
        assert!(build_spin(Family::B, 3, None).is_err());
    }
}
