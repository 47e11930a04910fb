//! Explicit matrix realizations `dρ(𝔤) ⊆ 𝔤𝔩(V)` over ℚ(i) with a diagonal
//! Cartan subalgebra.
//!
//! Every entry records, for each Cartan basis element `H`, a vector `h` with
//! `λ(H) = ⟨λ, h⟩`, and one weight label per diagonal slot, so that
//! `H[j][j] = ⟨weight_labels[j], h⟩`.

mod classical;
mod clifford;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

pub use classical::{
    build_diagonal_group_algebra, build_quadratic_standard, build_sl2_symmetric_power, build_sl4_lambda2,
    build_unipotent_upper,
};
pub use clifford::{build_spin, gamma_matrices, Chirality};

use crate::exactlin::{solve_rational, ExactMatrix, GaussRat, Rat, SpanBasis};
use crate::rootsys::{Family, RootSystem, RootSystemError, Weight};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatRepError {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown label {label:?}; available: {available}")]
    UnknownLabel { label: String, available: String },
    #[error("structure constants differ between {0} and {1}")]
    StructureMismatch(String, String),
    #[error("Cartan basis element {0} is not diagonal")]
    NonDiagonalCartan(usize),
    #[error("diagonal slot {0} does not carry a rational weight")]
    BadDiagonal(usize),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

/// A Lie algebra of matrices together with its Cartan data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    pub label: String,
    pub dim_v: usize,
    /// Linearly independent matrices spanning `dρ(𝔤)`; the Cartan elements
    /// come first.
    pub algebra_basis: Vec<ExactMatrix>,
    /// Diagonal matrices spanning `dρ(𝔥)`.
    pub cartan_basis: Vec<ExactMatrix>,
    /// `h` vectors with `λ(H_i) = ⟨λ, cartan_coords[i]⟩`.
    pub cartan_coords: Vec<Weight>,
    pub weight_labels: Vec<Weight>,
    /// Root system of the abstract algebra, for simple algebras.
    pub root_data: Option<(Family, usize)>,
    /// Highest weight in fundamental-weight coefficients, for irreducible
    /// representations of simple algebras.
    pub highest_coeffs: Option<Vec<i64>>,
}

impl MatrixRep {
    pub fn is_semisimple(&self) -> bool {
        self.root_data.is_some()
    }

    pub fn root_system(&self) -> Option<RootSystem> {
        self.root_data.and_then(|(f, n)| RootSystem::build(f, n).ok())
    }

    /// Highest weight in `L_j` coordinates, when defined.
    pub fn highest_weight(&self) -> Option<Weight> {
        let rs = self.root_system()?;
        rs.weight_from_coeffs(self.highest_coeffs.as_deref()?).ok()
    }

    /// Dimension of the span of the algebra basis.
    pub fn span_dim(&self) -> usize {
        let len = self.dim_v * self.dim_v;
        let mut sb = SpanBasis::<GaussRat>::new(len);
        for b in &self.algebra_basis {
            sb.insert(b.entries()).expect("basis matrices are dim_v x dim_v");
        }
        sb.rank()
    }

    pub fn span(&self) -> SpanBasis<GaussRat> {
        SpanBasis::from_vectors(self.dim_v * self.dim_v, self.algebra_basis.iter().map(ExactMatrix::entries))
            .expect("basis matrices are dim_v x dim_v")
    }

    /// First basis pair whose commutator leaves the span.
    pub fn commutator_closure_failure(&self) -> Option<(usize, usize)> {
        let span = self.span();
        for i in 0..self.algebra_basis.len() {
            for j in i + 1..self.algebra_basis.len() {
                let c = self.algebra_basis[i].commutator(&self.algebra_basis[j]);
                if !span.contains(c.entries()).expect("same shape") {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Structure constants `[B_i, B_j] = Σ_k c_ijk B_k`.
    pub fn structure_constants(&self) -> Option<Vec<Vec<Vec<GaussRat>>>> {
        let span = self.span();
        if span.rank() != self.algebra_basis.len() {
            return None;
        }
        let b = &self.algebra_basis;
        let mut out = Vec::with_capacity(b.len());
        for x in b {
            let mut row = Vec::with_capacity(b.len());
            for y in b {
                row.push(span.membership(x.commutator(y).entries()).ok()??);
            }
            out.push(row);
        }
        Some(out)
    }

    /// Checks `H[j][j] = ⟨weight_labels[j], h⟩` for every Cartan element and
    /// slot, and that the Cartan elements are diagonal.
    pub fn cartan_labels_consistent(&self) -> bool {
        self.cartan_basis.len() == self.cartan_coords.len()
            && self.weight_labels.len() == self.dim_v
            && self.cartan_basis.iter().zip(&self.cartan_coords).all(|(h, hv)| {
                h.is_diagonal()
                    && h.diag()
                        .iter()
                        .zip(&self.weight_labels)
                        .all(|(d, w)| *d == GaussRat::real(w.dot(hv)))
            })
    }
}

/// Reads the weights off the simultaneous diagonal of the Cartan basis and
/// returns them as a multiset.
pub fn weights_of_rep(r: &MatrixRep) -> Result<BTreeMap<Weight, u64>, MatRepError> {
    for (i, h) in r.cartan_basis.iter().enumerate() {
        if !h.is_diagonal() {
            return Err(MatRepError::NonDiagonalCartan(i));
        }
    }
    let (dim, zero_sum) = match r.root_system() {
        Some(rs) => (rs.ambient_dim(), rs.family() == Family::A),
        None => (r.cartan_coords.first().map_or(0, Weight::dim), false),
    };
    let mut rows: Vec<Vec<Rat>> = r.cartan_coords.iter().map(|h| h.coords().to_vec()).collect();
    if zero_sum {
        rows.push(alloc::vec![Rat::ONE; dim]);
    }
    let mut out = BTreeMap::new();
    for slot in 0..r.dim_v {
        let mut rhs = Vec::with_capacity(rows.len());
        for h in &r.cartan_basis {
            let d = h.get(slot, slot);
            if !d.is_real() {
                return Err(MatRepError::BadDiagonal(slot));
            }
            rhs.push(d.re.clone());
        }
        if zero_sum {
            rhs.push(Rat::ZERO);
        }
        let w = if dim == 0 {
            Weight::zero(0)
        } else {
            let sol = solve_rational(&rows, &rhs)
                .map_err(|_| MatRepError::BadDiagonal(slot))?
                .ok_or(MatRepError::BadDiagonal(slot))?;
            Weight::new(sol)
        };
        *out.entry(w).or_insert(0) += 1;
    }
    Ok(out)
}

/// Block-diagonal realization of `a ⊕ b` for two realizations of the same
/// abstract algebra with paired bases; the algebra acts diagonally, so its
/// dimension is unchanged. See [`external_product`] for independent factors.
pub fn direct_sum(a: &MatrixRep, b: &MatrixRep) -> Result<MatrixRep, MatRepError> {
    let mismatch = || MatRepError::StructureMismatch(a.label.clone(), b.label.clone());
    if a.algebra_basis.len() != b.algebra_basis.len()
        || a.cartan_basis.len() != b.cartan_basis.len()
        || a.cartan_coords != b.cartan_coords
        || a.root_data != b.root_data
    {
        return Err(mismatch());
    }
    let (sa, sb) = (a.structure_constants().ok_or_else(mismatch)?, b.structure_constants().ok_or_else(mismatch)?);
    if sa != sb {
        return Err(mismatch());
    }
    Ok(MatrixRep {
        label: format!("{}+{}", a.label, b.label),
        dim_v: a.dim_v + b.dim_v,
        algebra_basis: a.algebra_basis.iter().zip(&b.algebra_basis).map(|(x, y)| x.direct_sum(y)).collect(),
        cartan_basis: a.cartan_basis.iter().zip(&b.cartan_basis).map(|(x, y)| x.direct_sum(y)).collect(),
        cartan_coords: a.cartan_coords.clone(),
        weight_labels: a.weight_labels.iter().chain(&b.weight_labels).cloned().collect(),
        root_data: a.root_data,
        highest_coeffs: None,
    })
}

/// Realization of `𝔤_a × 𝔤_b` on `V_a ⊕ V_b`, each factor acting on its own
/// block. Weights are recorded as tuples of Cartan eigenvalues.
pub fn external_product(a: &MatrixRep, b: &MatrixRep) -> MatrixRep {
    let (za, zb) = (ExactMatrix::zeros(a.dim_v, a.dim_v), ExactMatrix::zeros(b.dim_v, b.dim_v));
    let left = |x: &ExactMatrix| x.direct_sum(&zb);
    let right = |y: &ExactMatrix| za.direct_sum(y);
    let cartan_basis: Vec<ExactMatrix> = a.cartan_basis.iter().map(left).chain(b.cartan_basis.iter().map(right)).collect();
    let k = cartan_basis.len();
    let weight_labels = (0..a.dim_v + b.dim_v)
        .map(|j| Weight::new(cartan_basis.iter().map(|h| h.get(j, j).re.clone()).collect()))
        .collect();
    MatrixRep {
        label: format!("{}*{}", a.label, b.label),
        dim_v: a.dim_v + b.dim_v,
        algebra_basis: a.cartan_basis.iter().map(left)
            .chain(b.cartan_basis.iter().map(right))
            .chain(a.algebra_basis[a.cartan_basis.len()..].iter().map(left))
            .chain(b.algebra_basis[b.cartan_basis.len()..].iter().map(right))
            .collect(),
        cartan_basis,
        cartan_coords: (0..k).map(|i| Weight::unit(k, i)).collect(),
        weight_labels,
        root_data: None,
        highest_coeffs: None,
    }
}

/// Labels accepted by [`build_by_label`], with parameters shown by example.
pub const CATALOG_LABELS: &[&str] = &[
    "sl2-sym-<d>",
    "sl2-adjoint",
    "soN-standard:B<n>",
    "soN-standard:D<n>",
    "sp2n-standard:C<n>",
    "sl4-lambda2",
    "spin-so5",
    "spin8-plus",
    "spin8-minus",
    "gl-diagonal[:<n>]",
    "unipotent-upper[:<n>]",
    "<label>+<label>",
    "<label>*<label>",
];

/// Concrete labels of the simple-algebra irreducible entries used for
/// cross-checks.
pub const SEMISIMPLE_CATALOG: &[&str] = &[
    "sl2-sym-1",
    "sl2-sym-2",
    "sl2-sym-3",
    "sl2-sym-4",
    "soN-standard:B2",
    "soN-standard:B3",
    "sp2n-standard:C3",
    "soN-standard:D4",
    "sl4-lambda2",
    "spin-so5",
    "spin8-plus",
    "spin8-minus",
];

/// The non-semisimple fixtures.
pub const NON_SEMISIMPLE_CATALOG: &[&str] = &["gl-diagonal:2", "unipotent-upper:3"];

fn unknown(label: &str) -> MatRepError {
    MatRepError::UnknownLabel { label: label.into(), available: CATALOG_LABELS.join(", ") }
}

fn parse_family_rank(s: &str) -> Option<(Family, usize)> {
    let f: Family = s.get(..1)?.parse().ok()?;
    let n: usize = s.get(1..)?.parse().ok()?;
    Some((f, n))
}

pub fn build_by_label(label: &str) -> Result<MatrixRep, MatRepError> {
    let label = label.trim();
    if let Some((l, r)) = label.split_once('*') {
        return Ok(external_product(&build_by_label(l)?, &build_by_label(r)?));
    }
    if let Some((l, r)) = label.split_once('+') {
        return direct_sum(&build_by_label(l)?, &build_by_label(r)?);
    }
    if let Some(d) = label.strip_prefix("sl2-sym-") {
        let d: usize = d.parse().map_err(|_| unknown(label))?;
        return build_sl2_symmetric_power(d);
    }
    let (head, param) = match label.split_once(':') {
        Some((h, p)) => (h, Some(p)),
        None => (label, None),
    };
    match (head, param) {
        ("sl2-adjoint", None) => build_sl2_symmetric_power(2),
        ("soN-standard" | "sp2n-standard", Some(p)) => {
            let (f, n) = parse_family_rank(p).ok_or_else(|| unknown(label))?;
            match (head, f) {
                ("soN-standard", Family::B | Family::D | Family::C) | ("sp2n-standard", Family::C) => {
                    build_quadratic_standard(f, n)
                }
                _ => Err(unknown(label)),
            }
        }
        ("sl4-lambda2", None) => Ok(build_sl4_lambda2()),
        ("spin-so5", None) => build_spin(Family::B, 2, None),
        ("spin8-plus", None) => build_spin(Family::D, 4, Some(Chirality::Plus)),
        ("spin8-minus", None) => build_spin(Family::D, 4, Some(Chirality::Minus)),
        ("gl-diagonal", p) => {
            let n = p.map_or(Ok(2), str::parse).map_err(|_| unknown(label))?;
            build_diagonal_group_algebra(n)
        }
        ("unipotent-upper", p) => {
            let n = p.map_or(Ok(3), str::parse).map_err(|_| unknown(label))?;
            build_unipotent_upper(n)
        }
        _ => Err(unknown(label)),
    }
}
