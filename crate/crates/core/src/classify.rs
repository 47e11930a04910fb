//! Bounded search over dominant weights for representations with a Cayley
//! configuration, with the known list attached as identifications.

use alloc::string::String;
use alloc::vec::Vec;

use crate::cayleycfg::{is_cayley_configuration, ConfigError};
use crate::rootsys::{Family, RootSystem, RootSystemError, Weight};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("search bound must be at least 1")]
    ZeroBound,
}

/// Canonical names for the representations with a Cayley configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identification {
    Standard,
    AdjointOfA1,
    Lambda2Sl4,
    SpinB2,
    Spin8Plus,
    Spin8Minus,
}

impl Identification {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Standard => "standard",
            Self::AdjointOfA1 => "adjoint-of-A1",
            Self::Lambda2Sl4 => "lambda2-sl4",
            Self::SpinB2 => "spin-B2",
            Self::Spin8Plus => "spin8-plus",
            Self::Spin8Minus => "spin8-minus",
        }
    }

    /// Matching catalog label of an explicit realization, when one exists.
    pub fn catalog_label(self, family: Family, rank: usize) -> Option<String> {
        use alloc::format;
        Some(match (self, family) {
            (Self::Standard, Family::A) if rank == 1 => "sl2-sym-1".into(),
            (Self::Standard, Family::B | Family::D) => format!("soN-standard:{family}{rank}"),
            (Self::Standard, Family::C) => format!("sp2n-standard:C{rank}"),
            (Self::AdjointOfA1, _) => "sl2-adjoint".into(),
            (Self::Lambda2Sl4, _) => "sl4-lambda2".into(),
            (Self::SpinB2, _) => "spin-so5".into(),
            (Self::Spin8Plus, _) => "spin8-plus".into(),
            (Self::Spin8Minus, _) => "spin8-minus".into(),
            _ => return None,
        })
    }
}

impl core::fmt::Display for Identification {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Looks up a highest weight, in fundamental coefficients, in the known list.
pub fn identify(family: Family, rank: usize, coeffs: &[i64]) -> Option<Identification> {
    let unit = |i: usize| coeffs.iter().enumerate().all(|(j, &c)| c == i64::from(j == i));
    match family {
        Family::A if rank == 1 => match coeffs {
            [1] => Some(Identification::Standard),
            [2] => Some(Identification::AdjointOfA1),
            _ => None,
        },
        Family::A if rank == 3 && unit(1) => Some(Identification::Lambda2Sl4),
        Family::B | Family::C | Family::D if unit(0) => Some(Identification::Standard),
        Family::B if rank == 2 && unit(1) => Some(Identification::SpinB2),
        Family::D if rank == 4 && unit(3) => Some(Identification::Spin8Plus),
        Family::D if rank == 4 && unit(2) => Some(Identification::Spin8Minus),
        _ => None,
    }
}

/// Compact real form and module for an identified entry.
pub fn compact_form_name(family: Family, rank: usize, id: Identification) -> (String, String) {
    use alloc::format;
    let (g, v) = match (id, family) {
        (Identification::Standard, Family::A) => ("su2 ≃ so3(R)".into(), "C^2 (spinor of so3)".into()),
        (Identification::AdjointOfA1, _) => ("su2 ≃ so3(R)".into(), "sl2(C) ≃ C^3".into()),
        (Identification::Lambda2Sl4, _) => ("su4 ≃ so6(R)".into(), "Λ²C^4 ≃ C^6".into()),
        (Identification::Standard, Family::B) => (format!("so{}(R)", 2 * rank + 1), format!("C^{}", 2 * rank + 1)),
        (Identification::SpinB2, _) => ("so5(R) ≃ u2(H)".into(), "S ≃ H^2".into()),
        (Identification::Standard, Family::C) => (format!("u{rank}(H)"), format!("H^{rank}")),
        (Identification::Spin8Plus, _) => ("so8(R)".into(), "S+".into()),
        (Identification::Spin8Minus, _) => ("so8(R)".into(), "S-".into()),
        (Identification::Standard, Family::D) => (format!("so{}(R)", 2 * rank), format!("C^{}", 2 * rank)),
    };
    (g, v)
}

/// One candidate highest weight and its verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRow {
    pub family: Family,
    pub rank: usize,
    pub coeffs: Vec<i64>,
    pub highest: Weight,
    pub verdict: bool,
    pub identification: Option<Identification>,
}

impl ClassificationRow {
    pub fn compact_form(&self) -> Option<(String, String)> {
        self.identification.map(|id| compact_form_name(self.family, self.rank, id))
    }
}

/// Nonzero dominant weights with fundamental coefficients in `[0, bound]`,
/// in lexicographic coefficient order.
pub fn enumerate_dominant(rs: &RootSystem, bound: u32) -> Vec<(Vec<i64>, Weight)> {
    rs.enumerate_dominant(bound)
}

/// Verdict for a single candidate. Orbits of size other than `2n` are
/// rejected without computing the remaining weights.
pub fn classify_candidate(rs: &RootSystem, coeffs: Vec<i64>, highest: Weight) -> Result<ClassificationRow, ClassifyError> {
    let n = rs.rank();
    let verdict = if rs.orbit_size(&highest) != 2 * n as u128 {
        false
    } else {
        is_cayley_configuration(&highest, rs)?.verdict
    };
    let identification = if verdict { identify(rs.family(), n, &coeffs) } else { None };
    Ok(ClassificationRow { family: rs.family(), rank: n, coeffs, highest, verdict, identification })
}

pub fn classify(family: Family, rank: usize, bound: u32) -> Result<Vec<ClassificationRow>, ClassifyError> {
    if bound < 1 {
        return Err(ClassifyError::ZeroBound);
    }
    let rs = RootSystem::build(family, rank)?;
    enumerate_dominant(&rs, bound).into_iter().map(|(c, w)| classify_candidate(&rs, c, w)).collect()
}

/// Supported `(family, rank)` pairs up to `max_rank`, family-major.
pub fn supported_systems(max_rank: usize) -> Vec<(Family, usize)> {
    Family::ALL.iter().flat_map(|&f| (f.min_rank()..=max_rank).map(move |n| (f, n))).collect()
}

/// Concatenated `classify` output over all supported systems.
pub fn full_report(max_rank: usize, bound: u32) -> Result<Vec<ClassificationRow>, ClassifyError> {
    let mut out = Vec::new();
    for (f, n) in supported_systems(max_rank) {
        out.extend(classify(f, n, bound)?);
    }
    Ok(out)
}
