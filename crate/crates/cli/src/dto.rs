//! Serializable report shapes. Exact numbers travel as strings (`"1/2"`,
//! `"-1+1/2*i"`) so that no precision is lost.

use cayley_core::cayleycfg::ConfigReport;
use cayley_core::cayleynum::ResidualReport;
use cayley_core::classify::ClassificationRow;
use cayley_core::exactlin::ExactMatrix;
use cayley_core::powerspan::SpanVerdict;
use cayley_core::rootsys::{Family, Weight};
use cayley_core::weightlat::WeightDiagram;
use serde::{Deserialize, Serialize};

/// Common wrapper around every JSON report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub version: String,
    pub command: String,
    pub criteria: Vec<String>,
    pub seed: u64,
    pub report: T,
}

pub fn weight_strings(w: &Weight) -> Vec<String> {
    w.coords().iter().map(ToString::to_string).collect()
}

pub fn matrix_strings(m: &ExactMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(ToString::to_string).collect()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemRef {
    pub family: String,
    pub rank: usize,
    pub coeffs: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigDto {
    pub family: String,
    pub rank: usize,
    pub highest: Vec<String>,
    pub coeffs: Vec<String>,
    pub orbit_size: u64,
    pub orbit_rank: usize,
    pub rank_needed: usize,
    pub symmetric_about_origin: bool,
    pub extra_dominant_weights: Vec<Vec<String>>,
    pub verdict: bool,
    pub witness: Option<Vec<String>>,
    pub redirected_from: Option<SystemRef>,
}

impl ConfigDto {
    pub fn new(family: Family, rep: &ConfigReport, coeffs: Vec<String>, redirected_from: Option<SystemRef>) -> Self {
        ConfigDto {
            family: family.to_string(),
            rank: rep.rank_needed,
            highest: weight_strings(&rep.highest),
            coeffs,
            orbit_size: u64::try_from(rep.orbit_size).unwrap_or(u64::MAX),
            orbit_rank: rep.orbit_rank,
            rank_needed: rep.rank_needed,
            symmetric_about_origin: rep.symmetric_about_origin,
            extra_dominant_weights: rep.extra_dominant_weights.iter().map(weight_strings).collect(),
            verdict: rep.verdict,
            witness: rep.witness.as_ref().map(weight_strings),
            redirected_from,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanDto {
    pub verdict: bool,
    pub failing_triple: Option<[usize; 3]>,
    pub residual_witness: Option<Vec<Vec<String>>>,
}

impl From<&SpanVerdict> for SpanDto {
    fn from(v: &SpanVerdict) -> Self {
        SpanDto {
            verdict: v.verdict,
            failing_triple: v.failing_triple.map(|(i, j, k)| [i, j, k]),
            residual_witness: v.residual_witness.as_ref().map(matrix_strings),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualSample {
    pub seed: u64,
    pub input_norm: f64,
    pub scale: f64,
    pub residual: f64,
    pub series_terms: usize,
    pub dropped_basis_vectors: usize,
}

impl ResidualSample {
    pub fn new(seed: u64, r: &ResidualReport) -> Self {
        ResidualSample {
            seed,
            input_norm: r.input_norm,
            scale: r.scale,
            residual: r.residual,
            series_terms: r.series_terms,
            dropped_basis_vectors: r.dropped_basis_vectors,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualSummary {
    pub label: String,
    pub norm: f64,
    pub threshold: f64,
    pub samples: Vec<ResidualSample>,
    pub median: f64,
    pub max: f64,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExactDto {
    pub triple: Option<SpanDto>,
    pub cartan: Option<bool>,
    pub odd: Option<bool>,
}

/// Evidence from every criterion that was run on one realization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApplicabilityReport {
    pub label: String,
    pub dim_v: usize,
    pub algebra_dim: usize,
    pub system: Option<SystemRef>,
    pub geometric: Option<ConfigDto>,
    pub exact: ExactDto,
    pub numeric: Option<ResidualSummary>,
    pub final_verdict: bool,
    pub agreement: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactForm {
    pub group: String,
    pub module: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowDto {
    pub family: String,
    pub rank: usize,
    pub coeffs: Vec<i64>,
    pub highest: Vec<String>,
    pub verdict: bool,
    pub identification: Option<String>,
    pub catalog_label: Option<String>,
    pub compact_form: Option<CompactForm>,
}

impl From<&ClassificationRow> for RowDto {
    fn from(r: &ClassificationRow) -> Self {
        RowDto {
            family: r.family.to_string(),
            rank: r.rank,
            coeffs: r.coeffs.clone(),
            highest: weight_strings(&r.highest),
            verdict: r.verdict,
            identification: r.identification.map(|i| i.as_str().to_string()),
            catalog_label: r.identification.and_then(|i| i.catalog_label(r.family, r.rank)),
            compact_form: r.compact_form().map(|(group, module)| CompactForm { group, module }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub max_rank: usize,
    pub bound: u32,
    pub candidates: usize,
    pub true_count: usize,
    pub rows: Vec<RowDto>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PadePoint {
    pub t: f64,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PadeDirection {
    pub seed: u64,
    pub points: Vec<PadePoint>,
    pub slope: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PadeReport {
    pub label: String,
    pub scales: Vec<f64>,
    pub directions: Vec<PadeDirection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDump {
    pub label: String,
    pub dim_v: usize,
    pub algebra_dim: usize,
    pub cartan_dim: usize,
    pub system: Option<SystemRef>,
    /// Cartan elements first.
    pub basis: Vec<Vec<Vec<String>>>,
    pub cartan_coords: Vec<Vec<String>>,
    pub weight_labels: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramEntry {
    pub weight: Vec<String>,
    pub mult: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDto {
    pub highest: Vec<String>,
    pub entries: Vec<DiagramEntry>,
}

impl From<&WeightDiagram> for DiagramDto {
    fn from(d: &WeightDiagram) -> Self {
        DiagramDto {
            highest: weight_strings(&d.highest),
            entries: d.mult.iter().map(|(w, &mult)| DiagramEntry { weight: weight_strings(w), mult }).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SvgPoint {
    pub weight: Vec<String>,
    pub mult: u64,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SvgReport {
    pub family: String,
    pub rank: usize,
    pub out: Option<String>,
    pub points: Vec<SvgPoint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelList {
    pub patterns: Vec<String>,
    pub semisimple: Vec<String>,
    pub non_semisimple: Vec<String>,
}
