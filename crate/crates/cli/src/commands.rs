use std::fmt::Write;

use cayley_core::cayleycfg::{is_cayley_configuration, ConfigError};
use cayley_core::cayleynum::{direction_with_norm, fit_loglog_slope, log_membership_residual, pade_order_probe, NumError};
use cayley_core::classify::{supported_systems, ClassificationRow, ClassifyError};
use cayley_core::exactlin::Rat;
use cayley_core::matrep::{
    build_by_label, MatRepError, MatrixRep, CATALOG_LABELS, NON_SEMISIMPLE_CATALOG, SEMISIMPLE_CATALOG,
};
use cayley_core::powerspan::{check_cartan_s3, check_odd_powers, PowerSpanError};
use cayley_core::rootsys::{redirect_small_rank, Family, RootSystem, RootSystemError, Weight};
use cayley_core::weightlat::{weight_diagram, WeightLatticeError};
use serde::Serialize;

use crate::args::*;
use crate::dto::*;
use crate::parallel;
use crate::svg;

/// Maximal `k` and sample count for the sampled odd-power criterion.
const ODD_MAX_K: u32 = 3;
const ODD_SAMPLES: usize = 8;
/// Operator norm of the directions used by `verify --criteria residual`.
const VERIFY_RESIDUAL_NORM: f64 = 0.2;
/// Accepted range for the fitted Padé slope.
pub const PADE_SLOPE_RANGE: (f64, f64) = (2.8, 3.2);

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Matrix(#[from] MatRepError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Weights(#[from] WeightLatticeError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Numeric(#[from] NumError),
    #[error(transparent)]
    PowerSpan(#[from] PowerSpanError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Csv(#[from] csv::Error),
}

/// What to print and how to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit: i32,
}

impl Outcome {
    fn verdict(stdout: String, holds: bool) -> Self {
        Outcome { stdout, stderr: String::new(), exit: if holds { 0 } else { 1 } }
    }

    fn ok(stdout: String) -> Self {
        Self::verdict(stdout, true)
    }
}

impl From<CliError> for Outcome {
    fn from(e: CliError) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), exit: 2 }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let ctx = Ctx { json: cli.json, seed: cli.seed };
    let res = match &cli.command {
        Command::CheckConfig(a) => ctx.check_config(a),
        Command::Verify(a) => ctx.verify(a),
        Command::Classify(a) => ctx.classify(a),
        Command::Residual(a) => ctx.residual(a),
        Command::Pade(a) => ctx.pade(a),
        Command::Rep(RepCommand::Dump { label, format }) => ctx.rep_dump(label, *format),
        Command::Rep(RepCommand::List) => ctx.rep_list(),
        Command::Diagram(a) => ctx.diagram(a),
        Command::DiagramSvg(a) => ctx.diagram_svg(a),
    };
    res.unwrap_or_else(Outcome::from)
}

struct Ctx {
    json: bool,
    seed: u64,
}

fn family_of(f: FamilyArg) -> Family {
    match f {
        FamilyArg::A => Family::A,
        FamilyArg::B => Family::B,
        FamilyArg::C => Family::C,
        FamilyArg::D => Family::D,
    }
}

fn parse_weight(s: &str) -> Result<Vec<Rat>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<Rat>().map_err(|_| CliError::Usage(format!("malformed weight {s:?}: bad entry {t:?}"))))
        .collect()
}

struct Resolved {
    rs: RootSystem,
    highest: Weight,
    redirected_from: Option<SystemRef>,
}

impl Resolved {
    fn coeff_strings(&self) -> Vec<String> {
        self.rs.coeffs_of(&self.highest).iter().map(ToString::to_string).collect()
    }
}

fn resolve(a: &WeightArgs) -> Result<Resolved, CliError> {
    let family = family_of(a.family);
    match (&a.coeffs, &a.weight) {
        (Some(c), _) => match RootSystem::build(family, a.rank) {
            Ok(rs) => Ok(Resolved { highest: rs.weight_from_coeffs(c)?, rs, redirected_from: None }),
            Err(e) => {
                let Some((f2, n2, c2)) = redirect_small_rank(family, a.rank, c) else {
                    return Err(e.into());
                };
                let rs = RootSystem::build(f2, n2)?;
                Ok(Resolved {
                    highest: rs.weight_from_coeffs(&c2)?,
                    rs,
                    redirected_from: Some(SystemRef { family: family.to_string(), rank: a.rank, coeffs: c.clone() }),
                })
            }
        },
        (None, Some(w)) => {
            let rs = RootSystem::build(family, a.rank)?;
            let coords = parse_weight(w)?;
            Ok(Resolved { highest: rs.weight(coords)?, rs, redirected_from: None })
        }
        (None, None) => Err(CliError::Usage("one of --coeffs or --weight is required".into())),
    }
}

fn system_ref(r: &MatrixRep) -> Option<SystemRef> {
    let (f, n) = r.root_data?;
    Some(SystemRef { family: f.to_string(), rank: n, coeffs: r.highest_coeffs.clone()? })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join_weights(ws: &[Weight]) -> String {
    if ws.is_empty() {
        return "none".into();
    }
    ws.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn median(xs: &[f64]) -> f64 {
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    match v.len() {
        0 => f64::NAN,
        n if n % 2 == 1 => v[n / 2],
        n => 0.5 * (v[n / 2 - 1] + v[n / 2]),
    }
}

/// Residuals for seeds `first_seed..first_seed + seeds` at the given norm.
pub fn residual_summary(
    r: &MatrixRep,
    first_seed: u64,
    seeds: u64,
    norm: f64,
    threshold: f64,
) -> Result<ResidualSummary, CliError> {
    if seeds == 0 {
        return Err(CliError::Usage("--seeds must be at least 1".into()));
    }
    if !(norm > 0.0 && norm.is_finite()) {
        return Err(CliError::Usage("--norm must be positive".into()));
    }
    let mut samples = Vec::new();
    for seed in first_seed..first_seed + seeds {
        let c = direction_with_norm(r, seed, norm)
            .ok_or_else(|| CliError::Usage(format!("{} has a zero algebra basis", r.label)))?;
        samples.push(ResidualSample::new(seed, &log_membership_residual(&c, r)?));
    }
    let rs: Vec<f64> = samples.iter().map(|s| s.residual).collect();
    let med = median(&rs);
    Ok(ResidualSummary {
        label: r.label.clone(),
        norm,
        threshold,
        max: rs.iter().copied().fold(0.0, f64::max),
        median: med,
        verdict: med < threshold,
        samples,
    })
}

impl Ctx {
    fn emit<T: Serialize>(&self, command: &str, criteria: &[&str], report: &T) -> Result<String, CliError> {
        let env = Envelope {
            version: crate::VERSION.to_string(),
            command: command.to_string(),
            criteria: criteria.iter().map(|s| s.to_string()).collect(),
            seed: self.seed,
            report,
        };
        Ok(serde_json::to_string_pretty(&env)? + "\n")
    }

    fn check_config(&self, a: &WeightArgs) -> Result<Outcome, CliError> {
        let res = resolve(a)?;
        let rep = is_cayley_configuration(&res.highest, &res.rs)?;
        let dto = ConfigDto::new(res.rs.family(), &rep, res.coeff_strings(), res.redirected_from.clone());
        if self.json {
            return Ok(Outcome::verdict(self.emit("check-config", &["geometric"], &dto)?, rep.verdict));
        }
        let mut s = String::new();
        if let Some(from) = &res.redirected_from {
            let _ = writeln!(s, "{}{} {:?} is handled as {}{}", from.family, from.rank, from.coeffs, dto.family, dto.rank);
        }
        let _ = writeln!(s, "system: {}{}", dto.family, dto.rank);
        let _ = writeln!(s, "highest weight: {} (coefficients {})", rep.highest, dto.coeffs.join(","));
        let _ = writeln!(s, "orbit size: {} (need {})", rep.orbit_size, 2 * rep.rank_needed);
        let _ = writeln!(s, "orbit rank: {} (need {})", rep.orbit_rank, rep.rank_needed);
        let _ = writeln!(s, "symmetric about origin: {}", yes(rep.symmetric_about_origin));
        let _ = writeln!(s, "other dominant weights: {}", join_weights(&rep.extra_dominant_weights));
        if let Some(w) = &rep.witness {
            let _ = writeln!(s, "witness: {w}");
        }
        let _ = writeln!(s, "verdict: {}", rep.verdict);
        Ok(Outcome::verdict(s, rep.verdict))
    }

    fn verify(&self, a: &VerifyArgs) -> Result<Outcome, CliError> {
        let r = build_by_label(&a.label)?;
        let mut criteria = a.criteria.clone();
        criteria.sort();
        criteria.dedup();
        let has = |c: Criterion| criteria.contains(&c);

        let geometric = match (has(Criterion::Geometric), r.root_system(), r.highest_weight()) {
            (true, Some(rs), Some(h)) => {
                let rep = is_cayley_configuration(&h, &rs)?;
                let coeffs = rs.coeffs_of(&h).iter().map(ToString::to_string).collect();
                Some(ConfigDto::new(rs.family(), &rep, coeffs, None))
            }
            _ => None,
        };
        let triple = has(Criterion::Triple).then(|| parallel::with_pool(|| SpanDto::from(&parallel::power_span(&r))));
        let cartan = has(Criterion::Cartan).then(|| check_cartan_s3(&r)).transpose()?;
        let odd = has(Criterion::Odd).then(|| check_odd_powers(&r, ODD_MAX_K, ODD_SAMPLES, self.seed)).transpose()?;
        let numeric = has(Criterion::Residual)
            .then(|| residual_summary(&r, self.seed, a.seeds, VERIFY_RESIDUAL_NORM, a.residual_threshold))
            .transpose()?;

        let verdicts: Vec<bool> = [
            triple.as_ref().map(|t| t.verdict),
            geometric.as_ref().map(|g| g.verdict),
            cartan,
            odd,
            numeric.as_ref().map(|n| n.verdict),
        ]
        .into_iter()
        .flatten()
        .collect();
        let Some(&final_verdict) = verdicts.first() else {
            return Err(CliError::Usage(format!("no requested criterion applies to {}", r.label)));
        };
        let agreement = verdicts.iter().all(|&v| v == final_verdict);
        let report = ApplicabilityReport {
            label: r.label.clone(),
            dim_v: r.dim_v,
            algebra_dim: r.algebra_basis.len(),
            system: system_ref(&r),
            geometric,
            exact: ExactDto { triple, cartan, odd },
            numeric,
            final_verdict,
            agreement,
        };
        let holds = final_verdict && agreement;
        if self.json {
            let names: Vec<&str> = criteria.iter().map(|c| c.name()).collect();
            return Ok(Outcome::verdict(self.emit("verify", &names, &report)?, holds));
        }
        let mut s = String::new();
        let _ = writeln!(s, "{}: dim V = {}, dim g = {}", report.label, report.dim_v, report.algebra_dim);
        if let Some(sys) = &report.system {
            let _ = writeln!(s, "system: {}{} highest {:?}", sys.family, sys.rank, sys.coeffs);
        }
        if let Some(g) = &report.geometric {
            let _ = writeln!(s, "geometric (weight configuration): {}", g.verdict);
        } else if has(Criterion::Geometric) {
            let _ = writeln!(s, "geometric (weight configuration): n/a");
        }
        if let Some(t) = &report.exact.triple {
            let _ = write!(s, "triple products in span: {}", t.verdict);
            if let Some([i, j, k]) = t.failing_triple {
                let _ = write!(s, " (fails at B{i} B{j} B{k} + B{k} B{j} B{i})");
            }
            s.push('\n');
        }
        if let Some(c) = report.exact.cartan {
            let _ = writeln!(s, "Cartan cubes in span: {c}");
        }
        if let Some(o) = report.exact.odd {
            let _ = writeln!(s, "sampled odd powers in span: {o}");
        }
        if let Some(n) = &report.numeric {
            let _ = writeln!(s, "log residual median {:.3e} (threshold {:.1e}): {}", n.median, n.threshold, n.verdict);
        }
        let _ = writeln!(s, "agreement: {}", yes(agreement));
        let _ = writeln!(s, "verdict: {final_verdict}");
        Ok(Outcome::verdict(s, holds))
    }

    fn classify(&self, a: &ClassifyArgs) -> Result<Outcome, CliError> {
        let systems: Vec<(Family, usize)> = match (a.family.map(family_of), a.rank) {
            (Some(f), Some(n)) => vec![(f, n)],
            (Some(f), None) => supported_systems(a.max_rank).into_iter().filter(|s| s.0 == f).collect(),
            _ => supported_systems(a.max_rank),
        };
        let rows = parallel::with_pool(|| parallel::classify_systems(&systems, a.bound))?;
        let candidates = rows.len();
        let true_count = rows.iter().filter(|r| r.verdict).count();
        let shown: Vec<&ClassificationRow> = rows.iter().filter(|r| r.verdict || !a.only_true).collect();
        let format = if self.json { TableFormat::Json } else { a.format };
        let out = match format {
            TableFormat::Json => {
                let report = ClassifyReport {
                    max_rank: a.max_rank,
                    bound: a.bound,
                    candidates,
                    true_count,
                    rows: shown.iter().map(|r| RowDto::from(*r)).collect(),
                };
                self.emit("classify", &["geometric"], &report)?
            }
            TableFormat::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["family", "rank", "coeffs", "verdict", "identification"])?;
                for r in &shown {
                    w.write_record([
                        r.family.to_string(),
                        r.rank.to_string(),
                        coeff_list(&r.coeffs),
                        r.verdict.to_string(),
                        r.identification.map(|i| i.to_string()).unwrap_or_default(),
                    ])?;
                }
                String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("csv output is UTF-8")
            }
            TableFormat::Table => {
                let mut s = String::new();
                let _ = writeln!(s, "{:<4} {:<12} {:<8} {:<14} compact form", "sys", "coeffs", "verdict", "identification");
                for r in &shown {
                    let compact = r.compact_form().map(|(g, v)| format!("{g} on {v}")).unwrap_or_default();
                    let _ = writeln!(
                        s,
                        "{:<4} {:<12} {:<8} {:<14} {}",
                        format!("{}{}", r.family, r.rank),
                        coeff_list(&r.coeffs),
                        r.verdict,
                        r.identification.map(|i| i.to_string()).unwrap_or_else(|| "-".into()),
                        compact
                    );
                }
                let _ = writeln!(s, "{true_count} of {candidates} candidates have a Cayley configuration");
                s
            }
        };
        Ok(Outcome::ok(out))
    }

    fn residual(&self, a: &ResidualArgs) -> Result<Outcome, CliError> {
        let r = build_by_label(&a.label)?;
        let sum = residual_summary(&r, self.seed, a.seeds, a.norm, a.threshold)?;
        if self.json {
            return Ok(Outcome::verdict(self.emit("residual", &["residual"], &sum)?, sum.verdict));
        }
        let mut s = String::new();
        let _ = writeln!(s, "{}: {} directions at operator norm {}", sum.label, sum.samples.len(), sum.norm);
        for p in &sum.samples {
            let _ = writeln!(s, "seed {:>4}  residual {:.3e}  terms {}", p.seed, p.residual, p.series_terms);
        }
        let _ = writeln!(s, "median {:.3e}, max {:.3e}, threshold {:.1e}", sum.median, sum.max, sum.threshold);
        let _ = writeln!(s, "verdict: {}", sum.verdict);
        Ok(Outcome::verdict(s, sum.verdict))
    }

    fn pade(&self, a: &PadeArgs) -> Result<Outcome, CliError> {
        let r = build_by_label(&a.label)?;
        if a.directions == 0 || a.scales.len() < 2 {
            return Err(CliError::Usage("need at least one direction and two scales".into()));
        }
        let mut directions = Vec::new();
        for seed in self.seed..self.seed + a.directions {
            let c = direction_with_norm(&r, seed, 1.0)
                .ok_or_else(|| CliError::Usage(format!("{} has a zero algebra basis", r.label)))?;
            let pts = pade_order_probe(&r, &c, &a.scales)?;
            directions.push(PadeDirection {
                seed,
                slope: fit_loglog_slope(&pts),
                points: pts.into_iter().map(|(t, error)| PadePoint { t, error }).collect(),
            });
        }
        let (lo, hi) = PADE_SLOPE_RANGE;
        let holds = directions.iter().all(|d| d.slope.is_some_and(|s| (lo..=hi).contains(&s)));
        let report = PadeReport { label: r.label.clone(), scales: a.scales.clone(), directions };
        if self.json {
            return Ok(Outcome::verdict(self.emit("pade", &["pade"], &report)?, holds));
        }
        let mut s = String::new();
        let _ = writeln!(s, "{}: ||C(tu/2) - exp(tu)||_F for ||u|| = 1", report.label);
        for d in &report.directions {
            let errs: Vec<String> = d.points.iter().map(|p| format!("{:.3e}", p.error)).collect();
            let slope = d.slope.map(|x| format!("{x:.4}")).unwrap_or_else(|| "n/a".into());
            let _ = writeln!(s, "seed {:>4}  slope {slope}  errors {}", d.seed, errs.join(" "));
        }
        let _ = writeln!(s, "all slopes in [{lo}, {hi}]: {}", yes(holds));
        Ok(Outcome::verdict(s, holds))
    }

    fn rep_dump(&self, label: &str, format: DumpFormat) -> Result<Outcome, CliError> {
        let r = build_by_label(label)?;
        let dump = RepDump {
            label: r.label.clone(),
            dim_v: r.dim_v,
            algebra_dim: r.algebra_basis.len(),
            cartan_dim: r.cartan_basis.len(),
            system: system_ref(&r),
            basis: r.algebra_basis.iter().map(matrix_strings).collect(),
            cartan_coords: r.cartan_coords.iter().map(weight_strings).collect(),
            weight_labels: r.weight_labels.iter().map(weight_strings).collect(),
        };
        if self.json || format == DumpFormat::Json {
            return Ok(Outcome::ok(self.emit("rep-dump", &[], &dump)?));
        }
        let mut s = String::new();
        let _ = writeln!(s, "{}: dim V = {}, dim g = {}, dim h = {}", dump.label, dump.dim_v, dump.algebra_dim, dump.cartan_dim);
        let _ = writeln!(s, "weights: {}", join_weights(&r.weight_labels));
        for (i, m) in dump.basis.iter().enumerate() {
            let _ = writeln!(s, "B{i}{}", if i < dump.cartan_dim { " (Cartan)" } else { "" });
            let width = m.iter().flatten().map(String::len).max().unwrap_or(1);
            for row in m {
                let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                let _ = writeln!(s, "  [{}]", cells.join(" "));
            }
        }
        Ok(Outcome::ok(s))
    }

    fn rep_list(&self) -> Result<Outcome, CliError> {
        let list = LabelList {
            patterns: CATALOG_LABELS.iter().map(|s| s.to_string()).collect(),
            semisimple: SEMISIMPLE_CATALOG.iter().map(|s| s.to_string()).collect(),
            non_semisimple: NON_SEMISIMPLE_CATALOG.iter().map(|s| s.to_string()).collect(),
        };
        if self.json {
            return Ok(Outcome::ok(self.emit("rep-list", &[], &list)?));
        }
        let mut s = String::from("label patterns:\n");
        for p in &list.patterns {
            let _ = writeln!(s, "  {p}");
        }
        s.push_str("fixtures:\n");
        for p in list.semisimple.iter().chain(&list.non_semisimple) {
            let _ = writeln!(s, "  {p}");
        }
        Ok(Outcome::ok(s))
    }

    fn diagram(&self, a: &WeightArgs) -> Result<Outcome, CliError> {
        let res = resolve(a)?;
        let d = weight_diagram(&res.highest, &res.rs)?;
        let dto = DiagramDto::from(&d);
        if self.json {
            return Ok(Outcome::ok(self.emit("diagram", &[], &dto)?));
        }
        let mut s = String::new();
        let _ = writeln!(s, "{}{} highest {}: {} weights, dimension {}", res.rs.family(), res.rs.rank(), d.highest, d.mult.len(), d.dimension());
        for (w, m) in &d.mult {
            let _ = writeln!(s, "{m:>4}  {w}");
        }
        Ok(Outcome::ok(s))
    }

    fn diagram_svg(&self, a: &DiagramSvgArgs) -> Result<Outcome, CliError> {
        let res = resolve(&a.weight)?;
        let family = res.rs.family();
        let d = weight_diagram(&res.highest, &res.rs)?;
        let (svg_text, pts) = svg::render(family, &d).ok_or_else(|| {
            CliError::Usage(format!("diagram-svg supports A1, A2 and B2, not {family}{}", res.rs.rank()))
        })?;
        if let Some(path) = &a.out {
            std::fs::write(path, &svg_text)?;
        }
        let report = SvgReport {
            family: family.to_string(),
            rank: res.rs.rank(),
            out: a.out.as_ref().map(|p| p.display().to_string()),
            points: pts.into_iter().map(|(w, mult, x, y)| SvgPoint { weight: weight_strings(&w), mult, x, y }).collect(),
        };
        if self.json {
            return Ok(Outcome::ok(self.emit("diagram-svg", &[], &report)?));
        }
        Ok(Outcome::ok(match &report.out {
            Some(p) => format!("wrote {} points to {p}\n", report.points.len()),
            None => svg_text,
        }))
    }
}

fn coeff_list(c: &[i64]) -> String {
    c.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
