//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use cayley_core::cayleycfg::is_cayley_configuration;
use cayley_core::cayleynum::{cayley, combine_f64, direction_with_norm, fit_loglog_slope, pade_order_probe, NumError, NumMatrix};
use cayley_core::classify::{enumerate_dominant, supported_systems};
use cayley_core::exactlin::Rat;
use cayley_core::matrep::{build_by_label, NON_SEMISIMPLE_CATALOG, SEMISIMPLE_CATALOG};
use cayley_core::powerspan::{check_cartan_s3, check_power_span};
use cayley_core::rootsys::{Family, RootSystem, Weight};
use cayley_core::weightlat::{hull_coset_oracle, weight_diagram, weight_set};
use cayley_rep::commands::residual_summary;

type Check = Result<String, String>;

const RESIDUAL_SEEDS: u64 = 20;
const RESIDUAL_NORM: f64 = 0.2;
const RESIDUAL_TRUE_MAX: f64 = 1e-8;
const RESIDUAL_FALSE_MIN: f64 = 1e-4;
const PADE_SCALES: [f64; 4] = [0.1, 0.05, 0.025, 0.0125];
const INVOLUTION_SEEDS: u64 = 100;
const INVOLUTION_TOL: f64 = 1e-12;

const EXACT_TRUE: &[&str] = &[
    "sl2-sym-1",
    "sl2-sym-2",
    "soN-standard:B2",
    "soN-standard:B3",
    "sp2n-standard:C3",
    "soN-standard:D4",
    "sl4-lambda2",
    "spin-so5",
    "spin8-plus",
    "spin8-minus",
    "unipotent-upper:3",
    "gl-diagonal:2",
];
const EXACT_FALSE: &[&str] = &["sl2-sym-3", "sl2-sym-4"];

type Row = (String, usize, Vec<i64>);

fn row(f: &str, n: usize, c: &[i64]) -> Row {
    (f.to_string(), n, c.to_vec())
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|j| i64::from(j == i)).collect()
}

fn window_rows() -> BTreeSet<Row> {
    [
        row("A", 1, &[1]),
        row("A", 1, &[2]),
        row("A", 3, &[0, 1, 0]),
        row("B", 2, &[1, 0]),
        row("B", 2, &[0, 1]),
        row("B", 3, &unit(3, 0)),
        row("B", 4, &unit(4, 0)),
        row("C", 3, &unit(3, 0)),
        row("C", 4, &unit(4, 0)),
        row("D", 4, &unit(4, 0)),
        row("D", 4, &unit(4, 2)),
        row("D", 4, &unit(4, 3)),
    ]
    .into_iter()
    .collect()
}

fn classify_true_rows(max_rank: usize, bound: u32) -> Result<(BTreeSet<Row>, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_cayley-rep"))
        .args(["classify", "--max-rank", &max_rank.to_string(), "--bound", &bound.to_string()])
        .args(["--format", "csv", "--only-true"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if out.status.code() != Some(0) {
        return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    let mut rows = BTreeSet::new();
    for rec in csv::Reader::from_reader(out.stdout.as_slice()).records() {
        let rec = rec.map_err(|e| e.to_string())?;
        let coeffs = rec[2].split(',').map(|c| c.parse().map_err(|_| format!("bad coeffs {:?}", &rec[2]))).collect::<Result<_, _>>()?;
        if &rec[3] != "true" {
            return Err(format!("non-true row in --only-true output: {rec:?}"));
        }
        rows.insert((rec[0].to_string(), rec[1].parse().map_err(|_| "bad rank")?, coeffs));
    }
    Ok((rows, elapsed))
}

fn compare_rows(got: &BTreeSet<Row>, want: &BTreeSet<Row>) -> Result<(), String> {
    if got == want {
        return Ok(());
    }
    let extra: Vec<_> = got.difference(want).collect();
    let missing: Vec<_> = want.difference(got).collect();
    Err(format!("extra {extra:?}, missing {missing:?}"))
}

fn criterion_1() -> Check {
    let (rows, t) = classify_true_rows(4, 3)?;
    compare_rows(&rows, &window_rows())?;
    if t >= Duration::from_secs(60) {
        return Err(format!("took {t:.1?}"));
    }
    Ok(format!("{} true rows in {t:.2?}", rows.len()))
}

fn criterion_2() -> Check {
    let (rows, t) = classify_true_rows(8, 2)?;
    let mut want = window_rows();
    for n in 5..=8 {
        for f in ["B", "C", "D"] {
            want.insert(row(f, n, &unit(n, 0)));
        }
    }
    compare_rows(&rows, &want)?;
    if t >= Duration::from_secs(600) {
        return Err(format!("took {t:.1?}"));
    }
    Ok(format!("{} true rows in {t:.2?}", rows.len()))
}

fn criterion_3() -> Check {
    let mut slowest = (String::new(), Duration::ZERO);
    for (labels, expect) in [(EXACT_TRUE, true), (EXACT_FALSE, false)] {
        for label in labels {
            let r = build_by_label(label).map_err(|e| e.to_string())?;
            let start = Instant::now();
            let v = check_power_span(&r);
            let t = start.elapsed();
            if v.verdict != expect {
                return Err(format!("{label}: got {}", v.verdict));
            }
            if label.starts_with("spin8") && t >= Duration::from_secs(300) {
                return Err(format!("{label} took {t:.1?}"));
            }
            if t > slowest.1 {
                slowest = (label.to_string(), t);
            }
        }
    }
    Ok(format!("{} verdicts, slowest {} in {:.2?}", EXACT_TRUE.len() + EXACT_FALSE.len(), slowest.0, slowest.1))
}

fn criterion_4() -> Check {
    for label in SEMISIMPLE_CATALOG {
        let r = build_by_label(label).map_err(|e| e.to_string())?;
        let rs = r.root_system().ok_or("missing root data")?;
        let h = r.highest_weight().ok_or("missing highest weight")?;
        let geo = is_cayley_configuration(&h, &rs).map_err(|e| e.to_string())?.verdict;
        let triple = check_power_span(&r).verdict;
        let cartan = check_cartan_s3(&r).map_err(|e| e.to_string())?;
        if geo != triple || triple != cartan {
            return Err(format!("{label}: geometric {geo}, triple {triple}, cartan {cartan}"));
        }
    }
    Ok(format!("{} entries agree", SEMISIMPLE_CATALOG.len()))
}

fn criterion_5() -> Check {
    let mut worst_true = 0.0f64;
    for label in EXACT_TRUE {
        let r = build_by_label(label).map_err(|e| e.to_string())?;
        let s = residual_summary(&r, 0, RESIDUAL_SEEDS, RESIDUAL_NORM, RESIDUAL_TRUE_MAX).map_err(|e| e.to_string())?;
        if s.median >= RESIDUAL_TRUE_MAX {
            return Err(format!("{label}: median {:.3e}", s.median));
        }
        worst_true = worst_true.max(s.median);
    }
    let r = build_by_label("sl2-sym-3").map_err(|e| e.to_string())?;
    let s = residual_summary(&r, 0, RESIDUAL_SEEDS, RESIDUAL_NORM, RESIDUAL_TRUE_MAX).map_err(|e| e.to_string())?;
    if s.median <= RESIDUAL_FALSE_MIN {
        return Err(format!("sl2-sym-3: median {:.3e}", s.median));
    }
    Ok(format!("largest true median {worst_true:.2e}, sl2-sym-3 median {:.2e}", s.median))
}

fn criterion_6() -> Check {
    let r = build_by_label("soN-standard:B2").map_err(|e| e.to_string())?;
    let mut slopes = Vec::new();
    for seed in 0..10 {
        let c = direction_with_norm(&r, seed, 1.0).ok_or("zero direction")?;
        let pts = pade_order_probe(&r, &c, &PADE_SCALES).map_err(|e| e.to_string())?;
        let s = fit_loglog_slope(&pts).ok_or(format!("seed {seed}: no slope"))?;
        if !(2.8..=3.2).contains(&s) {
            return Err(format!("seed {seed}: slope {s:.4}"));
        }
        slopes.push(s);
    }
    let (lo, hi) = slopes.iter().fold((f64::MAX, f64::MIN), |(a, b), &s| (a.min(s), b.max(s)));
    Ok(format!("slopes in [{lo:.4}, {hi:.4}]"))
}

/// Positive roots, written out per family.
fn positive_roots(f: Family, n: usize) -> Vec<Vec<Rat>> {
    let dim = if f == Family::A { n + 1 } else { n };
    let v = |terms: &[(usize, i64)]| {
        let mut x = vec![Rat::from_int(0); dim];
        for &(i, c) in terms {
            x[i] = Rat::from_int(c);
        }
        x
    };
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            out.push(v(&[(i, 1), (j, -1)]));
            if f != Family::A {
                out.push(v(&[(i, 1), (j, 1)]));
            }
        }
        match f {
            Family::B => out.push(v(&[(i, 1)])),
            Family::C => out.push(v(&[(i, 2)])),
            _ => {}
        }
    }
    out
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::from_int(0), |s, (x, y)| &s + &(x * y))
}

/// `∏ ⟨λ+ρ, α⟩ / ⟨ρ, α⟩` over positive roots.
fn weyl_dimension(f: Family, n: usize, lambda: &Weight) -> Rat {
    let roots = positive_roots(f, n);
    let half = Rat::new(1, 2);
    let mut rho = vec![Rat::from_int(0); lambda.dim()];
    for r in &roots {
        for (x, y) in rho.iter_mut().zip(r) {
            *x = &*x + &(&half * y);
        }
    }
    let lr: Vec<Rat> = lambda.coords().iter().zip(&rho).map(|(a, b)| a + b).collect();
    roots.iter().fold(Rat::from_int(1), |p, a| &p * &(&dot(&lr, a) / &dot(&rho, a)))
}

struct Sweep {
    candidates: usize,
    oracle_mismatch: Vec<String>,
    balance_failures: Vec<String>,
    max_dim: u64,
    elapsed: Duration,
}

fn sweep() -> Result<Sweep, String> {
    let start = Instant::now();
    let mut s = Sweep { candidates: 0, oracle_mismatch: vec![], balance_failures: vec![], max_dim: 0, elapsed: Duration::ZERO };
    for (f, n) in supported_systems(4) {
        let rs = RootSystem::build(f, n).map_err(|e| e.to_string())?;
        for (coeffs, h) in enumerate_dominant(&rs, 3) {
            s.candidates += 1;
            let tag = format!("{f}{n} {coeffs:?}");
            let ws = weight_set(&h, &rs).map_err(|e| e.to_string())?;
            let oracle = hull_coset_oracle(&h, &rs).map_err(|e| e.to_string())?;
            if ws != oracle {
                s.oracle_mismatch.push(tag.clone());
            }
            let d = weight_diagram(&h, &rs).map_err(|e| e.to_string())?;
            let balanced = d.weighted_sum().is_zero();
            let dim_ok = weyl_dimension(f, n, &h) == Rat::from_int(d.dimension() as i64);
            let support_ok = d.mult.keys().cloned().collect::<BTreeSet<_>>() == ws;
            if !(balanced && dim_ok && support_ok) {
                s.balance_failures.push(tag);
            }
            s.max_dim = s.max_dim.max(d.dimension());
        }
    }
    s.elapsed = start.elapsed();
    Ok(s)
}

fn criterion_7(s: &Result<Sweep, String>) -> Check {
    let s = s.as_ref().map_err(Clone::clone)?;
    if !s.oracle_mismatch.is_empty() {
        return Err(format!("{} mismatches, first {}", s.oracle_mismatch.len(), s.oracle_mismatch[0]));
    }
    Ok(format!("{} highest weights agree ({:.1?})", s.candidates, s.elapsed))
}

fn criterion_8(s: &Result<Sweep, String>) -> Check {
    let s = s.as_ref().map_err(Clone::clone)?;
    if !s.balance_failures.is_empty() {
        return Err(format!("{} failures, first {}", s.balance_failures.len(), s.balance_failures[0]));
    }
    Ok(format!("{} diagrams balanced with Weyl dimensions, largest {}", s.candidates, s.max_dim))
}

fn criterion_9() -> Check {
    let d4 = RootSystem::build(Family::D, 4).map_err(|e| e.to_string())?;
    let b2 = RootSystem::build(Family::B, 2).map_err(|e| e.to_string())?;
    let half = |k: usize| Weight::new(vec![Rat::new(1, 2); k]);
    let spin = half(4);
    let (a, b) = (d4.orbit_size(&spin), d4.weyl_orbit(&spin).len());
    if a != 8 || b != 8 {
        return Err(format!("D4 spin orbit: formula {a}, enumerated {b}"));
    }
    let w = half(2);
    let (a, b) = (b2.orbit_size(&w), b2.weyl_orbit(&w).len());
    if a != 4 || b != 4 {
        return Err(format!("B2 orbit: formula {a}, enumerated {b}"));
    }
    let mut checked = 0;
    for (bound, max_rank) in [(3, 4), (2, 8)] {
        for (f, n) in supported_systems(max_rank) {
            let rs = RootSystem::build(f, n).map_err(|e| e.to_string())?;
            for r in cayley_core::classify::classify(f, n, bound).map_err(|e| e.to_string())? {
                if r.verdict {
                    checked += 1;
                    if rs.orbit_rank(&r.highest) != n {
                        return Err(format!("{f}{n} {:?}: orbit rank {}", r.coeffs, rs.orbit_rank(&r.highest)));
                    }
                }
            }
        }
    }
    Ok(format!("orbit sizes 8 and 4, {checked} true rows with full orbit rank"))
}

fn criterion_10() -> Check {
    let mut worst = 0.0f64;
    let mut count = 0;
    for label in SEMISIMPLE_CATALOG.iter().chain(NON_SEMISIMPLE_CATALOG) {
        let r = build_by_label(label).map_err(|e| e.to_string())?;
        for seed in 0..INVOLUTION_SEEDS {
            let norm = 0.3 * (1 + seed % 10) as f64 / 10.0;
            let c = direction_with_norm(&r, seed, norm).ok_or("zero direction")?;
            let u = combine_f64(&r, &c);
            let p = cayley(&u).and_then(|a| Ok(a.mul(&cayley(&u.scale_re(-1.0))?))).map_err(|e| e.to_string())?;
            let err = p.max_abs_diff(&NumMatrix::identity(r.dim_v));
            if err >= INVOLUTION_TOL {
                return Err(format!("{label} seed {seed}: {err:.3e}"));
            }
            worst = worst.max(err);
            count += 1;
        }
        match cayley(&NumMatrix::identity(r.dim_v)) {
            Err(NumError::Singular(_)) => {}
            other => return Err(format!("{label}: u = I gave {other:?}")),
        }
    }
    Ok(format!("{count} products, worst {worst:.2e}; u = I rejected"))
}

fn main() {
    let mut failed = 0;
    let mut report = |n: usize, name: &str, c: Check| {
        match c {
            Ok(msg) => println!("PASS criterion {n:>2}: {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {n:>2}: {name}: {msg}");
            }
        }
    };
    report(1, "classification window max-rank 4 bound 3", criterion_1());
    report(2, "extended window max-rank 8 bound 2", criterion_2());
    report(3, "exact power-span verdicts", criterion_3());
    report(4, "geometric, triple and Cartan verdicts agree", criterion_4());
    report(5, "log-membership residual medians", criterion_5());
    report(6, "Padé slope for soN-standard:B2", criterion_6());
    let s = sweep();
    report(7, "weight set equals hull-coset oracle", criterion_7(&s));
    report(8, "weight balance and Weyl dimension", criterion_8(&s));
    report(9, "orbit sizes and orbit ranks", criterion_9());
    report(10, "Cayley involution and domain", criterion_10());
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}
