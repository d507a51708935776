//! Command-line front end: `analyze`, `verify`, `places`, `sweep` and `holesize`.
//!
//! Exit status: 0 ok, 1 input error, 2 consistency failure.

mod report;

pub use report::{
    analyze, render_text, AnalysisReport, AnalyzeConfig, BoundRow, CurveEcho, DegreeRow, HoleCountSection, HoleRow,
    OracleSection, PlaceRow, SetEcho, Timings, SCHEMA_VERSION,
};

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::curve::validate_curve;
use crate::holesize::{asymptotic_ratio, hole_level, hole_size, hole_size_bounds, HoleContext};
use crate::matrix::{build_matrix, check_curve, corrupt_l_polynomial, sweep, write_sweep_csv, Check};
use crate::places::enumerate_places;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CONSISTENCY: i32 = 2;

/// Environment variable fixing the worker thread count.
pub const THREADS_ENV: &str = "INFRA_HOLES_THREADS";

#[derive(Debug, Parser)]
#[command(name = "infraholes", version, about = "Holes in the infrastructure of hyperelliptic function fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hole count and reduced-divisor counts for one curve and one set S.
    Analyze(AnalyzeArgs),
    /// Runs every identity over a seeded matrix of curves and place sets.
    Verify(VerifyArgs),
    /// Classification table of the places up to a degree bound.
    Places(PlacesArgs),
    /// CSV of hole counts and hole-size ratios for growing |S|.
    Sweep(SweepArgs),
    /// Hole size from raw counts, without a curve.
    Holesize(HolesizeArgs),
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[arg(long)]
    pub q: u64,
    /// Ascending coefficients of f, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub f: String,
    #[arg(long)]
    pub g: i64,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    /// Members of S; repeatable, each value may list several descriptors.
    #[arg(long = "S", required = true)]
    pub set: Vec<String>,
    /// Distinguished degree-one member of S.
    #[arg(long)]
    pub base: String,
    /// Cross-check against exhaustive enumeration.
    #[arg(long)]
    pub oracle: bool,
    /// Series truncation order (default 2g + 3).
    #[arg(long)]
    pub truncation: Option<usize>,
    #[arg(long)]
    pub json: bool,
    /// Degree bound for the place table.
    #[arg(long, default_value_t = 1)]
    pub place_bound: u32,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "3,5,7")]
    pub q: String,
    #[arg(long, default_value = "1,2,3")]
    pub g: String,
    /// Curves per degree/leading-coefficient shape.
    #[arg(long, default_value_t = 1)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Skip the enumeration-based checks.
    #[arg(long)]
    pub no_oracle: bool,
    /// Print every check, not only the per-identity summary and failures.
    #[arg(long)]
    pub verbose: bool,
    #[arg(long)]
    pub json: bool,
    /// Test hook: perturb each L-polynomial before checking.
    #[arg(long, hide = true)]
    pub corrupt_lpoly: bool,
}

#[derive(Debug, Args)]
pub struct PlacesArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    #[arg(long, default_value_t = 1)]
    pub bound: u32,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value = "13,29,53,101")]
    pub q: String,
    #[arg(long, default_value = "1,2")]
    pub g: String,
    /// Values of |S|.
    #[arg(long, default_value = "4,8,16,32")]
    pub sizes: String,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct HolesizeArgs {
    /// σ-fixed members besides the base.
    #[arg(long, default_value_t = 0)]
    pub fixed: u32,
    /// Conjugate pairs inside S.
    #[arg(long, default_value_t = 0)]
    pub pairs: u32,
    /// 1 when the conjugate of the base is in S.
    #[arg(long, default_value_t = 0)]
    pub r: u32,
    /// Members whose conjugate is outside S.
    #[arg(long, default_value_t = 0)]
    pub lone: u32,
    /// Lone members whose conjugate is absent from D (defaults to all of them).
    #[arg(long)]
    pub lone_free: Option<u32>,
    /// g - deg D.
    #[arg(long)]
    pub slack: u32,
    #[arg(long)]
    pub json: bool,
}

/// Comma-separated list; the empty string is the empty list.
pub fn parse_list<T: FromStr>(text: &str) -> Result<Vec<T>, String>
where
    T::Err: std::fmt::Display,
{
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<T>().map_err(|e| format!("bad list entry {s:?}: {e}")))
        .collect()
}

fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second call in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Parses `args` and runs the command, writing to `out` and `err`; returns the exit status.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            if code == EXIT_OK {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    configure_threads();
    let result = match cli.command {
        Command::Analyze(a) => cmd_analyze(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Places(a) => cmd_places(&a, out),
        Command::Sweep(a) => cmd_sweep(&a, out),
        Command::Holesize(a) => cmd_holesize(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

fn io(e: std::io::Error) -> String {
    e.to_string()
}

fn json<T: Serialize>(value: &T, out: &mut dyn Write) -> Result<(), String> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| e.to_string())?;
    writeln!(out).map_err(io)
}

pub fn cmd_analyze(a: &AnalyzeArgs, out: &mut dyn Write) -> Result<i32, String> {
    let cfg = AnalyzeConfig {
        q: a.curve.q,
        f: parse_list(&a.curve.f)?,
        genus: a.curve.g,
        set: a.set.clone(),
        base: a.base.clone(),
        oracle: a.oracle,
        truncation: a.truncation,
        place_bound: a.place_bound,
    };
    let report = analyze(&cfg)?;
    if a.json {
        json(&report, out)?;
    } else {
        write!(out, "{}", render_text(&report)).map_err(io)?;
    }
    Ok(if report.is_consistent() { EXIT_OK } else { EXIT_CONSISTENCY })
}

#[derive(Debug, Serialize)]
struct IdentitySummary {
    identity: String,
    tag: String,
    passed: usize,
    total: usize,
}

#[derive(Debug, Serialize)]
struct VerifySummary {
    curves: usize,
    identities: Vec<IdentitySummary>,
    failures: Vec<Check>,
    seconds: f64,
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, String> {
    use rayon::prelude::*;
    let start = Instant::now();
    let qs: Vec<u64> = parse_list(&a.q)?;
    let gs: Vec<u32> = parse_list(&a.g)?;
    let matrix = build_matrix(&qs, &gs, a.samples, a.seed).map_err(|e| e.to_string())?;
    let checks: Vec<Check> = matrix
        .par_iter()
        .flat_map_iter(|mc| {
            if a.corrupt_lpoly {
                match corrupt_l_polynomial(&mc.l) {
                    Some(bad) => check_curve(mc, Some(&bad), !a.no_oracle),
                    None => vec![Check {
                        identity: "l_polynomial".to_string(),
                        tag: "curve".to_string(),
                        subject: mc.id.clone(),
                        passed: false,
                        detail: "perturbed L-polynomial is invalid".to_string(),
                    }],
                }
            } else {
                check_curve(mc, None, !a.no_oracle)
            }
        })
        .collect();

    let mut by_identity: BTreeMap<(String, String), (usize, usize)> = BTreeMap::new();
    for c in &checks {
        let e = by_identity.entry((c.identity.clone(), c.tag.clone())).or_default();
        e.1 += 1;
        if c.passed {
            e.0 += 1;
        }
    }
    let failures: Vec<Check> = checks.iter().filter(|c| !c.passed).cloned().collect();
    let summary = VerifySummary {
        curves: matrix.len(),
        identities: by_identity
            .into_iter()
            .map(|((identity, tag), (passed, total))| IdentitySummary {
                identity,
                tag,
                passed,
                total,
            })
            .collect(),
        failures,
        seconds: start.elapsed().as_secs_f64(),
    };
    if a.json {
        json(&summary, out)?;
    } else {
        if a.verbose {
            for c in &checks {
                writeln!(out, "{} {:<30} [{}] {} {}", if c.passed { "PASS" } else { "FAIL" }, c.identity, c.tag, c.subject, c.detail)
                    .map_err(io)?;
            }
        }
        for s in &summary.identities {
            let verdict = if s.passed == s.total { "PASS" } else { "FAIL" };
            writeln!(out, "{verdict} {:<30} [{}] {}/{}", s.identity, s.tag, s.passed, s.total).map_err(io)?;
        }
        if !a.verbose {
            for c in &summary.failures {
                writeln!(out, "  failed {} on {}: {}", c.identity, c.subject, c.detail).map_err(io)?;
            }
        }
        writeln!(out, "{} curves, {} checks, {} failed, {:.1}s", summary.curves, checks.len(), summary.failures.len(), summary.seconds)
            .map_err(io)?;
    }
    Ok(if summary.failures.is_empty() { EXIT_OK } else { EXIT_CONSISTENCY })
}

pub fn cmd_places(a: &PlacesArgs, out: &mut dyn Write) -> Result<i32, String> {
    let curve = validate_curve(a.curve.q, &parse_list(&a.curve.f)?, a.curve.g).map_err(|e| e.to_string())?;
    if a.bound == 0 {
        return Err("degree bound must be at least 1".to_string());
    }
    let rows: Vec<PlaceRow> = enumerate_places(&curve, a.bound).iter().map(PlaceRow::of).collect();
    if a.json {
        json(&rows, out)?;
    } else {
        writeln!(out, "{:<32} {:>6}  {:<9} below", "place", "degree", "splitting").map_err(io)?;
        for r in &rows {
            writeln!(out, "{:<32} {:>6}  {:<9} {}", r.descriptor, r.degree, r.splitting, r.below).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_sweep(a: &SweepArgs, out: &mut dyn Write) -> Result<i32, String> {
    let rows = sweep(&parse_list(&a.q)?, &parse_list(&a.g)?, &parse_list(&a.sizes)?, a.seed).map_err(|e| e.to_string())?;
    write_sweep_csv(&rows, out).map_err(|e| e.to_string())?;
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct HolesizeOutput {
    hole_size: String,
    levels: Vec<String>,
    lower: Option<String>,
    upper: Option<String>,
    asymptotic_ratio: String,
}

pub fn cmd_holesize(a: &HolesizeArgs, out: &mut dyn Write) -> Result<i32, String> {
    let ctx = HoleContext::new(a.fixed, a.pairs, a.r, a.lone, a.lone_free.unwrap_or(a.lone), a.slack).map_err(|e| e.to_string())?;
    let bounds = hole_size_bounds(&ctx);
    let o = HolesizeOutput {
        hole_size: hole_size(&ctx).to_string(),
        levels: (1..=ctx.slack).map(|s| hole_level(&ctx, s).to_string()).collect(),
        lower: bounds.as_ref().map(|b| b.0.to_string()),
        upper: bounds.as_ref().map(|b| b.1.to_string()),
        asymptotic_ratio: asymptotic_ratio(&ctx).to_string(),
    };
    if a.json {
        json(&o, out)?;
    } else {
        writeln!(out, "|h(D)| = {}", o.hole_size).map_err(io)?;
        writeln!(out, "levels  {}", o.levels.join(" ")).map_err(io)?;
        if let (Some(lo), Some(hi)) = (&o.lower, &o.upper) {
            writeln!(out, "bounds  {lo} <= |h(D)| <= {hi}").map_err(io)?;
        }
        writeln!(out, "ratio   {}", o.asymptotic_ratio).map_err(io)?;
    }
    Ok(EXIT_OK)
}
