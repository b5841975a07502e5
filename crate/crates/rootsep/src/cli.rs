//! Command-line front end: batch separation reports, family sweeps,
//! lattice searches, surveys, and property-suite verification.
//!
//! Output is machine-readable (JSON or CSV, chosen by `--format`), every
//! numeric enclosure field is an exact decimal string, and identical
//! configurations (including `--seed`) reproduce byte-identical output.
//! Exit codes: 0 success, 1 property violation, 2 usage or parse error,
//! 3 undefined quantity (no separation, or exponent at height 1).

use crate::dyadic::Dyadic;
use crate::families::{self, FamilyError};
use crate::interval::RealInterval;
use crate::lattice::{self, LatticeError};
use crate::poly::{IntegerPolynomial, PolyError};
use crate::roots::{self, SepError, SeparationReport};
use crate::survey::{self, SurveyError};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;
use std::io::Write as _;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNDEFINED: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "rootsep",
    version,
    about = "Certified root-separation reports, close-pair families, and lattice searches for integer polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Target relative width of computed enclosures, in (0, 1).
    #[arg(long = "rel-width", global = true, default_value_t = 1e-3)]
    pub rel_width: f64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for all sampled suites.
    #[arg(long, global = true, default_value_t = 1729)]
    pub seed: u64,

    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Certified root-separation report for one polynomial
    /// (comma-separated ascending integer coefficients).
    Sep {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Restrict the separation to pairs of real roots.
        #[arg(long)]
        real_only: bool,
    },
    /// Separation-exponent report (requires height >= 2).
    Exponent {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        real_only: bool,
    },
    /// Sweep a close-pair family over a range of n.
    Family {
        /// Family name: "s" or "p" (the latter covers all odd d >= 5).
        family: String,
        /// Product degree for the "p" family (odd, >= 5).
        #[arg(long, default_value_t = 5)]
        d: usize,
        #[arg(long = "n-min", default_value_t = 2)]
        n_min: i64,
        #[arg(long = "n-max", default_value_t = 10)]
        n_max: i64,
        #[arg(long = "n-step", default_value_t = 1)]
        n_step: i64,
        /// Explicit comma-separated n values (overrides the range).
        #[arg(long = "n-set", allow_hyphen_values = true)]
        n_set: Option<String>,
        /// Emit the least-squares fit of ln sep vs ln H instead of rows.
        #[arg(long)]
        fit: bool,
    },
    /// LLL-based close-root search seeded by a monic cubic.
    Search {
        #[arg(allow_hyphen_values = true)]
        cubic: String,
        /// Keep hits with exponent lower bound >= this threshold.
        #[arg(long, default_value_t = 2.0)]
        threshold: f64,
        /// Comma-separated lattice scales (default: 10^3 .. 10^12).
        #[arg(long)]
        ladder: Option<String>,
        /// Bound on integer combinations of reduced basis vectors.
        #[arg(long = "combo-bound", default_value_t = lattice::DEFAULT_COMBO_BOUND)]
        combo_bound: i64,
    },
    /// Score an enumerated space of monic factor tuples, top-K by e_lo.
    Survey {
        #[arg(long)]
        d: usize,
        /// Degree shape, e.g. "2,3".
        #[arg(long)]
        shape: String,
        /// Factor height bound.
        #[arg(long)]
        bound: i64,
        /// How many records to keep.
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
    /// Run the inequality property suites; nonzero exit on violation.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Product degree for the linear-factor suite.
        #[arg(long, default_value_t = 5)]
        d: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Gelfond,
    Mahler,
    LinearFactor,
    All,
}

/// Finished run: bytes to emit plus the process exit code.
#[derive(Debug)]
pub struct RunOutcome {
    pub output: Vec<u8>,
    pub code: i32,
}

/// Failed run: message for stderr plus the process exit code.
#[derive(Debug)]
pub struct CliFailure {
    pub code: i32,
    pub message: String,
}

impl CliFailure {
    fn usage(message: impl Into<String>) -> Self {
        CliFailure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn undefined(message: impl Into<String>) -> Self {
        CliFailure {
            code: EXIT_UNDEFINED,
            message: message.into(),
        }
    }
}

impl From<SepError> for CliFailure {
    fn from(e: SepError) -> Self {
        match e {
            SepError::Poly(PolyError::Parse(_)) => CliFailure::usage(e.to_string()),
            _ => CliFailure::undefined(e.to_string()),
        }
    }
}

impl From<PolyError> for CliFailure {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::Parse(_) => CliFailure::usage(e.to_string()),
            _ => CliFailure::undefined(e.to_string()),
        }
    }
}

impl From<FamilyError> for CliFailure {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::OutOfRange(_) => CliFailure::usage(e.to_string()),
            _ => CliFailure::undefined(e.to_string()),
        }
    }
}

impl From<LatticeError> for CliFailure {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::Invalid(_) => CliFailure::usage(e.to_string()),
            LatticeError::NoRealRoot => CliFailure::undefined(e.to_string()),
            LatticeError::Sep(s) => s.into(),
            _ => CliFailure {
                code: EXIT_VIOLATION,
                message: e.to_string(),
            },
        }
    }
}

impl From<SurveyError> for CliFailure {
    fn from(e: SurveyError) -> Self {
        match e {
            SurveyError::InvalidShape(_) | SurveyError::InvalidParameter(_) => {
                CliFailure::usage(e.to_string())
            }
            SurveyError::Poly(p) => p.into(),
            SurveyError::Sep(s) => s.into(),
            _ => CliFailure::undefined(e.to_string()),
        }
    }
}

// ---------------------------------------------------------------------------
// Serialization shapes.

fn dy(d: &Dyadic) -> String {
    d.to_decimal_string()
}

#[derive(Serialize)]
struct ReportJson {
    poly: String,
    height: String,
    sep_lo: String,
    sep_hi: String,
    e_lo: Option<String>,
    e_hi: Option<String>,
    witness: [usize; 2],
}

impl ReportJson {
    fn from_report(r: &SeparationReport) -> Self {
        ReportJson {
            poly: r.poly.to_comma_text(),
            height: r.height.to_string(),
            sep_lo: dy(&r.sep_lo),
            sep_hi: dy(&r.sep_hi),
            e_lo: r.e.as_ref().map(|(lo, _)| dy(lo)),
            e_hi: r.e.as_ref().map(|(_, hi)| dy(hi)),
            witness: [r.witness.0, r.witness.1],
        }
    }
}

#[derive(Serialize)]
struct HitJson {
    cubic: String,
    quadratic: String,
    gamma_lo: String,
    gamma_hi: String,
    lattice_n: String,
    pair: ReportJson,
}

#[derive(Serialize)]
struct FamilyRowJson {
    family: String,
    d: usize,
    k: u32,
    n: i64,
    height: String,
    sep_lo: String,
    sep_hi: String,
    e_lo: Option<String>,
    e_hi: Option<String>,
    predicted_e: String,
    bound_ok: bool,
}

#[derive(Serialize)]
struct SurveyRowJson {
    shape: Vec<usize>,
    factors: Vec<String>,
    product: String,
    height: String,
    sep_lo: String,
    sep_hi: String,
    e_lo: Option<String>,
    e_hi: Option<String>,
}

#[derive(Serialize)]
struct FitJson {
    slope: f64,
    intercept: f64,
    residual_max: f64,
    n_points: usize,
}

#[derive(Serialize)]
struct SuiteJson {
    suite: String,
    checked: usize,
    violations: usize,
    pass: bool,
}

fn to_json<T: Serialize>(value: &T) -> Vec<u8> {
    let mut bytes = serde_json::to_vec_pretty(value).expect("serialization cannot fail");
    bytes.push(b'\n');
    bytes
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn rational_decimal(r: &BigRational) -> String {
    // Predictions are exact rationals; a shortest-round-trip decimal is
    // enough for tables.
    format!("{}", r.to_f64().unwrap_or(f64::NAN))
}

// ---------------------------------------------------------------------------
// Command implementations.

fn parse_poly(text: &str) -> Result<IntegerPolynomial, CliFailure> {
    IntegerPolynomial::from_comma_text(text).map_err(CliFailure::from)
}

fn cmd_report(
    poly: &str,
    real_only: bool,
    want_exponent: bool,
    cfg: &Config,
) -> Result<RunOutcome, CliFailure> {
    let p = parse_poly(poly)?;
    let report = if want_exponent {
        roots::exponent_filtered(&p, cfg.rel_width, real_only)?
    } else {
        roots::sep_filtered(&p, cfg.rel_width, real_only)?
    };
    let row = ReportJson::from_report(&report);
    let output = match cfg.format {
        Format::Json => to_json(&row),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record([
                "poly", "height", "sep_lo", "sep_hi", "e_lo", "e_hi", "witness_i", "witness_j",
            ])
            .unwrap();
            w.write_record([
                row.poly.as_str(),
                row.height.as_str(),
                row.sep_lo.as_str(),
                row.sep_hi.as_str(),
                row.e_lo.as_deref().unwrap_or(""),
                row.e_hi.as_deref().unwrap_or(""),
                &row.witness[0].to_string(),
                &row.witness[1].to_string(),
            ])
            .unwrap();
            w.into_inner().unwrap()
        }
    };
    Ok(RunOutcome {
        output,
        code: EXIT_OK,
    })
}

fn parse_n_values(
    n_set: &Option<String>,
    n_min: i64,
    n_max: i64,
    n_step: i64,
) -> Result<Vec<i64>, CliFailure> {
    if let Some(set) = n_set {
        let mut out = Vec::new();
        for tok in set.split(',') {
            let v: i64 = tok
                .trim()
                .parse()
                .map_err(|_| CliFailure::usage(format!("bad n value {tok:?}")))?;
            out.push(v);
        }
        if out.is_empty() {
            return Err(CliFailure::usage("empty n set"));
        }
        return Ok(out);
    }
    if n_step < 1 || n_max < n_min {
        return Err(CliFailure::usage(format!(
            "bad n range [{n_min}, {n_max}] step {n_step}"
        )));
    }
    Ok((n_min..=n_max).step_by(n_step as usize).collect())
}

fn cmd_family(
    family: &str,
    d: usize,
    n_values: Vec<i64>,
    fit: bool,
    cfg: &Config,
) -> Result<RunOutcome, CliFailure> {
    let make_record = |n: i64| -> Result<families::FamilyRecord, FamilyError> {
        match family {
            "s" => families::record_s(n),
            "p" | "qr" | "QR" => families::family_p(d, n),
            _ => Err(FamilyError::OutOfRange(format!(
                "unknown family {family:?} (expected \"s\" or \"p\")"
            ))),
        }
    };
    // Probe the first value up front so parameter errors surface as usage
    // errors before any parallel work starts.
    make_record(n_values[0])?;
    let rows: Vec<families::SweepRow> = n_values
        .par_iter()
        .map(|&n| {
            let record = make_record(n)?;
            families::sweep_row(record, cfg.rel_width)
        })
        .collect::<Result<_, _>>()?;
    let any_violation = rows.iter().any(|r| !r.bound_ok);

    if fit {
        let points: Vec<(BigInt, RealInterval)> = rows
            .iter()
            .map(|r| {
                (
                    r.report.height.clone(),
                    RealInterval::new(r.report.sep_lo.clone(), r.report.sep_hi.clone()),
                )
            })
            .collect();
        let fit = survey::exponent_fit(&points)?;
        return Ok(RunOutcome {
            output: emit_fit(&fit, cfg),
            code: if any_violation { EXIT_VIOLATION } else { EXIT_OK },
        });
    }

    let json_rows: Vec<FamilyRowJson> = rows
        .iter()
        .map(|r| FamilyRowJson {
            family: r.record.family_id.to_string(),
            d: r.record.d,
            k: r.record.k,
            n: r.record.n,
            height: r.report.height.to_string(),
            sep_lo: dy(&r.report.sep_lo),
            sep_hi: dy(&r.report.sep_hi),
            e_lo: r.report.e.as_ref().map(|(lo, _)| dy(lo)),
            e_hi: r.report.e.as_ref().map(|(_, hi)| dy(hi)),
            predicted_e: rational_decimal(&r.record.predicted_exponent),
            bound_ok: r.bound_ok,
        })
        .collect();
    let output = match cfg.format {
        Format::Json => to_json(&json_rows),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record([
                "family",
                "d",
                "k",
                "n",
                "height",
                "sep_lo",
                "sep_hi",
                "e_lo",
                "e_hi",
                "predicted_e",
                "bound_ok",
            ])
            .unwrap();
            for r in &json_rows {
                w.write_record([
                    r.family.as_str(),
                    &r.d.to_string(),
                    &r.k.to_string(),
                    &r.n.to_string(),
                    r.height.as_str(),
                    r.sep_lo.as_str(),
                    r.sep_hi.as_str(),
                    r.e_lo.as_deref().unwrap_or(""),
                    r.e_hi.as_deref().unwrap_or(""),
                    r.predicted_e.as_str(),
                    if r.bound_ok { "1" } else { "0" },
                ])
                .unwrap();
            }
            w.into_inner().unwrap()
        }
    };
    Ok(RunOutcome {
        output,
        code: if any_violation { EXIT_VIOLATION } else { EXIT_OK },
    })
}

fn cmd_search(
    cubic: &str,
    threshold: f64,
    ladder: &Option<String>,
    combo_bound: i64,
    cfg: &Config,
) -> Result<RunOutcome, CliFailure> {
    let cubic = parse_poly(cubic)?;
    let threshold = BigRational::from_float(threshold)
        .ok_or_else(|| CliFailure::usage("threshold must be finite"))?;
    let n_ladder: Vec<BigInt> = match ladder {
        Some(text) => {
            let mut out = Vec::new();
            for tok in text.split(',') {
                let v: BigInt = tok
                    .trim()
                    .parse()
                    .map_err(|_| CliFailure::usage(format!("bad ladder value {tok:?}")))?;
                if !v.is_positive() {
                    return Err(CliFailure::usage("ladder values must be >= 1"));
                }
                out.push(v);
            }
            if out.is_empty() {
                return Err(CliFailure::usage("empty ladder"));
            }
            out
        }
        None => lattice::default_n_ladder(),
    };
    let hits = lattice::close_root_search(&cubic, &n_ladder, &threshold, cfg.rel_width, combo_bound)?;
    let rows: Vec<HitJson> = hits
        .iter()
        .map(|h| HitJson {
            cubic: h.cubic.to_comma_text(),
            quadratic: h.quadratic.to_comma_text(),
            gamma_lo: dy(h.gamma_enclosure.lo()),
            gamma_hi: dy(h.gamma_enclosure.hi()),
            lattice_n: h.lattice_n.to_string(),
            pair: ReportJson::from_report(&h.pair_exponent),
        })
        .collect();
    let output = match cfg.format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record([
                "cubic",
                "quadratic",
                "gamma_lo",
                "gamma_hi",
                "lattice_n",
                "height",
                "sep_lo",
                "sep_hi",
                "e_lo",
                "e_hi",
            ])
            .unwrap();
            for r in &rows {
                w.write_record([
                    r.cubic.as_str(),
                    r.quadratic.as_str(),
                    r.gamma_lo.as_str(),
                    r.gamma_hi.as_str(),
                    r.lattice_n.as_str(),
                    r.pair.height.as_str(),
                    r.pair.sep_lo.as_str(),
                    r.pair.sep_hi.as_str(),
                    r.pair.e_lo.as_deref().unwrap_or(""),
                    r.pair.e_hi.as_deref().unwrap_or(""),
                ])
                .unwrap();
            }
            w.into_inner().unwrap()
        }
    };
    Ok(RunOutcome {
        output,
        code: EXIT_OK,
    })
}

fn cmd_survey(
    d: usize,
    shape_text: &str,
    bound: i64,
    top: usize,
    cfg: &Config,
) -> Result<RunOutcome, CliFailure> {
    let mut shape = Vec::new();
    for tok in shape_text.split(',') {
        let v: usize = tok
            .trim()
            .parse()
            .map_err(|_| CliFailure::usage(format!("bad shape part {tok:?}")))?;
        shape.push(v);
    }
    let records = survey::max_exponent_survey(d, &shape, bound, cfg.rel_width, top)?;
    let rows: Vec<SurveyRowJson> = records
        .iter()
        .map(|r| SurveyRowJson {
            shape: r.shape.clone(),
            factors: r.factored.factors().iter().map(|f| f.to_string()).collect(),
            product: r.report.poly.to_string(),
            height: r.report.height.to_string(),
            sep_lo: dy(&r.report.sep_lo),
            sep_hi: dy(&r.report.sep_hi),
            e_lo: r.report.e.as_ref().map(|(lo, _)| dy(lo)),
            e_hi: r.report.e.as_ref().map(|(_, hi)| dy(hi)),
        })
        .collect();
    let output = match cfg.format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            if shape.len() != 2 {
                return Err(CliFailure::usage(
                    "CSV survey output expects a two-part shape (columns hQ, hR)",
                ));
            }
            let mut w = csv_writer();
            w.write_record(["shape", "hQ", "hR", "height", "e_lo", "e_hi", "polys"])
                .unwrap();
            for r in &records {
                let factors = r.factored.factors();
                let shape_txt = format!(
                    "{{{}}}",
                    r.shape
                        .iter()
                        .map(|s| s.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                );
                let polys = factors
                    .iter()
                    .map(|f| format!("({f})"))
                    .collect::<Vec<_>>()
                    .join("");
                w.write_record([
                    shape_txt.as_str(),
                    &factors[0].height().unwrap().to_string(),
                    &factors[1].height().unwrap().to_string(),
                    &r.report.height.to_string(),
                    &r.report
                        .e
                        .as_ref()
                        .map(|(lo, _)| dy(lo))
                        .unwrap_or_default(),
                    &r.report
                        .e
                        .as_ref()
                        .map(|(_, hi)| dy(hi))
                        .unwrap_or_default(),
                    polys.as_str(),
                ])
                .unwrap();
            }
            w.into_inner().unwrap()
        }
    };
    Ok(RunOutcome {
        output,
        code: EXIT_OK,
    })
}

fn emit_fit(fit: &survey::FitResult, cfg: &Config) -> Vec<u8> {
    let row = FitJson {
        slope: fit.slope,
        intercept: fit.intercept,
        residual_max: fit.residual_max,
        n_points: fit.points.len(),
    };
    match cfg.format {
        Format::Json => to_json(&row),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["slope", "intercept", "residual_max", "n_points"])
                .unwrap();
            w.write_record([
                format!("{}", row.slope),
                format!("{}", row.intercept),
                format!("{}", row.residual_max),
                row.n_points.to_string(),
            ])
            .unwrap();
            w.into_inner().unwrap()
        }
    }
}

fn cmd_verify(suite: Suite, samples: usize, d: usize, cfg: &Config) -> Result<RunOutcome, CliFailure> {
    // The linear-factor suite passes when the fitted slope respects the
    // floor -(d-1)/2 - 0.25.
    let slope_floor = -((d as f64 - 1.0) / 2.0) - 0.25;
    let run_linear = || -> Result<(survey::FitResult, bool), CliFailure> {
        let fit = survey::linear_factor_ceiling(d, samples, (100, 10_000), cfg.seed.wrapping_add(2))?;
        let ok = fit.slope >= slope_floor;
        Ok((fit, ok))
    };
    match suite {
        Suite::LinearFactor => {
            let (fit, ok) = run_linear()?;
            Ok(RunOutcome {
                output: emit_fit(&fit, cfg),
                code: if ok { EXIT_OK } else { EXIT_VIOLATION },
            })
        }
        _ => {
            let mut rows: Vec<SuiteJson> = Vec::new();
            if matches!(suite, Suite::Gelfond | Suite::All) {
                let r = survey::gelfond_suite(cfg.seed, samples, 1000);
                rows.push(SuiteJson {
                    suite: "gelfond".into(),
                    checked: r.checked,
                    violations: r.violations,
                    pass: r.pass(),
                });
            }
            if matches!(suite, Suite::Mahler | Suite::All) {
                let r = survey::mahler_suite(cfg.seed.wrapping_add(1), samples, cfg.rel_width);
                rows.push(SuiteJson {
                    suite: "mahler".into(),
                    checked: r.checked,
                    violations: r.violations,
                    pass: r.pass(),
                });
            }
            if matches!(suite, Suite::All) {
                let (fit, ok) = run_linear()?;
                rows.push(SuiteJson {
                    suite: "linear-factor".into(),
                    checked: fit.points.len(),
                    violations: usize::from(!ok),
                    pass: ok,
                });
            }
            let any_fail = rows.iter().any(|r| !r.pass);
            let output = match cfg.format {
                Format::Json => to_json(&rows),
                Format::Csv => {
                    let mut w = csv_writer();
                    w.write_record(["suite", "checked", "violations", "pass"]).unwrap();
                    for r in &rows {
                        w.write_record([
                            r.suite.as_str(),
                            &r.checked.to_string(),
                            &r.violations.to_string(),
                            if r.pass { "1" } else { "0" },
                        ])
                        .unwrap();
                    }
                    w.into_inner().unwrap()
                }
            };
            Ok(RunOutcome {
                output,
                code: if any_fail { EXIT_VIOLATION } else { EXIT_OK },
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Entry points.

struct Config {
    rel_width: f64,
    format: Format,
    seed: u64,
}

/// Runs a parsed invocation to completion, returning the bytes to emit
/// and the exit code (no process-global side effects beyond the rayon
/// pool).
pub fn run(cli: &Cli) -> Result<RunOutcome, CliFailure> {
    if !(cli.rel_width > 0.0 && cli.rel_width < 1.0) {
        return Err(CliFailure::usage(format!(
            "--rel-width must lie in (0, 1), got {}",
            cli.rel_width
        )));
    }
    if let Some(jobs) = cli.jobs {
        if jobs < 1 {
            return Err(CliFailure::usage("--jobs must be >= 1"));
        }
        // First initialization wins; later runs in the same process keep
        // the existing pool.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let cfg = Config {
        rel_width: cli.rel_width,
        format: cli.format,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Sep { poly, real_only } => cmd_report(poly, *real_only, false, &cfg),
        Command::Exponent { poly, real_only } => cmd_report(poly, *real_only, true, &cfg),
        Command::Family {
            family,
            d,
            n_min,
            n_max,
            n_step,
            n_set,
            fit,
        } => {
            let n_values = parse_n_values(n_set, *n_min, *n_max, *n_step)?;
            cmd_family(family, *d, n_values, *fit, &cfg)
        }
        Command::Search {
            cubic,
            threshold,
            ladder,
            combo_bound,
        } => cmd_search(cubic, *threshold, ladder, *combo_bound, &cfg),
        Command::Survey { d, shape, bound, top } => cmd_survey(*d, shape, *bound, *top, &cfg),
        Command::Verify { suite, samples, d } => cmd_verify(*suite, *samples, *d, &cfg),
    }
}

/// Full CLI entry: runs, writes output to `--output` or stdout, reports
/// failures on stderr, and returns the process exit code.
pub fn execute(cli: Cli) -> i32 {
    match run(&cli) {
        Ok(outcome) => {
            let write_result = match &cli.output {
                Some(path) => std::fs::write(path, &outcome.output),
                None => std::io::stdout().write_all(&outcome.output),
            };
            if let Err(e) = write_result {
                eprintln!("error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            outcome.code
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}
