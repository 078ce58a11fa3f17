//! Batch command-line surface: golden tables, verification suites, the
//! bijection, shape reports, root checks and complex builders.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::analysis::{shape_report, sturm_distinct_real_roots, sturm_real_rooted};
use crate::bijections::{phi, phi_inverse, statistic_ledger};
use crate::error::Error;
use crate::exactpoly::IntPoly;
use crate::families::{EngineConfig, Family, FamilyEngine};
use crate::signedperm::{CycleConvention, SignedPermutation};
use crate::simplicial::{barycentric_subdivision, k_n, simplex, KN_GUARD};

pub use suites::{run_suite, CaseFailure, Suite, SuiteContext, SuiteResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "bderange",
    version,
    about = "Type-B derangement and Eulerian polynomials, exactly"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write standard output to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Lift the enumeration and construction guards.
    #[arg(long, global = true)]
    pub allow_large: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// One row per n with the coefficients and the agreeing methods.
    Tables {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Defaults to the suite's own bound.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Apply the bijection to a type-B derangement such as "3,-1,2".
    Bijection {
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Shape report of one family member as JSON.
    Shape {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// Sturm real-rootedness verdicts for 0..=max-n.
    Rootcheck {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        max_n: usize,
    },
    /// Build a complex and emit one of its invariants as JSON.
    Complex {
        #[arg(long, value_enum)]
        build: Build,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        emit: Emit,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Build {
    Kn,
    SdSimplex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Fvector,
    Hpoly,
    Localh,
}

/// A command outcome: an exit code, or an error with its code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GuardExceeded { .. }
            | Error::InvalidArgument(_)
            | Error::Parse(_)
            | Error::InvalidSignedPermutation(_)
            | Error::InvalidPermutation(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_FAILURE,
            message: format!("i/o error: {e}"),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    execute(&cli, out, err)
}

/// Runs an already parsed command line.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut buf = Vec::new();
    let mut log = Vec::new();
    let result = match cli.jobs {
        Some(0) => Err(Failure {
            code: EXIT_USAGE,
            message: "--jobs must be positive".into(),
        }),
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| dispatch(cli, &mut buf, &mut log)),
            Err(e) => Err(Failure {
                code: EXIT_FAILURE,
                message: format!("thread pool: {e}"),
            }),
        },
        None => dispatch(cli, &mut buf, &mut log),
    };
    let _ = err.write_all(&log);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &buf),
        None => out.write_all(&buf),
    };
    match (result, written) {
        (Ok(code), Ok(())) => code,
        (Ok(_), Err(e)) => {
            let _ = writeln!(err, "error: cannot write output: {e}");
            EXIT_FAILURE
        }
        (Err(f), _) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn engine_for(cli: &Cli) -> FamilyEngine {
    let config = if cli.allow_large {
        EngineConfig {
            enum_limit_b: usize::MAX,
            enum_limit_a: usize::MAX,
            allow_large: true,
        }
    } else {
        EngineConfig::default()
    };
    FamilyEngine::new(config)
}

fn dispatch(cli: &Cli, out: &mut Vec<u8>, err: &mut Vec<u8>) -> CmdResult {
    match &cli.command {
        Command::Tables { family, max_n, format } => cmd_tables(cli, *family, *max_n, *format, out),
        Command::Verify { suite, max_n, format } => cmd_verify(cli, *suite, *max_n, *format, out, err),
        Command::Bijection { w } => cmd_bijection(w, out),
        Command::Shape { family, n } => cmd_shape(cli, *family, *n, out),
        Command::Rootcheck { family, max_n } => cmd_rootcheck(cli, *family, *max_n, out),
        Command::Complex { build, n, emit } => cmd_complex(cli, *build, *n, *emit, out),
    }
}

fn coeff_strings(p: &IntPoly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".into()];
    }
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn cmd_tables(cli: &Cli, family: Family, max_n: usize, format: TableFormat, out: &mut Vec<u8>) -> CmdResult {
    let rows = engine_for(cli).table(family, max_n)?;
    match format {
        TableFormat::Text => {
            for r in &rows {
                let methods: Vec<&str> = r.methods_agreed.iter().map(|m| m.tag()).collect();
                writeln!(
                    out,
                    "{}\t{}\t{}\t[{}]",
                    r.n,
                    r.value,
                    coeff_strings(&r.value).join(" "),
                    methods.join(",")
                )?;
            }
        }
        TableFormat::Json => {
            for r in &rows {
                writeln!(out, "{}", serde_json::to_string(r).expect("serialisable"))?;
            }
        }
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["family", "n", "degree", "coefficient", "methods"])
                .map_err(csv_err)?;
            for r in &rows {
                let methods: Vec<&str> = r.methods_agreed.iter().map(|m| m.tag()).collect();
                let methods = methods.join(";");
                for (d, c) in coeff_strings(&r.value).iter().enumerate() {
                    w.write_record([family.tag(), &r.n.to_string(), &d.to_string(), c, &methods])
                        .map_err(csv_err)?;
                }
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

fn csv_err(e: csv::Error) -> Failure {
    Failure {
        code: EXIT_FAILURE,
        message: format!("csv: {e}"),
    }
}

fn cmd_verify(
    cli: &Cli,
    suite: Suite,
    max_n: Option<usize>,
    format: ReportFormat,
    out: &mut Vec<u8>,
    err: &mut Vec<u8>,
) -> CmdResult {
    let ctx = SuiteContext {
        engine: engine_for(cli),
        allow_large: cli.allow_large,
    };
    let results: Vec<SuiteResult> = suite
        .expand()
        .into_iter()
        .map(|s| {
            let r = run_suite(s, max_n.unwrap_or(s.default_max_n()), &ctx);
            let _ = writeln!(err, "{}: {:.3}s", s.name(), r.wall_time.as_secs_f64());
            r
        })
        .collect();
    match format {
        ReportFormat::Text => {
            for r in &results {
                let verdict = if r.passed() { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{verdict} {} max-n={} cases={} failures={}",
                    r.suite.name(),
                    r.max_n,
                    r.cases_run,
                    r.failures.len()
                )?;
                for n in &r.notes {
                    writeln!(out, "  note: {n}")?;
                }
                for f in &r.failures {
                    writeln!(
                        out,
                        "  fail: {} [{}]: expected {}, got {}",
                        f.case,
                        f.methods.join(","),
                        f.expected,
                        f.got
                    )?;
                }
            }
        }
        ReportFormat::Json => {
            let v = if results.len() == 1 {
                json!(results[0])
            } else {
                json!(results)
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serialisable"))?;
        }
    }
    Ok(if results.iter().all(SuiteResult::passed) {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

#[derive(Serialize)]
struct BijectionReport {
    input: SignedPermutation,
    cycle_form: String,
    phi: crate::bijections::PermutationSeq,
    ledger: crate::bijections::StatisticLedger,
    round_trip: bool,
}

fn cmd_bijection(w: &str, out: &mut Vec<u8>) -> CmdResult {
    let w: SignedPermutation = w.parse()?;
    let image = phi(&w)?;
    let ledger = statistic_ledger(&w)?;
    let round_trip = phi_inverse(&image)? == w;
    let ok = round_trip && ledger.holds();
    let report = BijectionReport {
        cycle_form: w.cycle_form(CycleConvention::TypeB).to_string(),
        input: w,
        phi: image,
        ledger,
        round_trip,
    };
    writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serialisable"))?;
    Ok(if ok { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_shape(cli: &Cli, family: Family, n: usize, out: &mut Vec<u8>) -> CmdResult {
    let p = engine_for(cli).value(family, n)?;
    let report = shape_report(&p, family.symmetry_degree(n));
    let v = json!({ "family": family, "n": n, "report": report });
    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serialisable"))?;
    Ok(EXIT_OK)
}

fn cmd_rootcheck(cli: &Cli, family: Family, max_n: usize, out: &mut Vec<u8>) -> CmdResult {
    let engine = engine_for(cli);
    let first = usize::from(family == Family::GammaA);
    let mut failed = false;
    for n in first..=max_n {
        let p = engine.value(family, n)?;
        let verdict = if p.degree().unwrap_or(0) == 0 {
            "constant".to_string()
        } else {
            let rr = sturm_real_rooted(&p)?;
            failed |= !rr;
            let roots = sturm_distinct_real_roots(&p)?;
            format!(
                "{} distinct-real-roots={roots}",
                if rr { "real-rooted" } else { "not-real-rooted" }
            )
        };
        writeln!(out, "{family}\t{n}\t{verdict}")?;
    }
    if failed && !family.proven_real_rooted() {
        writeln!(
            out,
            "# {family} is not known to be real-rooted; failures are reported, not fatal"
        )?;
    }
    Ok(if failed && family.proven_real_rooted() {
        EXIT_FAILURE
    } else {
        EXIT_OK
    })
}

fn cmd_complex(cli: &Cli, build: Build, n: usize, emit: Emit, out: &mut Vec<u8>) -> CmdResult {
    if n > KN_GUARD && !cli.allow_large {
        return Err(Error::GuardExceeded { n, limit: KN_GUARD }.into());
    }
    let (name, counts, h, local) = match build {
        Build::Kn => {
            let k = k_n(n, true)?;
            (
                "kn",
                k.complex().face_counts(),
                k.complex().h_polynomial(),
                k.over_simplex.local_h(),
            )
        }
        Build::SdSimplex => {
            let sd = barycentric_subdivision(&simplex(n)?)?;
            (
                "sd-simplex",
                sd.complex().face_counts(),
                sd.complex().h_polynomial(),
                sd.local_h(),
            )
        }
    };
    let value = match emit {
        Emit::Fvector => json!(counts.iter().map(ToString::to_string).collect::<Vec<_>>()),
        Emit::Hpoly => json!(h),
        Emit::Localh => json!(local?),
    };
    let tag = match emit {
        Emit::Fvector => "fvector",
        Emit::Hpoly => "hpoly",
        Emit::Localh => "localh",
    };
    let v = json!({ "build": name, "n": n, "emit": tag, "value": value });
    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serialisable"))?;
    Ok(EXIT_OK)
}
