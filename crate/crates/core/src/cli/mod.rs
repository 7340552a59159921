//! The `jeth` command line: compute, verify and sweep, as aligned text or
//! JSON.
//!
//! Exit codes: 0 success, 2 usage or parameter error, 3 failed check or
//! disagreement, 4 resource guard refusal.

mod report;
mod verify;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Limits};
use crate::hilbert;
use crate::jetcomplex::JetShape;

pub use report::{Check, ClassicalReport, ComponentsReport, JetReport, Methods, Status, SweepCell, SweepReport};
pub use verify::{
    routes, sample_configurations, verify, Level, Routes, FAST_SHELLING_FACETS, GV_MAX_PRODUCT, GV_SAMPLES,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;
pub const EXIT_GUARD: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "jeth",
    version,
    about = "Hilbert series of the principal component of 2x2 determinantal jets"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text, env = "JETH_FORMAT")]
    pub format: Format,
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_MAX_FACETS, env = "JETH_MAX_FACETS")]
    pub max_facets: u64,
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_MAX_FACES, env = "JETH_MAX_FACES")]
    pub max_faces: u64,
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_MAX_PATHS, env = "JETH_MAX_PATHS")]
    pub max_paths: u64,
    /// Worker threads for sweeps; 0 picks the number of CPUs.
    #[arg(long, global = true, default_value_t = 0, env = "JETH_THREADS")]
    pub threads: usize,
    /// Seed for the sampled path configurations of the deep level.
    #[arg(long, global = true, default_value_t = 1, env = "JETH_SEED")]
    pub seed: u64,
}

impl GlobalArgs {
    fn limits(&self) -> Limits {
        Limits {
            max_paths: self.max_paths,
            max_facets: self.max_facets,
            max_faces: self.max_faces,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// h-vector of the principal component by one or all methods.
    Hvector {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = Method::All, env = "JETH_METHOD")]
        method: Method,
    },
    /// Hilbert series, multiplicity, a-invariant, Gorenstein status and
    /// canonical module numerator.
    Report {
        #[command(flatten)]
        size: Size,
    },
    /// The determinantal variety of matrices of rank < r.
    Classical {
        #[arg(long, env = "JETH_R")]
        r: i64,
        #[arg(long, env = "JETH_M")]
        m: i64,
        #[arg(long, env = "JETH_N")]
        n: i64,
    },
    /// Cross-check every route and invariant for one size.
    Verify {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = LevelArg::Fast, env = "JETH_LEVEL")]
        level: LevelArg,
    },
    /// Run `verify` for every 3 <= m <= n within the bounds.
    Sweep {
        #[arg(long, env = "JETH_MAX_M")]
        max_m: i64,
        #[arg(long, env = "JETH_MAX_N")]
        max_n: i64,
        #[arg(long, value_enum, default_value_t = LevelArg::Fast, env = "JETH_LEVEL")]
        level: LevelArg,
    },
    /// Irreducible components of the jet scheme: k + 1 - ceil(k / r).
    Components {
        #[arg(long, env = "JETH_R")]
        r: i64,
        #[arg(long, env = "JETH_K")]
        k: i64,
    },
}

#[derive(Debug, Args)]
pub struct Size {
    #[arg(long, env = "JETH_M")]
    pub m: i64,
    #[arg(long, env = "JETH_N")]
    pub n: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Shelling,
    Paths,
    Lemmas,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LevelArg {
    Fast,
    Deep,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Self {
        match l {
            LevelArg::Fast => Level::Fast,
            LevelArg::Deep => Level::Deep,
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::GuardExceeded { .. } => EXIT_GUARD,
        Error::Inconsistency(_) => EXIT_CHECK_FAILED,
        _ => EXIT_USAGE,
    }
}

/// What a command wants printed, and its exit code.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

/// Parses `args` (program name first), runs the command, prints, and
/// returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Text => text(value),
        Format::Json => serde_json::to_string_pretty(value).expect("reports serialize") + "\n",
    }
}

fn failed(checks: &[Check]) -> bool {
    checks.iter().any(|c| c.status == Status::Fail)
}

pub fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let g = &cli.global;
    let limits = g.limits();
    match &cli.command {
        Command::Hvector { size, method } => {
            let shape = JetShape::new(size.m, size.n)?;
            let report = hvector(&shape, *method, &limits)?;
            let code = if failed(&report.checks) {
                EXIT_CHECK_FAILED
            } else {
                EXIT_OK
            };
            Ok(Outcome {
                stdout: render(g.format, &report, JetReport::to_text),
                code,
            })
        }
        Command::Report { size } => {
            let shape = JetShape::new(size.m, size.n)?;
            let report = verify::report(&shape)?;
            Ok(Outcome {
                stdout: render(g.format, &report, JetReport::to_text),
                code: EXIT_OK,
            })
        }
        Command::Classical { r, m, n } => {
            let report = classical(*r, *m, *n)?;
            let code = if failed(&report.checks) {
                EXIT_CHECK_FAILED
            } else {
                EXIT_OK
            };
            Ok(Outcome {
                stdout: render(g.format, &report, ClassicalReport::to_text),
                code,
            })
        }
        Command::Verify { size, level } => {
            let shape = JetShape::new(size.m, size.n)?;
            let report = verify(&shape, (*level).into(), &limits, g.seed)?;
            let code = if failed(&report.checks) {
                if let Some(c) = report.checks.iter().find(|c| c.status == Status::Fail) {
                    eprintln!("check failed: {}: {}", c.name, c.detail);
                }
                EXIT_CHECK_FAILED
            } else {
                EXIT_OK
            };
            Ok(Outcome {
                stdout: render(g.format, &report, JetReport::to_text),
                code,
            })
        }
        Command::Sweep { max_m, max_n, level } => {
            let (report, code) = sweep(*max_m, *max_n, (*level).into(), &limits, g.seed, g.threads)?;
            Ok(Outcome {
                stdout: render(g.format, &report, SweepReport::to_text),
                code,
            })
        }
        Command::Components { r, k } => {
            let report = ComponentsReport {
                r: *r,
                k: *k,
                components: hilbert::component_count(*r, *k)?,
            };
            Ok(Outcome {
                stdout: render(g.format, &report, ComponentsReport::to_text),
                code: EXIT_OK,
            })
        }
    }
}

pub fn hvector(shape: &JetShape, method: Method, limits: &Limits) -> Result<JetReport, Error> {
    let mut report = JetReport {
        m: shape.m(),
        n: shape.n(),
        dimension: shape.dimension(),
        ..Default::default()
    };
    let h = match method {
        Method::Closed => hilbert::h_closed(shape),
        Method::Shelling => hilbert::h_shelling(shape, limits)?,
        Method::Paths => hilbert::h_paths(shape)?,
        Method::Lemmas => hilbert::h_lemma_sums(shape)?,
        Method::All => {
            let routes = routes(shape, limits, true)?;
            report.methods = Some(routes.methods());
            report.checks.push(routes.agreement());
            routes.closed
        }
    };
    report.h_vector = Some(h.to_strings());
    Ok(report)
}

pub fn classical(r: i64, m: i64, n: i64) -> Result<ClassicalReport, Error> {
    let series = hilbert::classical_series(r, m, n)?;
    let h = hilbert::classical_h(r, m, n)?;
    let multiplicity = hilbert::classical_multiplicity(r, m, n)?;
    let mut checks = vec![Check::new(
        "multiplicity",
        h.sum() == multiplicity,
        format!("h(1) {}, determinant {multiplicity}", h.sum()),
    )];
    if r == 2 && m > 2 {
        let shape = JetShape::new(m, n)?;
        let jet = hilbert::jet_hilbert_series(&shape);
        let squared = series.square();
        checks.push(Check::new(
            "squared_series",
            *jet.numerator() == *squared.numerator() && jet.pole_order() == squared.pole_order(),
            format!(
                "jet series pole order {}, squared pole order {}",
                jet.pole_order(),
                squared.pole_order()
            ),
        ));
    }
    Ok(ClassicalReport {
        r,
        m,
        n,
        dimension: series.pole_order(),
        h_vector: h.to_strings(),
        multiplicity: multiplicity.to_string(),
        checks,
    })
}

/// Verifies every cell in parallel and reports them in `(m, n)` order.
/// The exit code is 3 if any cell failed, else 4 if any cell was refused by
/// a guard.
pub fn sweep(
    max_m: i64,
    max_n: i64,
    level: Level,
    limits: &Limits,
    seed: u64,
    threads: usize,
) -> Result<(SweepReport, i32), Error> {
    if max_m < 3 || max_n < max_m {
        return Err(Error::InvalidParameters(format!(
            "sweep needs 3 <= max-m <= max-n, got {max_m} and {max_n}"
        )));
    }
    let cells: Vec<(i64, i64)> = (3..=max_m).flat_map(|m| (m..=max_n).map(move |n| (m, n))).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
    let results: Vec<(SweepCell, i32)> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(m, n)| {
                let outcome = JetShape::new(m, n).and_then(|s| verify(&s, level, limits, seed));
                match outcome {
                    Ok(r) => match r.checks.iter().find(|c| c.status == Status::Fail) {
                        None => (
                            SweepCell {
                                m,
                                n,
                                status: "PASS".into(),
                                detail: format!("{} checks", r.checks.len()),
                            },
                            EXIT_OK,
                        ),
                        Some(c) => (
                            SweepCell {
                                m,
                                n,
                                status: "FAIL".into(),
                                detail: format!("{}: {}", c.name, c.detail),
                            },
                            EXIT_CHECK_FAILED,
                        ),
                    },
                    Err(e) => {
                        let code = exit_code(&e);
                        let status = if code == EXIT_GUARD { "REFUSED" } else { "FAIL" };
                        (
                            SweepCell {
                                m,
                                n,
                                status: status.into(),
                                detail: e.to_string(),
                            },
                            code,
                        )
                    }
                }
            })
            .collect()
    });
    let code = if results.iter().any(|(_, c)| *c == EXIT_CHECK_FAILED || *c == EXIT_USAGE) {
        EXIT_CHECK_FAILED
    } else if results.iter().any(|(_, c)| *c == EXIT_GUARD) {
        EXIT_GUARD
    } else {
        EXIT_OK
    };
    let level = match level {
        Level::Fast => "fast",
        Level::Deep => "deep",
    };
    let report = SweepReport {
        max_m,
        max_n,
        level: level.into(),
        cells: results.into_iter().map(|(c, _)| c).collect(),
    };
    Ok((report, code))
}
