//! Command-line driver.
//!
//! Exit codes: 0 success, 1 infeasible (or point not a solution for
//! `verify`), 2 input error, 3 enumeration budget exceeded, 4 numerical
//! failure while assembling the optimum.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::error::FreError;
use crate::generate::generate_instance;
use crate::io::{parse_point, parse_problem, report_document, serialize_problem, ProblemFile};
use crate::lattice::DEFAULT_ENUMERATION_LIMIT;
use crate::model::{check_feasibility, Infeasibility, Problem};
use crate::optimize::{solve, SolveOptions};
use crate::oracle::check_membership;
use crate::simplify::simplify_pipeline;
use crate::wpm::WpmParams;

/// Environment variable overriding the default enumeration budget.
pub const LIMIT_ENV: &str = "WPMFRE_ENUM_LIMIT";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_NUMERICAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "wpmfre",
    version,
    about = "Linear optimization over max-WPM fuzzy relational equalities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve the problem and print the report.
    Solve {
        file: PathBuf,
        #[arg(long)]
        no_simplify: bool,
        /// Maximum number of choice vectors to enumerate.
        #[arg(long)]
        limit: Option<u128>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide feasibility.
    Feasibility { file: PathBuf },
    /// Apply the simplification rules and print the reduced problem.
    Simplify {
        file: PathBuf,
        #[arg(long)]
        fixpoint: bool,
    },
    /// Check whether a point satisfies every equality.
    Verify {
        problem: PathBuf,
        point: PathBuf,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
    /// Emit a random feasible instance.
    Generate {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, default_value_t = 0.75)]
        w: f64,
        #[arg(long, default_value_t = 3.0)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn exit_code(err: &FreError) -> i32 {
    match err {
        FreError::Budget { .. } | FreError::OracleBudget { .. } => EXIT_BUDGET,
        FreError::InfeasibleRow { .. } | FreError::Infeasible => EXIT_INFEASIBLE,
        FreError::Numerical { .. } => EXIT_NUMERICAL,
        _ => EXIT_INPUT,
    }
}

fn load_problem(path: &Path) -> Result<Problem, FreError> {
    let text = fs::read_to_string(path)
        .map_err(|e| FreError::Parse(format!("{}: {e}", path.display())))?;
    parse_problem(&text).map_err(|e| match e {
        FreError::Parse(msg) => FreError::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), FreError> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| FreError::Parse(format!("{}: {e}", path.display()))),
        None => writeln!(stdout, "{text}").map_err(|e| FreError::Parse(e.to_string())),
    }
}

fn default_limit() -> u128 {
    std::env::var(LIMIT_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_LIMIT)
}

fn describe(diag: &Infeasibility) -> String {
    match diag {
        Infeasibility::EntryTooLarge { row, columns } => {
            let cells: Vec<String> = columns.iter().map(|j| format!("({row}, {j})")).collect();
            format!("entries too large for b[{row}] at {}", cells.join(", "))
        }
        Infeasibility::NoActiveColumn { row } => {
            format!("row {row} has no entry able to reach b[{row}]")
        }
        Infeasibility::MaxSolutionResiduals { residuals } => {
            let worst = residuals.iter().cloned().fold(0.0f64, f64::max);
            format!("maximum solution misses the right-hand side (max residual {worst:e})")
        }
    }
}

fn run(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, FreError> {
    match command {
        Command::Solve {
            file,
            no_simplify,
            limit,
            out,
        } => {
            let problem = load_problem(&file)?;
            let options = SolveOptions {
                simplify: !no_simplify,
                fixpoint: false,
                limit: limit.unwrap_or_else(default_limit),
            };
            let start = Instant::now();
            let report = solve(&problem, &options)?;
            let elapsed = start.elapsed().as_secs_f64();
            emit(
                &report_document(&report, Some(elapsed)),
                out.as_deref(),
                stdout,
            )?;
            if let Some(diag) = &report.diagnostic {
                let _ = writeln!(stderr, "infeasible: {}", describe(diag));
            }
            Ok(if report.feasible {
                EXIT_OK
            } else {
                EXIT_INFEASIBLE
            })
        }
        Command::Feasibility { file } => {
            let problem = load_problem(&file)?;
            let verdict = check_feasibility(&problem);
            let doc = json!({
                "feasible": verdict.is_ok(),
                "diagnostic": verdict.as_ref().err(),
            });
            emit(&serde_json::to_string_pretty(&doc).unwrap(), None, stdout)?;
            match verdict {
                Ok(()) => Ok(EXIT_OK),
                Err(diag) => {
                    let _ = writeln!(stderr, "infeasible: {}", describe(&diag));
                    Ok(EXIT_INFEASIBLE)
                }
            }
        }
        Command::Simplify { file, fixpoint } => {
            let problem = load_problem(&file)?;
            let (simplified, log) = simplify_pipeline(&problem, fixpoint)?;
            let doc = json!({
                "problem": ProblemFile::from(&simplified),
                "simplification": log,
            });
            emit(&serde_json::to_string_pretty(&doc).unwrap(), None, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            problem,
            point,
            tol,
        } => {
            let problem = load_problem(&problem)?;
            let text = fs::read_to_string(&point)
                .map_err(|e| FreError::Parse(format!("{}: {e}", point.display())))?;
            let x = parse_point(&text)?;
            let (member, residuals) = check_membership(&problem, &x, tol)?;
            let max_residual = residuals.iter().cloned().fold(0.0f64, f64::max);
            let doc = json!({
                "member": member,
                "tolerance": tol,
                "max_residual": max_residual,
                "residuals": residuals,
            });
            emit(&serde_json::to_string_pretty(&doc).unwrap(), None, stdout)?;
            Ok(if member { EXIT_OK } else { EXIT_INFEASIBLE })
        }
        Command::Generate {
            rows,
            cols,
            w,
            p,
            seed,
            out,
        } => {
            if rows == 0 || cols == 0 {
                return Err(FreError::Dimension(
                    "rows and cols must be at least 1".into(),
                ));
            }
            let params = WpmParams::new(w, p)?;
            let inst = generate_instance(rows, cols, params, seed);
            emit(&serialize_problem(&inst.problem), out.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match run(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            exit_code(&err)
        }
    }
}
