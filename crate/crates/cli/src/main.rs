//! Command-line front end for the distributed-order spectral solver.
//!
//! Subcommands: `roots`, `eval-h`, `solve cauchy`, `solve bvp`, `verify`.
//! Output is byte-deterministic for fixed inputs and flags. Exit codes:
//!
//!   0  success
//!   1  verification failure (unexpected failing check)
//!   2  usage error (bad flags, invalid problem data, branch-cut λ)
//!   3  degenerate lattice (a root collides with λ = 1)
//!   4  numerical non-convergence or overflow
//!   5  degenerate coefficient denominator

mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dorder::quadrature::QuadError;
use dorder::solvers::{self, BoundaryProblem, CauchyProblem, SolveError};
use dorder::spectrum::{self, CharacteristicRoot, OrderInterval, SpectrumError};
use dorder::verification;
use dorder::{eval_h, Complex64, HEvalRequest, PowerBase, QuadratureConfig, SpecialError};

use output::RootRow;

#[derive(Debug)]
pub enum CliError {
    /// Exit 2.
    Usage(String),
    /// Exit 3.
    Lattice(String),
    /// Exit 4.
    Numeric(String),
    /// Exit 5.
    Degenerate(String),
    /// Exit 1.
    VerificationFailed(usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::VerificationFailed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Lattice(_) => 3,
            CliError::Numeric(_) => 4,
            CliError::Degenerate(_) => 5,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) | CliError::Lattice(m) | CliError::Numeric(m)
            | CliError::Degenerate(m) => m.clone(),
            CliError::VerificationFailed(n) => {
                format!("{n} verification check(s) failed unexpectedly")
            }
        }
    }
}

fn map_quad(e: QuadError) -> CliError {
    match e {
        QuadError::NonConvergent { .. } | QuadError::Overflow { .. } => {
            CliError::Numeric(e.to_string())
        }
        QuadError::InvalidConfig(_) => CliError::Usage(e.to_string()),
    }
}

fn map_special(e: SpecialError) -> CliError {
    match e {
        SpecialError::BranchCut | SpecialError::InvalidInput(_) => CliError::Usage(e.to_string()),
        SpecialError::Quadrature(q) => map_quad(q),
    }
}

fn map_spectrum(e: SpectrumError) -> CliError {
    match e {
        SpectrumError::InvalidBeta { .. } | SpectrumError::BranchCut => {
            CliError::Usage(e.to_string())
        }
        SpectrumError::DegenerateLattice { .. } => CliError::Lattice(e.to_string()),
    }
}

fn map_solve(e: SolveError) -> CliError {
    match e {
        SolveError::GridTooCoarse { .. } | SolveError::InvalidProblem(_) => {
            CliError::Usage(e.to_string())
        }
        SolveError::DegenerateMode { .. } | SolveError::NonDegeneracyViolated { .. } => {
            CliError::Degenerate(e.to_string())
        }
        SolveError::Special(s) => map_special(s),
        SolveError::Spectrum(s) => map_spectrum(s),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Default,
    Full,
}

#[derive(Parser, Debug)]
#[command(
    name = "dorder",
    version,
    about = "Closed spectral solver for the distributed-order equation ∫₀^β D^α y(x) dα = 0",
    allow_negative_numbers = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Order interval width β ∈ (0, 2]
    #[arg(long, global = true, default_value_t = spectrum::DEFAULT_BETA)]
    beta: f64,

    /// Symmetric series truncation: modes 0 < |k| ≤ kmax
    #[arg(long, global = true, default_value_t = 16)]
    kmax: u32,

    /// Absolute quadrature tolerance
    #[arg(long, global = true, default_value_t = 1e-12)]
    abs_tol: f64,

    /// Relative quadrature tolerance
    #[arg(long, global = true, default_value_t = 1e-12)]
    rel_tol: f64,

    /// Output format for tabular results
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Characteristic roots λ_k = e^{i·2kπ/β} with residuals |F(λ_k)|
    #[command(allow_negative_numbers = true)]
    Roots,
    /// Evaluate the invariant function h₊₀(x, λ)
    #[command(allow_negative_numbers = true)]
    EvalH {
        /// Abscissa x > 0
        #[arg(long)]
        x: f64,
        /// Re λ (with --lambda-im; principal branch)
        #[arg(long, conflicts_with = "k")]
        lambda_re: Option<f64>,
        /// Im λ (defaults to 0 when --lambda-re is given)
        #[arg(long, conflicts_with = "k")]
        lambda_im: Option<f64>,
        /// Use the lattice root λ_k instead of explicit components
        #[arg(long)]
        k: Option<i32>,
    },
    /// Solve a data-projection problem
    Solve {
        #[command(subcommand)]
        problem: SolveProblem,
    },
    /// Run the verification suite
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::Default)]
        suite: Suite,
    },
}

#[derive(Subcommand, Debug)]
enum SolveProblem {
    /// Cauchy data D^α y|_{x=a} = φ(α)
    #[command(allow_negative_numbers = true)]
    Cauchy {
        /// Initial abscissa a > 0
        #[arg(long)]
        a: f64,
        /// Data: builtin:mode:<k> | builtin:cosine:<k> | builtin:constant:<c> | csv:<path>
        #[arg(long)]
        phi: String,
        /// Evaluate y on this grid (start:stop:count) and write a CSV table
        #[arg(long)]
        eval_grid: Option<String>,
        /// Destination for the evaluation table (required with --eval-grid)
        #[arg(long)]
        eval_out: Option<PathBuf>,
    },
    /// Two-point data a₀ D^α y|_a + b₀ D^α y|_b = φ(α)
    #[command(allow_negative_numbers = true)]
    Bvp {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        #[arg(long)]
        a0: f64,
        #[arg(long)]
        b0: f64,
        #[arg(long)]
        phi: String,
        #[arg(long)]
        eval_grid: Option<String>,
        #[arg(long)]
        eval_out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Roots => cmd_roots(cli),
        Command::EvalH {
            x,
            lambda_re,
            lambda_im,
            k,
        } => cmd_eval_h(cli, *x, *lambda_re, *lambda_im, *k),
        Command::Solve { problem } => cmd_solve(cli, problem),
        Command::Verify { suite } => cmd_verify(cli, *suite),
    }
}

fn config_from(cli: &Cli) -> Result<QuadratureConfig, CliError> {
    let config = QuadratureConfig {
        abs_tol: cli.abs_tol,
        rel_tol: cli.rel_tol,
        ..QuadratureConfig::default()
    };
    config.validate().map_err(map_quad)?;
    Ok(config)
}

fn interval_from(cli: &Cli) -> Result<OrderInterval, CliError> {
    OrderInterval::new(cli.beta).map_err(map_spectrum)
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_roots(cli: &Cli) -> Result<(), CliError> {
    interval_from(cli)?;
    if cli.kmax == 0 {
        return Err(CliError::Usage("--kmax must be at least 1".into()));
    }
    let lattice = spectrum::roots(cli.beta, cli.kmax).map_err(map_spectrum)?;
    let rows: Vec<RootRow> = lattice
        .iter()
        .map(|root| RootRow {
            k: root.k(),
            value: root.value(),
            residual: root.residual(cli.beta),
        })
        .collect();
    let rendered = match cli.format {
        Format::Csv => output::roots_csv(&rows),
        Format::Json => output::roots_json(cli.beta, &rows),
    };
    emit(&cli.out, &rendered)
}

fn cmd_eval_h(
    cli: &Cli,
    x: f64,
    lambda_re: Option<f64>,
    lambda_im: Option<f64>,
    k: Option<i32>,
) -> Result<(), CliError> {
    let config = config_from(cli)?;
    let interval = interval_from(cli)?;
    let lambda = match (lambda_re, k) {
        (Some(re), None) => {
            let im = lambda_im.unwrap_or(0.0);
            PowerBase::principal(Complex64::new(re, im)).map_err(map_special)?
        }
        (None, Some(k)) => CharacteristicRoot::new(k, &interval)
            .map_err(map_spectrum)?
            .base(),
        _ => {
            return Err(CliError::Usage(
                "specify λ either by --lambda-re [--lambda-im] or by --k".into(),
            ))
        }
    };
    let request = HEvalRequest::new(x, lambda, config).map_err(map_special)?;
    let value = eval_h(&request).map_err(map_special)?;
    let rendered = match cli.format {
        Format::Csv => output::eval_h_csv(value.value, value.error),
        Format::Json => output::eval_h_json(x, value.value, value.error),
    };
    emit(&cli.out, &rendered)
}

fn cmd_solve(cli: &Cli, problem: &SolveProblem) -> Result<(), CliError> {
    let config = config_from(cli)?;
    let interval = interval_from(cli)?;
    let (series, eval_grid, eval_out) = match problem {
        SolveProblem::Cauchy {
            a,
            phi,
            eval_grid,
            eval_out,
        } => {
            let phi = input::parse_phi(phi)?;
            let problem = CauchyProblem::new(*a, phi, interval, cli.kmax, config)
                .map_err(map_solve)?;
            let series = solvers::solve_cauchy(&problem).map_err(map_solve)?;
            (series, eval_grid.clone(), eval_out.clone())
        }
        SolveProblem::Bvp {
            a,
            b,
            a0,
            b0,
            phi,
            eval_grid,
            eval_out,
        } => {
            let phi = input::parse_phi(phi)?;
            let problem =
                BoundaryProblem::new(*a, *b, *a0, *b0, phi, interval, cli.kmax, config)
                    .map_err(map_solve)?;
            let series = solvers::solve_bvp(&problem).map_err(map_solve)?;
            (series, eval_grid.clone(), eval_out.clone())
        }
    };

    if let Some(grid_spec) = eval_grid {
        let Some(eval_out) = eval_out else {
            return Err(CliError::Usage(
                "--eval-grid requires --eval-out <path> for the CSV table".into(),
            ));
        };
        let grid = input::parse_eval_grid(&grid_spec)?;
        let mut rows = Vec::with_capacity(grid.len());
        for x in grid {
            let y = series.evaluate(x, &config).map_err(map_solve)?;
            rows.push((x, y));
        }
        let table = output::eval_table_csv(&rows);
        std::fs::write(&eval_out, table)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", eval_out.display())))?;
    }

    emit(&cli.out, &output::solve_json(&series))
}

fn cmd_verify(cli: &Cli, suite: Suite) -> Result<(), CliError> {
    let config = config_from(cli)?;
    interval_from(cli)?;
    let (name, report) = match suite {
        Suite::Default => (
            "default",
            verification::default_suite(cli.beta, &config).map_err(map_solve)?,
        ),
        Suite::Full => (
            "full",
            verification::full_suite(cli.beta, &config).map_err(map_solve)?,
        ),
    };
    let rendered = match cli.format {
        Format::Json => output::report_json(cli.beta, name, &report),
        Format::Csv => output::report_csv(&report),
    };
    emit(&cli.out, &rendered)?;
    // The human-readable summary goes to stderr so stdout stays parseable.
    eprintln!("{report}");
    let failures = report.unexpected_failures().count();
    if failures > 0 {
        return Err(CliError::VerificationFailed(failures));
    }
    Ok(())
}
