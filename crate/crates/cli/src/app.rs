use std::io::Write;
use std::path::{Path, PathBuf};

use circmem_core::lab::{
    analyze, figure_data, random_search, run_paper_suite, AnalyzeOptions, SearchConfig,
    SuiteStatus,
};
use circmem_core::{
    converge, BipolarState, CirculantWeightMatrix, EnumerationConfig, GeneratorRow,
    TrajectoryOutcome, UpdateMode, GRAY_CAP,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::emit::{emit_report, figure_csv, Format, Report};
use crate::error::{CliError, EXIT_OK, EXIT_SUITE_FAILURE};
use crate::parse::{parse_first_row, MatrixSpecFile};

#[derive(Debug, Parser)]
#[command(name = "circmem", version, about = "Memory capacity of circulant feedback networks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate every memory of one matrix.
    Analyze(AnalyzeArgs),
    /// Check the stated counts of every catalog matrix.
    PaperSuite(SuiteArgs),
    /// Seeded random search over generator rows.
    Search(SearchArgs),
    /// Follow the dynamics from one starting state.
    Converge(ConvergeArgs),
    /// Write capacity-versus-size datasets as CSV.
    Figures(FiguresArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct MatrixSource {
    /// Comma-separated first row, e.g. "0,2,-5,3".
    #[arg(long, allow_hyphen_values = true)]
    pub first_row: Option<String>,
    /// TOML (or .json) file with `n` and `first_row`.
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

impl MatrixSource {
    fn load(&self) -> Result<(GeneratorRow, Option<String>), CliError> {
        match (&self.first_row, &self.spec) {
            (Some(text), _) => Ok((parse_first_row(text)?, None)),
            (None, Some(path)) => {
                let spec = MatrixSpecFile::load(path)?;
                Ok((spec.row()?, spec.label))
            }
            (None, None) => Err(CliError::Usage("one of --first-row or --spec is required".into())),
        }
    }
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub matrix: MatrixSource,
    #[arg(long, env = "CIRCMEM_PARTITIONS", default_value_t = 1)]
    pub partitions: usize,
    /// Print the memories (text), or include them above n = 16 (json).
    #[arg(long)]
    pub list_states: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Allow n above the enumeration cap.
    #[arg(long)]
    pub force_large: bool,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, env = "CIRCMEM_PARTITIONS", default_value_t = 1)]
    pub partitions: usize,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub size: usize,
    #[arg(long)]
    pub trials: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub weight_min: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub weight_max: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub row_sum: Option<i64>,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 10_000)]
    pub max_rejections: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub force_large: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Sync,
    Async,
}

#[derive(Debug, Args)]
pub struct ConvergeArgs {
    #[command(flatten)]
    pub matrix: MatrixSource,
    /// Starting state as a +/- string, e.g. "+-+-".
    #[arg(long, allow_hyphen_values = true)]
    pub state: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Sync)]
    pub mode: ModeArg,
    /// Asynchronous order: comma-separated permutation or `random:SEED`.
    #[arg(long)]
    pub order: Option<String>,
    #[arg(long, default_value_t = 1000)]
    pub max_iters: usize,
}

#[derive(Debug, Args)]
pub struct FiguresArgs {
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, env = "CIRCMEM_PARTITIONS", default_value_t = 1)]
    pub partitions: usize,
}

fn write_output(out: Option<&Path>, body: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, body).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            source: e,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io {
                    path: "<stdout>".into(),
                    source: e,
                })
        }
    }
}

fn check_force(n: usize, force_large: bool) -> Result<(), CliError> {
    if n > GRAY_CAP && !force_large {
        return Err(circmem_core::Error::SizeTooLarge {
            n,
            cap: GRAY_CAP,
            method: "gray-code (pass --force-large)",
        }
        .into());
    }
    Ok(())
}

/// Runs one command and returns the process exit code.
pub fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze(a) => run_analyze(a),
        Command::PaperSuite(a) => run_suite(a),
        Command::Search(a) => run_search(a),
        Command::Converge(a) => run_converge(a),
        Command::Figures(a) => run_figures(a),
    }
}

fn run_analyze(a: AnalyzeArgs) -> Result<i32, CliError> {
    let (row, label) = a.matrix.load()?;
    check_force(row.n(), a.force_large)?;
    let options = AnalyzeOptions {
        label,
        enumeration: EnumerationConfig {
            partitions: a.partitions,
            force_large: a.force_large,
        },
        list_states: a.list_states,
        ..Default::default()
    };
    let mut report = analyze(&row, &options)?;
    if a.format == Format::Text && !a.list_states {
        report.fixed_points = None;
    }
    write_output(a.out.as_deref(), &emit_report(Report::Capacity(&report), a.format))?;
    Ok(EXIT_OK)
}

fn run_suite(a: SuiteArgs) -> Result<i32, CliError> {
    let suite = run_paper_suite(a.partitions)?;
    write_output(a.out.as_deref(), &emit_report(Report::Suite(&suite), a.format))?;
    match suite.status {
        SuiteStatus::Pass => Ok(EXIT_OK),
        SuiteStatus::Discrepancy => {
            if a.format != Format::Text || a.out.is_some() {
                eprintln!("DISCREPANCY: some untrusted stated counts differ from enumeration");
            }
            Ok(EXIT_OK)
        }
        SuiteStatus::Fail => Ok(EXIT_SUITE_FAILURE),
    }
}

fn run_search(a: SearchArgs) -> Result<i32, CliError> {
    check_force(a.size, a.force_large)?;
    let config = SearchConfig {
        n: a.size,
        trials: a.trials,
        weight_min: a.weight_min,
        weight_max: a.weight_max,
        row_sum_target: a.row_sum,
        seed: a.seed,
        max_rejections_per_trial: a.max_rejections,
        force_large: a.force_large,
    };
    let report = random_search(&config)?;
    write_output(a.out.as_deref(), &emit_report(Report::Search(&report), a.format))?;
    Ok(EXIT_OK)
}

fn parse_order(text: &str, n: usize) -> Result<UpdateMode, CliError> {
    if let Some(seed) = text.strip_prefix("random:") {
        let seed = seed
            .trim()
            .parse::<u64>()
            .map_err(|_| CliError::Usage(format!("invalid seed in --order {text:?}")))?;
        return Ok(UpdateMode::random_sweep(n, seed));
    }
    let order = text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Usage(format!("invalid --order {text:?}")))?;
    Ok(UpdateMode::AsynchronousSweep(order))
}

fn run_converge(a: ConvergeArgs) -> Result<i32, CliError> {
    let (row, _) = a.matrix.load()?;
    let w = CirculantWeightMatrix::new(row);
    let start: BipolarState = a.state.parse()?;
    let mode = match (a.mode, &a.order) {
        (ModeArg::Sync, None) => UpdateMode::Synchronous,
        (ModeArg::Sync, Some(_)) => {
            return Err(CliError::Usage("--order requires --mode async".into()))
        }
        (ModeArg::Async, None) => UpdateMode::identity_sweep(w.n()),
        (ModeArg::Async, Some(text)) => parse_order(text, w.n())?,
    };
    let line = match converge(&w, &start, &mode, a.max_iters)? {
        TrajectoryOutcome::FixedPoint { state, steps } => {
            format!("fixed point {} after {steps} steps", state.to_row_string())
        }
        TrajectoryOutcome::Cycle {
            period,
            first_state,
            steps_to_enter,
        } => format!(
            "cycle of period {period} entered after {steps_to_enter} steps at {}",
            first_state.to_row_string()
        ),
        TrajectoryOutcome::MaxItersExceeded { last_state } => format!(
            "no repeat within {} iterations; last state {}",
            a.max_iters,
            last_state.to_row_string()
        ),
    };
    write_output(None, &format!("{line}\n"))?;
    Ok(EXIT_OK)
}

fn run_figures(a: FiguresArgs) -> Result<i32, CliError> {
    let suite = run_paper_suite(a.partitions)?;
    let data = figure_data(&suite);
    std::fs::create_dir_all(&a.out).map_err(|e| CliError::Io {
        path: a.out.display().to_string(),
        source: e,
    })?;
    for (name, rows) in [
        ("figure2.csv", &data.all_sizes),
        ("figure3.csv", &data.even_sizes),
        ("figure4.csv", &data.odd_sizes),
    ] {
        write_output(Some(&a.out.join(name)), &figure_csv(rows))?;
    }
    Ok(EXIT_OK)
}
