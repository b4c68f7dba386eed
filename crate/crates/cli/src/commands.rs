use std::io::Write;

use qpa_core::protocol::{
    leakage_chunk_known, leakage_chunks, run_protocol, validate_leakage_params, LeakageEstimate,
};
use qpa_core::qpa::{verify_tables as verify, QpaTable};
use rayon::prelude::*;

use crate::args::{Cli, Command, Format, LeakageArgs, RunArgs, SweepArgs, VerifyArgs};
use crate::config::{self, Common, FileConfig, SweepSettings};
use crate::error::CliError;
use crate::output;
use crate::{EXIT_FAILED, EXIT_OK};

/// A rendered result document and the exit code it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub document: String,
    pub exit_code: u8,
}

impl Outcome {
    fn ok(document: String) -> Self {
        Outcome {
            document,
            exit_code: EXIT_OK,
        }
    }
}

/// Parses nothing; renders the command and writes its document.
pub fn execute(cli: Cli) -> Result<u8, CliError> {
    let (common, outcome) = render(&cli.command)?;
    emit(&common, &outcome.document)?;
    Ok(outcome.exit_code)
}

pub fn render(command: &Command) -> Result<(Common, Outcome), CliError> {
    match command {
        Command::VerifyTables(args) => verify_tables(args),
        Command::Run(args) => run(args),
        Command::Leakage(args) => leakage(args),
        Command::Sweep(args) => sweep(args),
    }
}

fn emit(common: &Common, document: &str) -> Result<(), CliError> {
    match &common.out {
        Some(path) => {
            std::fs::write(path, document).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            eprintln!("wrote {}", path.display());
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(document.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })?;
        }
    }
    Ok(())
}

pub fn verify_tables(args: &VerifyArgs) -> Result<(Common, Outcome), CliError> {
    let file = FileConfig::load(args.common.config.as_deref())?;
    let common = config::resolve_common(&args.common, &file, Format::Json);
    let outcome = verify_table(&QpaTable::REFERENCE, &common);
    Ok((common, outcome))
}

/// Verifies `table` against the circuit; exit code 1 on any failed check.
pub fn verify_table(table: &QpaTable, common: &Common) -> Outcome {
    let report = verify(table);
    let document = match common.format {
        Format::Json => output::verify_json(&report, common.seed),
        Format::Csv => output::verify_csv(&report, common.seed),
    };
    Outcome {
        document,
        exit_code: if report.passed() { EXIT_OK } else { EXIT_FAILED },
    }
}

pub fn run(args: &RunArgs) -> Result<(Common, Outcome), CliError> {
    let file = FileConfig::load(args.common.config.as_deref())?;
    let common = config::resolve_common(&args.common, &file, Format::Json);
    let (settings, protocol, channel) = config::resolve_run(args, &file, common.seed)?;
    let result = run_protocol(&protocol, &channel)?;
    let document = match common.format {
        Format::Json => output::run_json(&settings, common.seed, &result),
        Format::Csv => output::run_csv(&settings, common.seed, &result),
    };
    Ok((common, Outcome::ok(document)))
}

/// Leakage estimate with chunks evaluated in parallel. The count is an exact
/// integer sum, so the result matches
/// [`qpa_core::protocol::leakage_monte_carlo`] for any worker count.
pub fn parallel_leakage(r: f64, m: u32, trials: u64, seed: u64) -> Result<LeakageEstimate, CliError> {
    validate_leakage_params(r, m, trials)?;
    let known = (0..leakage_chunks(trials))
        .into_par_iter()
        .map(|chunk| leakage_chunk_known(r, m, trials, seed, chunk))
        .sum();
    Ok(LeakageEstimate::from_counts(r, m, trials, known))
}

pub fn leakage(args: &LeakageArgs) -> Result<(Common, Outcome), CliError> {
    let file = FileConfig::load(args.common.config.as_deref())?;
    let common = config::resolve_common(&args.common, &file, Format::Json);
    let settings = config::resolve_leakage(args, &file)?;
    let est = parallel_leakage(settings.r, settings.m, settings.trials, common.seed)?;
    let document = match common.format {
        Format::Json => output::leakage_json(&settings, common.seed, &est),
        Format::Csv => output::leakage_csv(&settings, common.seed, &est),
    };
    Ok((common, Outcome::ok(document)))
}

/// Seed for cell `index` of a sweep, so cells do not share streams.
pub fn cell_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_add((index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Cells in grid order: `r` outer, `m` inner.
pub fn sweep_cells(settings: &SweepSettings, seed: u64) -> Result<Vec<LeakageEstimate>, CliError> {
    let grid: Vec<(f64, u32)> = settings
        .r_list
        .iter()
        .flat_map(|&r| settings.m_list.iter().map(move |&m| (r, m)))
        .collect();
    grid.par_iter()
        .enumerate()
        .map(|(i, &(r, m))| parallel_leakage(r, m, settings.trials, cell_seed(seed, i)))
        .collect()
}

pub fn sweep(args: &SweepArgs) -> Result<(Common, Outcome), CliError> {
    let file = FileConfig::load(args.common.config.as_deref())?;
    let common = config::resolve_common(&args.common, &file, Format::Csv);
    let settings = config::resolve_sweep(args, &file)?;
    let cells = sweep_cells(&settings, common.seed)?;
    let document = match common.format {
        Format::Json => output::sweep_json(&settings, common.seed, &cells),
        Format::Csv => output::sweep_csv(&settings, common.seed, &cells),
    };
    Ok((common, Outcome::ok(document)))
}
