//! Command-line front end: construct codes, run scans, emit CSV and SVG
//! artifacts.

pub mod commands;
pub mod config;
pub mod outputs;
pub mod spec_input;
pub mod svgplot;

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use fracton_codes::error::{CodeError, CssError};

#[derive(Parser, Debug)]
#[command(
    name = "fracton-codes",
    version,
    about = "Classical seed codes, CSS product constructions, and fracton diagnostics"
)]
pub struct Cli {
    /// Output directory (falls back to $FRACTON_CODES_OUT, then ".").
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Construct a classical seed code and write its files.
    GenSeed(commands::gen_seed::GenSeedArgs),
    /// Combine codes into a CSS quantum code.
    Product(commands::product::ProductArgs),
    /// Measure k and k-transpose across a random ensemble.
    RankScan(commands::scans::RankScanArgs),
    /// Minimum syndrome weight of sampled errors per sparsity.
    Confinement(commands::scans::ConfinementArgs),
    /// Scan for two-valent-check regions and their meta-check cycles.
    Isolability(commands::scans::IsolabilityArgs),
    /// Minimum-weight search on a classical or CSS code.
    Distance(commands::scans::DistanceArgs),
    /// Rank-deficiency and confinement panels at configured scale.
    Fig2(commands::figures::Fig2Args),
    /// Tiling-code scaling panels at configured scale.
    Fig3(commands::figures::Fig3Args),
    /// The square-lattice counterexample: bounded syndrome at any size.
    LaplacianSquareDemo(commands::figures::LaplacianSquareArgs),
    /// Classify a product of two seed ensembles.
    Verdict(commands::verdict::VerdictArgs),
}

/// Run with the given argument vector; returns the process exit code.
/// 0 on success, 2 on usage errors, 1 on runtime failures.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let out = cli.out.clone();
    let result = match cli.command {
        Command::GenSeed(args) => commands::gen_seed::run(args, out.as_deref()),
        Command::Product(args) => commands::product::run(args, out.as_deref()),
        Command::RankScan(args) => commands::scans::run_rank_scan(args, out.as_deref()),
        Command::Confinement(args) => commands::scans::run_confinement(args, out.as_deref()),
        Command::Isolability(args) => commands::scans::run_isolability(args, out.as_deref()),
        Command::Distance(args) => commands::scans::run_distance(args, out.as_deref()),
        Command::Fig2(args) => commands::figures::run_fig2(args, out.as_deref()),
        Command::Fig3(args) => commands::figures::run_fig3(args, out.as_deref()),
        Command::LaplacianSquareDemo(args) => {
            commands::figures::run_laplacian_square(args, out.as_deref())
        }
        Command::Verdict(args) => commands::verdict::run(args, out.as_deref()),
    };
    match result {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err:#}");
            classify_exit(&err)
        }
    }
}

/// Bad parameters and unknown names are usage errors; everything else is a
/// runtime failure.
fn classify_exit(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        if let Some(code_err) = cause.downcast_ref::<CodeError>() {
            match code_err {
                CodeError::MissingParameter(_)
                | CodeError::BadParameter { .. }
                | CodeError::UnknownConstruction(_)
                | CodeError::BlockTooShort(_)
                | CodeError::GenerationTooSmall { .. }
                | CodeError::DepletionPeriodTooSmall(_) => return 2,
                _ => return 1,
            }
        }
        if let Some(css_err) = cause.downcast_ref::<CssError>() {
            match css_err {
                CssError::UnknownModel(_) => return 2,
                _ => return 1,
            }
        }
        if cause.to_string().contains("is neither an existing code file") {
            return 2;
        }
    }
    1
}
