mod output;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use lpfix::check::{run_checks, CheckCaps, CheckReport};
use lpfix::generate::{generate, GenConfig};
use lpfix::semantics::{compute, Semantics, DEFAULT_ENUMERATION_CAP, MAX_ENUMERATION_CAP};
use lpfix::{parse_program, Error, GroundProgram};

#[derive(Parser)]
#[command(
    name = "lpfix",
    version,
    about = "Fixpoint semantics for normal logic programs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one semantics of a program.
    Compute {
        /// Program file, or `-` for standard input.
        file: PathBuf,
        #[arg(long, short, default_value = "wf")]
        semantics: Semantics,
        /// Print the fixpoint iteration stages.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compute every semantics and relate the single models.
    Compare {
        file: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the characterization checks on a file or on generated programs.
    Check {
        /// Program file; generated programs are checked when absent.
        file: Option<PathBuf>,
        /// Number of consecutive seeds to check.
        #[arg(long, default_value_t = 1)]
        runs: u64,
        /// Worker threads for multi-seed runs.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
        #[command(flatten)]
        gen: GenArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Print a random propositional program.
    Gen {
        #[command(flatten)]
        gen: GenArgs,
    },
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest base for model enumeration.
    #[arg(
        long,
        default_value_t = DEFAULT_ENUMERATION_CAP as u64,
        value_parser = clap::value_parser!(u64).range(1..=MAX_ENUMERATION_CAP as u64)
    )]
    cap: u64,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    atoms: usize,
    #[arg(long, default_value_t = 6)]
    clauses: usize,
    #[arg(long, default_value_t = 3)]
    max_body: usize,
    /// Probability that a body literal is negated.
    #[arg(long, default_value_t = 0.5)]
    neg_prob: f64,
    /// Only generate locally stratified programs.
    #[arg(long)]
    stratified: bool,
}

impl GenArgs {
    fn config(&self, seed: u64) -> GenConfig {
        GenConfig {
            seed,
            atoms: self.atoms,
            clauses: self.clauses,
            max_body: self.max_body,
            neg_prob: self.neg_prob,
            stratified: self.stratified,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A failed run: what to print and the exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. } | Error::Config(_) | Error::Json(_) | Error::OutOfBase(_) => 2,
            Error::CapExceeded { .. } => 3,
            Error::NotDefinite(_) => 4,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(what: &str, e: io::Error) -> Failure {
    Failure {
        code: 2,
        message: format!("{what}: {e}"),
    }
}

fn load(path: &PathBuf) -> Result<GroundProgram, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| io_failure("reading standard input", e))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| io_failure(&path.display().to_string(), e))?
    };
    Ok(parse_program(&text)?.ground())
}

fn generated(cfg: &GenConfig) -> Result<GroundProgram, Error> {
    Ok(parse_program(&generate(cfg)?)?.ground())
}

/// Output text and whether the run counts as a success.
fn run(cli: Cli) -> Result<(String, bool), Failure> {
    match cli.command {
        Command::Compute {
            file,
            semantics,
            trace,
            common,
        } => {
            let g = load(&file)?;
            let r = compute(&g, semantics, common.cap as usize)?;
            Ok((output::compute(&g, &r, trace, common.format), true))
        }
        Command::Compare { file, common } => {
            let g = load(&file)?;
            Ok((
                output::compare(&g, common.cap as usize, common.format),
                true,
            ))
        }
        Command::Check {
            file,
            runs,
            jobs,
            gen,
            common,
        } => {
            let caps = CheckCaps {
                enumeration: common.cap as usize,
                ..CheckCaps::default()
            };
            let reports = match file {
                Some(path) => vec![run_checks(&load(&path)?, &caps)],
                None => {
                    gen.config(gen.seed).validate()?;
                    let seeds: Vec<u64> = (0..runs).map(|k| gen.seed.wrapping_add(k)).collect();
                    let pool = rayon::ThreadPoolBuilder::new()
                        .num_threads(jobs as usize)
                        .build()
                        .map_err(|e| Failure {
                            code: 1,
                            message: format!("starting worker threads: {e}"),
                        })?;
                    pool.install(|| {
                        seeds
                            .par_iter()
                            .map(|&seed| {
                                let g = generated(&gen.config(seed))?;
                                Ok(CheckReport {
                                    seed: Some(seed),
                                    ..run_checks(&g, &caps)
                                })
                            })
                            .collect::<Result<Vec<_>, Error>>()
                    })?
                }
            };
            let ok = reports.iter().all(CheckReport::passed);
            Ok((output::check(&reports, common.format), ok))
        }
        Command::Gen { gen } => Ok((generate(&gen.config(gen.seed))?, true)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, ok)) => {
            let mut out = io::stdout().lock();
            if out
                .write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
