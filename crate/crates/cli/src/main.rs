//! `wexc`: classify monomial groups and rerun the dimension-5 verification suite.

mod render;
mod spec_file;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use thiserror::Error;
use wexc::classify::{classify_generators, ClassifyOptions};
use wexc::monogroup::{generate_closure, MonomialGroup};
use wexc::paperlab::{run_suite, SuiteOptions};
use wexc::semiinv::semi_invariants;

use spec_file::{GroupSpec, SpecError};

#[derive(Parser)]
#[command(
    name = "wexc",
    version,
    about = "Weak exceptionality of monomial quotient singularities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the group described by a spec file.
    Classify {
        spec: PathBuf,
        /// Search every degree up to the limit instead of stopping at the first hit.
        #[arg(long)]
        full: bool,
        /// Highest degree to search (at least dimension - 1).
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// List semi-invariant spaces by degree.
    SemiInvariants {
        spec: PathBuf,
        #[command(flatten)]
        degrees: Degrees,
        #[arg(long)]
        json: bool,
    },
    /// Rerun the dimension-5 verification suite.
    PaperSuite {
        /// Largest modulus tried by the brute-force congruence oracle.
        #[arg(long, default_value_t = 100)]
        n_max: u64,
        /// Examine only this many groups of the omega sweep.
        #[arg(long)]
        budget: Option<usize>,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Rescale every generator into SL and print the canonical spec.
    Normalize { spec: PathBuf },
}

#[derive(Args)]
#[group(multiple = false)]
struct Degrees {
    /// A single degree.
    #[arg(long)]
    degree: Option<u32>,
    /// Every degree from 1 to this (default: dimension - 1).
    #[arg(long)]
    max_degree: Option<u32>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Spec(#[from] SpecError),

    #[error("{path} has determinant {det}, not 1; run `wexc normalize` to rescale it into SL")]
    NotSpecialLinear { path: String, det: String },

    #[error(transparent)]
    Precondition(wexc::Error),

    #[error("{0}")]
    Other(wexc::Error),

    #[error("{failed} suite item(s) failed")]
    SuiteFailed { failed: usize },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Spec(_) | CliError::Other(_) => 2,
            CliError::NotSpecialLinear { .. } | CliError::Precondition(_) => 3,
            CliError::SuiteFailed { .. } => 4,
        }
    }

    fn from_core(spec: &GroupSpec, e: wexc::Error) -> Self {
        match e {
            wexc::Error::NotSpecialLinear { index, det } => CliError::NotSpecialLinear {
                path: spec.generator_path(index),
                det,
            },
            wexc::Error::CapExceeded { .. } | wexc::Error::UnsupportedDimension(_) | wexc::Error::NoSolution { .. } => {
                CliError::Precondition(e)
            }
            e => CliError::Other(e),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    let start = Instant::now();
    match command {
        Command::Classify {
            spec,
            full,
            max_degree,
            json,
        } => {
            let spec = GroupSpec::load(&spec)?;
            let options = ClassifyOptions {
                full,
                max_degree,
                require_sl: spec.flags.require_sl,
            };
            let (_, report) = classify_generators(&spec.generators(), spec.flags.cap, &options)
                .map_err(|e| CliError::from_core(&spec, e))?;
            let ms = start.elapsed().as_millis();
            if json {
                println!("{}", render::json_with_timing(&report, ms));
            } else {
                print!("{}", render::classify_text(&report, ms));
            }
        }
        Command::SemiInvariants { spec, degrees, json } => {
            let spec = GroupSpec::load(&spec)?;
            let group = closure(&spec)?;
            let range = match (degrees.degree, degrees.max_degree) {
                (Some(d), _) => d..=d,
                (None, k) => 1..=k.unwrap_or(spec.dimension.saturating_sub(1).max(1) as u32),
            };
            let by_degree: BTreeMap<u32, _> = range.map(|d| (d, semi_invariants(&group, d))).collect();
            let ms = start.elapsed().as_millis();
            if json {
                let value = json!({
                    "dim": group.dim(),
                    "order": group.order(),
                    "semi_invariants_by_degree": by_degree,
                });
                println!("{}", render::json_with_timing(&value, ms));
            } else {
                println!("order {}", group.order());
                print!("{}", render::spaces_text(&by_degree));
            }
        }
        Command::PaperSuite {
            n_max,
            budget,
            jobs,
            json,
        } => {
            let report = run_suite(&SuiteOptions { n_max, budget, jobs });
            let ms = start.elapsed().as_millis();
            if json {
                println!("{}", render::suite_json(&report, ms));
            } else {
                print!("{}", render::suite_text(&report, ms));
            }
            if !report.passed() {
                return Err(CliError::SuiteFailed {
                    failed: report.count(wexc::paperlab::Status::Fail),
                });
            }
        }
        Command::Normalize { spec } => {
            let spec = GroupSpec::load(&spec)?;
            let normalized = spec.normalized().map_err(|e| CliError::from_core(&spec, e))?;
            print!("{}", normalized.to_canonical_toml());
        }
    }
    Ok(())
}

fn closure(spec: &GroupSpec) -> Result<MonomialGroup, CliError> {
    let gens = spec.generators();
    if spec.flags.require_sl {
        if let Some(index) = gens.iter().position(|g| !g.is_special_linear()) {
            let e = wexc::Error::NotSpecialLinear {
                index,
                det: gens[index].determinant().to_string(),
            };
            return Err(CliError::from_core(spec, e));
        }
    }
    generate_closure(&gens, spec.flags.cap).map_err(|e| CliError::from_core(spec, e))
}
