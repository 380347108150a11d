mod commands;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use horo_core::Error;

/// Exact intersection indices on horospherical spaces.
#[derive(Parser)]
#[command(name = "horo", version)]
struct Cli {
    /// Worker threads for subset-sum evaluation; output does not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    parallel: u16,

    /// Single-line JSON instead of pretty-printed.
    #[arg(long, global = true)]
    compact: bool,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Intersection index of a problem file, by every available route.
    Index { input: PathBuf },
    /// Moment polytopes of each support.
    Moment { input: PathBuf },
    /// Gelfand-Cetlin lifts of the Newton polytopes of each support.
    Newton { input: PathBuf },
    /// The problem with every support replaced by its completion.
    Completion { input: PathBuf },
    /// Weyl polynomial, its restriction to a face, and the space dimensions.
    Weyl { input: PathBuf },
    /// Gelfand-Cetlin polytope of a dominant weight.
    Gc {
        #[arg(long)]
        n: usize,
        /// Comma-separated, non-increasing.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        weight: Vec<i64>,
        /// Print only the number of integral patterns.
        #[arg(long)]
        count: bool,
    },
    /// Mixed volume of a body system.
    MixedVolume { input: PathBuf },
    /// Mixed integral of a homogeneous polynomial over a body system.
    MixedIntegral { input: PathBuf },
    /// Hilbert function and polynomial of one support.
    Hilbert {
        input: PathBuf,
        /// Which support of the problem file.
        #[arg(long, default_value_t = 0)]
        support: usize,
        /// Largest k to tabulate; defaults to the degree of the Hilbert polynomial plus one.
        #[arg(long)]
        upto: Option<usize>,
    },
    /// Property battery on bundled and generated instances.
    Verify {
        /// Generated instances per check.
        #[arg(long, default_value_t = 12)]
        cases: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn run(cli: &Cli) -> Result<serde_json::Value, Failure> {
    let workers = usize::from(cli.parallel);
    match &cli.verb {
        Verb::Index { input } => commands::index(&commands::read(input)?, workers),
        Verb::Moment { input } => commands::moment(&commands::read(input)?),
        Verb::Newton { input } => commands::newton(&commands::read(input)?),
        Verb::Completion { input } => commands::completion(&commands::read(input)?),
        Verb::Weyl { input } => commands::weyl(&commands::read(input)?),
        Verb::Gc { n, weight, count } => commands::gc(*n, weight, *count),
        Verb::MixedVolume { input } => commands::mixed_volume(&commands::read(input)?, workers),
        Verb::MixedIntegral { input } => commands::mixed_integral(&commands::read(input)?, workers),
        Verb::Hilbert { input, support, upto } => commands::hilbert(&commands::read(input)?, *support, *upto),
        Verb::Verify { cases, seed } => verify::run(*cases, *seed, workers),
    }
}

/// A failed command: the core error plus the file it came from, if any.
#[derive(Debug)]
pub struct Failure {
    pub error: Error,
    pub path: Option<PathBuf>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { error, path: None }
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self.error {
            Error::Parse(_) => 2,
            Error::Domain(_) | Error::DimensionMismatch { .. } | Error::NonIntegral(_) => 3,
            Error::RouteDisagreement(_) => 4,
            Error::Internal(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self.error {
            Error::Parse(_) => "parse",
            Error::Domain(_) | Error::DimensionMismatch { .. } => "validation",
            Error::NonIntegral(_) => "non_integral",
            Error::RouteDisagreement(_) => "route_disagreement",
            Error::Internal(_) => "internal",
        }
    }
}

fn render(value: &serde_json::Value, compact: bool) -> String {
    if compact {
        value.to_string()
    } else {
        serde_json::to_string_pretty(value).expect("JSON values always serialize")
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(value) => {
            println!("{}", render(&value, cli.compact));
            let failed = value.get("ok").and_then(|ok| ok.as_bool()) == Some(false);
            if failed {
                ExitCode::from(verify::exit_code(&value))
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            let mut diag = serde_json::json!({
                "error": f.kind(),
                "message": f.error.to_string(),
                "exit_code": f.exit_code(),
            });
            if let Some(p) = &f.path {
                diag["file"] = p.display().to_string().into();
            }
            eprintln!("{}", render(&diag, true));
            ExitCode::from(f.exit_code())
        }
    }
}
