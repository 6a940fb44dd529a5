use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use wfs::cli::{self, BenchOptions, CheckOptions, Family, GeneratorSpec, SolveOptions};
use wfs::{Algorithm, ResultFormat};

#[derive(Parser)]
#[command(
    name = "wfs",
    version,
    about = "Well-founded semantics solver for normal logic programs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a program file and print its true/false/unknown atoms.
    Solve {
        file: PathBuf,
        #[arg(long, default_value = "topdown", value_parser = parse_algorithm)]
        algorithm: Algorithm,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: ResultFormat,
        /// Solve non-LP1 programs bottom-up instead of failing.
        #[arg(long)]
        fallback: bool,
        /// Write solver events as JSON lines to this file.
        #[arg(long)]
        trace_json: Option<PathBuf>,
    },
    /// Cross-check all solvers against the naive oracle on random programs.
    Check {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 30)]
        max_atoms: usize,
        #[arg(long, default_value_t = 120)]
        max_rules: usize,
        #[arg(long)]
        p_neg: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time solvers on a generator family and print CSV.
    Bench {
        #[arg(long, default_value = "chain", value_parser = parse_family)]
        family: Family,
        #[arg(long, default_value = "1e3,1e4", value_parser = parse_sizes)]
        sizes: Sizes,
        #[arg(long, default_value = "vg,alg2,topdown", value_delimiter = ',', value_parser = parse_algorithm)]
        algorithms: Vec<Algorithm>,
        #[arg(long, default_value_t = 1)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a generated program.
    Gen {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0.2)]
        p_neg: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: wfs::Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: wfs::Error| e.to_string())
}

#[derive(Clone)]
struct Sizes(Vec<usize>);

fn parse_sizes(s: &str) -> Result<Sizes, String> {
    cli::parse_sizes(s).map(Sizes).map_err(|e| e.to_string())
}

fn parse_format(s: &str) -> Result<ResultFormat, String> {
    match s {
        "text" => Ok(ResultFormat::Text),
        "json" => Ok(ResultFormat::Json),
        _ => Err(format!("unknown format `{s}` (expected text or json)")),
    }
}

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => cli::EXIT_OK,
                _ => cli::EXIT_USAGE,
            };
            return ExitCode::from(code as u8);
        }
    };
    let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
    let code = match args.command {
        Command::Solve {
            file,
            algorithm,
            format,
            fallback,
            trace_json,
        } => cli::cmd_solve(
            &SolveOptions {
                file,
                algorithm,
                format,
                fallback,
                trace_json,
            },
            &mut out,
            &mut err,
        ),
        Command::Check {
            count,
            max_atoms,
            max_rules,
            p_neg,
            seed,
        } => cli::cmd_check(
            &CheckOptions {
                count,
                max_atoms,
                max_rules,
                p_neg,
                seed,
            },
            &mut out,
            &mut err,
        ),
        Command::Bench {
            family,
            sizes,
            algorithms,
            reps,
            seed,
        } => cli::cmd_bench(
            &BenchOptions {
                family,
                sizes: sizes.0,
                algorithms,
                reps,
                seed,
            },
            &mut out,
            &mut err,
        ),
        Command::Gen {
            family,
            n,
            k,
            m,
            p_neg,
            seed,
        } => cli::cmd_gen(
            &GeneratorSpec {
                family,
                n,
                k,
                m,
                p_neg,
                seed,
            },
            &mut out,
            &mut err,
        ),
    };
    ExitCode::from(code as u8)
}
