//! Command implementations behind the `wfs` binary.
//!
//! Every command writes to caller-supplied streams and returns a process exit code, so
//! the binary stays a thin argument parser.

pub mod gen;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use gen::{generate, random_lp1, Family, GeneratorSpec, WORKED_EXAMPLE};

use crate::error::Error;
use crate::oracle::naive_wfs;
use crate::program::{Program, WfsResult};
use crate::solver::{solve, Algorithm};
use crate::textio::{parse, serialize_program, serialize_result, ResultFormat};
use crate::trace::{JsonLinesSink, TraceSink};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_NOT_LP1: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
/// Bad command-line usage or parameters.
pub const EXIT_USAGE: i32 = 64;

pub const CSV_HEADER: &str =
    "family,n,algorithm,atoms,size,iterations,wall_time_ns,in_list_inspections";

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub file: PathBuf,
    pub algorithm: Algorithm,
    pub format: ResultFormat,
    pub fallback: bool,
    pub trace_json: Option<PathBuf>,
}

pub fn cmd_solve(opts: &SolveOptions, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match std::fs::read_to_string(&opts.file) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", opts.file.display());
            return EXIT_PARSE;
        }
    };
    let p = match parse(&text) {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", opts.file.display());
            return EXIT_PARSE;
        }
    };
    let mut sink = match &opts.trace_json {
        Some(path) => match File::create(path) {
            Ok(f) => Some(JsonLinesSink::new(&p, BufWriter::new(f))),
            Err(e) => {
                let _ = writeln!(err, "error: cannot create {}: {e}", path.display());
                return EXIT_USAGE;
            }
        },
        None => None,
    };
    let result = solve(
        &p,
        opts.algorithm,
        opts.fallback,
        sink.as_mut().map(|s| s as &mut dyn TraceSink),
    );
    if let Some(s) = sink {
        if let Err(e) = s.finish() {
            let _ = writeln!(err, "error: writing trace: {e}");
        }
    }
    match result {
        Ok((r, _)) => {
            let _ = writeln!(
                out,
                "{}",
                serialize_result(&r, &p, opts.format).trim_end_matches('\n')
            );
            EXIT_OK
        }
        Err(e @ Error::NotLp1 { .. }) => {
            let _ = writeln!(err, "error: {e} (use --fallback or another algorithm)");
            EXIT_NOT_LP1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub count: usize,
    pub max_atoms: usize,
    pub max_rules: usize,
    /// Fixed negation probability; alternates between 0.2 and 0.5 when absent.
    pub p_neg: Option<f64>,
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            count: 1000,
            max_atoms: 30,
            max_rules: 120,
            p_neg: None,
            seed: 0,
        }
    }
}

/// The `i`-th random program of a check run.
pub fn check_program(opts: &CheckOptions, i: usize) -> Program {
    let mut rng =
        ChaCha8Rng::seed_from_u64(opts.seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let n = rng.random_range(1..=opts.max_atoms.max(1));
    let m = rng.random_range(0..=opts.max_rules);
    let p_neg = opts
        .p_neg
        .unwrap_or(if i.is_multiple_of(2) { 0.2 } else { 0.5 });
    random_lp1(n, m, p_neg, rng.random())
}

/// Name and result of the first solver disagreeing with the oracle.
pub fn check_one(p: &Program) -> Option<(&'static str, WfsResult, WfsResult)> {
    let want = naive_wfs(p);
    for alg in Algorithm::ALL {
        let got = solve(p, alg, false, None)
            .expect("generated programs are LP1")
            .0;
        if got != want {
            return Some((alg.name(), got, want));
        }
    }
    None
}

pub fn cmd_check(opts: &CheckOptions, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if opts.p_neg.is_some_and(|p| !(0.0..=1.0).contains(&p)) {
        let _ = writeln!(err, "error: --p-neg must be in [0, 1]");
        return EXIT_USAGE;
    }
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(opts.count.max(1));
    let first_bad = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    (w..opts.count).step_by(workers).find_map(|i| {
                        let p = check_program(opts, i);
                        check_one(&p).map(|bad| (i, p, bad))
                    })
                })
            })
            .collect();
        handles
            .into_iter()
            .filter_map(|h| h.join().expect("check worker panicked"))
            .min_by_key(|(i, ..)| *i)
    });
    match first_bad {
        None => {
            let _ = writeln!(
                out,
                "ok: {} programs, all algorithms agree with the oracle",
                opts.count
            );
            EXIT_OK
        }
        Some((i, p, (alg, got, want))) => {
            let _ = writeln!(
                err,
                "mismatch on program {i}: {alg} disagrees with the oracle"
            );
            let _ = writeln!(err, "program:\n{}", serialize_program(&p));
            let _ = writeln!(
                err,
                "{alg}:\n{}",
                serialize_result(&got, &p, ResultFormat::Text)
            );
            let _ = writeln!(
                err,
                "oracle:\n{}",
                serialize_result(&want, &p, ResultFormat::Text)
            );
            EXIT_MISMATCH
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchOptions {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub algorithms: Vec<Algorithm>,
    pub reps: usize,
    pub seed: u64,
}

/// Parses a comma-separated size list; entries may use exponent notation (`1e5`).
pub fn parse_sizes(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            let v: f64 = t
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad size `{t}`")))?;
            if v < 1.0 || v.fract() != 0.0 || v > 1e12 {
                return Err(Error::InvalidParameter(format!(
                    "size must be a positive integer, got `{t}`"
                )));
            }
            Ok(v as usize)
        })
        .collect()
}

pub fn cmd_bench(opts: &BenchOptions, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let _ = writeln!(out, "{CSV_HEADER}");
    for &n in &opts.sizes {
        let spec = GeneratorSpec {
            seed: opts.seed,
            ..GeneratorSpec::new(opts.family, n)
        };
        let p = match generate(&spec) {
            Ok(p) => p,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
        };
        for &alg in &opts.algorithms {
            for _ in 0..opts.reps {
                let stats = match solve(&p, alg, false, None) {
                    Ok((_, s)) => s,
                    Err(e) => {
                        let _ = writeln!(err, "error: {e}");
                        return EXIT_NOT_LP1;
                    }
                };
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    opts.family,
                    n,
                    alg.name(),
                    p.n_atoms(),
                    p.size(),
                    stats.iterations,
                    stats.wall_time.as_nanos(),
                    stats.in_list_inspections
                );
            }
        }
    }
    EXIT_OK
}

pub fn cmd_gen(spec: &GeneratorSpec, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match generate(spec) {
        Ok(p) => {
            let _ = out.write_all(serialize_program(&p).as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
