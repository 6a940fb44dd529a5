// Parses a program file and prints its well-founded model with every solver.
//
// ```text
// cargo run --example solve_file -- path/to/program.lp
// ```
//
// Without an argument the bundled two-cycle program is used.

use std::error::Error;

use wfs::{parse, serialize_result, solve, Algorithm, ResultFormat};

const DEFAULT: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/two_cycle.lp");

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let path = std::env::args()
        .nth(1)
        .filter(|a| a.ends_with(".lp"))
        .unwrap_or_else(|| DEFAULT.into());
    let p = parse(&std::fs::read_to_string(&path)?)?;
    println!(
        "{path}: {} rules over {} atoms, size {}",
        p.rules().len(),
        p.n_atoms(),
        p.size()
    );
    let mut results = Vec::new();
    for alg in Algorithm::ALL {
        if alg == Algorithm::TopDown && !p.is_lp1() {
            println!("{}: skipped, program is not LP1", alg.name());
            continue;
        }
        let (r, stats) = solve(&p, alg, false, None)?;
        println!("{} ({} iterations):", alg.name(), stats.iterations);
        print!("{}", serialize_result(&r, &p, ResultFormat::Text));
        results.push(r);
    }
    println!("{}", serialize_result(&results[0], &p, ResultFormat::Json));
    assert!(results.windows(2).all(|w| w[0] == w[1]));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
