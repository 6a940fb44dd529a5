// Plugs a hand-written false-atom chooser into the incremental solver. The chooser
// returns only the smallest unsupported atom per call, which is enough for the solver
// to reach the same model, just with more iterations.
//
// ```text
// cargo run --example custom_delta
// ```

use std::error::Error;

use wfs::{delta_w_full, parse, solve_alg3, FullDelta, ShrinkingProgram, TopDown};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = parse("a :- b. b :- a. c :- not a. d :- c, e. e :- not c. f :- f.")?;
    let mut calls = 0;
    let mut one_at_a_time = |q: &ShrinkingProgram<'_>| {
        calls += 1;
        delta_w_full(q).into_iter().take(1).collect::<Vec<_>>()
    };
    let (slow, slow_stats) = solve_alg3(&p, &mut one_at_a_time)?;
    let (full, full_stats) = solve_alg3(&p, &mut FullDelta)?;
    println!(
        "one atom per call: {} iterations, {calls} plug calls",
        slow_stats.iterations
    );
    println!("whole complement: {} iterations", full_stats.iterations);
    assert_eq!(slow, full);
    // The program has a rule with two positive body atoms, so the top-down plug refuses it.
    assert!(solve_alg3(&p, &mut TopDown::new()).is_err());
    println!(
        "false: {:?}",
        p.sorted_names(full.false_set().iter().copied())
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
