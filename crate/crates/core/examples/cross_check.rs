// Solves seeded random LP1 programs with every solver and compares each result with the
// naive reference implementation.
//
// ```text
// cargo run --example cross_check
// ```

use std::error::Error;

use wfs::cli::{check_one, check_program, CheckOptions};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let opts = CheckOptions {
        count: 200,
        max_atoms: 12,
        max_rules: 40,
        p_neg: None,
        seed: 42,
    };
    let mut unknown = 0;
    for i in 0..opts.count {
        let p = check_program(&opts, i);
        if let Some((alg, got, want)) = check_one(&p) {
            return Err(format!("program {i}: {alg} gave {got:?}, oracle {want:?}").into());
        }
        unknown += wfs::oracle::naive_wfs(&p).unknown_set().len();
    }
    println!(
        "{} programs agree; {unknown} unknown atoms in total",
        opts.count
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
