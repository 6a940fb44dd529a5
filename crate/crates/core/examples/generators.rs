// Prints one small instance of every generator family in program text form.
//
// ```text
// cargo run --example generators
// ```

use std::error::Error;

use wfs::cli::{generate, Family, GeneratorSpec};
use wfs::serialize_program;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for family in Family::ALL {
        let spec = GeneratorSpec {
            k: Some(2),
            m: Some(6),
            seed: 1,
            ..GeneratorSpec::new(family, 3)
        };
        let p = generate(&spec)?;
        assert!(p.is_lp1());
        println!(
            "% {family}: {} rules, {} atoms",
            p.rules().len(),
            p.n_atoms()
        );
        print!("{}", serialize_program(&p));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
