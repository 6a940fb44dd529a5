// Compares work counters of the from-scratch solver and the incremental top-down solver
// on the guarded chain with ballast, whose from-scratch cost grows cubically.
//
// ```text
// cargo run --release --example scaling
// ```

use std::error::Error;

use wfs::cli::{generate, Family, GeneratorSpec};
use wfs::{solve, Algorithm};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!(
        "{:>5} {:>8} {:>12} {:>12} {:>10}",
        "n", "size", "vg visits", "td inspect", "td iters"
    );
    let mut prev: Option<(u64, u64)> = None;
    for n in [10, 20, 40, 80] {
        let p = generate(&GeneratorSpec::new(Family::Ballast, n))?;
        let (rv, vg) = solve(&p, Algorithm::Vg, false, None)?;
        let (rt, td) = solve(&p, Algorithm::TopDown, false, None)?;
        assert_eq!(rv, rt);
        println!(
            "{n:>5} {:>8} {:>12} {:>12} {:>10}",
            p.size(),
            vg.rule_visits,
            td.in_list_inspections,
            td.iterations
        );
        if let Some((pv, pt)) = prev {
            // Doubling n multiplies the from-scratch work by about 8, top-down by about 4.
            assert!(vg.rule_visits as f64 / pv as f64 > 6.0);
            assert!((td.in_list_inspections as f64 / pt as f64) < 5.0);
        }
        prev = Some((vg.rule_visits, td.in_list_inspections));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
