// Iterates the Gelfond-Lifschitz based operators `A` and `B` from the empty set and
// shows that `B` never lags behind `A` while both reach the same false set.
//
// ```text
// cargo run --example operators
// ```

use std::error::Error;

use wfs::reducts::{gl, op_a, op_b};
use wfs::{parse, AtomSet};

const PROGRAM: &str = "
    b1 :- b1.
    c1 :- not b1.
    b2 :- b2.
    b2 :- not c1.
    c2 :- not b2.
    d :- not c2, e.
    e :- d.
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = parse(PROGRAM)?;
    let show = |s: &AtomSet| p.sorted_names(s.iter().copied()).join(",");
    let (mut fa, mut fb) = (AtomSet::new(), AtomSet::new());
    for step in 1.. {
        let (na, nb) = (op_a(&p, &fa), op_b(&p, &fb));
        println!(
            "step {step}: A -> {{{}}}  B -> {{{}}}",
            show(&na),
            show(&nb)
        );
        assert!(na.is_subset(&nb) || !fa.is_subset(&fb));
        if na == fa && nb == fb {
            break;
        }
        (fa, fb) = (na, nb);
    }
    assert_eq!(fa, fb);
    let all = p.atom_set();
    let t = gl(&p, &all.difference(&fa).copied().collect());
    println!("true: {{{}}}  false: {{{}}}", show(&t), show(&fa));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
