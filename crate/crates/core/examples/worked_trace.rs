// Runs the top-down search once on the 17-rule worked example and prints every merge,
// back edge and the final report as JSON lines.
//
// ```text
// cargo run --example worked_trace
// ```

use std::error::Error;

use wfs::reducts::ShrinkingProgram;
use wfs::trace::to_json_line;
use wfs::{parse, FalseSearch, TraceEvent};

const EXAMPLE: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/fixtures/worked_example.lp"
));

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = parse(EXAMPLE)?;
    let q = ShrinkingProgram::new(&p);
    let mut events: Vec<TraceEvent> = Vec::new();
    let out = FalseSearch::new().run(&q, Some(&mut events))?;
    for e in &events {
        println!("{}", to_json_line(&p, e));
    }
    let v = p.sorted_names(out.v.iter().copied());
    println!("false: {v:?} after {} IN-list inspections", out.inspections);
    assert_eq!(v, ["g", "h", "j", "k"]);
    let merges: Vec<Vec<String>> = events
        .iter()
        .filter_map(|e| match e {
            TraceEvent::Merge { members } => Some(p.sorted_names(members.iter().copied())),
            _ => None,
        })
        .collect();
    assert_eq!(
        merges,
        [
            vec!["d", "e", "f"],
            vec!["g", "j"],
            vec!["h", "k"],
            vec!["g", "h", "j", "k"]
        ]
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
