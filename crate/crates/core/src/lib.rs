//! Well-founded semantics for propositional normal logic programs.
//!
//! Three solvers share one result type:
//!
//! * [`solver::solve_vg`] recomputes the alternating fixpoint from scratch each pass.
//! * [`solver::solve_alg2`] iterates the progressive operator `B`.
//! * [`solver::solve_alg3`] keeps an incremental least-model engine and a shrinking
//!   program, and asks a pluggable [`solver::DeltaW`] for new false atoms. With the
//!   [`solver::TopDown`] plug, programs whose rules have at most one positive body atom
//!   (LP1) are solved in `O(|At|² + size)`.
//!
//! ```
//! use wfs::{parse, solve_alg3, TopDown, Truth};
//!
//! let p = parse("a :- not b. c :- c.").unwrap();
//! let (r, _) = solve_alg3(&p, &mut TopDown::new()).unwrap();
//! assert_eq!(r.value(p.lookup("a").unwrap()), Truth::True);
//! assert_eq!(r.value(p.lookup("c").unwrap()), Truth::False);
//! ```

pub mod cli;
pub mod error;
pub mod horn;
pub mod oracle;
pub mod program;
pub mod reducts;
pub mod solver;
pub mod textio;
pub mod topdown;
pub mod trace;

pub use error::{Error, Result};
pub use horn::{least_model, DerivationEngine, HornProgram, HornRule};
pub use program::{AtomId, AtomSet, Program, ProgramBuilder, Rule, Truth, WfsResult};
pub use reducts::ShrinkingProgram;
pub use solver::{
    delta_w_full, solve, solve_alg2, solve_alg3, solve_vg, Algorithm, DeltaW, FullDelta,
    SolveStats, TopDown,
};
pub use textio::{parse, serialize_program, serialize_result, ParseError, ResultFormat};
pub use topdown::{false_subset, FalseSearch};
pub use trace::{JsonLinesSink, TraceEvent, TraceSink};
