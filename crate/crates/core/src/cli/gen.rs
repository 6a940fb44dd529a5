//! Deterministic LP1 program generators.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::program::{AtomId, Program, ProgramBuilder, Rule};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `a1.` and `a{i+1} :- a{i}`: every atom true.
    Chain,
    /// `a{i} :- a{i+1}` and `a{n} :- a1`: every atom false.
    PosLoopChain,
    /// `b{i} :- b{i}`, `b{i} :- not c{i-1}`, `c{i} :- not b{i}`: `n` alternations.
    GuardedChain,
    /// Guarded chain plus facts `q1..qk` and `p{i} :- q{j}` for all `i ≤ n`, `j ≤ k`.
    Ballast,
    /// Random rules over `n` atoms.
    RandomLp1,
    /// The 17-rule worked example.
    WorkedExample,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Chain,
        Family::PosLoopChain,
        Family::GuardedChain,
        Family::Ballast,
        Family::RandomLp1,
        Family::WorkedExample,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Chain => "chain",
            Family::PosLoopChain => "pos_loop_chain",
            Family::GuardedChain => "guarded_chain",
            Family::Ballast => "ballast",
            Family::RandomLp1 => "random_lp1",
            Family::WorkedExample => "worked_example",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "guarded_chain+ballast" => return Ok(Family::Ballast),
            "paper_example" => return Ok(Family::WorkedExample),
            _ => {}
        }
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    /// Ballast width; defaults to `n`.
    pub k: Option<usize>,
    /// Rule count for `random_lp1`; defaults to `4n`.
    pub m: Option<usize>,
    /// Probability of each negative literal for `random_lp1`.
    pub p_neg: f64,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize) -> Self {
        GeneratorSpec {
            family,
            n,
            k: None,
            m: None,
            p_neg: 0.2,
            seed: 0,
        }
    }
}

/// The worked example in its listed rule order.
pub const WORKED_EXAMPLE: &str = "\
a.
b :- a.
a :- c.
c :- a.
a :- e.
d :- e.
f :- d.
e :- f.
d :- f.
e :- g.
g :- j.
j :- g.
i :- j.
j :- h.
k :- j.
k :- h.
h :- k.
";

pub fn generate(spec: &GeneratorSpec) -> Result<Program> {
    let n = spec.n;
    let need_n = |min: usize| {
        if n < min {
            Err(Error::InvalidParameter(format!(
                "{} needs n ≥ {min}, got {n}",
                spec.family
            )))
        } else {
            Ok(())
        }
    };
    let mut b = ProgramBuilder::new();
    match spec.family {
        Family::Chain => {
            need_n(1)?;
            let atoms: Vec<AtomId> = (1..=n).map(|i| b.intern(&format!("a{i}"))).collect();
            b.push(Rule::fact(atoms[0]));
            for w in atoms.windows(2) {
                b.push(Rule::new(w[1], vec![w[0]], vec![]));
            }
        }
        Family::PosLoopChain => {
            need_n(1)?;
            let atoms: Vec<AtomId> = (1..=n).map(|i| b.intern(&format!("a{i}"))).collect();
            for w in atoms.windows(2) {
                b.push(Rule::new(w[0], vec![w[1]], vec![]));
            }
            b.push(Rule::new(atoms[n - 1], vec![atoms[0]], vec![]));
        }
        Family::GuardedChain => {
            need_n(1)?;
            guarded_chain(&mut b, n);
        }
        Family::Ballast => {
            need_n(1)?;
            let k = spec.k.unwrap_or(n);
            if k == 0 {
                return Err(Error::InvalidParameter("ballast needs k ≥ 1".into()));
            }
            guarded_chain(&mut b, n);
            let qs: Vec<AtomId> = (1..=k).map(|j| b.intern(&format!("q{j}"))).collect();
            for &q in &qs {
                b.push(Rule::fact(q));
            }
            for i in 1..=n {
                let p = b.intern(&format!("p{i}"));
                for &q in &qs {
                    b.push(Rule::new(p, vec![q], vec![]));
                }
            }
        }
        Family::RandomLp1 => {
            need_n(1)?;
            if !(0.0..=1.0).contains(&spec.p_neg) {
                return Err(Error::InvalidParameter(format!(
                    "p_neg must be in [0, 1], got {}",
                    spec.p_neg
                )));
            }
            let m = spec.m.unwrap_or(4 * n);
            return Ok(random_lp1(n, m, spec.p_neg, spec.seed));
        }
        Family::WorkedExample => {
            return Ok(crate::textio::parse(WORKED_EXAMPLE).expect("built-in example parses"));
        }
    }
    Ok(b.build())
}

fn guarded_chain(b: &mut ProgramBuilder, n: usize) {
    let mut prev_c = None;
    for i in 1..=n {
        let bi = b.intern(&format!("b{i}"));
        let ci = b.intern(&format!("c{i}"));
        b.push(Rule::new(bi, vec![bi], vec![]));
        if let Some(c) = prev_c {
            b.push(Rule::new(bi, vec![], vec![c]));
        }
        b.push(Rule::new(ci, vec![], vec![bi]));
        prev_c = Some(ci);
    }
}

/// `m` rules over atoms `x1..xn` (all interned up front). Each rule: uniform head, one
/// uniform positive body atom with probability ½, and every other atom as a negative
/// literal with probability `p_neg`.
pub fn random_lp1(n: usize, m: usize, p_neg: f64, seed: u64) -> Program {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = ProgramBuilder::new();
    let atoms: Vec<AtomId> = (1..=n).map(|i| b.intern(&format!("x{i}"))).collect();
    for _ in 0..m {
        let head = atoms[rng.random_range(0..n)];
        let pos = rng.random_bool(0.5).then(|| atoms[rng.random_range(0..n)]);
        let neg: Vec<AtomId> = atoms
            .iter()
            .copied()
            .filter(|&a| Some(a) != pos && rng.random_bool(p_neg))
            .collect();
        b.push(Rule::new(head, pos.into_iter().collect(), neg));
    }
    b.build()
}
