//! Alternating-fixpoint drivers for the well-founded semantics.
//!
//! * [`solve_vg`]: recomputes `T := GL(At \ F)` and `F := At \ GL(T)` from scratch until
//!   `F` is stable.
//! * [`solve_alg2`]: grows `F` by everything outside the least model of `(P_{F,T})^h`.
//! * [`solve_alg3`]: the incremental driver. One [`DerivationEngine`] over the extended
//!   alphabet produces the new true atoms from the new `not(a)` facts, one
//!   [`ShrinkingProgram`] tracks `P_{F,T}`, and a [`DeltaW`] plug picks new false atoms.
//!   With [`TopDown`] as the plug an LP1 program is solved in `O(|At|² + size)`.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::horn::{least_model, DerivationEngine, HornProgram};
use crate::program::{AtomId, AtomSet, Program, WfsResult};
use crate::reducts::{complement, extended_horn, h_reduct, not_atom, restrict, ShrinkingProgram};
use crate::topdown::FalseSearch;
use crate::trace::{TraceEvent, TraceSink};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Passes of the main loop, the final pass that finds nothing new included.
    pub iterations: usize,
    /// IN-list entries inspected by the top-down plug.
    pub in_list_inspections: u64,
    /// Rules removed from `P_{F,T}` (incremental driver only).
    pub rules_deleted: u64,
    /// Counter initializations and decrements across all least-model computations.
    pub rule_visits: u64,
    pub wall_time: Duration,
}

/// Per-call context handed to a [`DeltaW`] plug.
#[derive(Debug, Default)]
pub struct PlugContext {
    /// IN-list entries inspected during the call.
    pub inspections: u64,
}

/// Chooses new false atoms for the incremental driver.
///
/// Called with the current `P_{F,T}`; `F` is `q.current_f()`. The result must be a
/// subset of the alive atoms outside the least model of the h-view, and must be empty
/// only if there are no such atoms.
pub trait DeltaW {
    fn requires_lp1(&self) -> bool {
        false
    }

    fn delta(
        &mut self,
        q: &ShrinkingProgram<'_>,
        ctx: &mut PlugContext,
        trace: Option<&mut dyn TraceSink>,
    ) -> Result<Vec<AtomId>>;
}

impl<F> DeltaW for F
where
    F: FnMut(&ShrinkingProgram<'_>) -> Vec<AtomId>,
{
    fn delta(
        &mut self,
        q: &ShrinkingProgram<'_>,
        _ctx: &mut PlugContext,
        _trace: Option<&mut dyn TraceSink>,
    ) -> Result<Vec<AtomId>> {
        Ok(self(q))
    }
}

/// The top-down plug: one pf-set without external support per call.
#[derive(Debug, Default)]
pub struct TopDown {
    search: FalseSearch,
}

impl TopDown {
    pub fn new() -> Self {
        Self::default()
    }
}

impl DeltaW for TopDown {
    fn requires_lp1(&self) -> bool {
        true
    }

    fn delta(
        &mut self,
        q: &ShrinkingProgram<'_>,
        ctx: &mut PlugContext,
        trace: Option<&mut dyn TraceSink>,
    ) -> Result<Vec<AtomId>> {
        let out = self.search.run(q, trace)?;
        ctx.inspections += out.inspections;
        Ok(out.v)
    }
}

/// The bottom-up plug: every alive atom outside the least model.
#[derive(Clone, Copy, Debug, Default)]
pub struct FullDelta;

impl DeltaW for FullDelta {
    fn delta(
        &mut self,
        q: &ShrinkingProgram<'_>,
        _ctx: &mut PlugContext,
        _trace: Option<&mut dyn TraceSink>,
    ) -> Result<Vec<AtomId>> {
        Ok(delta_w_full(q))
    }
}

/// Alive atoms of `q` outside the least model of its h-view, ascending.
pub fn delta_w_full(q: &ShrinkingProgram<'_>) -> Vec<AtomId> {
    let lm = least_model(&q.h_view());
    q.alive_atoms().filter(|a| !lm.contains(a)).collect()
}

fn emit(trace: &mut Option<&mut dyn TraceSink>, event: impl FnOnce() -> TraceEvent) {
    if let Some(t) = trace.as_deref_mut() {
        t.event(event());
    }
}

fn flags_to_set(flags: &[bool]) -> AtomSet {
    flags
        .iter()
        .enumerate()
        .filter(|(_, f)| **f)
        .map(|(i, _)| AtomId::from_index(i))
        .collect()
}

/// Derived flags of `q ∪ facts`, restricted to the first `n` atoms.
fn lm_with_facts(
    q: &HornProgram,
    facts: impl Iterator<Item = AtomId>,
    n: usize,
    work: &mut u64,
) -> Vec<bool> {
    let mut engine = DerivationEngine::new(q);
    engine.assert_facts(facts);
    *work += engine.work();
    (0..n)
        .map(|i| engine.is_derived(AtomId::from_index(i)))
        .collect()
}

pub fn solve_vg(p: &Program) -> WfsResult {
    solve_vg_traced(p, None).0
}

pub fn solve_vg_traced(
    p: &Program,
    mut trace: Option<&mut dyn TraceSink>,
) -> (WfsResult, SolveStats) {
    let start = Instant::now();
    let n = p.n_atoms();
    let ext = extended_horn(p);
    let mut stats = SolveStats::default();
    let mut f = vec![false; n];
    let mut t_prev = vec![false; n];
    loop {
        stats.iterations += 1;
        // T := GL(At \ F) = true(LM(P ∪ not(F)))
        let t = lm_with_facts(
            &ext,
            (0..n)
                .filter(|&i| f[i])
                .map(|i| not_atom(n, AtomId::from_index(i))),
            n,
            &mut stats.rule_visits,
        );
        // F := At \ GL(T) = At \ true(LM(P ∪ not(At \ T)))
        let g = lm_with_facts(
            &ext,
            (0..n)
                .filter(|&i| !t[i])
                .map(|i| not_atom(n, AtomId::from_index(i))),
            n,
            &mut stats.rule_visits,
        );
        let f_next: Vec<bool> = g.iter().map(|d| !d).collect();
        debug_assert!((0..n).all(|i| !t_prev[i] || t[i]) && (0..n).all(|i| !f[i] || f_next[i]));
        emit(&mut trace, || TraceEvent::Iter {
            i: stats.iterations,
            dt: (0..n)
                .filter(|&i| t[i] && !t_prev[i])
                .map(AtomId::from_index)
                .collect(),
            df: (0..n)
                .filter(|&i| f_next[i] && !f[i])
                .map(AtomId::from_index)
                .collect(),
        });
        let done = f_next == f;
        f = f_next;
        t_prev = t;
        if done {
            break;
        }
    }
    stats.wall_time = start.elapsed();
    (
        WfsResult::new(n, flags_to_set(&t_prev), flags_to_set(&f)),
        stats,
    )
}

pub fn solve_alg2(p: &Program) -> WfsResult {
    solve_alg2_traced(p, None).0
}

pub fn solve_alg2_traced(
    p: &Program,
    mut trace: Option<&mut dyn TraceSink>,
) -> (WfsResult, SolveStats) {
    let start = Instant::now();
    let n = p.n_atoms();
    let ext = extended_horn(p);
    let mut stats = SolveStats::default();
    let mut f = AtomSet::new();
    let mut t = AtomSet::new();
    loop {
        stats.iterations += 1;
        let t_flags = lm_with_facts(
            &ext,
            f.iter().map(|&a| not_atom(n, a)),
            n,
            &mut stats.rule_visits,
        );
        let t_next = flags_to_set(&t_flags);
        let q = h_reduct(&restrict(p, &f, &t_next));
        let lm = lm_with_facts(&q, std::iter::empty(), n, &mut stats.rule_visits);
        let delta_f: Vec<AtomId> = complement(p, &f)
            .into_iter()
            .filter(|a| !lm[a.index()])
            .collect();
        emit(&mut trace, || TraceEvent::Iter {
            i: stats.iterations,
            dt: t_next.difference(&t).copied().collect(),
            df: delta_f.clone(),
        });
        t = t_next;
        if delta_f.is_empty() {
            break;
        }
        f.extend(delta_f);
    }
    stats.wall_time = start.elapsed();
    (WfsResult::new(n, t, f), stats)
}

pub fn solve_alg3<D: DeltaW + ?Sized>(
    p: &Program,
    plug: &mut D,
) -> Result<(WfsResult, SolveStats)> {
    solve_alg3_traced(p, plug, None)
}

pub fn solve_alg3_traced<D: DeltaW + ?Sized>(
    p: &Program,
    plug: &mut D,
    mut trace: Option<&mut dyn TraceSink>,
) -> Result<(WfsResult, SolveStats)> {
    let start = Instant::now();
    if plug.requires_lp1() {
        if let Some(rule) = p.first_non_lp1_rule() {
            return Err(Error::NotLp1 {
                rule,
                positives: p.rules()[rule].pos_body.len(),
            });
        }
    }
    let n = p.n_atoms();
    let mut stats = SolveStats::default();
    let mut engine = DerivationEngine::new(&extended_horn(p));
    let mut q = ShrinkingProgram::new(p);
    let mut t = AtomSet::new();
    let mut f = AtomSet::new();
    let mut delta_f: Vec<AtomId> = Vec::new();
    loop {
        stats.iterations += 1;
        // ΔT := true(LM(R ∪ not(ΔF))); R := res(R ∪ not(ΔF))
        let mut delta_t: Vec<AtomId> = engine
            .assert_facts(delta_f.iter().map(|&a| not_atom(n, a)))
            .into_iter()
            .filter(|a| a.index() < n)
            .collect();
        delta_t.sort_unstable();
        t.extend(delta_t.iter().copied());
        // Q := Q_{ΔF,ΔT}
        q.apply(&delta_f, &delta_t);
        let mut ctx = PlugContext::default();
        let mut next = plug.delta(
            &q,
            &mut ctx,
            trace.as_mut().map(|t| &mut **t as &mut dyn TraceSink),
        )?;
        stats.in_list_inspections += ctx.inspections;
        next.sort_unstable();
        next.dedup();
        next.retain(|a| !f.contains(a));
        debug_assert!(
            next.iter().all(|a| !t.contains(a)),
            "plug returned a true atom"
        );
        f.extend(next.iter().copied());
        emit(&mut trace, || TraceEvent::Iter {
            i: stats.iterations,
            dt: delta_t,
            df: next.clone(),
        });
        if next.is_empty() {
            break;
        }
        delta_f = next;
    }
    stats.rules_deleted = q.rules_deleted();
    stats.rule_visits = engine.work();
    stats.wall_time = start.elapsed();
    Ok((WfsResult::new(n, t, f), stats))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    /// Recompute both sets every pass.
    Vg,
    /// Grow `F` by the whole complement of the least model every pass.
    Alg2,
    /// Incremental driver with the top-down plug (LP1 only).
    TopDown,
    /// Incremental driver with the bottom-up plug.
    Full,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Vg,
        Algorithm::Alg2,
        Algorithm::TopDown,
        Algorithm::Full,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Vg => "vg",
            Algorithm::Alg2 => "alg2",
            Algorithm::TopDown => "topdown",
            Algorithm::Full => "full",
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "unknown algorithm `{s}` (expected vg, alg2, topdown or full)"
                ))
            })
    }
}

/// Runs `algorithm` on `p`. With `fallback`, a non-LP1 program given to
/// [`Algorithm::TopDown`] is solved with the bottom-up plug instead of failing.
pub fn solve(
    p: &Program,
    algorithm: Algorithm,
    fallback: bool,
    trace: Option<&mut dyn TraceSink>,
) -> Result<(WfsResult, SolveStats)> {
    match algorithm {
        Algorithm::Vg => Ok(solve_vg_traced(p, trace)),
        Algorithm::Alg2 => Ok(solve_alg2_traced(p, trace)),
        Algorithm::TopDown if fallback && !p.is_lp1() => {
            solve_alg3_traced(p, &mut FullDelta, trace)
        }
        Algorithm::TopDown => solve_alg3_traced(p, &mut TopDown::new(), trace),
        Algorithm::Full => solve_alg3_traced(p, &mut FullDelta, trace),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse;

    fn check(src: &str, t: &[&str], f: &[&str]) {
        let p = parse(src).unwrap();
        let ids = |names: &[&str]| {
            names
                .iter()
                .map(|n| p.lookup(n).unwrap())
                .collect::<AtomSet>()
        };
        let want = WfsResult::new(p.n_atoms(), ids(t), ids(f));
        assert_eq!(solve_vg(&p), want, "vg on {src}");
        assert_eq!(solve_alg2(&p), want, "alg2 on {src}");
        assert_eq!(
            solve_alg3(&p, &mut FullDelta).unwrap().0,
            want,
            "alg3/full on {src}"
        );
        if p.is_lp1() {
            assert_eq!(
                solve_alg3(&p, &mut TopDown::new()).unwrap().0,
                want,
                "alg3/topdown on {src}"
            );
        }
    }

    #[test]
    fn small_programs() {
        check("a :- not b.", &["a"], &["b"]);
        check("a :- not a.", &[], &[]);
        check("a :- a.", &[], &["a"]);
        check("b1 :- b1. c1 :- not b1.", &["c1"], &["b1"]);
        check("", &[], &[]);
        check("a :- not b. b :- not a.", &[], &[]);
        check("a :- b, c. b. c :- not d.", &["a", "b", "c"], &["d"]);
    }

    #[test]
    fn vg_iteration_counts() {
        let p = parse("a :- not b.").unwrap();
        let (_, stats) = solve_vg_traced(&p, None);
        assert_eq!(stats.iterations, 2);
    }

    #[test]
    fn two_cycle_stops_after_one_pass() {
        let p = parse("a :- not b. b :- not a.").unwrap();
        let mut calls = Vec::new();
        let mut plug = |q: &ShrinkingProgram<'_>| {
            let v = crate::topdown::false_subset(q).unwrap();
            calls.push(v.clone());
            v
        };
        let (r, stats) = solve_alg3(&p, &mut plug).unwrap();
        assert_eq!(r.unknown_set().len(), 2);
        assert_eq!(stats.iterations, 1);
        assert_eq!(calls, [Vec::<AtomId>::new()]);
    }

    #[test]
    fn topdown_rejects_non_lp1_unless_fallback() {
        let p = parse("a :- b, c. b. c.").unwrap();
        assert!(matches!(
            solve(&p, Algorithm::TopDown, false, None),
            Err(Error::NotLp1 { rule: 0, .. })
        ));
        let (r, _) = solve(&p, Algorithm::TopDown, true, None).unwrap();
        assert_eq!(r.true_set().len(), 3);
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("nope".parse::<Algorithm>().is_err());
    }
}
