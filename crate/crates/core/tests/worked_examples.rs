mod common;

use common::names;
use wfs::cli::{generate, Family, GeneratorSpec, WORKED_EXAMPLE};
use wfs::oracle::{check_unfounded, naive_wfs};
use wfs::solver::{solve_alg3_traced, solve_vg_traced};
use wfs::{
    delta_w_full, least_model, parse, AtomSet, DerivationEngine, FalseSearch, FullDelta,
    HornProgram, ShrinkingProgram, TopDown, TraceEvent,
};

const REORDERED: &str = include_str!("../fixtures/worked_example.lp");

fn merges(p: &wfs::Program, events: &[TraceEvent]) -> Vec<Vec<String>> {
    events
        .iter()
        .filter_map(|e| match e {
            TraceEvent::Merge { members } => Some(names(p, members.iter().copied())),
            _ => None,
        })
        .collect()
}

fn ids(p: &wfs::Program, list: &[&str]) -> AtomSet {
    list.iter().map(|n| p.lookup(n).unwrap()).collect()
}

#[test]
fn worked_example_least_model() {
    let p = parse(WORKED_EXAMPLE).unwrap();
    let lm = least_model(&wfs::reducts::h_reduct(&p));
    assert_eq!(names(&p, lm), ["a", "b", "c"]);
}

#[test]
fn worked_example_listed_order() {
    let p = parse(WORKED_EXAMPLE).unwrap();
    let q = ShrinkingProgram::new(&p);
    let mut events = Vec::new();
    let out = FalseSearch::new().run(&q, Some(&mut events)).unwrap();
    assert_eq!(names(&p, out.v.iter().copied()), ["g", "h", "j", "k"]);
    assert_eq!(
        merges(&p, &events),
        [
            vec!["d", "e", "f"],
            vec!["g", "j"],
            vec!["g", "h", "j", "k"]
        ]
    );
}

#[test]
fn worked_example_alphabetical_in_lists() {
    let p = parse(REORDERED).unwrap();
    let q = ShrinkingProgram::new(&p);
    let mut events = Vec::new();
    let out = FalseSearch::new().run(&q, Some(&mut events)).unwrap();
    assert_eq!(names(&p, out.v.iter().copied()), ["g", "h", "j", "k"]);
    assert_eq!(
        merges(&p, &events),
        [
            vec!["d", "e", "f"],
            vec!["g", "j"],
            vec!["h", "k"],
            vec!["g", "h", "j", "k"]
        ]
    );
    assert!(matches!(events.last(), Some(TraceEvent::Report { .. })));
    let v: AtomSet = out.v.iter().copied().collect();
    assert!(check_unfounded(&p, &v));
    assert!(!check_unfounded(&p, &ids(&p, &["d", "e"])));
}

#[test]
fn worked_example_solved() {
    let p = parse(WORKED_EXAMPLE).unwrap();
    let mut events = Vec::new();
    let (r, _) = solve_alg3_traced(&p, &mut TopDown::new(), Some(&mut events)).unwrap();
    let first_df = events
        .iter()
        .find_map(|e| match e {
            TraceEvent::Iter { df, .. } => Some(names(&p, df.iter().copied())),
            _ => None,
        })
        .unwrap();
    assert_eq!(first_df, ["g", "h", "j", "k"]);
    assert_eq!(
        names(&p, r.false_set().iter().copied()),
        ["d", "e", "f", "g", "h", "i", "j", "k"]
    );
    assert_eq!(names(&p, r.true_set().iter().copied()), ["a", "b", "c"]);
    assert_eq!(r, naive_wfs(&p));
}

#[test]
fn engine_on_negation_atom() {
    // t :- n_b, with n_b standing for `not b`
    let mut q = HornProgram::new(2);
    q.push(wfs::AtomId(0), vec![wfs::AtomId(1)]);
    let mut e = DerivationEngine::new(&q);
    e.assert_facts([wfs::AtomId(1)]);
    assert_eq!(e.derived().count(), 2);
}

#[test]
fn two_cycle_first_call_is_empty() {
    let p = parse("a :- not b. b :- not a.").unwrap();
    let q = ShrinkingProgram::new(&p);
    assert!(wfs::false_subset(&q).unwrap().is_empty());
    let (r, _) = wfs::solve_alg3(&p, &mut TopDown::new()).unwrap();
    assert_eq!(r.unknown_set().len(), 2);
}

#[test]
fn full_delta_examples() {
    let p = parse("a :- a.").unwrap();
    assert_eq!(delta_w_full(&ShrinkingProgram::new(&p)).len(), 1);
    let p = parse("a.").unwrap();
    assert!(delta_w_full(&ShrinkingProgram::new(&p)).is_empty());
    let p = parse("").unwrap();
    assert_eq!(wfs::solve_alg3(&p, &mut FullDelta).unwrap().0.n_atoms(), 0);
}

#[test]
fn guarded_chain_iterations() {
    let p = generate(&GeneratorSpec::new(Family::GuardedChain, 2)).unwrap();
    let (r, stats) = solve_vg_traced(&p, None);
    assert_eq!(stats.iterations, 3);
    assert_eq!(names(&p, r.true_set().iter().copied()), ["c1", "c2"]);
    assert_eq!(names(&p, r.false_set().iter().copied()), ["b1", "b2"]);
    for n in [5, 12, 30] {
        let p = generate(&GeneratorSpec::new(Family::GuardedChain, n)).unwrap();
        assert!(solve_vg_traced(&p, None).1.iterations >= n);
        let mut events = Vec::new();
        solve_alg3_traced(&p, &mut TopDown::new(), Some(&mut events)).unwrap();
        for e in &events {
            if let TraceEvent::Iter { df, .. } = e {
                assert!(df.len() <= 1, "{df:?}");
            }
        }
    }
}

#[test]
fn pos_loop_chain_all_false() {
    let p = generate(&GeneratorSpec::new(Family::PosLoopChain, 3)).unwrap();
    let (r, _) = wfs::solve_alg3(&p, &mut TopDown::new()).unwrap();
    assert_eq!(names(&p, r.false_set().iter().copied()), ["a1", "a2", "a3"]);
}
