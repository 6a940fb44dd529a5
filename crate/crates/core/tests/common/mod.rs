#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use wfs::{AtomId, AtomSet, HornProgram, Program, ProgramBuilder, Rule};

/// `(head, positive body, negative body)` as atom indices.
pub type RawRule = (usize, Vec<usize>, Vec<usize>);

pub fn build(n: usize, rules: &[RawRule]) -> Program {
    let mut b = ProgramBuilder::new();
    let atoms: Vec<AtomId> = (0..n).map(|i| b.intern(&format!("x{i}"))).collect();
    for (h, pos, neg) in rules {
        b.push(Rule::new(
            atoms[*h],
            pos.iter().map(|&i| atoms[i]).collect(),
            neg.iter().map(|&i| atoms[i]).collect(),
        ));
    }
    b.build()
}

fn raw_rules(
    n: usize,
    max_rules: usize,
    max_pos: usize,
    max_neg: usize,
) -> impl Strategy<Value = Vec<RawRule>> {
    prop::collection::vec(
        (
            0..n,
            prop::collection::vec(0..n, 0..=max_pos),
            prop::collection::vec(0..n, 0..=max_neg),
        ),
        0..=max_rules,
    )
}

/// Normal programs with up to `max_atoms` atoms (all interned) and three positive literals.
pub fn arb_program(max_atoms: usize, max_rules: usize) -> impl Strategy<Value = Program> {
    (1..=max_atoms)
        .prop_flat_map(move |n| raw_rules(n, max_rules, 3, 3).prop_map(move |r| build(n, &r)))
}

/// Programs with at most one positive body atom per rule.
pub fn arb_lp1(max_atoms: usize, max_rules: usize) -> impl Strategy<Value = Program> {
    (1..=max_atoms)
        .prop_flat_map(move |n| raw_rules(n, max_rules, 1, 3).prop_map(move |r| build(n, &r)))
}

/// Horn programs with at most one body atom per rule.
pub fn arb_lp1_horn(max_atoms: usize, max_rules: usize) -> impl Strategy<Value = Program> {
    (1..=max_atoms)
        .prop_flat_map(move |n| raw_rules(n, max_rules, 1, 0).prop_map(move |r| build(n, &r)))
}

pub fn arb_horn(max_atoms: usize, max_rules: usize) -> impl Strategy<Value = HornProgram> {
    (1..=max_atoms).prop_flat_map(move |n| {
        prop::collection::vec((0..n, prop::collection::vec(0..n, 0..=3)), 0..=max_rules).prop_map(
            move |rules| {
                let mut q = HornProgram::new(n);
                for (h, body) in rules {
                    q.push(
                        AtomId::from_index(h),
                        body.into_iter().map(AtomId::from_index).collect(),
                    );
                }
                q
            },
        )
    })
}

pub fn subset_of(atoms: &AtomSet, mask: &[bool]) -> AtomSet {
    atoms
        .iter()
        .zip(mask.iter().cycle())
        .filter(|(_, m)| **m)
        .map(|(a, _)| *a)
        .collect()
}

/// Random normal program for seeded loops.
pub fn random_program<R: Rng>(
    rng: &mut R,
    max_atoms: usize,
    max_rules: usize,
    max_pos: usize,
) -> Program {
    let n = rng.random_range(1..=max_atoms);
    let m = rng.random_range(0..=max_rules);
    let rules: Vec<RawRule> = (0..m)
        .map(|_| {
            let head = rng.random_range(0..n);
            let n_pos = rng.random_range(0..=max_pos);
            let n_neg = rng.random_range(0..=2);
            let pos = (0..n_pos).map(|_| rng.random_range(0..n)).collect();
            let neg = (0..n_neg).map(|_| rng.random_range(0..n)).collect();
            (head, pos, neg)
        })
        .collect();
    build(n, &rules)
}

pub fn random_subset<R: Rng>(rng: &mut R, atoms: &AtomSet, p: f64) -> AtomSet {
    atoms
        .iter()
        .copied()
        .filter(|_| rng.random_bool(p))
        .collect()
}

pub fn names(p: &Program, atoms: impl IntoIterator<Item = AtomId>) -> Vec<String> {
    p.sorted_names(atoms)
}
