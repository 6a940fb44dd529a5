//! Slow reference implementations used as ground truth in tests.
//!
//! Nothing here calls into `horn` or `reducts`: least models are repeated full passes,
//! and the Gelfond-Lifschitz operator works on the reduct directly.

use crate::horn::HornProgram;
use crate::program::{AtomId, AtomSet, Program, WfsResult};

/// Least model by repeated full passes over the rules until nothing changes.
pub fn naive_lm(q: &HornProgram) -> AtomSet {
    let mut m = AtomSet::new();
    loop {
        let before = m.len();
        for r in &q.rules {
            if r.body.iter().all(|b| m.contains(b)) {
                m.insert(r.head);
            }
        }
        if m.len() == before {
            return m;
        }
    }
}

/// Least model of the positive parts of the rules of `p` not blocked by `m`.
pub fn naive_gl(p: &Program, m: &AtomSet) -> AtomSet {
    let mut out = AtomSet::new();
    loop {
        let before = out.len();
        for r in p.rules() {
            if r.neg_body.iter().any(|a| m.contains(a)) {
                continue;
            }
            if r.pos_body.iter().all(|b| out.contains(b)) {
                out.insert(r.head);
            }
        }
        if out.len() == before {
            return out;
        }
    }
}

/// `T = lfp(GL²)` from the empty set, `F = At \ GL(T)`.
pub fn naive_wfs(p: &Program) -> WfsResult {
    let mut t = AtomSet::new();
    loop {
        let next = naive_gl(p, &naive_gl(p, &t));
        if next == t {
            break;
        }
        t = next;
    }
    let upper = naive_gl(p, &t);
    let f = p.atoms().filter(|a| !upper.contains(a)).collect();
    WfsResult::new(p.n_atoms(), t, f)
}

/// True iff every rule of the h-view of `q` with head in `v` has a positive body atom in
/// `v`. Only meaningful for LP1 programs, where that atom is the unique one.
pub fn check_unfounded(q: &Program, v: &AtomSet) -> bool {
    q.rules()
        .iter()
        .filter(|r| v.contains(&r.head))
        .all(|r| r.pos_body.iter().any(|a| v.contains(a)))
}

/// `v ∩ lm(q^h) = ∅`, checked with [`naive_lm`] on the h-view.
pub fn outside_least_model(q: &Program, v: &[AtomId]) -> bool {
    let lm = naive_lm(&h_view(q));
    v.iter().all(|a| !lm.contains(a))
}

/// Negative literals dropped, alphabet `At(q)`.
pub fn h_view(q: &Program) -> HornProgram {
    HornProgram {
        rules: q
            .rules()
            .iter()
            .map(|r| crate::horn::HornRule {
                head: r.head,
                body: r.pos_body.clone(),
            })
            .collect(),
        alphabet_size: q.n_atoms(),
    }
}
