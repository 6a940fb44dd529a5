//! Reducts, restrictions and the operators built from them.
//!
//! The batch functions here return fresh values and double as references for the
//! incremental [`ShrinkingProgram`]. Complements are always taken with respect to the
//! full atom table of the program.

mod shrinking;

pub use shrinking::{ShrinkingProgram, Tail, NIL_RULE};

use crate::horn::{least_model, HornProgram};
use crate::program::{AtomId, AtomSet, Program, Rule};

/// Complement of `set` with respect to the atoms of `p`.
pub fn complement(p: &Program, set: &AtomSet) -> AtomSet {
    p.atoms().filter(|a| !set.contains(a)).collect()
}

/// `p` with every negative literal erased, as a Horn program over `At(p)`.
pub fn h_reduct(p: &Program) -> HornProgram {
    let mut q = HornProgram::new(p.n_atoms());
    for r in p.rules() {
        q.push(r.head, r.pos_body.clone());
    }
    q
}

/// Drops every rule containing `not a` for some `a` in `m`.
pub fn reduct_m(p: &Program, m: &AtomSet) -> Program {
    let rules = p
        .rules()
        .iter()
        .filter(|r| !r.neg_body.iter().any(|a| m.contains(a)))
        .cloned()
        .collect();
    p.with_rules(rules)
}

/// Index of `not(a)` in the extended alphabet `At(p) ∪ not(At(p))`.
#[inline]
pub fn not_atom(n_atoms: usize, a: AtomId) -> AtomId {
    AtomId::from_index(n_atoms + a.index())
}

/// `p` read as a Horn program over the extended alphabet: `not a` in a body becomes the
/// fresh atom `not_atom(n, a)`.
pub fn extended_horn(p: &Program) -> HornProgram {
    let n = p.n_atoms();
    let mut q = HornProgram::new(2 * n);
    for r in p.rules() {
        let body = r
            .pos_body
            .iter()
            .copied()
            .chain(r.neg_body.iter().map(|&a| not_atom(n, a)))
            .collect();
        q.push(r.head, body);
    }
    q
}

/// Gelfond-Lifschitz operator: the true atoms of the least model of `p ∪ not(At \ m)`
/// over the extended alphabet.
pub fn gl(p: &Program, m: &AtomSet) -> AtomSet {
    let n = p.n_atoms();
    let mut q = extended_horn(p);
    for a in p.atoms().filter(|a| !m.contains(a)) {
        q.push(not_atom(n, a), Vec::new());
    }
    least_model(&q)
        .into_iter()
        .filter(|a| a.index() < n)
        .collect()
}

/// Gelfond-Lifschitz operator computed as the least model of the reduct `(p_m)^h`.
pub fn gl_via_reduct(p: &Program, m: &AtomSet) -> AtomSet {
    least_model(&h_reduct(&reduct_m(p, m)))
}

/// Removes the rules whose head is in `f`, that have a positive body atom in `f`, or that
/// contain `not a` with `a` in `t`.
pub fn restrict(p: &Program, f: &AtomSet, t: &AtomSet) -> Program {
    let rules: Vec<Rule> = p
        .rules()
        .iter()
        .filter(|r| survives(r, f, t))
        .cloned()
        .collect();
    p.with_rules(rules)
}

fn survives(r: &Rule, f: &AtomSet, t: &AtomSet) -> bool {
    !f.contains(&r.head)
        && !r.pos_body.iter().any(|a| f.contains(a))
        && !r.neg_body.iter().any(|a| t.contains(a))
}

/// `A(F) = At \ GL(GL(At \ F))`.
pub fn op_a(p: &Program, f: &AtomSet) -> AtomSet {
    complement(p, &gl(p, &gl(p, &complement(p, f))))
}

/// `B(F) = At \ LM((p_{F,T})^h)` with `T = GL(At \ F)`.
pub fn op_b(p: &Program, f: &AtomSet) -> AtomSet {
    let t = gl(p, &complement(p, f));
    complement(p, &least_model(&h_reduct(&restrict(p, f, &t))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse;

    fn ids(p: &Program, names: &[&str]) -> AtomSet {
        names
            .iter()
            .map(|n| p.lookup(n).unwrap_or_else(|| panic!("no atom {n}")))
            .collect()
    }

    #[test]
    fn h_reduct_erases_negation() {
        let p = parse("a :- b, not c.").unwrap();
        let q = h_reduct(&p);
        assert_eq!(q.rules.len(), 1);
        assert_eq!(q.rules[0].body, [p.lookup("b").unwrap()]);
        let p = parse("a :- not b.").unwrap();
        assert!(h_reduct(&p).rules[0].body.is_empty());
        let p = parse("a. b :- a.").unwrap();
        let q = h_reduct(&p);
        assert_eq!(
            q.rules.iter().map(|r| r.body.len()).collect::<Vec<_>>(),
            [0, 1]
        );
    }

    #[test]
    fn reduct_m_drops_blocked_rules() {
        let p = parse("a :- not b. b :- not a.").unwrap();
        let r = reduct_m(&p, &ids(&p, &["a"]));
        assert_eq!(r.rules(), &p.rules()[..1]);
        assert_eq!(reduct_m(&p, &AtomSet::new()), p);
        let p = parse("a :- b.").unwrap();
        assert_eq!(reduct_m(&p, &ids(&p, &["b"])), p);
    }

    #[test]
    fn gl_examples() {
        let p = parse("a :- not b. b :- not a.").unwrap();
        let m = ids(&p, &["a"]);
        assert_eq!(gl(&p, &m), m);
        assert_eq!(gl_via_reduct(&p, &m), m);

        let p = parse("a. b :- not a.").unwrap();
        assert_eq!(gl(&p, &AtomSet::new()), ids(&p, &["a", "b"]));

        let p = parse("a :- a.").unwrap();
        assert!(gl(&p, &ids(&p, &["a"])).is_empty());
    }

    #[test]
    fn restrict_conditions() {
        let p = parse("a. b :- not a.").unwrap();
        let r = restrict(&p, &ids(&p, &["b"]), &ids(&p, &["a"]));
        assert_eq!(r.rules(), &p.rules()[..1]);
        assert_eq!(restrict(&p, &AtomSet::new(), &AtomSet::new()), p);
        let p = parse("c :- b, not d.").unwrap();
        assert!(restrict(&p, &ids(&p, &["b"]), &AtomSet::new())
            .rules()
            .is_empty());
    }

    #[test]
    fn operator_examples() {
        let p = parse("a :- a.").unwrap();
        assert_eq!(op_a(&p, &AtomSet::new()), ids(&p, &["a"]));
        assert_eq!(op_b(&p, &AtomSet::new()), ids(&p, &["a"]));

        let p = parse("a.").unwrap();
        assert!(op_a(&p, &AtomSet::new()).is_empty());

        let p = parse("a :- not b.").unwrap();
        let mut f = AtomSet::new();
        loop {
            let next = op_a(&p, &f);
            if next == f {
                break;
            }
            f = next;
        }
        assert_eq!(f, ids(&p, &["b"]));
        assert_eq!(op_b(&p, &f), f);
    }

    #[test]
    fn extended_alphabet_layout() {
        let p = parse("a :- b, not c.").unwrap();
        let q = extended_horn(&p);
        assert_eq!(q.alphabet_size, 6);
        assert_eq!(q.rules[0].body, [AtomId(1), AtomId(3 + 2)]);
    }
}
