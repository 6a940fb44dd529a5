use crate::horn::HornProgram;
use crate::program::{AtomId, AtomSet, Program};

/// End-of-list marker for IN lists.
pub const NIL_RULE: u32 = u32::MAX;

/// Tail of a rule under the h-reduct view: its positive body atom, or the sentinel `s`
/// for rules whose h-reduct body is empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tail {
    Sentinel,
    Atom(AtomId),
}

/// CSR occurrence index: `items[start[a]..start[a + 1]]` are the rules for atom `a`.
#[derive(Clone, Debug)]
struct Occurrences {
    start: Vec<u32>,
    items: Vec<u32>,
}

impl Occurrences {
    fn build<'a>(n_atoms: usize, per_rule: impl Iterator<Item = &'a [AtomId]> + Clone) -> Self {
        let mut start = vec![0u32; n_atoms + 1];
        for atoms in per_rule.clone() {
            for a in atoms {
                start[a.index() + 1] += 1;
            }
        }
        for i in 0..n_atoms {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut items = vec![0u32; start[n_atoms] as usize];
        for (r, atoms) in per_rule.enumerate() {
            for a in atoms {
                items[fill[a.index()] as usize] = r as u32;
                fill[a.index()] += 1;
            }
        }
        Occurrences { start, items }
    }

    fn of(&self, a: AtomId) -> &[u32] {
        &self.items[self.start[a.index()] as usize..self.start[a.index() + 1] as usize]
    }
}

/// The program `P_{F,T}` maintained under growing `F` and `T`.
///
/// Alive rules are exactly those of `P_{F,T}`. For every atom, `IN(a)` is a doubly linked
/// list over the alive rules with head `a`, in source order; a rule's tail is read from
/// the rule itself. Dead rules are unlinked in place, so the total cost of all
/// [`apply`](Self::apply) calls over a run is `O(size(P) + |At(P)|)`.
#[derive(Clone, Debug)]
pub struct ShrinkingProgram<'p> {
    program: &'p Program,
    lp1: bool,
    alive: Vec<bool>,
    n_alive_rules: usize,
    in_first: Vec<u32>,
    in_next: Vec<u32>,
    in_prev: Vec<u32>,
    pos_occ: Occurrences,
    neg_occ: Occurrences,
    is_false: Vec<bool>,
    is_true: Vec<bool>,
    n_false: usize,
    rules_deleted: u64,
}

impl<'p> ShrinkingProgram<'p> {
    /// All rules alive, `F = T = ∅`.
    pub fn new(program: &'p Program) -> Self {
        let n = program.n_atoms();
        let m = program.rules().len();
        let mut in_first = vec![NIL_RULE; n];
        let mut in_last = vec![NIL_RULE; n];
        let mut in_next = vec![NIL_RULE; m];
        let mut in_prev = vec![NIL_RULE; m];
        for (ri, r) in program.rules().iter().enumerate() {
            let h = r.head.index();
            let ri = ri as u32;
            if in_last[h] == NIL_RULE {
                in_first[h] = ri;
            } else {
                in_next[in_last[h] as usize] = ri;
                in_prev[ri as usize] = in_last[h];
            }
            in_last[h] = ri;
        }
        let pos_occ = Occurrences::build(n, program.rules().iter().map(|r| r.pos_body.as_slice()));
        let neg_occ = Occurrences::build(n, program.rules().iter().map(|r| r.neg_body.as_slice()));
        ShrinkingProgram {
            program,
            lp1: program.is_lp1(),
            alive: vec![true; m],
            n_alive_rules: m,
            in_first,
            in_next,
            in_prev,
            pos_occ,
            neg_occ,
            is_false: vec![false; n],
            is_true: vec![false; n],
            n_false: 0,
            rules_deleted: 0,
        }
    }

    /// Moves `delta_f` into `F` and `delta_t` into `T` and deletes the rules that no
    /// longer belong to `P_{F,T}`. Atoms already in the target set are skipped.
    ///
    /// Panics if an atom would end up in both `F` and `T`.
    pub fn apply(&mut self, delta_f: &[AtomId], delta_t: &[AtomId]) {
        for &a in delta_f {
            assert!(
                !self.is_true[a.index()],
                "atom {a} cannot become false: it is already true"
            );
            if self.is_false[a.index()] {
                continue;
            }
            self.is_false[a.index()] = true;
            self.n_false += 1;
            let mut r = self.in_first[a.index()];
            while r != NIL_RULE {
                let next = self.in_next[r as usize];
                self.kill(r as usize);
                r = next;
            }
            for i in 0..self.pos_occ.of(a).len() {
                let r = self.pos_occ.of(a)[i];
                self.kill(r as usize);
            }
        }
        for &a in delta_t {
            assert!(
                !self.is_false[a.index()],
                "atom {a} cannot become true: it is already false"
            );
            if self.is_true[a.index()] {
                continue;
            }
            self.is_true[a.index()] = true;
            for i in 0..self.neg_occ.of(a).len() {
                let r = self.neg_occ.of(a)[i];
                self.kill(r as usize);
            }
        }
    }

    fn kill(&mut self, r: usize) {
        if !self.alive[r] {
            return;
        }
        self.alive[r] = false;
        self.n_alive_rules -= 1;
        self.rules_deleted += 1;
        let (prev, next) = (self.in_prev[r], self.in_next[r]);
        if prev == NIL_RULE {
            self.in_first[self.program.rules()[r].head.index()] = next;
        } else {
            self.in_next[prev as usize] = next;
        }
        if next != NIL_RULE {
            self.in_prev[next as usize] = prev;
        }
        self.in_prev[r] = NIL_RULE;
        self.in_next[r] = NIL_RULE;
    }

    pub fn program(&self) -> &'p Program {
        self.program
    }

    /// Whether the underlying program is in LP1 (cached at construction).
    pub fn is_lp1(&self) -> bool {
        self.lp1
    }

    pub fn n_atoms(&self) -> usize {
        self.is_false.len()
    }

    pub fn is_alive_rule(&self, r: usize) -> bool {
        self.alive[r]
    }

    pub fn n_alive_rules(&self) -> usize {
        self.n_alive_rules
    }

    pub fn alive_rules(&self) -> impl Iterator<Item = usize> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter(|(_, a)| **a)
            .map(|(r, _)| r)
    }

    /// First rule of `IN(a)`, or [`NIL_RULE`].
    #[inline]
    pub fn in_first(&self, a: AtomId) -> u32 {
        self.in_first[a.index()]
    }

    /// Rule after `r` in its head's IN list, or [`NIL_RULE`].
    #[inline]
    pub fn in_next(&self, r: u32) -> u32 {
        self.in_next[r as usize]
    }

    pub fn in_list(&self, a: AtomId) -> InList<'_, 'p> {
        InList {
            sp: self,
            cur: self.in_first(a),
        }
    }

    /// Tail of rule `r`. Only meaningful for rules with at most one positive body atom.
    #[inline]
    pub fn tail(&self, r: u32) -> Tail {
        match self.program.rules()[r as usize].pos_body.first() {
            Some(&b) => Tail::Atom(b),
            None => Tail::Sentinel,
        }
    }

    #[inline]
    pub fn is_false(&self, a: AtomId) -> bool {
        self.is_false[a.index()]
    }

    #[inline]
    pub fn is_true(&self, a: AtomId) -> bool {
        self.is_true[a.index()]
    }

    /// Atoms not in `F`; these are the atoms the h-view ranges over.
    pub fn alive_atoms(&self) -> impl Iterator<Item = AtomId> + '_ {
        self.is_false
            .iter()
            .enumerate()
            .filter(|(_, f)| !**f)
            .map(|(i, _)| AtomId::from_index(i))
    }

    pub fn n_alive_atoms(&self) -> usize {
        self.n_atoms() - self.n_false
    }

    pub fn current_f(&self) -> AtomSet {
        self.is_false
            .iter()
            .enumerate()
            .filter(|(_, f)| **f)
            .map(|(i, _)| AtomId::from_index(i))
            .collect()
    }

    pub fn current_t(&self) -> AtomSet {
        self.is_true
            .iter()
            .enumerate()
            .filter(|(_, t)| **t)
            .map(|(i, _)| AtomId::from_index(i))
            .collect()
    }

    pub fn rules_deleted(&self) -> u64 {
        self.rules_deleted
    }

    /// The alive rules as a program over the original atom table.
    pub fn alive_program(&self) -> Program {
        let rules = self
            .alive_rules()
            .map(|r| self.program.rules()[r].clone())
            .collect();
        self.program.with_rules(rules)
    }

    /// Materialized h-reduct of the alive rules.
    pub fn h_view(&self) -> HornProgram {
        let mut q = HornProgram::new(self.n_atoms());
        for r in self.alive_rules() {
            let rule = &self.program.rules()[r];
            q.push(rule.head, rule.pos_body.clone());
        }
        q
    }
}

pub struct InList<'a, 'p> {
    sp: &'a ShrinkingProgram<'p>,
    cur: u32,
}

impl Iterator for InList<'_, '_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.cur == NIL_RULE {
            return None;
        }
        let r = self.cur;
        self.cur = self.sp.in_next(r);
        Some(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reducts::restrict;
    use crate::textio::parse;

    fn tails(sp: &ShrinkingProgram<'_>, atom: &str) -> Vec<String> {
        let p = sp.program();
        sp.in_list(p.lookup(atom).unwrap())
            .map(|r| match sp.tail(r) {
                Tail::Sentinel => "s".to_owned(),
                Tail::Atom(a) => p.name(a).to_owned(),
            })
            .collect()
    }

    #[test]
    fn in_lists_follow_source_order() {
        let p = parse("a. b :- a. a :- c. c :- a. a :- e. d :- e. f :- d. e :- f. d :- f. e :- g.")
            .unwrap();
        let sp = ShrinkingProgram::new(&p);
        assert_eq!(tails(&sp, "a"), ["s", "c", "e"]);
        assert_eq!(tails(&sp, "d"), ["e", "f"]);
        assert_eq!(tails(&sp, "e"), ["f", "g"]);
        assert!(tails(&sp, "g").is_empty());
    }

    #[test]
    fn empty_and_single_fact() {
        let p = Program::empty();
        let sp = ShrinkingProgram::new(&p);
        assert_eq!(sp.n_alive_rules(), 0);
        assert_eq!(sp.n_alive_atoms(), 0);
        let p = parse("a.").unwrap();
        assert_eq!(tails(&ShrinkingProgram::new(&p), "a"), ["s"]);
    }

    #[test]
    fn apply_matches_restrict() {
        let p = parse("a. b :- not a.").unwrap();
        let (a, b) = (p.lookup("a").unwrap(), p.lookup("b").unwrap());
        let mut sp = ShrinkingProgram::new(&p);
        sp.apply(&[], &[]);
        assert_eq!(sp.n_alive_rules(), 2);
        sp.apply(&[b], &[a]);
        assert_eq!(sp.alive_program(), restrict(&p, &[b].into(), &[a].into()));
        assert_eq!(sp.n_alive_rules(), 1);
        assert_eq!(sp.rules_deleted(), 1);
        assert!(tails(&sp, "b").is_empty());
    }

    #[test]
    fn unlinking_keeps_list_order() {
        let p = parse("x :- a. x :- b. x :- c. x :- d.").unwrap();
        let mut sp = ShrinkingProgram::new(&p);
        sp.apply(&[p.lookup("b").unwrap()], &[]);
        assert_eq!(tails(&sp, "x"), ["a", "c", "d"]);
        sp.apply(&[p.lookup("a").unwrap(), p.lookup("d").unwrap()], &[]);
        assert_eq!(tails(&sp, "x"), ["c"]);
        sp.apply(&[p.lookup("x").unwrap()], &[]);
        assert!(tails(&sp, "x").is_empty());
        assert_eq!(sp.n_alive_rules(), 0);
    }

    #[test]
    #[should_panic]
    fn conflicting_assignment_panics() {
        let p = parse("a.").unwrap();
        let a = p.lookup("a").unwrap();
        let mut sp = ShrinkingProgram::new(&p);
        sp.apply(&[a], &[]);
        sp.apply(&[], &[a]);
    }
}
