//! Interned propositional normal logic programs and the three-valued result type.
//!
//! Atoms are interned in first-occurrence order, so every iteration order downstream
//! (IN lists, pf-set heads, solver agendas) is a deterministic function of the input.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

/// Dense atom index, contiguous from 0 in first-occurrence order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomId(pub u32);

impl AtomId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn from_index(index: usize) -> Self {
        AtomId(u32::try_from(index).expect("atom index exceeds u32"))
    }
}

impl fmt::Display for AtomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

pub type AtomSet = BTreeSet<AtomId>;

/// `head :- pos_body, not neg_body.` Body lists keep source order and duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    pub head: AtomId,
    pub pos_body: Vec<AtomId>,
    pub neg_body: Vec<AtomId>,
}

impl Rule {
    pub fn fact(head: AtomId) -> Self {
        Rule {
            head,
            pos_body: Vec::new(),
            neg_body: Vec::new(),
        }
    }

    pub fn new(head: AtomId, pos_body: Vec<AtomId>, neg_body: Vec<AtomId>) -> Self {
        Rule {
            head,
            pos_body,
            neg_body,
        }
    }

    /// Number of atom occurrences in the rule, head included.
    pub fn size(&self) -> usize {
        1 + self.pos_body.len() + self.neg_body.len()
    }
}

/// Name <-> id mapping. Shared between a program and the programs derived from it
/// (reducts, restrictions), so ids stay comparable across them.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct AtomTable {
    names: Vec<String>,
    index: HashMap<String, AtomId>,
}

impl AtomTable {
    pub fn intern(&mut self, name: &str) -> AtomId {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = AtomId::from_index(self.names.len());
        self.names.push(name.to_owned());
        self.index.insert(name.to_owned(), id);
        id
    }

    pub fn lookup(&self, name: &str) -> Option<AtomId> {
        self.index.get(name).copied()
    }

    pub fn name(&self, id: AtomId) -> &str {
        &self.names[id.index()]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

/// A finite propositional normal logic program.
///
/// Immutable once built. `size` counts atom occurrences (heads plus all body literals),
/// duplicates included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Program {
    rules: Vec<Rule>,
    atoms: Arc<AtomTable>,
    size: usize,
}

impl Program {
    pub fn empty() -> Self {
        ProgramBuilder::new().build()
    }

    /// A program over the same atom table as `self` with a different rule list.
    ///
    /// Panics if a rule mentions an atom outside the table.
    pub fn with_rules(&self, rules: Vec<Rule>) -> Program {
        let n = self.n_atoms();
        for r in &rules {
            assert!(
                std::iter::once(&r.head)
                    .chain(&r.pos_body)
                    .chain(&r.neg_body)
                    .all(|a| a.index() < n),
                "rule mentions an atom outside the table"
            );
        }
        let size = rules.iter().map(Rule::size).sum();
        Program {
            rules,
            atoms: Arc::clone(&self.atoms),
            size,
        }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn n_atoms(&self) -> usize {
        self.atoms.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn atom_table(&self) -> &AtomTable {
        &self.atoms
    }

    pub fn name(&self, id: AtomId) -> &str {
        self.atoms.name(id)
    }

    pub fn lookup(&self, name: &str) -> Option<AtomId> {
        self.atoms.lookup(name)
    }

    /// Every interned atom, including atoms that occur only in bodies.
    pub fn atoms(&self) -> impl ExactSizeIterator<Item = AtomId> + '_ {
        (0..self.n_atoms()).map(AtomId::from_index)
    }

    pub fn atom_set(&self) -> AtomSet {
        self.atoms().collect()
    }

    /// True iff no rule has more than one positive body atom.
    pub fn is_lp1(&self) -> bool {
        self.first_non_lp1_rule().is_none()
    }

    pub fn first_non_lp1_rule(&self) -> Option<usize> {
        self.rules.iter().position(|r| r.pos_body.len() > 1)
    }

    /// Names of the given atoms, sorted lexicographically.
    pub fn sorted_names<I>(&self, atoms: I) -> Vec<String>
    where
        I: IntoIterator<Item = AtomId>,
    {
        let mut names: Vec<String> = atoms.into_iter().map(|a| self.name(a).to_owned()).collect();
        names.sort();
        names
    }
}

/// Builds a [`Program`], interning atom names in first-occurrence order.
#[derive(Debug, Default)]
pub struct ProgramBuilder {
    rules: Vec<Rule>,
    atoms: AtomTable,
}

impl ProgramBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, name: &str) -> AtomId {
        self.atoms.intern(name)
    }

    /// Adds `head :- pos..., not neg...`. Names are interned head first, then the body
    /// in the order given.
    pub fn rule(&mut self, head: &str, pos: &[&str], neg: &[&str]) -> &mut Self {
        let head = self.intern(head);
        let pos_body = pos.iter().map(|n| self.intern(n)).collect();
        let neg_body = neg.iter().map(|n| self.intern(n)).collect();
        self.rules.push(Rule {
            head,
            pos_body,
            neg_body,
        });
        self
    }

    pub fn fact(&mut self, head: &str) -> &mut Self {
        self.rule(head, &[], &[])
    }

    /// Adds a rule over already-interned ids.
    pub fn push(&mut self, rule: Rule) -> &mut Self {
        let n = self.atoms.len();
        assert!(rule.head.index() < n, "head not interned");
        assert!(
            rule.pos_body
                .iter()
                .chain(&rule.neg_body)
                .all(|a| a.index() < n),
            "body atom not interned"
        );
        self.rules.push(rule);
        self
    }

    pub fn build(self) -> Program {
        let size = self.rules.iter().map(Rule::size).sum();
        Program {
            rules: self.rules,
            atoms: Arc::new(self.atoms),
            size,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truth {
    True,
    False,
    Unknown,
}

/// The well-founded model: true and false atoms; everything else is unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WfsResult {
    n_atoms: usize,
    true_set: AtomSet,
    false_set: AtomSet,
}

impl WfsResult {
    /// Panics if the sets intersect or mention atoms outside `0..n_atoms`.
    pub fn new(n_atoms: usize, true_set: AtomSet, false_set: AtomSet) -> Self {
        assert!(
            true_set.is_disjoint(&false_set),
            "an atom cannot be both true and false"
        );
        assert!(
            true_set
                .iter()
                .chain(&false_set)
                .all(|a| a.index() < n_atoms),
            "result mentions an atom outside the program"
        );
        WfsResult {
            n_atoms,
            true_set,
            false_set,
        }
    }

    pub fn n_atoms(&self) -> usize {
        self.n_atoms
    }

    pub fn true_set(&self) -> &AtomSet {
        &self.true_set
    }

    pub fn false_set(&self) -> &AtomSet {
        &self.false_set
    }

    pub fn unknown_set(&self) -> AtomSet {
        (0..self.n_atoms)
            .map(AtomId::from_index)
            .filter(|a| !self.true_set.contains(a) && !self.false_set.contains(a))
            .collect()
    }

    pub fn value(&self, atom: AtomId) -> Truth {
        if self.true_set.contains(&atom) {
            Truth::True
        } else if self.false_set.contains(&atom) {
            Truth::False
        } else {
            Truth::Unknown
        }
    }
}
