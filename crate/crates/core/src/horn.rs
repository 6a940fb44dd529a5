//! Horn programs and counter-based least-model computation.
//!
//! [`DerivationEngine`] keeps one counter per rule (body atoms not yet derived) and a
//! watch list per atom. Facts can be asserted in batches; after every batch the derived
//! set is the least model of the initial rules plus all facts asserted so far. The
//! residual program (rules with underived heads, bodies minus derived atoms) is never
//! built; it is read off the counters when needed.

use crate::program::{AtomId, AtomSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornRule {
    pub head: AtomId,
    pub body: Vec<AtomId>,
}

/// A negation-free program over `0..alphabet_size`. The alphabet may be larger than the
/// set of atoms occurring in the rules (e.g. the extended alphabet with `not(a)` atoms).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HornProgram {
    pub rules: Vec<HornRule>,
    pub alphabet_size: usize,
}

impl HornProgram {
    pub fn new(alphabet_size: usize) -> Self {
        HornProgram {
            rules: Vec::new(),
            alphabet_size,
        }
    }

    pub fn push(&mut self, head: AtomId, body: Vec<AtomId>) {
        debug_assert!(head.index() < self.alphabet_size);
        debug_assert!(body.iter().all(|b| b.index() < self.alphabet_size));
        self.rules.push(HornRule { head, body });
    }

    pub fn size(&self) -> usize {
        self.rules.iter().map(|r| 1 + r.body.len()).sum()
    }
}

/// Least model of `q`, in time linear in `size(q) + alphabet_size`.
pub fn least_model(q: &HornProgram) -> AtomSet {
    let mut engine = DerivationEngine::new(q);
    engine.assert_facts(std::iter::empty());
    engine.derived().collect()
}

const NO_RULE: u32 = u32::MAX;

/// Incremental least-model state for a Horn program.
#[derive(Clone, Debug)]
pub struct DerivationEngine {
    heads: Vec<u32>,
    /// Body occurrences not yet derived, per rule.
    counters: Vec<u32>,
    /// CSR watch lists: rules containing atom `a` in their body occupy
    /// `watch[watch_start[a]..watch_start[a + 1]]`, once per occurrence.
    watch_start: Vec<u32>,
    watch: Vec<u32>,
    derived: Vec<bool>,
    n_derived: usize,
    /// Heads of empty-bodied rules, derived on the next propagation.
    pending: Vec<u32>,
    agenda: Vec<u32>,
    /// Rules per head whose counter is still positive.
    live_heads: Vec<u32>,
    /// Counter initializations plus counter decrements.
    work: u64,
}

impl DerivationEngine {
    pub fn new(q: &HornProgram) -> Self {
        let n = q.alphabet_size;
        let mut watch_start = vec![0u32; n + 1];
        for r in &q.rules {
            for b in &r.body {
                watch_start[b.index() + 1] += 1;
            }
        }
        for i in 0..n {
            watch_start[i + 1] += watch_start[i];
        }
        let mut fill = watch_start.clone();
        let mut watch = vec![NO_RULE; watch_start[n] as usize];
        let mut heads = Vec::with_capacity(q.rules.len());
        let mut counters = Vec::with_capacity(q.rules.len());
        let mut live_heads = vec![0u32; n];
        let mut pending = Vec::new();
        let mut work = 0u64;
        for (ri, r) in q.rules.iter().enumerate() {
            heads.push(r.head.0);
            counters.push(r.body.len() as u32);
            work += 1;
            for b in &r.body {
                let slot = &mut fill[b.index()];
                watch[*slot as usize] = ri as u32;
                *slot += 1;
            }
            if r.body.is_empty() {
                pending.push(r.head.0);
            } else {
                live_heads[r.head.index()] += 1;
            }
        }
        DerivationEngine {
            heads,
            counters,
            watch_start,
            watch,
            derived: vec![false; n],
            n_derived: 0,
            pending,
            agenda: Vec::new(),
            live_heads,
            work,
        }
    }

    /// Adds `facts` and propagates. Returns the atoms newly derived by this call (facts
    /// included), in derivation order. Atoms derived before are not repeated.
    pub fn assert_facts<I>(&mut self, facts: I) -> Vec<AtomId>
    where
        I: IntoIterator<Item = AtomId>,
    {
        let mut newly = Vec::new();
        for h in std::mem::take(&mut self.pending) {
            self.derive(h, &mut newly);
        }
        for f in facts {
            self.derive(f.0, &mut newly);
        }
        while let Some(a) = self.agenda.pop() {
            let (lo, hi) = (
                self.watch_start[a as usize] as usize,
                self.watch_start[a as usize + 1] as usize,
            );
            for i in lo..hi {
                let r = self.watch[i] as usize;
                self.work += 1;
                self.counters[r] -= 1;
                if self.counters[r] == 0 {
                    let h = self.heads[r];
                    self.live_heads[h as usize] -= 1;
                    self.derive(h, &mut newly);
                }
            }
        }
        newly
    }

    #[inline]
    fn derive(&mut self, a: u32, newly: &mut Vec<AtomId>) {
        if !self.derived[a as usize] {
            self.derived[a as usize] = true;
            self.n_derived += 1;
            self.agenda.push(a);
            newly.push(AtomId(a));
        }
    }

    pub fn is_derived(&self, a: AtomId) -> bool {
        self.derived[a.index()]
    }

    pub fn derived(&self) -> impl Iterator<Item = AtomId> + '_ {
        self.derived
            .iter()
            .enumerate()
            .filter(|(_, d)| **d)
            .map(|(i, _)| AtomId::from_index(i))
    }

    pub fn n_derived(&self) -> usize {
        self.n_derived
    }

    pub fn alphabet_size(&self) -> usize {
        self.derived.len()
    }

    /// Body atoms of rule `rule` not yet derived.
    pub fn counter(&self, rule: usize) -> u32 {
        self.counters[rule]
    }

    /// Number of rules with head `a` still waiting on body atoms.
    pub fn live_rules_for(&self, a: AtomId) -> u32 {
        self.live_heads[a.index()]
    }

    pub fn work(&self) -> u64 {
        self.work
    }

    /// The residual program of `q` (which must be the program this engine was built
    /// from): rules whose head is underived, with derived atoms removed from bodies.
    pub fn residual(&self, q: &HornProgram) -> HornProgram {
        assert_eq!(
            q.rules.len(),
            self.heads.len(),
            "engine was built from a different program"
        );
        let mut res = HornProgram::new(q.alphabet_size);
        for r in &q.rules {
            if !self.is_derived(r.head) {
                res.push(
                    r.head,
                    r.body
                        .iter()
                        .copied()
                        .filter(|b| !self.is_derived(*b))
                        .collect(),
                );
            }
        }
        res
    }
}
