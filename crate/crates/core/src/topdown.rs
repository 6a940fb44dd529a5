//! Top-down search for atoms outside the least model of an LP1 Horn program.
//!
//! The atoms of the h-view of a [`ShrinkingProgram`] are partitioned into pf-sets
//! ("potentially false" sets). Every rule `head :- tail` with the tail outside the head's
//! pf-set is a *back rule*: it ties the set to the set holding the tail. Each pf-set
//! keeps at most one such link (`pred`), so the link graph is a forest of trees and
//! unicyclic components, with the sentinel `s` (empty body) as the root of the provable
//! tree. Roots other than `s` are *active*.
//!
//! Rounds run with `size = 1, 2, ...`. Each round first contracts every cycle of the
//! link graph into one active pf-set, then searches a back rule for every active pf-set
//! of cardinality `size`. The first set without one has no support from outside and is
//! returned. Per-atom cursors into the IN lists only move forward during a call, so every
//! IN entry is inspected at most once. If the search runs out of active sets, every atom
//! is provable and the result is empty.
//!
//! A call returning `k` atoms inspects at most `2·k·n` IN entries (`n` alive atoms,
//! distinct rules); a call returning nothing inspects each alive rule at most once.

use crate::error::{Error, Result};
use crate::program::AtomId;
use crate::reducts::{ShrinkingProgram, Tail, NIL_RULE};
use crate::trace::{TraceEvent, TraceSink};

const NIL: u32 = u32::MAX;
const PRED_UNDEF: u32 = u32::MAX;
const PRED_SENTINEL: u32 = u32::MAX - 1;
const CURSOR_UNDEF: u32 = u32::MAX - 1;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FalseOutcome {
    /// Returned atoms, ascending. Empty iff every alive atom is in the least model.
    pub v: Vec<AtomId>,
    /// IN-list entries inspected.
    pub inspections: u64,
    /// Value of `size` when the call ended.
    pub rounds: usize,
}

/// Reusable working memory for the search. All per-call state (partition, links,
/// cursors) is rebuilt at the start of every call in `O(|At|)`.
#[derive(Clone, Debug, Default)]
pub struct FalseSearch {
    /// findset: head atom of the pf-set containing each atom.
    head_of: Vec<u32>,
    next_member: Vec<u32>,
    /// Indexed by pf-set head.
    last_member: Vec<u32>,
    cardinality: Vec<u32>,
    pred: Vec<u32>,
    walk: Vec<u32>,
    /// Indexed by atom: rule id in IN(atom), `CURSOR_UNDEF`, or `NIL_RULE` once exhausted.
    cursor: Vec<u32>,
    /// pf-set heads, ascending.
    heads: Vec<u32>,
    path: Vec<u32>,
    list: Vec<u32>,
    n_active: usize,
}

/// One-shot form of [`FalseSearch::run`].
pub fn false_subset(q: &ShrinkingProgram<'_>) -> Result<Vec<AtomId>> {
    FalseSearch::default().run(q, None).map(|o| o.v)
}

impl FalseSearch {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns a nonempty set of alive atoms outside the least model of the h-view of
    /// `q`, or the empty set iff there is none.
    pub fn run(
        &mut self,
        q: &ShrinkingProgram<'_>,
        mut trace: Option<&mut dyn TraceSink>,
    ) -> Result<FalseOutcome> {
        if !q.is_lp1() {
            let rule = q
                .program()
                .first_non_lp1_rule()
                .expect("program flagged as non-LP1");
            return Err(Error::NotLp1 {
                rule,
                positives: q.program().rules()[rule].pos_body.len(),
            });
        }
        self.reset(q);
        let n_alive = self.heads.len();
        let mut out = FalseOutcome::default();
        let mut size = 0usize;
        while size < n_alive {
            size += 1;
            out.rounds = size;
            self.cycle(size, &mut trace);
            if self.n_active == 0 {
                break;
            }
            for li in 0..self.list.len() {
                let v = self.list[li];
                if !self.grow(q, v, &mut out.inspections, &mut trace) {
                    let mut members = self.members(v);
                    if let Some(t) = trace.as_deref_mut() {
                        t.event(TraceEvent::Report { v: members.clone() });
                    }
                    members.sort_unstable();
                    out.v = members;
                    return Ok(out);
                }
            }
        }
        Ok(out)
    }

    fn reset(&mut self, q: &ShrinkingProgram<'_>) {
        let n = q.n_atoms();
        for v in [
            &mut self.head_of,
            &mut self.next_member,
            &mut self.last_member,
            &mut self.cardinality,
            &mut self.pred,
            &mut self.walk,
            &mut self.cursor,
        ] {
            v.clear();
            v.resize(n, NIL);
        }
        self.heads.clear();
        for a in q.alive_atoms() {
            let i = a.index();
            self.head_of[i] = a.0;
            self.last_member[i] = a.0;
            self.cardinality[i] = 1;
            self.pred[i] = PRED_UNDEF;
            self.cursor[i] = CURSOR_UNDEF;
            self.heads.push(a.0);
        }
        self.n_active = self.heads.len();
    }

    /// Looks for a back rule for the active pf-set `v`. On success links `v` to the
    /// pf-set holding the rule's tail and returns true.
    fn grow(
        &mut self,
        q: &ShrinkingProgram<'_>,
        v: u32,
        inspections: &mut u64,
        trace: &mut Option<&mut dyn TraceSink>,
    ) -> bool {
        let mut u = v;
        while u != NIL {
            let ui = u as usize;
            self.advance(q, ui);
            while self.cursor[ui] != NIL_RULE {
                *inspections += 1;
                let r = self.cursor[ui];
                let target = match q.tail(r) {
                    Tail::Sentinel => PRED_SENTINEL,
                    Tail::Atom(b) => self.head_of[b.index()],
                };
                if target != v {
                    self.pred[v as usize] = target;
                    self.n_active -= 1;
                    if let Some(t) = trace.as_deref_mut() {
                        let from = (target != PRED_SENTINEL).then(|| self.members(target));
                        t.event(TraceEvent::BackEdge {
                            from,
                            to: self.members(v),
                            rule: r as usize,
                        });
                    }
                    return true;
                }
                self.advance(q, ui);
            }
            u = self.next_member[ui];
        }
        false
    }

    #[inline]
    fn advance(&mut self, q: &ShrinkingProgram<'_>, u: usize) {
        self.cursor[u] = match self.cursor[u] {
            CURSOR_UNDEF => q.in_first(AtomId(u as u32)),
            NIL_RULE => NIL_RULE,
            r => q.in_next(r),
        };
    }

    /// Contracts every cycle of the link graph into a single active pf-set, then fills
    /// `list` with the active pf-sets of cardinality `size`, ascending by head.
    fn cycle(&mut self, size: usize, trace: &mut Option<&mut dyn TraceSink>) {
        for &h in &self.heads {
            self.walk[h as usize] = 0;
        }
        let mut walk_id = 0u32;
        let mut merged = false;
        for hi in 0..self.heads.len() {
            let h = self.heads[hi];
            if self.walk[h as usize] != 0 {
                continue;
            }
            walk_id += 1;
            self.path.clear();
            let mut x = h;
            loop {
                self.walk[x as usize] = walk_id;
                self.path.push(x);
                let p = self.pred[x as usize];
                if p == PRED_UNDEF || p == PRED_SENTINEL {
                    break;
                }
                if self.walk[p as usize] != 0 {
                    if self.walk[p as usize] == walk_id {
                        let start = self
                            .path
                            .iter()
                            .position(|&y| y == p)
                            .expect("p is on the current path");
                        let cycle = self.path.split_off(start);
                        self.merge(&cycle, trace);
                        merged = true;
                    }
                    break;
                }
                x = p;
            }
        }
        if merged {
            for hi in 0..self.heads.len() {
                let h = self.heads[hi] as usize;
                if self.head_of[h] as usize != h {
                    continue;
                }
                let p = self.pred[h];
                if p != PRED_UNDEF && p != PRED_SENTINEL {
                    self.pred[h] = self.head_of[p as usize];
                }
            }
            let head_of = &self.head_of;
            self.heads.retain(|&h| head_of[h as usize] == h);
        }
        self.list.clear();
        for &h in &self.heads {
            let hi = h as usize;
            if self.pred[hi] == PRED_UNDEF && self.cardinality[hi] as usize == size {
                self.list.push(h);
            }
        }
    }

    /// Glues the pf-sets of `cycle` (given in link order) into the one with the smallest
    /// head; member lists are concatenated starting there.
    fn merge(&mut self, cycle: &[u32], trace: &mut Option<&mut dyn TraceSink>) {
        let start = (0..cycle.len())
            .min_by_key(|&i| cycle[i])
            .expect("cycles are nonempty");
        let head = cycle[start];
        let hi = head as usize;
        let mut last = self.last_member[hi];
        let mut total = self.cardinality[hi];
        for k in 1..cycle.len() {
            let s = cycle[(start + k) % cycle.len()];
            let mut m = s;
            while m != NIL {
                self.head_of[m as usize] = head;
                m = self.next_member[m as usize];
            }
            self.next_member[last as usize] = s;
            last = self.last_member[s as usize];
            total += self.cardinality[s as usize];
        }
        self.last_member[hi] = last;
        self.cardinality[hi] = total;
        self.pred[hi] = PRED_UNDEF;
        self.n_active += 1;
        if let Some(t) = trace.as_deref_mut() {
            t.event(TraceEvent::Merge {
                members: self.members(head),
            });
        }
    }

    fn members(&self, head: u32) -> Vec<AtomId> {
        let mut out = Vec::with_capacity(self.cardinality[head as usize] as usize);
        let mut m = head;
        while m != NIL {
            out.push(AtomId(m));
            m = self.next_member[m as usize];
        }
        out
    }
}
