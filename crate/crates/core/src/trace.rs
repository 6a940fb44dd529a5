//! Solver trace events and a JSON-lines writer for them.
//!
//! Events carry atom ids; [`JsonLinesSink`] renders them with sorted atom names:
//!
//! ```text
//! {"event":"iter","i":1,"dt":["a"],"df":["b"]}
//! {"event":"merge","members":["d","e","f"]}
//! {"event":"back_edge","from":["a"],"to":["b"],"rule":1}
//! {"event":"report","v":["g","h","j","k"]}
//! ```
//!
//! A `back_edge` whose tail is the empty-body sentinel has an empty `from` list.

use std::io::{self, Write};

use serde::Serialize;

use crate::program::{AtomId, Program};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceEvent {
    /// One pass of a solver loop; `dt` and `df` are the atoms that became true/false.
    Iter {
        i: usize,
        dt: Vec<AtomId>,
        df: Vec<AtomId>,
    },
    /// pf-sets on a cycle were glued into one set with these members.
    Merge { members: Vec<AtomId> },
    /// A back rule was found for the pf-set `to`; `from` is the pf-set holding the
    /// rule's tail, `None` for the sentinel.
    BackEdge {
        from: Option<Vec<AtomId>>,
        to: Vec<AtomId>,
        rule: usize,
    },
    /// A pf-set with no back rule, returned as false atoms.
    Report { v: Vec<AtomId> },
}

pub trait TraceSink {
    fn event(&mut self, event: TraceEvent);
}

impl TraceSink for Vec<TraceEvent> {
    fn event(&mut self, event: TraceEvent) {
        self.push(event);
    }
}

#[derive(Serialize)]
#[serde(tag = "event", rename_all = "snake_case")]
enum JsonEvent {
    Iter {
        i: usize,
        dt: Vec<String>,
        df: Vec<String>,
    },
    Merge {
        members: Vec<String>,
    },
    BackEdge {
        from: Vec<String>,
        to: Vec<String>,
        rule: usize,
    },
    Report {
        v: Vec<String>,
    },
}

pub fn to_json_line(p: &Program, event: &TraceEvent) -> String {
    let names = |atoms: &[AtomId]| p.sorted_names(atoms.iter().copied());
    let json = match event {
        TraceEvent::Iter { i, dt, df } => JsonEvent::Iter {
            i: *i,
            dt: names(dt),
            df: names(df),
        },
        TraceEvent::Merge { members } => JsonEvent::Merge {
            members: names(members),
        },
        TraceEvent::BackEdge { from, to, rule } => JsonEvent::BackEdge {
            from: from.as_deref().map(names).unwrap_or_default(),
            to: names(to),
            rule: *rule,
        },
        TraceEvent::Report { v } => JsonEvent::Report { v: names(v) },
    };
    serde_json::to_string(&json).expect("trace events always serialize")
}

/// Writes one JSON object per line. The first write error is kept and reported by
/// [`finish`](Self::finish); later events are dropped.
pub struct JsonLinesSink<'p, W: Write> {
    program: &'p Program,
    out: W,
    error: Option<io::Error>,
}

impl<'p, W: Write> JsonLinesSink<'p, W> {
    pub fn new(program: &'p Program, out: W) -> Self {
        JsonLinesSink {
            program,
            out,
            error: None,
        }
    }

    pub fn finish(mut self) -> io::Result<W> {
        if let Some(e) = self.error.take() {
            return Err(e);
        }
        self.out.flush()?;
        Ok(self.out)
    }
}

impl<W: Write> TraceSink for JsonLinesSink<'_, W> {
    fn event(&mut self, event: TraceEvent) {
        if self.error.is_some() {
            return;
        }
        let line = to_json_line(self.program, &event);
        if let Err(e) = writeln!(self.out, "{line}") {
            self.error = Some(e);
        }
    }
}
