//! Program text format and result serialization.
//!
//! ```text
//! rule  := atom (":-" body)? "."
//! body  := lit ("," lit)*
//! lit   := atom | "not" WS+ atom
//! atom  := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! `%` starts a comment that runs to the end of the line. Whitespace is otherwise
//! insignificant and `not` is reserved.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::program::{AtomId, Program, ProgramBuilder, Rule, WfsResult};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line_no}, column {column}: {message}")]
pub struct ParseError {
    pub line_no: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResultFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok<'a> {
    Ident(&'a str),
    Neck,
    Comma,
    Dot,
    Eof,
}

impl Tok<'_> {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Neck => "`:-`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    line_start: usize,
}

#[derive(Clone, Copy)]
struct Spanned<'a> {
    tok: Tok<'a>,
    line: usize,
    column: usize,
    /// Whitespace or a comment came right after this token.
    space_after: bool,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src,
            pos: 0,
            line: 1,
            line_start: 0,
        }
    }

    fn error(&self, line: usize, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line_no: line,
            column,
            message: message.into(),
        }
    }

    fn column(&self) -> usize {
        self.src[self.line_start..self.pos].chars().count() + 1
    }

    /// Skips whitespace and comments; reports whether anything was skipped.
    fn skip_trivia(&mut self) -> bool {
        let start = self.pos;
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() {
            match bytes[self.pos] {
                b'\n' => {
                    self.pos += 1;
                    self.line += 1;
                    self.line_start = self.pos;
                }
                b' ' | b'\t' | b'\r' => self.pos += 1,
                b'%' => {
                    while self.pos < bytes.len() && bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                _ => break,
            }
        }
        self.pos > start
    }

    fn next(&mut self) -> Result<Spanned<'a>, ParseError> {
        self.skip_trivia();
        let (line, column) = (self.line, self.column());
        let bytes = self.src.as_bytes();
        let tok = if self.pos >= bytes.len() {
            Tok::Eof
        } else {
            match bytes[self.pos] {
                b',' => {
                    self.pos += 1;
                    Tok::Comma
                }
                b'.' => {
                    self.pos += 1;
                    Tok::Dot
                }
                b':' if bytes.get(self.pos + 1) == Some(&b'-') => {
                    self.pos += 2;
                    Tok::Neck
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = self.pos;
                    while self.pos < bytes.len()
                        && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    Tok::Ident(&self.src[start..self.pos])
                }
                _ => {
                    let ch = self.src[self.pos..].chars().next().unwrap_or('?');
                    return Err(self.error(line, column, format!("unexpected character {ch:?}")));
                }
            }
        };
        let space_after = self.skip_trivia();
        Ok(Spanned {
            tok,
            line,
            column,
            space_after,
        })
    }
}

/// Parses program text. Rules keep source order; atoms are interned in order of
/// first occurrence.
pub fn parse(text: &str) -> Result<Program, ParseError> {
    let mut lx = Lexer::new(text);
    let mut builder = ProgramBuilder::new();
    loop {
        let t = lx.next()?;
        let head = match t.tok {
            Tok::Eof => break,
            Tok::Ident(name) => atom_name(&lx, &t, name)?,
            other => {
                return Err(lx.error(
                    t.line,
                    t.column,
                    format!("expected a rule head, found {}", other.describe()),
                ))
            }
        };
        let head = builder.intern(head);
        let mut rule = Rule::fact(head);
        let t = lx.next()?;
        match t.tok {
            Tok::Dot => {}
            Tok::Neck => parse_body(&mut lx, &mut builder, &mut rule)?,
            Tok::Eof => return Err(lx.error(t.line, t.column, "unterminated rule: expected `.`")),
            other => {
                return Err(lx.error(
                    t.line,
                    t.column,
                    format!("expected `:-` or `.`, found {}", other.describe()),
                ))
            }
        }
        builder.push(rule);
    }
    Ok(builder.build())
}

fn atom_name<'a>(lx: &Lexer<'_>, t: &Spanned<'a>, name: &'a str) -> Result<&'a str, ParseError> {
    if name == "not" {
        Err(lx.error(t.line, t.column, "reserved word `not` used as an atom"))
    } else {
        Ok(name)
    }
}

fn parse_body(
    lx: &mut Lexer<'_>,
    builder: &mut ProgramBuilder,
    rule: &mut Rule,
) -> Result<(), ParseError> {
    loop {
        let t = lx.next()?;
        match t.tok {
            Tok::Ident("not") => {
                let a = lx.next()?;
                match a.tok {
                    Tok::Ident(name) if t.space_after => {
                        let name = atom_name(lx, &a, name)?;
                        rule.neg_body.push(builder.intern(name));
                    }
                    Tok::Eof => {
                        return Err(lx.error(
                            a.line,
                            a.column,
                            "unterminated rule: expected an atom after `not`",
                        ))
                    }
                    other => {
                        return Err(lx.error(
                            a.line,
                            a.column,
                            format!("expected an atom after `not`, found {}", other.describe()),
                        ))
                    }
                }
            }
            Tok::Ident(name) => rule.pos_body.push(builder.intern(name)),
            Tok::Eof => {
                return Err(lx.error(
                    t.line,
                    t.column,
                    "unterminated rule: expected a body literal",
                ))
            }
            other => {
                return Err(lx.error(
                    t.line,
                    t.column,
                    format!("expected a body literal, found {}", other.describe()),
                ))
            }
        }
        let t = lx.next()?;
        match t.tok {
            Tok::Comma => continue,
            Tok::Dot => return Ok(()),
            Tok::Eof => return Err(lx.error(t.line, t.column, "unterminated rule: expected `.`")),
            other => {
                return Err(lx.error(
                    t.line,
                    t.column,
                    format!("expected `,` or `.`, found {}", other.describe()),
                ))
            }
        }
    }
}

/// Writes one rule per line in the input grammar.
pub fn serialize_program(p: &Program) -> String {
    let mut out = String::with_capacity(p.size() * 4);
    for r in p.rules() {
        write_rule(&mut out, p, r);
        out.push('\n');
    }
    out
}

/// Positive and negative literals are interleaved by ascending atom id (each list keeps
/// its own order), which reproduces first-occurrence interning when the text is parsed
/// back.
pub fn write_rule(out: &mut String, p: &Program, r: &Rule) {
    out.push_str(p.name(r.head));
    let mut sep = " :- ";
    let (mut pos, mut neg) = (r.pos_body.iter().peekable(), r.neg_body.iter().peekable());
    loop {
        let take_neg = match (pos.peek(), neg.peek()) {
            (None, None) => break,
            (Some(_), None) => false,
            (None, Some(_)) => true,
            (Some(a), Some(b)) => b < a,
        };
        out.push_str(sep);
        sep = ", ";
        if take_neg {
            out.push_str("not ");
            out.push_str(p.name(*neg.next().unwrap()));
        } else {
            out.push_str(p.name(*pos.next().unwrap()));
        }
    }
    out.push('.');
}

#[derive(Serialize)]
struct JsonResult {
    #[serde(rename = "true")]
    true_: Vec<String>,
    #[serde(rename = "false")]
    false_: Vec<String>,
    unknown: Vec<String>,
}

/// Atom names are sorted lexicographically within each set. The text form is three
/// newline-terminated lines; the JSON form is a single object without a trailing
/// newline.
pub fn serialize_result(r: &WfsResult, p: &Program, format: ResultFormat) -> String {
    let t = p.sorted_names(r.true_set().iter().copied());
    let f = p.sorted_names(r.false_set().iter().copied());
    let u = p.sorted_names(r.unknown_set());
    match format {
        ResultFormat::Text => {
            let mut out = String::new();
            for (label, names) in [("true", &t), ("false", &f), ("unknown", &u)] {
                out.push_str(label);
                out.push(':');
                for n in names {
                    let _ = write!(out, " {n}");
                }
                out.push('\n');
            }
            out
        }
        ResultFormat::Json => serde_json::to_string(&JsonResult {
            true_: t,
            false_: f,
            unknown: u,
        })
        .expect("string arrays always serialize"),
    }
}

/// Names of `atoms`, sorted.
pub fn names(p: &Program, atoms: &[AtomId]) -> Vec<String> {
    p.sorted_names(atoms.iter().copied())
}
