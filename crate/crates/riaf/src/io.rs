//! Text format for framework instances.
//!
//! One directive per statement, terminated by `.`; whitespace is free and
//! `%` starts a comment running to the end of the line. Directives:
//!
//! ```text
//! arg(a).      % certain argument
//! ?arg(f).     % uncertain argument
//! att(a,b).    % certain attack
//! ?att(e,a).   % uncertain attack
//! sym(a,b).    % conflict with uncertain direction (closed symmetrically)
//! ```
//!
//! Duplicate directives are errors. Arguments must be declared; an attack
//! mentioning an undeclared name is rejected with the attack's location.
//! The conventional file extension is `.riaf`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::core::{ArgumentId, AttackPair, CoreError, RelationKind, RichIaf};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("expected {expected}{}", found.as_ref().map(|f| format!(", found `{f}`")).unwrap_or_default())]
    Expected { expected: &'static str, found: Option<char> },
    #[error("unknown directive `{0}`; expected arg, ?arg, att, ?att or sym")]
    UnknownDirective(String),
    #[error("directive `{directive}` takes {expected} argument(s), found {found}")]
    WrongArity { directive: String, expected: usize, found: usize },
    #[error("duplicate directive `{0}`")]
    DuplicateDirective(String),
    #[error(transparent)]
    Invalid(#[from] CoreError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum DirectiveKind {
    Arg,
    UncertainArg,
    Att,
    UncertainAtt,
    Sym,
}

impl DirectiveKind {
    fn name(self) -> &'static str {
        match self {
            DirectiveKind::Arg => "arg",
            DirectiveKind::UncertainArg => "?arg",
            DirectiveKind::Att => "att",
            DirectiveKind::UncertainAtt => "?att",
            DirectiveKind::Sym => "sym",
        }
    }

    fn arity(self) -> usize {
        match self {
            DirectiveKind::Arg | DirectiveKind::UncertainArg => 1,
            DirectiveKind::Att | DirectiveKind::UncertainAtt | DirectiveKind::Sym => 2,
        }
    }
}

#[derive(Debug, Clone)]
struct Directive {
    kind: DirectiveKind,
    names: Vec<ArgumentId>,
    line: usize,
    column: usize,
}

impl Directive {
    fn render(&self) -> String {
        let args: Vec<&str> = self.names.iter().map(|n| n.as_str()).collect();
        format!("{}({})", self.kind.name(), args.join(","))
    }

    // sym(a,b) and sym(b,a) declare the same conflict.
    fn dedup_key(&self) -> (DirectiveKind, Vec<ArgumentId>) {
        let mut names = self.names.clone();
        if self.kind == DirectiveKind::Sym {
            names.sort();
        }
        (self.kind, names)
    }
}

struct Scanner<'a> {
    rest: std::str::Chars<'a>,
    line: usize,
    column: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner { rest: text.chars(), line: 1, column: 1 }
    }

    fn peek(&self) -> Option<char> {
        self.rest.clone().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.rest.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('%') => {
                    while let Some(c) = self.bump() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                _ => return,
            }
        }
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, column: self.column, kind }
    }

    fn expect(&mut self, wanted: char, what: &'static str) -> Result<(), ParseError> {
        self.skip_trivia();
        match self.peek() {
            Some(c) if c == wanted => {
                self.bump();
                Ok(())
            }
            found => Err(self.error(ParseErrorKind::Expected { expected: what, found })),
        }
    }

    fn word(&mut self) -> String {
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                out.push(c);
                self.bump();
            } else {
                break;
            }
        }
        out
    }

    fn name(&mut self) -> Result<ArgumentId, ParseError> {
        self.skip_trivia();
        let (line, column) = (self.line, self.column);
        let word = self.word();
        ArgumentId::new(word)
            .map_err(|e| ParseError { line, column, kind: ParseErrorKind::Invalid(e) })
    }

    fn directive(&mut self) -> Result<Option<Directive>, ParseError> {
        self.skip_trivia();
        if self.peek().is_none() {
            return Ok(None);
        }
        let (line, column) = (self.line, self.column);
        let mut keyword = String::new();
        if self.peek() == Some('?') {
            keyword.push('?');
            self.bump();
        }
        keyword.push_str(&self.word());
        let kind = match keyword.as_str() {
            "arg" => DirectiveKind::Arg,
            "?arg" => DirectiveKind::UncertainArg,
            "att" => DirectiveKind::Att,
            "?att" => DirectiveKind::UncertainAtt,
            "sym" => DirectiveKind::Sym,
            "" => {
                let found = self.peek().expect("peeked above");
                return Err(self.error(ParseErrorKind::UnexpectedChar(found)));
            }
            other => {
                return Err(ParseError {
                    line,
                    column,
                    kind: ParseErrorKind::UnknownDirective(other.to_owned()),
                })
            }
        };
        self.expect('(', "`(`")?;
        let mut names = vec![self.name()?];
        loop {
            self.skip_trivia();
            match self.peek() {
                Some(',') => {
                    self.bump();
                    names.push(self.name()?);
                }
                Some(')') => {
                    self.bump();
                    break;
                }
                found => {
                    return Err(self.error(ParseErrorKind::Expected {
                        expected: "`,` or `)`",
                        found,
                    }))
                }
            }
        }
        if names.len() != kind.arity() {
            return Err(ParseError {
                line,
                column,
                kind: ParseErrorKind::WrongArity {
                    directive: keyword,
                    expected: kind.arity(),
                    found: names.len(),
                },
            });
        }
        self.expect('.', "`.`")?;
        Ok(Some(Directive { kind, names, line, column }))
    }
}

// Position of the directive a validation error should point at.
fn locate(directives: &[Directive], err: &CoreError) -> Option<(usize, usize)> {
    let pair_matches = |d: &Directive, pair: &AttackPair, kinds: &[DirectiveKind]| {
        kinds.contains(&d.kind)
            && ((d.names[0] == pair.0 && d.names[1] == pair.1)
                || (d.kind == DirectiveKind::Sym && d.names[0] == pair.1 && d.names[1] == pair.0))
    };
    let found = match err {
        CoreError::InvalidArgumentName(_) => None,
        CoreError::ArgumentBothCertainAndUncertain(a) => directives
            .iter()
            .rev()
            .find(|d| d.kind == DirectiveKind::UncertainArg && d.names[0] == *a),
        CoreError::SelfConflict(a) => directives
            .iter()
            .find(|d| d.kind == DirectiveKind::Sym && d.names[0] == *a && d.names[1] == *a),
        CoreError::AttackRelationsOverlap { attack, .. } => directives.iter().rev().find(|d| {
            pair_matches(
                d,
                attack,
                &[DirectiveKind::Att, DirectiveKind::UncertainAtt, DirectiveKind::Sym],
            )
        }),
        CoreError::UndeclaredEndpoint { attack, relation, .. } => {
            let kind = match relation {
                RelationKind::Certain => DirectiveKind::Att,
                RelationKind::Uncertain => DirectiveKind::UncertainAtt,
                RelationKind::Conflict => DirectiveKind::Sym,
            };
            directives.iter().find(|d| pair_matches(d, attack, &[kind]))
        }
    };
    found.map(|d| (d.line, d.column))
}

/// Parses a document into a validated framework.
pub fn parse_riaf(text: &str) -> Result<RichIaf, ParseError> {
    let mut scanner = Scanner::new(text);
    let mut directives = Vec::new();
    let mut seen = BTreeSet::new();
    while let Some(d) = scanner.directive()? {
        if seen.contains(&d.dedup_key()) {
            return Err(ParseError {
                line: d.line,
                column: d.column,
                kind: ParseErrorKind::DuplicateDirective(d.render()),
            });
        }
        seen.insert(d.dedup_key());
        directives.push(d);
    }

    let mut certain_args = BTreeSet::new();
    let mut uncertain_args = BTreeSet::new();
    let mut certain_attacks = BTreeSet::new();
    let mut uncertain_attacks = BTreeSet::new();
    let mut conflicts = BTreeSet::new();
    for d in &directives {
        match d.kind {
            DirectiveKind::Arg => {
                certain_args.insert(d.names[0].clone());
            }
            DirectiveKind::UncertainArg => {
                uncertain_args.insert(d.names[0].clone());
            }
            DirectiveKind::Att => {
                certain_attacks.insert((d.names[0].clone(), d.names[1].clone()));
            }
            DirectiveKind::UncertainAtt => {
                uncertain_attacks.insert((d.names[0].clone(), d.names[1].clone()));
            }
            DirectiveKind::Sym => {
                conflicts.insert((d.names[0].clone(), d.names[1].clone()));
            }
        }
    }

    RichIaf::new(certain_args, uncertain_args, certain_attacks, uncertain_attacks, conflicts)
        .map_err(|e| {
            let (line, column) = locate(&directives, &e).unwrap_or((1, 1));
            ParseError { line, column, kind: ParseErrorKind::Invalid(e) }
        })
}

/// Canonical serialization: certain arguments, uncertain arguments,
/// certain attacks, uncertain attacks, then one `sym` per unordered pair
/// with the smaller endpoint first, each block sorted. Parsing the output
/// reproduces the framework.
pub fn serialize_riaf(riaf: &RichIaf) -> String {
    let mut out = String::new();
    for a in riaf.certain_args() {
        let _ = writeln!(out, "arg({a}).");
    }
    for a in riaf.uncertain_args() {
        let _ = writeln!(out, "?arg({a}).");
    }
    for (s, d) in riaf.certain_attacks() {
        let _ = writeln!(out, "att({s},{d}).");
    }
    for (s, d) in riaf.uncertain_attacks() {
        let _ = writeln!(out, "?att({s},{d}).");
    }
    for (s, d) in riaf.conflict_pairs() {
        let _ = writeln!(out, "sym({s},{d}).");
    }
    out
}

/// Renders a plain framework (for instance a completion) in the same
/// canonical form.
pub fn serialize_af(af: &crate::core::ArgumentationFramework) -> String {
    serialize_riaf(&crate::core::lift_af(af))
}
