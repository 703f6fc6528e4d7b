//! The line-based measure file:
//!
//! ```text
//! universe: a b c
//! kind: mass
//! m {a} = 3/5
//! m {b,c} = 2/5   # comments run to end of line
//! ```
//!
//! Kinds are `table` (`g {..} = v`), `mass` (`m {..} = v`), `prob`
//! (`p a = v`) and `poss` (`pi a = v`).

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::error::Error;
use crate::measures::{MassAssignment, PossibilityDistribution, ProbabilityDistribution};
use crate::rational::Rational;
use crate::set_function::SetFunction;
use crate::universe::{Event, Universe};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Table,
    Mass,
    Prob,
    Poss,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Table => "table",
            Kind::Mass => "mass",
            Kind::Prob => "prob",
            Kind::Poss => "poss",
        }
    }

    fn keyword(self) -> &'static str {
        match self {
            Kind::Table => "g",
            Kind::Mass => "m",
            Kind::Prob => "p",
            Kind::Poss => "pi",
        }
    }

    fn from_name(s: &str) -> Option<Kind> {
        [Kind::Table, Kind::Mass, Kind::Prob, Kind::Poss]
            .into_iter()
            .find(|k| k.name() == s)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MeasureSpec {
    Table(SetFunction),
    Mass(MassAssignment),
    Prob(ProbabilityDistribution),
    Poss(PossibilityDistribution),
}

impl MeasureSpec {
    pub fn kind(&self) -> Kind {
        match self {
            MeasureSpec::Table(_) => Kind::Table,
            MeasureSpec::Mass(_) => Kind::Mass,
            MeasureSpec::Prob(_) => Kind::Prob,
            MeasureSpec::Poss(_) => Kind::Poss,
        }
    }

    pub fn universe(&self) -> &Universe {
        match self {
            MeasureSpec::Table(f) => f.universe(),
            MeasureSpec::Mass(m) => m.universe(),
            MeasureSpec::Prob(p) => p.universe(),
            MeasureSpec::Poss(p) => p.universe(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: unknown atom `{atom}`")]
    UnknownAtom {
        line: usize,
        column: usize,
        atom: String,
    },
    #[error("line {line}: duplicate entry `{entry}` (first given on line {first})")]
    DuplicateEntry {
        line: usize,
        first: usize,
        entry: String,
    },
    #[error("missing entry `{0}`")]
    MissingEntry(String),
    #[error("invalid {kind}: {source}")]
    Validation { kind: Kind, source: Error },
}

/// A position inside one line; columns count characters from 1.
struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn column_at(&self, pos: usize) -> usize {
        self.text[..pos].chars().count() + 1
    }

    fn error(&self, pos: usize, message: impl Into<String>) -> FormatError {
        FormatError::Parse {
            line: self.line,
            column: self.column_at(pos),
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, what: &str) -> Result<(), FormatError> {
        self.skip_ws();
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(self.pos, format!("expected {what}")))
        }
    }

    /// Takes a maximal run of characters matching `keep`.
    fn token(&mut self, keep: impl Fn(char) -> bool) -> (usize, &'a str) {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..]
            .find(|c: char| !keep(c))
            .unwrap_or(self.text.len() - start);
        self.pos += len;
        (start, &self.text[start..start + len])
    }

    fn atom(&mut self, universe: &Universe) -> Result<usize, FormatError> {
        let (start, name) = self.token(|c| c.is_ascii_alphanumeric() || c == '_');
        if name.is_empty() {
            return Err(self.error(start, "expected an atom name"));
        }
        universe.index_of(name).ok_or_else(|| FormatError::UnknownAtom {
            line: self.line,
            column: self.column_at(start),
            atom: name.to_string(),
        })
    }

    fn set(&mut self, universe: &Universe) -> Result<Event, FormatError> {
        self.expect('{', "`{` opening a set")?;
        let mut event = Event::EMPTY;
        self.skip_ws();
        if self.eat('}') {
            return Ok(event);
        }
        loop {
            let start = self.pos;
            let atom = self.atom(universe)?;
            if event.contains(atom) {
                return Err(self.error(start, format!("atom `{}` listed twice", universe.atom(atom))));
            }
            event = event.with(atom);
            self.skip_ws();
            if self.eat('}') {
                return Ok(event);
            }
            if !self.eat(',') {
                return Err(self.error(self.pos, "expected `,` or `}`"));
            }
        }
    }

    fn value(&mut self) -> Result<Rational, FormatError> {
        let (start, text) = self.token(|c| !c.is_whitespace());
        if text.is_empty() {
            return Err(self.error(start, "expected a value"));
        }
        text.parse()
            .map_err(|_| self.error(start, format!("`{text}` is not a fraction or decimal")))
    }

    fn end(&mut self) -> Result<(), FormatError> {
        self.skip_ws();
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(self.error(self.pos, "unexpected trailing text"))
        }
    }
}

/// Significant lines: number, text with comments removed.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("")))
        .filter(|(_, content)| !content.trim().is_empty())
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
    previous_line: usize,
) -> Result<Cursor<'a>, FormatError> {
    let (line, text) = lines.next().ok_or_else(|| FormatError::Parse {
        line: previous_line + 1,
        column: 1,
        message: format!("expected `{key}:` line"),
    })?;
    let mut cursor = Cursor { text, pos: 0, line };
    cursor.skip_ws();
    let label = format!("{key}:");
    if !text[cursor.pos..].starts_with(&label) {
        return Err(cursor.error(cursor.pos, format!("expected `{label}`")));
    }
    cursor.pos += label.len();
    Ok(cursor)
}

pub fn parse_measure_file(text: &str) -> Result<MeasureSpec, FormatError> {
    let mut lines = significant_lines(text);

    let mut cursor = header(&mut lines, "universe", 0)?;
    let mut names = Vec::new();
    loop {
        let (start, name) = cursor.token(|c| !c.is_whitespace());
        if name.is_empty() {
            break;
        }
        names.push((start, name));
    }
    let universe = Universe::new(names.iter().map(|(_, n)| *n)).map_err(|e| {
        let at = match &e {
            Error::BadAtomName(bad) | Error::DuplicateAtom(bad) => names
                .iter()
                .rev()
                .find(|(_, n)| n == bad)
                .map_or(cursor.pos, |(p, _)| *p),
            Error::TooManyAtoms(_) => names[crate::universe::MAX_ATOMS].0,
            _ => cursor.pos,
        };
        cursor.error(at, e.to_string())
    })?;

    let mut cursor = header(&mut lines, "kind", cursor.line)?;
    let (start, word) = cursor.token(|c| !c.is_whitespace());
    let kind = Kind::from_name(word)
        .ok_or_else(|| cursor.error(start, format!("unknown kind `{word}`, expected table, mass, prob or poss")))?;
    cursor.end()?;

    // Entries keyed by event (atoms are singletons), with the line given.
    let mut entries: BTreeMap<Event, (Rational, usize)> = BTreeMap::new();
    for (line, text) in lines {
        let mut cursor = Cursor { text, pos: 0, line };
        let (start, word) = cursor.token(|c| c.is_ascii_alphanumeric());
        if word != kind.keyword() {
            return Err(cursor.error(start, format!("expected `{}` entry for kind {kind}", kind.keyword())));
        }
        let target = match kind {
            Kind::Table | Kind::Mass => cursor.set(&universe)?,
            Kind::Prob | Kind::Poss => Event::singleton(cursor.atom(&universe)?),
        };
        cursor.expect('=', "`=`")?;
        let value = cursor.value()?;
        cursor.end()?;
        if let Some((_, first)) = entries.get(&target) {
            return Err(FormatError::DuplicateEntry {
                line,
                first: *first,
                entry: entry_label(&universe, kind, target),
            });
        }
        entries.insert(target, (value, line));
    }
    let entries: BTreeMap<Event, Rational> = entries.into_iter().map(|(e, (v, _))| (e, v)).collect();
    build(universe, kind, entries)
}

fn entry_label(u: &Universe, kind: Kind, target: Event) -> String {
    match kind {
        Kind::Table | Kind::Mass => format!("{} {}", kind.keyword(), u.format_event(target)),
        Kind::Prob | Kind::Poss => {
            let atom = target.atoms().next().expect("atom entries are singletons");
            format!("{} {}", kind.keyword(), u.atom(atom))
        }
    }
}

fn build(universe: Universe, kind: Kind, mut entries: BTreeMap<Event, Rational>) -> Result<MeasureSpec, FormatError> {
    let invalid = |source| FormatError::Validation { kind, source };
    match kind {
        Kind::Table => {
            let mut table = Vec::with_capacity(universe.event_count());
            for e in universe.events() {
                let value = match entries.remove(&e) {
                    Some(v) => v,
                    None if e.is_empty() => Rational::zero(),
                    None if e == universe.full() => Rational::one(),
                    None => return Err(FormatError::MissingEntry(entry_label(&universe, kind, e))),
                };
                table.push(value);
            }
            let f = SetFunction::new(universe, table).map_err(invalid)?;
            f.require_confidence().map_err(invalid)?;
            Ok(MeasureSpec::Table(f))
        }
        Kind::Mass => MassAssignment::new(universe, entries)
            .map(MeasureSpec::Mass)
            .map_err(invalid),
        Kind::Prob | Kind::Poss => {
            let values: Vec<Rational> = (0..universe.len())
                .map(|i| entries.remove(&Event::singleton(i)).unwrap_or_else(Rational::zero))
                .collect();
            if kind == Kind::Prob {
                ProbabilityDistribution::new(universe, values)
                    .map(MeasureSpec::Prob)
                    .map_err(invalid)
            } else {
                PossibilityDistribution::new(universe, values)
                    .map(MeasureSpec::Poss)
                    .map_err(invalid)
            }
        }
    }
}

fn emit_header(out: &mut String, u: &Universe, kind: Kind) {
    writeln!(out, "universe: {}", u.atoms().join(" ")).unwrap();
    writeln!(out, "kind: {kind}").unwrap();
}

/// Canonical form: atoms in universe order, entries in bit order, every
/// table entry and every atom written out, fractions in lowest terms.
pub fn emit_measure_file(spec: &MeasureSpec) -> String {
    let u = spec.universe();
    let kind = spec.kind();
    let mut out = String::new();
    emit_header(&mut out, u, kind);
    let mut line = |target: Event, value: &Rational| {
        writeln!(out, "{} = {value}", entry_label(u, kind, target)).unwrap();
    };
    match spec {
        MeasureSpec::Table(f) => {
            for e in u.events() {
                line(e, &f[e]);
            }
        }
        MeasureSpec::Mass(m) => {
            for (e, v) in m.focals() {
                line(*e, v);
            }
        }
        MeasureSpec::Prob(p) => {
            for (i, v) in p.weights().iter().enumerate() {
                line(Event::singleton(i), v);
            }
        }
        MeasureSpec::Poss(p) => {
            for (i, v) in p.degrees().iter().enumerate() {
                line(Event::singleton(i), v);
            }
        }
    }
    out
}

pub fn emit_table(f: &SetFunction) -> String {
    emit_measure_file(&MeasureSpec::Table(f.clone()))
}
