//! Finite universes and events as bit sets over atom indices.

use std::fmt;
use std::ops::{BitAnd, BitOr};

use crate::error::{Error, Result};

/// Hard cap on the number of atoms; full tables hold `2^16` entries.
pub const MAX_ATOMS: usize = 16;

/// A subset of the universe. Bit `i` is set iff atom `i` belongs to the event.
///
/// Events do not carry their universe; operations that need it (complement,
/// rendering) go through [`Universe`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Event(u32);

impl Event {
    pub const EMPTY: Event = Event(0);

    pub const fn from_bits(bits: u32) -> Self {
        Event(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub fn singleton(atom: usize) -> Self {
        Event(1 << atom)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, atom: usize) -> bool {
        self.0 >> atom & 1 == 1
    }

    pub fn with(self, atom: usize) -> Self {
        Event(self.0 | 1 << atom)
    }

    pub fn without(self, atom: usize) -> Self {
        Event(self.0 & !(1 << atom))
    }

    pub fn intersection(self, other: Event) -> Self {
        Event(self.0 & other.0)
    }

    pub fn union(self, other: Event) -> Self {
        Event(self.0 | other.0)
    }

    pub fn difference(self, other: Event) -> Self {
        Event(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Event) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_superset_of(self, other: Event) -> bool {
        other.is_subset_of(self)
    }

    pub fn intersects(self, other: Event) -> bool {
        self.0 & other.0 != 0
    }

    /// Atom indices in increasing order.
    pub fn atoms(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits >> i & 1 == 1)
    }

    /// All subsets of `self`, in increasing bit order, `∅` first.
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, atom) in self.atoms().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{atom}")?;
        }
        f.write_str("}")
    }
}

impl BitAnd for Event {
    type Output = Event;
    fn bitand(self, rhs: Event) -> Event {
        self.intersection(rhs)
    }
}

impl BitOr for Event {
    type Output = Event;
    fn bitor(self, rhs: Event) -> Event {
        self.union(rhs)
    }
}

/// Carry-rippler enumeration of the subsets of a bit set.
pub struct Subsets {
    set: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Event;

    fn next(&mut self) -> Option<Event> {
        let current = self.next?;
        let following = current.wrapping_sub(self.set) & self.set;
        self.next = (following != 0).then_some(following);
        Some(Event(current))
    }
}

/// An ordered list of distinct atom names. Atom `i` is bit `i` of an [`Event`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    atoms: Vec<String>,
}

fn valid_atom_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let atoms: Vec<String> = names.into_iter().map(Into::into).collect();
        if atoms.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if atoms.len() > MAX_ATOMS {
            return Err(Error::TooManyAtoms(atoms.len()));
        }
        for (i, name) in atoms.iter().enumerate() {
            if !valid_atom_name(name) {
                return Err(Error::BadAtomName(name.clone()));
            }
            if atoms[..i].contains(name) {
                return Err(Error::DuplicateAtom(name.clone()));
            }
        }
        Ok(Universe { atoms })
    }

    /// Universe with atoms named `w1 .. wn`.
    pub fn numbered(n: usize) -> Result<Self> {
        Universe::new((1..=n).map(|i| format!("w{i}")))
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom(&self, index: usize) -> &str {
        &self.atoms[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == name)
    }

    /// Number of events, `2^n`.
    pub fn event_count(&self) -> usize {
        1 << self.atoms.len()
    }

    pub fn full(&self) -> Event {
        Event(((1u64 << self.atoms.len()) - 1) as u32)
    }

    pub fn complement(&self, event: Event) -> Event {
        Event(!event.0 & self.full().0)
    }

    pub fn contains_event(&self, event: Event) -> bool {
        event.is_subset_of(self.full())
    }

    pub fn check_event(&self, event: Event) -> Result<()> {
        if self.contains_event(event) {
            Ok(())
        } else {
            Err(Error::EventOutOfUniverse(format!("{event:?}")))
        }
    }

    /// Every event, in increasing bit order (so every subset precedes its supersets).
    pub fn events(&self) -> impl Iterator<Item = Event> + Clone {
        (0..self.event_count() as u32).map(Event)
    }

    pub fn event_of<S: AsRef<str>>(&self, names: &[S]) -> Result<Event> {
        names.iter().try_fold(Event::EMPTY, |acc, name| {
            let name = name.as_ref();
            self.index_of(name)
                .map(|i| acc.with(i))
                .ok_or_else(|| Error::UnknownAtom(name.to_string()))
        })
    }

    /// Parses `{a,b}` (whitespace allowed around names and braces).
    pub fn parse_event(&self, text: &str) -> Result<Event> {
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| Error::BadEventLiteral(text.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Event::EMPTY);
        }
        let names: Vec<&str> = inner.split(',').map(str::trim).collect();
        self.event_of(&names)
    }

    /// Renders `{a,b}` with atoms in universe order.
    pub fn format_event(&self, event: Event) -> String {
        let names: Vec<&str> = event.atoms().map(|i| self.atoms[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Universe{:?}", self.atoms)
    }
}
