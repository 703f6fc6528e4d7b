//! Set functions over the full event lattice, the confidence-measure axioms,
//! duality and the Möbius transform.

use std::ops::Index;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::universe::{Event, Universe};

/// A table of exact values indexed by event bit pattern.
///
/// Construction only checks the table shape and that values lie in `[0,1]`;
/// the confidence axioms are checked by [`SetFunction::validate_confidence`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetFunction {
    universe: Universe,
    table: Vec<Rational>,
    /// Dense rank of each entry among the distinct table values. Every
    /// structural decision compares table values only, so sweeps compare
    /// ranks instead of big rationals.
    ranks: Vec<u32>,
}

impl SetFunction {
    pub fn new(universe: Universe, table: Vec<Rational>) -> Result<Self> {
        if table.len() != universe.event_count() {
            return Err(Error::TableSize {
                expected: universe.event_count(),
                got: table.len(),
            });
        }
        if let Some((i, value)) = table.iter().enumerate().find(|(_, v)| !v.is_unit()) {
            return Err(Error::ValueOutOfRange {
                event: universe.format_event(Event::from_bits(i as u32)),
                value: value.clone(),
            });
        }
        let ranks = dense_ranks(&table);
        Ok(SetFunction {
            universe,
            table,
            ranks,
        })
    }

    pub fn from_fn(universe: Universe, mut value: impl FnMut(Event) -> Rational) -> Result<Self> {
        let table = universe.events().map(&mut value).collect();
        SetFunction::new(universe, table)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn value(&self, event: Event) -> &Rational {
        &self.table[event.index()]
    }

    pub fn table(&self) -> &[Rational] {
        &self.table
    }

    pub fn iter(&self) -> impl Iterator<Item = (Event, &Rational)> {
        self.universe.events().zip(self.table.iter())
    }

    pub(crate) fn rank(&self, event: Event) -> u32 {
        self.ranks[event.index()]
    }

    pub fn complement(&self, event: Event) -> Event {
        self.universe.complement(event)
    }

    /// Checks `g(∅) = 0`, `g(Ω) = 1` and monotonicity.
    ///
    /// Monotonicity is checked on covering pairs `(A, A ∪ {ω})` only, which
    /// implies it on every comparable pair by transitivity.
    pub fn validate_confidence(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let bottom = self.value(Event::EMPTY);
        if !bottom.is_zero() {
            violations.push(Violation::EmptyNotZero {
                value: bottom.clone(),
            });
        }
        let top = self.value(self.universe.full());
        if *top != Rational::one() {
            violations.push(Violation::FullNotOne { value: top.clone() });
        }
        let n = self.universe.len();
        for smaller in self.universe.events() {
            for atom in (0..n).filter(|&i| !smaller.contains(i)) {
                let larger = smaller.with(atom);
                if self.rank(smaller) > self.rank(larger) {
                    violations.push(Violation::NotMonotone {
                        smaller,
                        larger,
                        smaller_value: self.value(smaller).clone(),
                        larger_value: self.value(larger).clone(),
                    });
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn is_confidence_measure(&self) -> bool {
        self.validate_confidence().ok()
    }

    /// Fails with `NotAConfidenceMeasure` describing the first violation.
    pub fn require_confidence(&self) -> Result<()> {
        let report = self.validate_confidence();
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::NotAConfidenceMeasure(v.describe(&self.universe))),
        }
    }

    /// `h(A) = 1 - g(Ā)`.
    pub fn dual(&self) -> SetFunction {
        let table = self
            .universe
            .events()
            .map(|e| self.value(self.complement(e)).complement())
            .collect();
        SetFunction::new(self.universe.clone(), table).expect("dual of a [0,1] table stays in [0,1]")
    }

    /// Möbius inverse `m(A) = Σ_{B⊆A} (-1)^{|A∖B|} g(B)`, computed with the
    /// in-place subset-difference transform in `n·2^(n-1)` subtractions.
    pub fn moebius(&self) -> SignedMass {
        let mut values = self.table.clone();
        for atom in 0..self.universe.len() {
            let bit = 1usize << atom;
            for mask in 0..values.len() {
                if mask & bit != 0 {
                    let lower = values[mask ^ bit].clone();
                    values[mask] = &values[mask] - &lower;
                }
            }
        }
        SignedMass {
            universe: self.universe.clone(),
            values,
        }
    }

    /// True iff the Möbius inverse is non-negative everywhere. On failure the
    /// witness is the event carrying the most negative mass.
    pub fn is_belief_function(&self) -> Result<BeliefCheck> {
        self.require_confidence()?;
        let mass = self.moebius();
        let witness = mass
            .most_negative()
            .filter(|(_, v)| v.is_negative())
            .map(|(e, v)| (e, v.clone()));
        Ok(BeliefCheck {
            is_belief: witness.is_none(),
            witness,
        })
    }
}

impl Index<Event> for SetFunction {
    type Output = Rational;
    fn index(&self, event: Event) -> &Rational {
        self.value(event)
    }
}

fn dense_ranks(table: &[Rational]) -> Vec<u32> {
    let mut order: Vec<usize> = (0..table.len()).collect();
    order.sort_by(|&a, &b| table[a].cmp(&table[b]));
    let mut ranks = vec![0u32; table.len()];
    let mut rank = 0u32;
    for (k, &i) in order.iter().enumerate() {
        if k > 0 && table[i] != table[order[k - 1]] {
            rank += 1;
        }
        ranks[i] = rank;
    }
    ranks
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Axiom i: `g(∅) = 0`.
    EmptyNotZero { value: Rational },
    /// Axiom ii: `g(Ω) = 1`.
    FullNotOne { value: Rational },
    /// Axiom iii on a covering pair `smaller ⊂ larger`.
    NotMonotone {
        smaller: Event,
        larger: Event,
        smaller_value: Rational,
        larger_value: Rational,
    },
}

impl Violation {
    pub fn rule_id(&self) -> &'static str {
        match self {
            Violation::EmptyNotZero { .. } => "empty-set",
            Violation::FullNotOne { .. } => "full-set",
            Violation::NotMonotone { .. } => "monotonicity",
        }
    }

    pub fn describe(&self, universe: &Universe) -> String {
        match self {
            Violation::EmptyNotZero { value } => format!("g({{}}) = {value}, expected 0"),
            Violation::FullNotOne { value } => {
                format!("g({}) = {value}, expected 1", universe.format_event(universe.full()))
            }
            Violation::NotMonotone {
                smaller,
                larger,
                smaller_value,
                larger_value,
            } => format!(
                "g({}) = {smaller_value} > g({}) = {larger_value}",
                universe.format_event(*smaller),
                universe.format_event(*larger)
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeliefCheck {
    pub is_belief: bool,
    pub witness: Option<(Event, Rational)>,
}

/// A possibly signed mass over events, as produced by the Möbius transform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMass {
    universe: Universe,
    values: Vec<Rational>,
}

impl SignedMass {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn get(&self, event: Event) -> &Rational {
        &self.values[event.index()]
    }

    /// Nonzero entries in increasing bit order.
    pub fn entries(&self) -> impl Iterator<Item = (Event, &Rational)> {
        self.universe
            .events()
            .zip(self.values.iter())
            .filter(|(_, v)| !v.is_zero())
    }

    pub fn total(&self) -> Rational {
        self.values.iter().sum()
    }

    /// The least entry; ties go to the smallest bit pattern.
    pub fn most_negative(&self) -> Option<(Event, &Rational)> {
        self.universe
            .events()
            .zip(self.values.iter())
            .reduce(|best, cur| if cur.1 < best.1 { cur } else { best })
    }

    pub fn has_negative(&self) -> bool {
        self.values.iter().any(Rational::is_negative)
    }

    /// Zeta transform: `Σ_{B⊆A} m(B)` for every `A`, as a raw table.
    pub fn accumulate(&self) -> Vec<Rational> {
        let mut values = self.values.clone();
        for atom in 0..self.universe.len() {
            let bit = 1usize << atom;
            for mask in 0..values.len() {
                if mask & bit != 0 {
                    let lower = values[mask ^ bit].clone();
                    values[mask] = &values[mask] + &lower;
                }
            }
        }
        values
    }
}
