//! The conditional consequence relation `A |~ B` induced by a confidence
//! measure, with checkers for KLM-style rules.
//!
//! `A |~ B` holds when `B` is accepted in context `A`, that is
//! `f(A∩B) > f(A∩B̄)`. REF and RW follow from monotonicity for every
//! measure, and AND is exactly closure of each conditioned base. OR, CM and
//! CUT are only checked empirically: a clean result says nothing beyond the
//! measure at hand.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conditioning::{in_base, SweepConfig, SweepMode};
use crate::error::Result;
use crate::set_function::SetFunction;
use crate::universe::Event;
use crate::witness::Witness;

/// Default exhaustive cap: `2^(3n)` triples.
pub const KLM_MAX_ATOMS: usize = 6;
/// Samples drawn per rule above the cap unless configured otherwise.
pub const KLM_DEFAULT_SAMPLES: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conditional {
    pub antecedent: Event,
    pub consequent: Event,
}

/// `A |~ B`.
pub fn entails(f: &SetFunction, antecedent: Event, consequent: Event) -> Result<bool> {
    f.universe().check_event(antecedent)?;
    f.universe().check_event(consequent)?;
    f.require_confidence()?;
    Ok(in_base(f, antecedent, consequent))
}

pub fn holds(f: &SetFunction, c: Conditional) -> Result<bool> {
    entails(f, c.antecedent, c.consequent)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KlmProperty {
    /// `A |~ A` when `f(A) > 0`.
    Ref,
    /// `A |~ B`, `B ⊆ B'` give `A |~ B'`.
    Rw,
    /// `A |~ B`, `A |~ C` give `A |~ B∩C`.
    And,
    /// `A |~ C`, `B |~ C` give `A∪B |~ C`.
    Or,
    /// `A |~ B`, `A |~ C` give `A∩B |~ C`.
    Cm,
    /// `A∩B |~ C`, `A |~ B` give `A |~ C`.
    Cut,
}

impl KlmProperty {
    pub const ALL: [KlmProperty; 6] = [
        KlmProperty::Ref,
        KlmProperty::Rw,
        KlmProperty::And,
        KlmProperty::Or,
        KlmProperty::Cm,
        KlmProperty::Cut,
    ];

    pub fn id(self) -> &'static str {
        match self {
            KlmProperty::Ref => "REF",
            KlmProperty::Rw => "RW",
            KlmProperty::And => "AND",
            KlmProperty::Or => "OR",
            KlmProperty::Cm => "CM",
            KlmProperty::Cut => "CUT",
        }
    }

    /// Whether the rule holds for every measure the checker can be handed.
    /// AND is guaranteed only under context tolerance.
    pub fn is_guaranteed(self) -> bool {
        matches!(self, KlmProperty::Ref | KlmProperty::Rw)
    }
}

impl fmt::Display for KlmProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for KlmProperty {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        KlmProperty::ALL
            .into_iter()
            .find(|p| p.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown KLM property `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KlmStatus {
    /// Every instance was checked.
    Holds,
    /// No failing instance among the samples.
    NoCounterexample { samples: usize },
    Fails(Witness),
}

impl KlmStatus {
    pub fn name(&self) -> &'static str {
        match self {
            KlmStatus::Holds => "holds",
            KlmStatus::NoCounterexample { .. } => "no-counterexample",
            KlmStatus::Fails(_) => "fails",
        }
    }

    pub fn counterexample(&self) -> Option<&Witness> {
        match self {
            KlmStatus::Fails(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlmEntry {
    pub property: KlmProperty,
    pub status: KlmStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlmReport {
    pub mode: SweepMode,
    pub entries: Vec<KlmEntry>,
}

impl KlmReport {
    pub fn status(&self, property: KlmProperty) -> Option<&KlmStatus> {
        self.entries
            .iter()
            .find(|e| e.property == property)
            .map(|e| &e.status)
    }

    pub fn all_hold(&self) -> bool {
        self.entries
            .iter()
            .all(|e| !matches!(e.status, KlmStatus::Fails(_)))
    }
}

/// Roles and events of a failing rule instance, or `None` when the instance
/// satisfies the rule.
fn instance(f: &SetFunction, p: KlmProperty, a: Event, b: Event, c: Event) -> Option<Witness> {
    let e = |x: Event, y: Event| in_base(f, x, y);
    let roles = |names: [&'static str; 3], events: [Event; 3]| {
        names.into_iter().zip(events).collect::<Vec<_>>()
    };
    let (events, conclusion) = match p {
        KlmProperty::Ref => {
            (!f[a].is_zero() && !e(a, a)).then_some((vec![("A", a)], (a, a)))?
        }
        KlmProperty::Rw => {
            // b ⊆ c plays B ⊆ B'.
            (b.is_subset_of(c) && e(a, b) && !e(a, c))
                .then(|| (roles(["A", "B", "B'"], [a, b, c]), (a, c)))?
        }
        KlmProperty::And => (e(a, b) && e(a, c) && !e(a, b & c))
            .then(|| (roles(["A", "B", "C"], [a, b, c]), (a, b & c)))?,
        KlmProperty::Or => (e(a, c) && e(b, c) && !e(a | b, c))
            .then(|| (roles(["A", "B", "C"], [a, b, c]), (a | b, c)))?,
        KlmProperty::Cm => (e(a, b) && e(a, c) && !e(a & b, c))
            .then(|| (roles(["A", "B", "C"], [a, b, c]), (a & b, c)))?,
        KlmProperty::Cut => (e(a & b, c) && e(a, b) && !e(a, c))
            .then(|| (roles(["A", "B", "C"], [a, b, c]), (a, c)))?,
    };
    // The failing conclusion, context ∩ consequent against its complement.
    let (ctx, phi) = conclusion;
    let u = f.universe();
    let (x, y) = (u.format_event(ctx), u.format_event(phi));
    let values = vec![
        (format!("f({x}∩{y})"), f[ctx & phi].clone()),
        (format!("f({x}∩¬{y})"), f[ctx & u.complement(phi)].clone()),
    ];
    Some(Witness { events, values })
}

fn sweep(f: &SetFunction, p: KlmProperty) -> Option<Witness> {
    let u = f.universe();
    match p {
        KlmProperty::Ref => u.events().find_map(|a| instance(f, p, a, a, a)),
        KlmProperty::Rw => u.events().find_map(|a| {
            u.events().find_map(|b| {
                u.complement(b)
                    .subsets()
                    .find_map(|extra| instance(f, p, a, b, b | extra))
            })
        }),
        _ => u.events().find_map(|a| {
            u.events()
                .find_map(|b| u.events().find_map(|c| instance(f, p, a, b, c)))
        }),
    }
}

fn sample(f: &SetFunction, p: KlmProperty, samples: usize, rng: &mut ChaCha8Rng) -> Option<Witness> {
    let top = f.universe().full().bits();
    (0..samples).find_map(|_| {
        let a = Event::from_bits(rng.gen_range(0..=top));
        let b = Event::from_bits(rng.gen_range(0..=top));
        let c = Event::from_bits(rng.gen_range(0..=top));
        match p {
            KlmProperty::Ref => instance(f, p, a, a, a),
            KlmProperty::Rw => instance(f, p, a, b, b | c),
            _ => instance(f, p, a, b, c),
        }
    })
}

/// Checks the requested rules. Exhaustive up to the cap (default
/// [`KLM_MAX_ATOMS`]); above it each rule is sampled, with
/// [`KLM_DEFAULT_SAMPLES`] draws unless the config sets a count.
pub fn check_klm(f: &SetFunction, properties: &BTreeSet<KlmProperty>, config: &SweepConfig) -> Result<KlmReport> {
    f.require_confidence()?;
    let config = SweepConfig {
        samples: Some(config.samples.unwrap_or(KLM_DEFAULT_SAMPLES)),
        ..*config
    };
    let mode = config.mode(f.universe().len(), KLM_MAX_ATOMS)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let entries = properties
        .iter()
        .map(|&property| {
            let status = match mode {
                SweepMode::Exhaustive => sweep(f, property).map_or(KlmStatus::Holds, KlmStatus::Fails),
                SweepMode::Sampled { samples } => sample(f, property, samples, &mut rng)
                    .map_or(KlmStatus::NoCounterexample { samples }, KlmStatus::Fails),
            };
            KlmEntry { property, status }
        })
        .collect();
    Ok(KlmReport { mode, entries })
}
