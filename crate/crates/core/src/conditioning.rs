//! Conditioned belief bases, context tolerance, independence, and the
//! probabilistic and possibilistic conditioning rules.
//!
//! Conditioning works at the level of the belief base:
//! `AC(g | C) = {A : g(A∩C) > g(Ā∩C)}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::acceptance::{is_acceptance, ORACLE_MAX_ATOMS};
use crate::error::{Error, Result};
use crate::measures::{PossibilityDistribution, ProbabilityDistribution};
use crate::rational::Rational;
use crate::set_function::SetFunction;
use crate::universe::{Event, Universe};
use crate::witness::Witness;

/// Default exhaustive cap for property (A), `8^n` triples.
pub const PROPERTY_A_MAX_ATOMS: usize = 8;
/// Default exhaustive cap for property (B), `4^n` assignments.
pub const PROPERTY_B_MAX_ATOMS: usize = 10;

pub(crate) fn in_base(f: &SetFunction, context: Event, event: Event) -> bool {
    f.rank(event & context) > f.rank(f.complement(event) & context)
}

fn nonempty(context: Event) -> Result<()> {
    if context.is_empty() {
        Err(Error::EmptyContext)
    } else {
        Ok(())
    }
}

/// `AC(f | C)`, in increasing bit order.
pub fn conditioned_base(f: &SetFunction, context: Event) -> Result<Vec<Event>> {
    nonempty(context)?;
    f.universe().check_event(context)?;
    f.require_confidence()?;
    Ok(f.universe()
        .events()
        .filter(|&a| in_base(f, context, a))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionedReport {
    pub context: Event,
    pub base_size: usize,
    pub is_belief_set: bool,
    /// Least pair of base events whose intersection is outside the base.
    pub violation_witness: Option<(Event, Event)>,
    /// Intersection of the base, when it is a nonempty belief set.
    pub conditioned_kernel: Option<Event>,
}

/// Checks closure of `AC(f | C)` under intersection, pair by pair.
pub fn is_conditioned_base_belief_set(f: &SetFunction, context: Event) -> Result<ConditionedReport> {
    let n = f.universe().len();
    if n > ORACLE_MAX_ATOMS {
        return Err(Error::UniverseTooLargeForOracle {
            n,
            max: ORACLE_MAX_ATOMS,
        });
    }
    let base = conditioned_base(f, context)?;
    let mut witness = None;
    'outer: for (i, &a) in base.iter().enumerate() {
        for &b in &base[i + 1..] {
            if !in_base(f, context, a & b) {
                witness = Some((a, b));
                break 'outer;
            }
        }
    }
    let conditioned_kernel = match (&witness, base.is_empty()) {
        (None, false) => Some(base.iter().fold(f.universe().full(), |acc, &e| acc & e)),
        _ => None,
    };
    Ok(ConditionedReport {
        context,
        base_size: base.len(),
        is_belief_set: witness.is_none(),
        violation_witness: witness,
        conditioned_kernel,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    A,
    B,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::A => "A",
            Property::B => "B",
        }
    }

    pub fn default_max_atoms(self) -> usize {
        match self {
            Property::A => PROPERTY_A_MAX_ATOMS,
            Property::B => PROPERTY_B_MAX_ATOMS,
        }
    }
}

/// How a sweep covered its search space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    /// Every case was checked; a clean result is a proof.
    Exhaustive,
    /// Random cases only; a clean result means "no counterexample found".
    Sampled { samples: usize },
}

impl SweepMode {
    pub fn describe(self) -> String {
        match self {
            SweepMode::Exhaustive => "exhaustive".to_string(),
            SweepMode::Sampled { samples } => format!("sampled, {samples} samples"),
        }
    }
}

/// Sweep limits. `max_atoms: None` uses the per-check default cap.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_atoms: Option<usize>,
    /// Sampled fallback above the cap; without it an oversized universe is an
    /// error.
    pub samples: Option<usize>,
    pub seed: u64,
}

impl SweepConfig {
    pub(crate) fn mode(&self, n: usize, default_cap: usize) -> Result<SweepMode> {
        let max = self.max_atoms.unwrap_or(default_cap);
        if n <= max {
            Ok(SweepMode::Exhaustive)
        } else if let Some(samples) = self.samples {
            Ok(SweepMode::Sampled { samples })
        } else {
            Err(Error::UniverseTooLargeForExhaustive { n, max })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: Property,
    pub holds: bool,
    pub mode: SweepMode,
    pub counterexample: Option<Witness>,
    /// Verdict of the other property when both were run.
    pub agrees_with_other: Option<bool>,
}

fn witness_a(f: &SetFunction, c: Event, s: Event, t: Event) -> Witness {
    let u = f.universe();
    let (not_s, not_t) = (u.complement(s), u.complement(t));
    Witness {
        events: vec![("C", c), ("S", s), ("T", t)],
        values: vec![
            ("g(S∩C)".into(), f[s & c].clone()),
            ("g(S̄∩C)".into(), f[not_s & c].clone()),
            ("g(T∩C)".into(), f[t & c].clone()),
            ("g(T̄∩C)".into(), f[not_t & c].clone()),
            ("g(S∩T∩C)".into(), f[s & t & c].clone()),
            ("g((S̄∪T̄)∩C)".into(), f[(not_s | not_t) & c].clone()),
        ],
    }
}

fn witness_b(f: &SetFunction, a: Event, b: Event, e: Event) -> Witness {
    Witness {
        events: vec![("A", a), ("B", b), ("E", e)],
        values: vec![
            ("g(A∪E)".into(), f[a | e].clone()),
            ("g(B)".into(), f[b].clone()),
            ("g(B∪E)".into(), f[b | e].clone()),
            ("g(A)".into(), f[a].clone()),
            ("g(E)".into(), f[e].clone()),
            ("g(A∪B)".into(), f[a | b].clone()),
        ],
    }
}

/// Property (A) at `(C, S, T)`: premises hold but the conclusion fails.
fn violates_a(f: &SetFunction, c: Event, s: Event, t: Event) -> bool {
    in_base(f, c, s) && in_base(f, c, t) && !in_base(f, c, s & t)
}

/// Property (B) at mutually exclusive `(A, B, E)`.
fn violates_b(f: &SetFunction, a: Event, b: Event, e: Event) -> bool {
    f.rank(a | e) > f.rank(b) && f.rank(b | e) > f.rank(a) && f.rank(e) <= f.rank(a | b)
}

/// Checks property (A): for every context `C` the conditioned base
/// `AC(f | C)` is closed under pairwise intersection.
///
/// The exhaustive sweep visits `(C, S, T)` in lexicographic bit order and
/// reports the least counterexample.
pub fn check_property_a(f: &SetFunction, config: &SweepConfig) -> Result<PropertyReport> {
    f.require_confidence()?;
    let u = f.universe();
    let mode = config.mode(u.len(), PROPERTY_A_MAX_ATOMS)?;
    let counterexample = match mode {
        SweepMode::Exhaustive => sweep_a(f),
        SweepMode::Sampled { samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let top = u.full().bits();
            (0..samples).find_map(|_| {
                let c = Event::from_bits(rng.gen_range(0..=top));
                let s = Event::from_bits(rng.gen_range(0..=top));
                let t = Event::from_bits(rng.gen_range(0..=top));
                violates_a(f, c, s, t).then_some((c, s, t))
            })
        }
    };
    Ok(PropertyReport {
        property: Property::A,
        holds: counterexample.is_none(),
        mode,
        counterexample: counterexample.map(|(c, s, t)| witness_a(f, c, s, t)),
        agrees_with_other: None,
    })
}

fn sweep_a(f: &SetFunction) -> Option<(Event, Event, Event)> {
    let u = f.universe();
    for c in u.events() {
        // Membership of every event in AC(f | C), then pairwise closure.
        let base: Vec<bool> = u.events().map(|a| in_base(f, c, a)).collect();
        if !base.iter().any(|&m| m) {
            continue;
        }
        for s in u.events().filter(|s| base[s.index()]) {
            for t in u.events().filter(|t| base[t.index()]) {
                if !base[(s & t).index()] {
                    return Some((c, s, t));
                }
            }
        }
    }
    None
}

/// Checks property (B) over mutually exclusive triples `(A, B, E)`.
///
/// The exhaustive sweep enumerates `A`, then `B ⊆ Ā`, then `E ⊆ (A∪B)‾`, each
/// in increasing bit order, and reports the least counterexample.
pub fn check_property_b(f: &SetFunction, config: &SweepConfig) -> Result<PropertyReport> {
    f.require_confidence()?;
    let u = f.universe();
    let mode = config.mode(u.len(), PROPERTY_B_MAX_ATOMS)?;
    let counterexample = match mode {
        SweepMode::Exhaustive => sweep_b(f),
        SweepMode::Sampled { samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            (0..samples).find_map(|_| {
                let (mut a, mut b, mut e) = (Event::EMPTY, Event::EMPTY, Event::EMPTY);
                for atom in 0..u.len() {
                    match rng.gen_range(0..4) {
                        0 => a = a.with(atom),
                        1 => b = b.with(atom),
                        2 => e = e.with(atom),
                        _ => {}
                    }
                }
                violates_b(f, a, b, e).then_some((a, b, e))
            })
        }
    };
    Ok(PropertyReport {
        property: Property::B,
        holds: counterexample.is_none(),
        mode,
        counterexample: counterexample.map(|(a, b, e)| witness_b(f, a, b, e)),
        agrees_with_other: None,
    })
}

fn sweep_b(f: &SetFunction) -> Option<(Event, Event, Event)> {
    let u = f.universe();
    for a in u.events() {
        for b in u.complement(a).subsets() {
            for e in u.complement(a | b).subsets() {
                if violates_b(f, a, b, e) {
                    return Some((a, b, e));
                }
            }
        }
    }
    None
}

/// Runs both properties and records whether their verdicts agree. The two
/// are equivalent for every confidence measure, so disagreement exposes a
/// bug in one of the sweeps.
pub fn check_context_tolerance(f: &SetFunction, config: &SweepConfig) -> Result<(PropertyReport, PropertyReport)> {
    let mut a = check_property_a(f, config)?;
    let mut b = check_property_b(f, config)?;
    let agree = a.holds == b.holds;
    a.agrees_with_other = Some(agree);
    b.agrees_with_other = Some(agree);
    Ok((a, b))
}

/// `A` is accepted and stays accepted in context `C`.
pub fn is_independent(f: &SetFunction, event: Event, context: Event) -> Result<bool> {
    nonempty(context)?;
    f.universe().check_event(event)?;
    f.universe().check_event(context)?;
    f.require_confidence()?;
    Ok(in_base(f, f.universe().full(), event) && in_base(f, context, event))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UpdateClass {
    /// The context meets the kernel.
    Expansion,
    /// The context avoids the kernel and has positive confidence.
    Revision,
    /// The context avoids the kernel and has zero confidence.
    Undefined,
}

impl UpdateClass {
    pub fn name(self) -> &'static str {
        match self {
            UpdateClass::Expansion => "expansion",
            UpdateClass::Revision => "revision",
            UpdateClass::Undefined => "undefined",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpdateReport {
    pub class: UpdateClass,
    pub kernel: Event,
    /// `C ∩ K` when `g(C∩K) > g(C∩K̄)`.
    pub kernel_candidate: Option<Event>,
    /// Whether the candidate is the kernel of the conditioned base, when the
    /// base was checked (universes up to the oracle cap).
    pub candidate_confirmed: Option<bool>,
}

/// Classifies conditioning on `C` as an expansion or a genuine revision of
/// the belief set of acceptance function `f`.
pub fn classify_update(f: &SetFunction, context: Event) -> Result<UpdateReport> {
    nonempty(context)?;
    f.universe().check_event(context)?;
    let report = is_acceptance(f)?;
    let u = f.universe();
    if !report.is_acceptance {
        return Err(Error::NotAcceptanceFunction(u.format_event(report.kernel)));
    }
    let kernel = report.kernel;
    let class = if context.intersects(kernel) {
        UpdateClass::Expansion
    } else if f[context].is_positive() {
        UpdateClass::Revision
    } else {
        UpdateClass::Undefined
    };
    let inside = context & kernel;
    let outside = context & u.complement(kernel);
    let kernel_candidate = (f.rank(inside) > f.rank(outside)).then_some(inside);
    let candidate_confirmed = match kernel_candidate {
        Some(candidate) if u.len() <= ORACLE_MAX_ATOMS => {
            let conditioned = is_conditioned_base_belief_set(f, context)?;
            Some(conditioned.conditioned_kernel == Some(candidate))
        }
        _ => None,
    };
    Ok(UpdateReport {
        class,
        kernel,
        kernel_candidate,
        candidate_confirmed,
    })
}

/// Bayesian conditioning: `p(ω)/P(C)` on `C`, zero elsewhere.
pub fn condition_probability(dist: &ProbabilityDistribution, context: Event) -> Result<ProbabilityDistribution> {
    let u = dist.universe();
    u.check_event(context)?;
    let mass = dist.probability(context);
    if mass.is_zero() {
        return Err(Error::ZeroProbabilityContext(u.format_event(context)));
    }
    let weights = (0..u.len())
        .map(|i| {
            if context.contains(i) {
                dist.weight(i) / &mass
            } else {
                Rational::zero()
            }
        })
        .collect();
    ProbabilityDistribution::new(u.clone(), weights)
}

/// The distribution of `Π(· | C)`: atoms of `C` reaching `Π(C)` are raised
/// to 1, other atoms of `C` keep their degree, atoms outside `C` drop to 0.
pub fn condition_possibility_distribution(
    dist: &PossibilityDistribution,
    context: Event,
) -> Result<PossibilityDistribution> {
    let u = dist.universe();
    u.check_event(context)?;
    let level = dist.possibility(context);
    if level.is_zero() {
        return Err(Error::ZeroPossibilityContext(u.format_event(context)));
    }
    let degrees = (0..u.len())
        .map(|i| match dist.degree(i) {
            _ if !context.contains(i) => Rational::zero(),
            d if *d == level => Rational::one(),
            d => d.clone(),
        })
        .collect();
    PossibilityDistribution::new(u.clone(), degrees)
}

/// Returns `(Π(· | C), N(· | C))` where `Π(A | C)` is the greatest solution
/// of `Π(A∩C) = min(Π(A | C), Π(C))` and `N(A | C) = 1 - Π(Ā | C)`.
pub fn condition_possibility(dist: &PossibilityDistribution, context: Event) -> Result<(SetFunction, SetFunction)> {
    let u = dist.universe();
    u.check_event(context)?;
    let level = dist.possibility(context);
    if level.is_zero() {
        return Err(Error::ZeroPossibilityContext(u.format_event(context)));
    }
    let conditional = |a: Event| {
        let joint = dist.possibility(a & context);
        if joint == level {
            Rational::one()
        } else {
            joint
        }
    };
    let pi = SetFunction::from_fn(u.clone(), conditional)?;
    let nec = SetFunction::from_fn(u.clone(), |a| conditional(u.complement(a)).complement())?;
    Ok((pi, nec))
}

/// Renders an event list as `{a} {a,b}`.
pub fn format_events(u: &Universe, events: &[Event]) -> String {
    events
        .iter()
        .map(|&e| u.format_event(e))
        .collect::<Vec<_>>()
        .join(" ")
}
