//! Belief bases, kernels, indifference levels and the acceptance decision.
//!
//! A confidence measure `g` accepts `A` when `g(A) > g(Ā)`. It is an
//! *acceptance function* when the accepted events are closed under
//! intersection.
//!
//! The fast decision only asks whether the kernel `K` (the intersection of
//! all accepted events) is itself accepted:
//!
//! * every accepted event contains `K` by construction, and if `K` is
//!   accepted then by monotonicity `g(A) ≥ g(K) > g(K̄) ≥ g(Ā)` for every
//!   `A ⊇ K`, so the accepted events are exactly the supersets of `K` and
//!   intersections of accepted events stay accepted;
//! * conversely, closure under intersection makes the finite intersection
//!   `K` accepted.
//!
//! [`is_acceptance_bruteforce`] checks closure pair by pair instead and is
//! kept as the independent oracle for the fast path.

use crate::error::{Error, Result};
use crate::measures::{from_mass, MassAssignment, ProbabilityDistribution};
use crate::rational::Rational;
use crate::set_function::SetFunction;
use crate::universe::{Event, Universe};

/// Largest universe accepted by the pairwise oracles.
pub const ORACLE_MAX_ATOMS: usize = 10;

pub(crate) fn is_accepted(f: &SetFunction, event: Event) -> bool {
    f.rank(event) > f.rank(f.complement(event))
}

/// Events with `g(A) > g(Ā)`, in increasing bit order.
pub fn accepted_set(f: &SetFunction) -> Result<Vec<Event>> {
    f.require_confidence()?;
    Ok(f.universe().events().filter(|&e| is_accepted(f, e)).collect())
}

/// Intersection of all accepted events; empty when two accepted events are
/// disjoint.
pub fn kernel(f: &SetFunction) -> Result<Event> {
    Ok(accepted_set(f)?
        .into_iter()
        .fold(f.universe().full(), |acc, e| acc & e))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelFailure {
    pub kernel: Event,
    pub kernel_value: Rational,
    pub complement_value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcceptanceReport {
    pub is_acceptance: bool,
    /// Always computed, even when it is not accepted.
    pub kernel: Event,
    /// Common value of the undecided events; present iff `is_acceptance` and
    /// `|K| ≥ 2`.
    pub indifference_level: Option<Rational>,
    pub accepted_count: usize,
    pub failure_witness: Option<KernelFailure>,
}

/// Decides whether `f` is an acceptance function.
///
/// For acceptance functions with `|K| ≥ 2`, every event that neither
/// contains `K` nor avoids it must carry the same value `k`; a non-uniform
/// scan is reported as `IndifferenceViolation`, which no valid confidence
/// measure can trigger.
pub fn is_acceptance(f: &SetFunction) -> Result<AcceptanceReport> {
    let accepted = accepted_set(f)?;
    let u = f.universe();
    let kernel = accepted.iter().fold(u.full(), |acc, &e| acc & e);
    let co_kernel = u.complement(kernel);
    if !is_accepted(f, kernel) {
        return Ok(AcceptanceReport {
            is_acceptance: false,
            kernel,
            indifference_level: None,
            accepted_count: accepted.len(),
            failure_witness: Some(KernelFailure {
                kernel,
                kernel_value: f[kernel].clone(),
                complement_value: f[co_kernel].clone(),
            }),
        });
    }

    let mut level: Option<Event> = None;
    for event in u.events() {
        if event.is_superset_of(kernel) || !event.intersects(kernel) {
            continue;
        }
        match level {
            None => level = Some(event),
            Some(first) if f.rank(first) != f.rank(event) => {
                return Err(Error::IndifferenceViolation(format!(
                    "g({}) = {} but g({}) = {}",
                    u.format_event(first),
                    f[first],
                    u.format_event(event),
                    f[event]
                )))
            }
            Some(_) => {}
        }
    }
    Ok(AcceptanceReport {
        is_acceptance: true,
        kernel,
        indifference_level: level.map(|e| f[e].clone()),
        accepted_count: accepted.len(),
        failure_witness: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureVerdict {
    pub is_acceptance: bool,
    /// Least pair `(A, B)`, `A < B` in bit order, of accepted events whose
    /// intersection is not accepted.
    pub witness: Option<(Event, Event)>,
}

/// Pairwise closure check comparing table values directly.
pub fn is_acceptance_bruteforce(f: &SetFunction) -> Result<ClosureVerdict> {
    let n = f.universe().len();
    if n > ORACLE_MAX_ATOMS {
        return Err(Error::UniverseTooLargeForOracle {
            n,
            max: ORACLE_MAX_ATOMS,
        });
    }
    f.require_confidence()?;
    let u = f.universe();
    let accepted = |a: Event| f[a] > f[u.complement(a)];
    let base: Vec<Event> = u.events().filter(|&a| accepted(a)).collect();
    for (i, &a) in base.iter().enumerate() {
        for &b in &base[i + 1..] {
            // g(A∩B) > g(Ā∪B̄)
            if !accepted(a & b) {
                return Ok(ClosureVerdict {
                    is_acceptance: false,
                    witness: Some((a, b)),
                });
            }
        }
    }
    Ok(ClosureVerdict {
        is_acceptance: true,
        witness: None,
    })
}

/// Finds accepted `A`, `B` with `A ∩ B` not accepted by folding the accepted
/// events in order; linear in the number of events.
pub(crate) fn chain_witness(f: &SetFunction, member: impl Fn(Event) -> bool) -> Option<(Event, Event)> {
    let mut current: Option<Event> = None;
    for event in f.universe().events().filter(|&e| member(e)) {
        match current {
            None => current = Some(event),
            Some(acc) => {
                let next = acc & event;
                if !member(next) {
                    return Some((acc, event));
                }
                current = Some(next);
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnitKernel {
    /// `{A : g(A) = 1}` is exactly the up-set of this event.
    Closed(Event),
    /// Two events of value 1 whose intersection has value below 1.
    NotClosed(Event, Event),
}

/// `K* = ⋂ {A : g(A) = 1}`, returned when `g(K*) = 1`.
pub fn unit_kernel(f: &SetFunction) -> Result<UnitKernel> {
    f.require_confidence()?;
    let one = Rational::one();
    let units: Vec<Event> = f.universe().events().filter(|&e| f[e] == one).collect();
    let star = units.iter().fold(f.universe().full(), |acc, &e| acc & e);
    if f[star] == one {
        return Ok(UnitKernel::Closed(star));
    }
    for (i, &a) in units.iter().enumerate() {
        for &b in &units[i + 1..] {
            if f[a & b] < one {
                return Ok(UnitKernel::NotClosed(a, b));
            }
        }
    }
    unreachable!("a finite family closed under pairwise intersection contains its intersection")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BeliefClassification {
    /// `m({ω}) > Bel(Ω ∖ {ω})`; the kernel is `{ω}`.
    SingletonMajority(usize),
    /// A focal `K`, `|K| ≥ 2`, contained in every focal; the kernel is `K`.
    FocalCore(Event),
    /// Focals `{ω}`, `{ω'}` of equal mass plus supersets of `{ω, ω'}`.
    TwinSingletons(usize, usize),
    /// Accepted events whose intersection is not accepted.
    NotAcceptance(Event, Event),
}

impl BeliefClassification {
    pub fn name(&self) -> &'static str {
        match self {
            BeliefClassification::SingletonMajority(_) => "singleton-majority",
            BeliefClassification::FocalCore(_) => "focal-core",
            BeliefClassification::TwinSingletons(..) => "twin-singletons",
            BeliefClassification::NotAcceptance(..) => "not-acceptance",
        }
    }

    pub fn is_acceptance(&self) -> bool {
        !matches!(self, BeliefClassification::NotAcceptance(..))
    }

    /// Kernel implied by the positive cases.
    pub fn kernel(&self) -> Option<Event> {
        match *self {
            BeliefClassification::SingletonMajority(a) => Some(Event::singleton(a)),
            BeliefClassification::FocalCore(k) => Some(k),
            BeliefClassification::TwinSingletons(a, b) => Some(Event::singleton(a) | Event::singleton(b)),
            BeliefClassification::NotAcceptance(..) => None,
        }
    }
}

/// Structural classification of the belief function of `mass`, read off
/// the focal sets alone.
pub fn classify_belief(mass: &MassAssignment) -> BeliefClassification {
    let u = mass.universe();
    let focals = mass.focals();

    for atom in 0..u.len() {
        let single = Event::singleton(atom);
        let avoiding = mass.belief(u.complement(single));
        if mass.mass(single) > avoiding {
            return BeliefClassification::SingletonMajority(atom);
        }
    }

    let core = focals.keys().fold(u.full(), |acc, &e| acc & e);
    if core.len() >= 2 && focals.contains_key(&core) {
        return BeliefClassification::FocalCore(core);
    }

    let singles: Vec<(Event, &Rational)> = focals
        .iter()
        .filter(|(e, _)| e.len() == 1)
        .map(|(e, v)| (*e, v))
        .collect();
    if let [(a, ma), (b, mb)] = singles[..] {
        let pair = a | b;
        let rest_contain_pair = focals
            .keys()
            .all(|e| *e == a || *e == b || e.is_superset_of(pair));
        if ma == mb && rest_contain_pair {
            let first = a.atoms().next().expect("singleton");
            let second = b.atoms().next().expect("singleton");
            return BeliefClassification::TwinSingletons(first, second);
        }
    }

    let (bel, _) = from_mass(mass);
    let (a, b) = chain_witness(&bel, |e| is_accepted(&bel, e))
        .expect("no structural case applies, so the belief base is not closed under intersection");
    BeliefClassification::NotAcceptance(a, b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProbClassification {
    MajorityAtom(usize),
    HalfHalfPair(usize, usize),
    NotAcceptance(Event, Event),
}

impl ProbClassification {
    pub fn name(&self) -> &'static str {
        match self {
            ProbClassification::MajorityAtom(_) => "majority-atom",
            ProbClassification::HalfHalfPair(..) => "half-half-pair",
            ProbClassification::NotAcceptance(..) => "not-acceptance",
        }
    }

    pub fn is_acceptance(&self) -> bool {
        !matches!(self, ProbClassification::NotAcceptance(..))
    }
}

/// A probability measure is an acceptance function iff some atom weighs
/// more than 1/2 or two atoms weigh exactly 1/2.
///
/// Otherwise, with atoms sorted by decreasing weight, the shortest prefix
/// `A` and the shortest suffix `B` of weight above 1/2 are both accepted
/// while `A ∩ B` is not. When the heaviest atom weighs exactly 1/2 (and no
/// other does) the suffix construction degenerates to `Ω`; the witness is
/// then `{ω1, ω2}` and `{ω1, ω3}`, which meet in `{ω1}` of weight 1/2.
pub fn classify_probability(dist: &ProbabilityDistribution) -> ProbClassification {
    let half = Rational::half();
    let weights = dist.weights();
    if let Some(atom) = weights.iter().position(|w| *w > half) {
        return ProbClassification::MajorityAtom(atom);
    }
    let halves: Vec<usize> = (0..weights.len()).filter(|&i| weights[i] == half).collect();
    if let [a, b] = halves[..] {
        return ProbClassification::HalfHalfPair(a, b);
    }

    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&a, &b| weights[b].cmp(&weights[a]).then(a.cmp(&b)));
    if weights[order[0]] == half {
        let head = Event::singleton(order[0]);
        return ProbClassification::NotAcceptance(
            head.with(order[1]),
            head.with(order[2]),
        );
    }

    let mut prefix = Event::EMPTY;
    for &atom in &order {
        prefix = prefix.with(atom);
        if dist.probability(prefix) > half {
            break;
        }
    }
    let mut suffix = Event::EMPTY;
    for &atom in order.iter().rev() {
        suffix = suffix.with(atom);
        if dist.probability(suffix) > half {
            break;
        }
    }
    ProbClassification::NotAcceptance(prefix, suffix)
}

fn not_closed(u: &Universe, a: Event, b: Event) -> String {
    format!(
        "{} and {} accepted, {} not",
        u.format_event(a),
        u.format_event(b),
        u.format_event(a & b)
    )
}

/// One-line reason behind a classification.
pub fn describe_belief(u: &Universe, c: &BeliefClassification) -> String {
    match *c {
        BeliefClassification::SingletonMajority(a) => format!("singleton {{{}}} outweighs its complement", u.atom(a)),
        BeliefClassification::FocalCore(k) => format!("focal core {}", u.format_event(k)),
        BeliefClassification::TwinSingletons(a, b) => {
            format!("equal singletons {{{}}} {{{}}}, other focals contain both", u.atom(a), u.atom(b))
        }
        BeliefClassification::NotAcceptance(a, b) => not_closed(u, a, b),
    }
}

pub fn describe_probability(u: &Universe, c: &ProbClassification) -> String {
    match *c {
        ProbClassification::MajorityAtom(a) => format!("atom {} has probability above 1/2", u.atom(a)),
        ProbClassification::HalfHalfPair(a, b) => format!("atoms {} and {} have probability 1/2 each", u.atom(a), u.atom(b)),
        ProbClassification::NotAcceptance(a, b) => not_closed(u, a, b),
    }
}
