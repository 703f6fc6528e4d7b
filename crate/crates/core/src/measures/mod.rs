//! Constructors turning probability, mass and possibility inputs into set
//! functions, and the kernel-skeleton builder for acceptance functions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::set_function::SetFunction;
use crate::universe::{Event, Universe};

pub mod random;

pub use random::random_confidence;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbabilityDistribution {
    universe: Universe,
    weights: Vec<Rational>,
}

impl ProbabilityDistribution {
    pub fn new(universe: Universe, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != universe.len() {
            return Err(Error::BadDistribution(format!(
                "{} weights for {} atoms",
                weights.len(),
                universe.len()
            )));
        }
        if let Some((i, w)) = weights.iter().enumerate().find(|(_, w)| !w.is_unit()) {
            return Err(Error::BadDistribution(format!(
                "p({}) = {w} is outside [0,1]",
                universe.atom(i)
            )));
        }
        let total: Rational = weights.iter().sum();
        if total != Rational::one() {
            return Err(Error::BadDistribution(format!("weights sum to {total}, expected 1")));
        }
        Ok(ProbabilityDistribution { universe, weights })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, atom: usize) -> &Rational {
        &self.weights[atom]
    }

    pub fn probability(&self, event: Event) -> Rational {
        event.atoms().map(|i| &self.weights[i]).sum()
    }
}

/// A basic probability assignment: positive masses on nonempty focal events.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MassAssignment {
    universe: Universe,
    focals: BTreeMap<Event, Rational>,
}

impl MassAssignment {
    pub fn new(universe: Universe, focals: impl IntoIterator<Item = (Event, Rational)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (event, value) in focals {
            universe.check_event(event)?;
            if event.is_empty() {
                return Err(Error::EmptyFocal);
            }
            if !value.is_positive() {
                return Err(Error::NonPositiveMass {
                    event: universe.format_event(event),
                    value,
                });
            }
            let slot = map.entry(event).or_insert_with(Rational::zero);
            *slot = &*slot + &value;
        }
        let total: Rational = map.values().sum();
        if total != Rational::one() {
            return Err(Error::MassSumNotOne(total));
        }
        Ok(MassAssignment {
            universe,
            focals: map,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Focal events with their masses, in increasing bit order.
    pub fn focals(&self) -> &BTreeMap<Event, Rational> {
        &self.focals
    }

    pub fn mass(&self, event: Event) -> Rational {
        self.focals.get(&event).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Σ m(C)` over focals `C ⊆ event`.
    pub fn belief(&self, event: Event) -> Rational {
        self.focals
            .iter()
            .filter(|(c, _)| c.is_subset_of(event))
            .map(|(_, v)| v)
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PossibilityDistribution {
    universe: Universe,
    degrees: Vec<Rational>,
}

impl PossibilityDistribution {
    pub fn new(universe: Universe, degrees: Vec<Rational>) -> Result<Self> {
        if degrees.len() != universe.len() {
            return Err(Error::BadDistribution(format!(
                "{} degrees for {} atoms",
                degrees.len(),
                universe.len()
            )));
        }
        if let Some((i, d)) = degrees.iter().enumerate().find(|(_, d)| !d.is_unit()) {
            return Err(Error::BadDistribution(format!(
                "pi({}) = {d} is outside [0,1]",
                universe.atom(i)
            )));
        }
        let max = degrees.iter().max().cloned().unwrap_or_else(Rational::zero);
        if max != Rational::one() {
            return Err(Error::NotNormalized(max));
        }
        Ok(PossibilityDistribution { universe, degrees })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn degrees(&self) -> &[Rational] {
        &self.degrees
    }

    pub fn degree(&self, atom: usize) -> &Rational {
        &self.degrees[atom]
    }

    /// `max_{ω∈A} π(ω)`, with the empty max equal to 0.
    pub fn possibility(&self, event: Event) -> Rational {
        event
            .atoms()
            .map(|i| &self.degrees[i])
            .max()
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// `min_{ω∉A} 1 - π(ω)`, with the empty min equal to 1.
    pub fn necessity(&self, event: Event) -> Rational {
        self.universe
            .complement(event)
            .atoms()
            .map(|i| self.degrees[i].complement())
            .min()
            .unwrap_or_else(Rational::one)
    }
}

/// `P(A) = Σ_{ω∈A} p(ω)`.
pub fn from_probability(dist: &ProbabilityDistribution) -> SetFunction {
    SetFunction::from_fn(dist.universe.clone(), |e| dist.probability(e))
        .expect("probabilities lie in [0,1]")
}

/// Returns `(Bel, Pl)` with `Bel(A) = Σ_{∅≠C⊆A} m(C)` and `Pl` its dual.
pub fn from_mass(mass: &MassAssignment) -> (SetFunction, SetFunction) {
    let mut table = vec![Rational::zero(); mass.universe.event_count()];
    for (event, value) in &mass.focals {
        table[event.index()] = value.clone();
    }
    // Zeta transform over the subset lattice.
    for atom in 0..mass.universe.len() {
        let bit = 1usize << atom;
        for m in 0..table.len() {
            if m & bit != 0 {
                let lower = table[m ^ bit].clone();
                table[m] = &table[m] + &lower;
            }
        }
    }
    let bel = SetFunction::new(mass.universe.clone(), table).expect("beliefs lie in [0,1]");
    let pl = bel.dual();
    (bel, pl)
}

/// Returns `(Π, N)`, each evaluated directly from `π`.
pub fn from_possibility(dist: &PossibilityDistribution) -> (SetFunction, SetFunction) {
    let pi = SetFunction::from_fn(dist.universe.clone(), |e| dist.possibility(e))
        .expect("possibilities lie in [0,1]");
    let nec = SetFunction::from_fn(dist.universe.clone(), |e| dist.necessity(e))
        .expect("necessities lie in [0,1]");
    (pi, nec)
}

/// The data of an acceptance function organised around its kernel `K`:
/// values on the up-set of `K`, values on the down-set of `K̄`, and the
/// common level of every other event.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    pub universe: Universe,
    pub kernel: Event,
    /// Values on every `A ⊇ K`.
    pub upper: BTreeMap<Event, Rational>,
    /// Values on every `A ⊆ K̄`.
    pub lower: BTreeMap<Event, Rational>,
    /// Value of every event that neither contains `K` nor avoids it. Required
    /// exactly when `|K| ≥ 2`.
    pub k_level: Option<Rational>,
}

impl Skeleton {
    fn check(&self) -> Result<()> {
        let u = &self.universe;
        let fmt = |e: Event| u.format_event(e);
        let inconsistent = |msg: String| Err(Error::SkeletonInconsistent(msg));
        u.check_event(self.kernel)?;
        if self.kernel.is_empty() {
            return inconsistent("kernel must be nonempty".into());
        }
        let co_kernel = u.complement(self.kernel);

        for (event, value) in self.upper.iter().chain(&self.lower) {
            u.check_event(*event)?;
            if !value.is_unit() {
                return inconsistent(format!("value {value} at {} is outside [0,1]", fmt(*event)));
            }
        }
        if let Some(e) = self.upper.keys().find(|e| !e.is_superset_of(self.kernel)) {
            return inconsistent(format!("upper entry {} does not contain the kernel", fmt(*e)));
        }
        if let Some(e) = self.lower.keys().find(|e| !e.is_subset_of(co_kernel)) {
            return inconsistent(format!("lower entry {} meets the kernel", fmt(*e)));
        }
        for rest in co_kernel.subsets() {
            let up = self.kernel | rest;
            if !self.upper.contains_key(&up) {
                return Err(Error::IncompleteCoverage(format!("missing upper entry {}", fmt(up))));
            }
            if !self.lower.contains_key(&rest) {
                return Err(Error::IncompleteCoverage(format!("missing lower entry {}", fmt(rest))));
            }
        }

        let at_kernel = &self.upper[&self.kernel];
        let at_co_kernel = &self.lower[&co_kernel];
        if at_kernel <= at_co_kernel {
            return inconsistent(format!(
                "g(K) = {at_kernel} must exceed g(K̄) = {at_co_kernel}"
            ));
        }
        if self.upper[&u.full()] != Rational::one() {
            return inconsistent("upper value at the full set must be 1".into());
        }
        if !self.lower[&Event::EMPTY].is_zero() {
            return inconsistent("lower value at the empty set must be 0".into());
        }
        for map in [&self.upper, &self.lower] {
            for (&event, value) in map {
                for atom in event.atoms() {
                    let below = event.without(atom);
                    if let Some(lower_value) = map.get(&below) {
                        if lower_value > value {
                            return inconsistent(format!(
                                "not monotone: g({}) = {lower_value} > g({}) = {value}",
                                fmt(below),
                                fmt(event)
                            ));
                        }
                    }
                }
            }
        }
        let undecided = self.kernel.len() >= 2;
        match (&self.k_level, undecided) {
            (None, true) => {
                return Err(Error::IncompleteCoverage(
                    "k_level is required when the kernel has two or more atoms".into(),
                ))
            }
            (Some(k), true) if k < at_co_kernel || k > at_kernel => {
                return inconsistent(format!(
                    "k_level {k} lies outside [g(K̄), g(K)] = [{at_co_kernel}, {at_kernel}]"
                ))
            }
            (Some(_), false) => {
                return inconsistent("k_level given but no event is undecided".into())
            }
            _ => {}
        }
        Ok(())
    }
}

/// Assembles the full table from a skeleton. The result is a confidence
/// measure and an acceptance function with kernel `K`.
pub fn build_from_skeleton(skeleton: &Skeleton) -> Result<SetFunction> {
    skeleton.check()?;
    let co_kernel = skeleton.universe.complement(skeleton.kernel);
    SetFunction::from_fn(skeleton.universe.clone(), |e| {
        if e.is_superset_of(skeleton.kernel) {
            skeleton.upper[&e].clone()
        } else if e.is_subset_of(co_kernel) {
            skeleton.lower[&e].clone()
        } else {
            skeleton.k_level.clone().expect("checked above")
        }
    })
}

/// The acceptance function on `{1,2,3,4}` with kernel `{2}` that is neither a
/// belief nor a plausibility function (parameters `k = 1/2`, `ε = 1/10`,
/// `k̄ = 2/5`).
pub fn non_belief_skeleton() -> Skeleton {
    let universe = Universe::new(["1", "2", "3", "4"]).expect("valid atoms");
    let ev = |names: &[&str]| universe.event_of(names).expect("known atoms");
    let q = Rational::new;
    let upper = [
        (ev(&["2"]), q(1, 2)),
        (ev(&["1", "2"]), q(3, 5)),
        (ev(&["2", "3"]), q(3, 5)),
        (ev(&["2", "4"]), q(1, 2)),
        (ev(&["1", "2", "3"]), q(4, 5)),
        (ev(&["1", "2", "4"]), q(7, 10)),
        (ev(&["2", "3", "4"]), q(3, 5)),
        (ev(&["1", "2", "3", "4"]), q(1, 1)),
    ];
    let lower = [
        (ev(&[]), q(0, 1)),
        (ev(&["1"]), q(1, 5)),
        (ev(&["3"]), q(1, 5)),
        (ev(&["4"]), q(1, 5)),
        (ev(&["1", "3"]), q(2, 5)),
        (ev(&["1", "4"]), q(2, 5)),
        (ev(&["3", "4"]), q(2, 5)),
        (ev(&["1", "3", "4"]), q(2, 5)),
    ];
    Skeleton {
        kernel: ev(&["2"]),
        upper: upper.into_iter().collect(),
        lower: lower.into_iter().collect(),
        k_level: None,
        universe,
    }
}
