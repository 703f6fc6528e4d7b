//! Seeded generators of test inputs. All generators are deterministic in
//! their `(universe, seed)` arguments and draw values on small denominators
//! so that exact ties (the interesting cases for strict inequalities) are
//! common.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{MassAssignment, PossibilityDistribution, ProbabilityDistribution, Skeleton};
use crate::rational::Rational;
use crate::set_function::SetFunction;
use crate::universe::{Event, Universe};

const DENOMINATORS: [i64; 8] = [2, 3, 4, 5, 6, 8, 10, 12];

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn grid_value(rng: &mut ChaCha8Rng, denom: i64, lo: i64, hi: i64) -> Rational {
    Rational::new(rng.gen_range(lo..=hi), denom)
}

fn nonempty_event(rng: &mut ChaCha8Rng, u: &Universe) -> Event {
    Event::from_bits(rng.gen_range(1..=u.full().bits()))
}

/// Random confidence measure: independent grid values, `g(∅) = 0`,
/// `g(Ω) = 1`, then monotone closure by propagating maxima upwards.
///
/// The max-propagation biases values towards the top of the lattice.
pub fn random_confidence(universe: &Universe, seed: u64) -> SetFunction {
    let mut rng = rng(seed);
    let denom = *DENOMINATORS.choose(&mut rng).expect("nonempty");
    let mut table: Vec<Rational> = universe
        .events()
        .map(|_| grid_value(&mut rng, denom, 0, denom))
        .collect();
    table[0] = Rational::zero();
    let full = universe.full().index();
    table[full] = Rational::one();
    for event in universe.events() {
        for atom in event.atoms() {
            let below = event.without(atom).index();
            if table[below] > table[event.index()] {
                table[event.index()] = table[below].clone();
            }
        }
    }
    SetFunction::new(universe.clone(), table).expect("grid values lie in [0,1]")
}

/// Random skeleton with a random nonempty kernel.
pub fn random_skeleton(universe: &Universe, seed: u64) -> Skeleton {
    let mut rng = rng(seed);
    let kernel = nonempty_event(&mut rng, universe);
    random_skeleton_with_kernel(universe, kernel, &mut rng)
}

fn random_skeleton_with_kernel(universe: &Universe, kernel: Event, rng: &mut ChaCha8Rng) -> Skeleton {
    let denom = *DENOMINATORS.choose(rng).expect("nonempty");
    let co_kernel = universe.complement(kernel);
    // 0 ≤ g(K̄) < g(K) ≤ 1 on the grid; g(K̄) = 0 when K̄ is empty.
    let (co_value, kernel_value) = if co_kernel.is_empty() {
        (0, denom)
    } else {
        let co = rng.gen_range(0..denom);
        (co, rng.gen_range(co + 1..=denom))
    };
    let k_level = (kernel.len() >= 2).then(|| grid_value(rng, denom, co_value, kernel_value));

    let mut upper = std::collections::BTreeMap::new();
    let mut lower = std::collections::BTreeMap::new();
    // Subsets of K̄ in increasing bit order, so lower covers come first.
    for rest in co_kernel.subsets() {
        let up = kernel | rest;
        let mut up_value = if rest.is_empty() {
            Rational::new(kernel_value, denom)
        } else {
            grid_value(rng, denom, kernel_value, denom)
        };
        let mut low_value = if rest == co_kernel {
            Rational::new(co_value, denom)
        } else if rest.is_empty() {
            Rational::zero()
        } else {
            grid_value(rng, denom, 0, co_value)
        };
        for atom in rest.atoms() {
            let below = rest.without(atom);
            let up_below: &Rational = &upper[&(kernel | below)];
            if *up_below > up_value {
                up_value = up_below.clone();
            }
            let low_below: &Rational = &lower[&below];
            if *low_below > low_value {
                low_value = low_below.clone();
            }
        }
        if up == universe.full() {
            up_value = Rational::one();
        }
        upper.insert(up, up_value);
        lower.insert(rest, low_value);
    }
    Skeleton {
        universe: universe.clone(),
        kernel,
        upper,
        lower,
        k_level,
    }
}

fn normalize(universe: &Universe, weighted: Vec<(Event, i64)>) -> MassAssignment {
    let total: i64 = weighted.iter().map(|(_, w)| w).sum();
    MassAssignment::new(
        universe.clone(),
        weighted.into_iter().map(|(e, w)| (e, Rational::new(w, total))),
    )
    .expect("positive weights normalised to 1")
}

fn distinct_events(rng: &mut ChaCha8Rng, u: &Universe, count: usize, pick: impl Fn(&mut ChaCha8Rng) -> Event) -> Vec<Event> {
    let mut events: Vec<Event> = Vec::new();
    for _ in 0..count * 8 {
        if events.len() == count {
            break;
        }
        let e = pick(rng);
        if u.contains_event(e) && !e.is_empty() && !events.contains(&e) {
            events.push(e);
        }
    }
    events
}

/// Random mass with between 1 and `max_focals` distinct focals and small
/// integer weights.
pub fn random_mass(universe: &Universe, max_focals: usize, seed: u64) -> MassAssignment {
    let mut rng = rng(seed);
    let count = rng.gen_range(1..=max_focals.max(1));
    let focals = distinct_events(&mut rng, universe, count, |r| nonempty_event(r, universe));
    let weighted = focals.into_iter().map(|e| (e, rng.gen_range(1..=4))).collect();
    normalize(universe, weighted)
}

/// Random mass whose focals all contain a focal core `K`.
pub fn random_core_mass(universe: &Universe, max_focals: usize, seed: u64) -> MassAssignment {
    let mut rng = rng(seed);
    let core = nonempty_event(&mut rng, universe);
    let outside = universe.complement(core);
    let extra = rng.gen_range(0..max_focals.max(1));
    let mut focals = vec![core];
    if !outside.is_empty() {
        let more = distinct_events(&mut rng, universe, extra, |r| {
            core | Event::from_bits(r.gen_range(1..=outside.bits()) & outside.bits())
        });
        focals.extend(more.into_iter().filter(|e| *e != core));
    }
    let weighted = focals.into_iter().map(|e| (e, rng.gen_range(1..=4))).collect();
    normalize(universe, weighted)
}

/// Random mass with a singleton focal of mass strictly above 1/2.
pub fn random_majority_mass(universe: &Universe, max_focals: usize, seed: u64) -> MassAssignment {
    let mut rng = rng(seed);
    let atom = rng.gen_range(0..universe.len());
    let singleton = Event::singleton(atom);
    let extra = rng.gen_range(0..max_focals.max(1));
    let others: Vec<Event> = distinct_events(&mut rng, universe, extra, |r| nonempty_event(r, universe))
        .into_iter()
        .filter(|e| *e != singleton)
        .collect();
    let mut weighted: Vec<(Event, i64)> = others.into_iter().map(|e| (e, rng.gen_range(1..=4))).collect();
    let rest: i64 = weighted.iter().map(|(_, w)| w).sum();
    weighted.push((singleton, rest + rng.gen_range(1..=4)));
    normalize(universe, weighted)
}

/// Random mass of the two-equal-singletons shape: focals `{ω}`, `{ω'}` with
/// equal weight plus optional supersets of `{ω, ω'}`. Needs `n ≥ 2`.
pub fn random_twin_mass(universe: &Universe, max_focals: usize, seed: u64) -> MassAssignment {
    assert!(universe.len() >= 2, "twin masses need two atoms");
    let mut rng = rng(seed);
    let mut atoms: Vec<usize> = (0..universe.len()).collect();
    atoms.shuffle(&mut rng);
    let pair = Event::singleton(atoms[0]) | Event::singleton(atoms[1]);
    let w = rng.gen_range(1..=4);
    let mut weighted = vec![(Event::singleton(atoms[0]), w), (Event::singleton(atoms[1]), w)];
    let extra = rng.gen_range(0..=max_focals.saturating_sub(2));
    let outside = universe.complement(pair);
    let supersets = distinct_events(&mut rng, universe, extra, |r| {
        pair | Event::from_bits(r.gen_range(0..=outside.bits()) & outside.bits())
    });
    weighted.extend(supersets.into_iter().map(|e| (e, rng.gen_range(1..=4))));
    normalize(universe, weighted)
}

/// Random distribution with small integer weights (zeros allowed).
pub fn random_probability(universe: &Universe, seed: u64) -> ProbabilityDistribution {
    let mut rng = rng(seed);
    let max_weight = rng.gen_range(1..=6);
    let mut weights: Vec<i64> = (0..universe.len()).map(|_| rng.gen_range(0..=max_weight)).collect();
    if weights.iter().all(|&w| w == 0) {
        weights[rng.gen_range(0..universe.len())] = 1;
    }
    let total: i64 = weights.iter().sum();
    ProbabilityDistribution::new(
        universe.clone(),
        weights.into_iter().map(|w| Rational::new(w, total)).collect(),
    )
    .expect("normalised weights")
}

/// Random normalised possibility distribution on a small grid.
pub fn random_possibility(universe: &Universe, seed: u64) -> PossibilityDistribution {
    let mut rng = rng(seed);
    let denom = *DENOMINATORS.choose(&mut rng).expect("nonempty");
    let mut degrees: Vec<Rational> = (0..universe.len())
        .map(|_| grid_value(&mut rng, denom, 0, denom))
        .collect();
    degrees[rng.gen_range(0..universe.len())] = Rational::one();
    PossibilityDistribution::new(universe.clone(), degrees).expect("normalised")
}
