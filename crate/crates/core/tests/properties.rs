use acceptance_core::acceptance::{accepted_set, is_acceptance, is_acceptance_bruteforce};
use acceptance_core::conditioning::{
    check_property_a, check_property_b, conditioned_base, is_conditioned_base_belief_set, SweepConfig,
};
use acceptance_core::klm::{check_klm, entails, KlmProperty, KlmStatus};
use acceptance_core::measures::random::{random_mass, random_possibility, random_skeleton};
use acceptance_core::measures::{build_from_skeleton, from_mass, from_possibility, random_confidence};
use acceptance_core::{Event, Rational, SetFunction, Universe};
use proptest::prelude::*;

/// Either a raw random measure or a skeleton completion; the latter is an
/// acceptance function by construction and reaches kernels of every size.
fn measure(n: usize, seed: u64, from_skeleton: bool) -> SetFunction {
    let u = Universe::numbered(n).unwrap();
    if from_skeleton {
        build_from_skeleton(&random_skeleton(&u, seed)).unwrap()
    } else {
        random_confidence(&u, seed)
    }
}

fn arb_measure(max_n: usize) -> impl Strategy<Value = SetFunction> {
    (1..=max_n, any::<u64>(), any::<bool>()).prop_map(|(n, seed, sk)| measure(n, seed, sk))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn fast_decision_matches_closure_oracle(f in arb_measure(6)) {
        let fast = is_acceptance(&f).unwrap();
        let brute = is_acceptance_bruteforce(&f).unwrap();
        prop_assert_eq!(fast.is_acceptance, brute.is_acceptance);
        prop_assert_eq!(fast.is_acceptance, brute.witness.is_none());
    }

    #[test]
    fn accepted_events_are_kernel_supersets(f in arb_measure(6)) {
        let report = is_acceptance(&f).unwrap();
        if report.is_acceptance {
            let supersets: Vec<Event> = f
                .universe()
                .events()
                .filter(|e| e.is_superset_of(report.kernel))
                .collect();
            prop_assert_eq!(accepted_set(&f).unwrap(), supersets);
        }
    }

    #[test]
    fn undecided_events_share_a_level(f in arb_measure(6)) {
        let report = is_acceptance(&f).unwrap();
        let u = f.universe();
        let k = report.kernel;
        if report.is_acceptance && k.len() >= 2 {
            let level = report.indifference_level.clone().unwrap();
            prop_assert!(f[u.complement(k)] <= level && level <= f[k]);
            for e in u.events().filter(|e| !e.is_superset_of(k) && e.intersects(k)) {
                prop_assert_eq!(&f[e], &level);
            }
        } else {
            prop_assert!(report.indifference_level.is_none());
        }
    }

    #[test]
    fn duality_preserves_acceptance(f in arb_measure(6)) {
        let g = is_acceptance(&f).unwrap();
        let h = is_acceptance(&f.dual()).unwrap();
        prop_assert_eq!(g.is_acceptance, h.is_acceptance);
        if g.is_acceptance {
            prop_assert_eq!(g.kernel, h.kernel);
        }
        if let (Some(a), Some(b)) = (g.indifference_level, h.indifference_level) {
            prop_assert_eq!(a + b, Rational::one());
        }
    }

    #[test]
    fn conditioned_bases_are_up_closed(f in arb_measure(5)) {
        let u = f.universe();
        for c in u.events().skip(1) {
            let base = conditioned_base(&f, c).unwrap();
            let mut member = vec![false; u.event_count()];
            for e in &base {
                member[e.index()] = true;
            }
            for a in &base {
                for b in u.complement(*a).subsets() {
                    prop_assert!(member[(*a | b).index()]);
                }
            }
        }
    }

    #[test]
    fn properties_a_and_b_agree(f in arb_measure(5)) {
        let a = check_property_a(&f, &SweepConfig::default()).unwrap();
        let b = check_property_b(&f, &SweepConfig::default()).unwrap();
        prop_assert_eq!(a.holds, b.holds);
    }

    #[test]
    fn tolerance_closes_every_positive_context(f in arb_measure(5)) {
        let tolerant = check_property_b(&f, &SweepConfig::default()).unwrap().holds;
        let u = f.universe();
        let all_closed = u
            .events()
            .filter(|c| f[*c].is_positive())
            .all(|c| is_conditioned_base_belief_set(&f, c).unwrap().is_belief_set);
        // Contexts of zero confidence have an empty base, so the converse
        // holds as well.
        prop_assert_eq!(tolerant, all_closed);
    }

    #[test]
    fn entailment_is_conditioned_membership(f in arb_measure(4)) {
        let u = f.universe();
        for c in u.events().skip(1) {
            let base = conditioned_base(&f, c).unwrap();
            for a in u.events() {
                prop_assert_eq!(entails(&f, c, a).unwrap(), base.contains(&a));
            }
        }
    }

    #[test]
    fn ref_and_rw_hold_and_and_follows_tolerance(f in arb_measure(4)) {
        let props = [KlmProperty::Ref, KlmProperty::Rw, KlmProperty::And].into_iter().collect();
        let report = check_klm(&f, &props, &SweepConfig::default()).unwrap();
        prop_assert_eq!(report.status(KlmProperty::Ref), Some(&KlmStatus::Holds));
        prop_assert_eq!(report.status(KlmProperty::Rw), Some(&KlmStatus::Holds));
        if check_property_b(&f, &SweepConfig::default()).unwrap().holds {
            prop_assert_eq!(report.status(KlmProperty::And), Some(&KlmStatus::Holds));
        }
    }

    #[test]
    fn mass_round_trips_through_moebius(n in 1usize..=5, seed in any::<u64>()) {
        let u = Universe::numbered(n).unwrap();
        let m = random_mass(&u, 4, seed);
        let (bel, pl) = from_mass(&m);
        let back = bel.moebius();
        for e in u.events() {
            prop_assert_eq!(back.get(e), &m.mass(e));
        }
        prop_assert_eq!(pl, bel.dual());
    }

    #[test]
    fn possibility_pairs_behave(n in 1usize..=5, seed in any::<u64>()) {
        let u = Universe::numbered(n).unwrap();
        let d = random_possibility(&u, seed);
        let (pi, nec) = from_possibility(&d);
        prop_assert_eq!(&nec, &pi.dual());
        for a in u.events() {
            if nec[a].is_positive() {
                prop_assert!(nec[u.complement(a)].is_zero());
            }
            for b in u.events() {
                prop_assert_eq!(&nec[a & b], std::cmp::min(&nec[a], &nec[b]));
            }
        }
    }
}

#[test]
fn possibility_is_not_closed_under_intersection() {
    // Some π has Π(A) > 0 and Π(B) > 0 with Π(A∩B) = 0.
    let u = Universe::numbered(3).unwrap();
    let found = (0..200).any(|seed| {
        let (pi, _) = from_possibility(&random_possibility(&u, seed));
        u.events().any(|a| {
            u.events()
                .any(|b| pi[a].is_positive() && pi[b].is_positive() && pi[a & b].is_zero())
        })
    });
    assert!(found);
}

#[test]
fn the_two_conditionings_differ() {
    // Conditioning g and its dual on the same context can disagree.
    let u = Universe::numbered(3).unwrap();
    let found = (0..200).any(|seed| {
        let f = random_confidence(&u, seed);
        let h = f.dual();
        u.events()
            .skip(1)
            .any(|c| conditioned_base(&f, c).unwrap() != conditioned_base(&h, c).unwrap())
    });
    assert!(found);
}
