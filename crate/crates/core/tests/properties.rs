//! Property tests spanning modules: world-space structure, odds against
//! direct conditioning, relevance against independence, and the axiom gate
//! on rationalization.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use proptest::prelude::*;

use threshold_juror::algebra::Points;
use threshold_juror::analyses::{is_relevant, likelihood_ratio, posterior_odds, Odds, RatioVariant};
use threshold_juror::charges::Charge;
use threshold_juror::dispositions::{rationalize, Disposition};
use threshold_juror::error::{Axiom, Error};
use threshold_juror::world::{event_of_transcript, guilt_event, world_ground};
use threshold_juror::{Rational, TestimonyCatalog, Transcript};

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// A rational strictly inside (0, 1).
fn open_unit() -> impl Strategy<Value = Rational> {
    (2i64..40).prop_flat_map(|d| (1..d).prop_map(move |n| r(n, d)))
}

/// A discrete charge on `0..size` with strictly positive masses.
fn positive_charge(size: usize) -> impl Strategy<Value = Charge> {
    proptest::collection::vec(1i64..10, size).prop_map(|weights| {
        let total: i64 = weights.iter().sum();
        Charge::from_point_masses(weights.iter().enumerate().map(|(p, &w)| (p, r(w, total))).collect()).unwrap()
    })
}

fn subset(size: usize) -> impl Strategy<Value = Points> {
    proptest::collection::vec(any::<bool>(), size)
        .prop_map(|bits| bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect())
}

#[test]
fn transcript_events_partition_the_world_space() {
    for n in 0..=5 {
        let catalog = TestimonyCatalog::numbered(n).unwrap();
        let mut seen = Points::new();
        for t in catalog.transcripts() {
            let e = event_of_transcript(&catalog, t).unwrap();
            assert_eq!(e.len(), 2);
            assert!(e.points().is_disjoint(&seen));
            seen.extend(e.points().iter().copied());
        }
        assert_eq!(seen, world_ground(&catalog));
        let g = guilt_event(&catalog);
        assert_eq!(g.len(), g.complement().len());
        assert_eq!(g.union(&g.complement()).points(), &world_ground(&catalog));
    }
}

proptest! {
    #[test]
    fn odds_agree_with_conditioning(p_h in open_unit(), e_h in open_unit(), e_not_h in open_unit()) {
        // Points: 0 = H∧E, 1 = H∧¬E, 2 = ¬H∧E, 3 = ¬H∧¬E.
        let not_h = Rational::one() - &p_h;
        let charge = Charge::from_point_masses(BTreeMap::from([
            (0, &p_h * &e_h),
            (1, &p_h * (Rational::one() - &e_h)),
            (2, &not_h * &e_not_h),
            (3, &not_h * (Rational::one() - &e_not_h)),
        ])).unwrap();
        let h = Points::from([0, 1]);
        let e = Points::from([0, 2]);
        let lr = likelihood_ratio(&charge, &e, &h, RatioVariant::Standard).unwrap();
        prop_assert_eq!(&lr, &(&e_h / &e_not_h));
        let post = posterior_odds(&Odds::from_probability(&p_h).unwrap(), &lr).unwrap();
        prop_assert_eq!(post.probability(), charge.conditional(&h, &e).unwrap().value);
    }

    #[test]
    fn irrelevance_is_independence(charge in positive_charge(5), e in subset(5), h in subset(5)) {
        let p = |s: &Points| charge.measure(s).unwrap();
        let eh: Points = e.intersection(&h).copied().collect();
        let defined = !p(&h).is_zero() && !p(&h).is_one() && !p(&e).is_zero() && p(&e) != p(&eh);
        prop_assume!(defined);
        let independent = p(&eh) == p(&e) * p(&h);
        prop_assert_eq!(is_relevant(&charge, &e, &h).unwrap(), !independent);
    }

    #[test]
    fn independent_evidence_can_be_made_relevant_or_irrelevant(
        w0 in 1i64..10, w1 in 1i64..10, k0 in 1usize..3, k1 in 1usize..3, target in open_unit(),
    ) {
        // Two atoms of three points each; H is the first atom and E takes
        // a proper, nonempty part of each atom.
        let h = Points::from([0, 1, 2]);
        let coarse = Charge::from_atoms(vec![
            (h.clone(), r(w0, w0 + w1)),
            (Points::from([3, 4, 5]), r(w1, w0 + w1)),
        ]).unwrap();
        let e: Points = (0..k0).chain(3..3 + k1).collect();
        prop_assert!(coarse.is_strictly_independent(&e));

        let prior = coarse.measure(&h).unwrap();
        let irrelevant = coarse.extend_with_conditional(&h, &e, &prior).unwrap();
        prop_assert!(!is_relevant(&irrelevant, &e, &h).unwrap());
        prop_assume!(target != prior);
        let relevant = coarse.extend_with_conditional(&h, &e, &target).unwrap();
        prop_assert!(is_relevant(&relevant, &e, &h).unwrap());
        prop_assert!(relevant.restricts_to(&coarse) && irrelevant.restricts_to(&coarse));
    }

    #[test]
    fn rationalize_rejects_axiom_violations(n in 1usize..5, bits in any::<u32>(), theta in open_unit()) {
        let catalog = TestimonyCatalog::numbered(n).unwrap();
        let convicting: Vec<Transcript> = (0..1u32 << n).filter(|m| bits >> m & 1 == 1).map(Transcript).collect();
        let f = Disposition::new(catalog, convicting.clone()).unwrap();
        let result = rationalize(&f, &theta);
        if convicting.contains(&Transcript::EMPTY) {
            prop_assert_eq!(result.unwrap_err(), Error::AxiomViolation(Axiom::PresumptionOfInnocence));
        } else if convicting.is_empty() {
            prop_assert_eq!(result.unwrap_err(), Error::AxiomViolation(Axiom::WillingnessToConvict));
        } else if theta <= r(1, 2) {
            let rejected = matches!(result, Err(Error::ThetaOutOfRange { .. }));
            prop_assert!(rejected);
        } else {
            prop_assert_eq!(result.unwrap().guilt_prior, r(1, 2));
        }
    }
}
