//! Epistemic utility: doxastic scoring and verdict utility thresholds.
//!
//! A believed proposition earns `R` when true and costs `W` when false;
//! withheld propositions score nothing. Expected score is maximized by
//! believing exactly the propositions with probability above `W/(R+W)`,
//! either attitude being optimal at equality. [`UtilityQuadruple`] covers
//! the general four-outcome verdict utilities, whose conviction threshold
//! reduces to `W/(R+W)` for the quadruple `(R, −W, 0, 0)`.

use num_traits::{One, Signed, Zero};

use crate::algebra::Points;
use crate::charges::Charge;
use crate::dispositions::Verdict;
use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// Largest agenda accepted by [`brute_force_optimal`] (3^k states).
pub const BRUTE_FORCE_MAX_PAIRS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreWeights {
    reward: Rational,
    penalty: Rational,
}

impl ScoreWeights {
    pub fn new(reward: Rational, penalty: Rational) -> Result<Self> {
        if !reward.is_positive() || !penalty.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "score weights must be positive, got R={} W={}",
                format_rational(&reward),
                format_rational(&penalty)
            )));
        }
        Ok(Self { reward, penalty })
    }

    /// The `(1−θ, θ)` weights, whose belief threshold is `θ`.
    pub fn for_threshold(theta: &Rational) -> Result<Self> {
        Self::new(Rational::one() - theta, theta.clone())
    }

    pub fn reward(&self) -> &Rational {
        &self.reward
    }

    pub fn penalty(&self) -> &Rational {
        &self.penalty
    }

    /// `W / (R + W)`.
    pub fn threshold(&self) -> Rational {
        &self.penalty / (&self.reward + &self.penalty)
    }

    fn weight(&self, true_at_world: bool) -> Rational {
        if true_at_world {
            self.reward.clone()
        } else {
            -self.penalty.clone()
        }
    }
}

/// A proposition and its negation, the complement within the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropositionPair {
    pub id: String,
    pub positive: Points,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Attitude {
    BelievePositive,
    BelieveNegative,
    Withhold,
}

impl Attitude {
    const ALL: [Attitude; 3] = [Attitude::BelievePositive, Attitude::BelieveNegative, Attitude::Withhold];
}

/// One attitude per pair; believing both sides of a pair is unrepresentable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoxasticState(pub Vec<Attitude>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ScoreOptions {
    /// Score pairs whose positive side is the whole ground set or empty.
    pub include_trivial: bool,
}

/// The closed-form optimum, with the pairs where another attitude scores
/// equally well.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalState {
    pub state: DoxasticState,
    pub ties: Vec<usize>,
}

/// A finite set of proposition pairs over a common ground set of worlds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agenda {
    ground: Points,
    pairs: Vec<PropositionPair>,
}

impl Agenda {
    pub fn new(ground: Points, pairs: Vec<PropositionPair>) -> Result<Self> {
        for pair in &pairs {
            if !pair.positive.is_subset(&ground) {
                return Err(Error::InvalidParameter(format!("proposition `{}` leaves the ground set", pair.id)));
            }
        }
        Ok(Self { ground, pairs })
    }

    pub fn pairs(&self) -> &[PropositionPair] {
        &self.pairs
    }

    pub fn ground(&self) -> &Points {
        &self.ground
    }

    fn is_trivial(&self, pair: &PropositionPair) -> bool {
        pair.positive.is_empty() || pair.positive == self.ground
    }

    fn scored(&self, pair: &PropositionPair, opts: ScoreOptions) -> bool {
        opts.include_trivial || !self.is_trivial(pair)
    }

    fn check_state(&self, state: &DoxasticState) -> Result<()> {
        if state.0.len() != self.pairs.len() {
            return Err(Error::InvalidParameter(format!(
                "state has {} attitudes for {} pairs",
                state.0.len(),
                self.pairs.len()
            )));
        }
        Ok(())
    }

    /// Sum over believed propositions of `R` if true at `world`, `−W` if false.
    pub fn score(&self, state: &DoxasticState, world: usize, weights: &ScoreWeights, opts: ScoreOptions) -> Result<Rational> {
        self.check_state(state)?;
        let mut total = Rational::zero();
        for (pair, attitude) in self.pairs.iter().zip(&state.0) {
            if !self.scored(pair, opts) {
                continue;
            }
            let positive_true = pair.positive.contains(&world);
            match attitude {
                Attitude::BelievePositive => total += weights.weight(positive_true),
                Attitude::BelieveNegative => total += weights.weight(!positive_true),
                Attitude::Withhold => {}
            }
        }
        Ok(total)
    }

    /// `Σ_w P(w)·score(d, w)`, summed atom by atom. Each proposition must be
    /// a member of the charge's algebra so its truth is constant on atoms.
    pub fn expected_score(
        &self,
        state: &DoxasticState,
        charge: &Charge,
        weights: &ScoreWeights,
        opts: ScoreOptions,
    ) -> Result<Rational> {
        self.check_charge(charge)?;
        let mut total = Rational::zero();
        for (atom, mass) in charge.atoms() {
            let representative = *atom.iter().next().expect("atoms are nonempty");
            total += mass * self.score(state, representative, weights, opts)?;
        }
        Ok(total)
    }

    fn check_charge(&self, charge: &Charge) -> Result<()> {
        if charge.ground() != &self.ground {
            return Err(Error::InvalidParameter("charge and agenda have different ground sets".into()));
        }
        for pair in &self.pairs {
            if !charge.algebra().is_expressible(&pair.positive) {
                return Err(Error::NotExpressible);
            }
        }
        Ok(())
    }

    /// Believe the likelier side of each pair when its probability reaches
    /// `W/(R+W)`, otherwise withhold. Equality is resolved toward belief and
    /// recorded in `ties`, as is an even split between the two sides.
    pub fn optimal_doxastic_state(&self, charge: &Charge, weights: &ScoreWeights, opts: ScoreOptions) -> Result<OptimalState> {
        self.check_charge(charge)?;
        let threshold = weights.threshold();
        let mut attitudes = Vec::with_capacity(self.pairs.len());
        let mut ties = Vec::new();
        for (i, pair) in self.pairs.iter().enumerate() {
            if !self.scored(pair, opts) {
                attitudes.push(Attitude::Withhold);
                continue;
            }
            let p = charge.measure(&pair.positive)?;
            let q = Rational::one() - &p;
            let (side, best) = if p >= q { (Attitude::BelievePositive, p.clone()) } else { (Attitude::BelieveNegative, q.clone()) };
            if best >= threshold {
                attitudes.push(side);
                if best == threshold || p == q {
                    ties.push(i);
                }
            } else {
                attitudes.push(Attitude::Withhold);
            }
        }
        Ok(OptimalState { state: DoxasticState(attitudes), ties })
    }
}

/// Every consistent doxastic state, in lexicographic attitude order, that
/// maximizes expected score. Unscored (trivial) pairs are held at
/// `Withhold` so the result is not inflated by irrelevant choices.
pub fn brute_force_optimal(
    agenda: &Agenda,
    charge: &Charge,
    weights: &ScoreWeights,
    opts: ScoreOptions,
) -> Result<Vec<DoxasticState>> {
    let k = agenda.pairs.len();
    if k > BRUTE_FORCE_MAX_PAIRS {
        return Err(Error::CapExceeded { size: k, cap: BRUTE_FORCE_MAX_PAIRS });
    }
    agenda.check_charge(charge)?;
    let mut best: Option<Rational> = None;
    let mut argmax = Vec::new();
    let total = 3usize.pow(k as u32);
    for code in 0..total {
        let mut digits = code;
        let mut attitudes = vec![Attitude::Withhold; k];
        for slot in attitudes.iter_mut().rev() {
            *slot = Attitude::ALL[digits % 3];
            digits /= 3;
        }
        let skip = agenda
            .pairs
            .iter()
            .zip(&attitudes)
            .any(|(pair, a)| !agenda.scored(pair, opts) && *a != Attitude::Withhold);
        if skip {
            continue;
        }
        let state = DoxasticState(attitudes);
        let value = agenda.expected_score(&state, charge, weights, opts)?;
        match &best {
            Some(b) if &value < b => {}
            Some(b) if &value == b => argmax.push(state),
            _ => {
                best = Some(value);
                argmax = vec![state];
            }
        }
    }
    Ok(argmax)
}

/// Utilities of the four verdict outcomes: convict or acquit, guilty (G)
/// or not guilty (NG).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UtilityQuadruple {
    pub guilty_convict: Rational,
    pub innocent_convict: Rational,
    pub guilty_acquit: Rational,
    pub innocent_acquit: Rational,
}

impl UtilityQuadruple {
    pub fn new(gc: Rational, ngc: Rational, ga: Rational, nga: Rational) -> Self {
        Self { guilty_convict: gc, innocent_convict: ngc, guilty_acquit: ga, innocent_acquit: nga }
    }

    /// Doxastic scoring of the guilt proposition as verdict utilities:
    /// `(R, −W, 0, 0)`.
    pub fn from_weights(weights: &ScoreWeights) -> Self {
        Self::new(weights.reward.clone(), -weights.penalty.clone(), Rational::zero(), Rational::zero())
    }

    /// Convicting the guilty beats acquitting them, and acquitting the
    /// innocent beats convicting them. Needed for a threshold in (0, 1).
    pub fn satisfies_sign_conditions(&self) -> bool {
        self.guilty_convict > self.guilty_acquit && self.innocent_acquit > self.innocent_convict
    }

    fn denominator(&self) -> Rational {
        &self.guilty_convict - &self.innocent_convict - &self.guilty_acquit + &self.innocent_acquit
    }

    /// `(α_NGA − α_NGC) / (α_GC − α_NGC − α_GA + α_NGA)`.
    pub fn verdict_threshold(&self) -> Result<Rational> {
        let d = self.denominator();
        if d.is_zero() {
            return Err(Error::DegenerateUtilities);
        }
        Ok((&self.innocent_acquit - &self.innocent_convict) / d)
    }

    /// `(E(U; C), E(U; A))` at guilt probability `p`.
    pub fn expected_verdict_utilities(&self, p: &Rational) -> (Rational, Rational) {
        let q = Rational::one() - p;
        let convict = p * &self.guilty_convict + &q * &self.innocent_convict;
        let acquit = p * &self.guilty_acquit + &q * &self.innocent_acquit;
        (convict, acquit)
    }

    /// The expected-utility-maximizing verdict, convicting on ties.
    pub fn best_verdict(&self, p: &Rational) -> Verdict {
        let (c, a) = self.expected_verdict_utilities(p);
        if c >= a {
            Verdict::Convict
        } else {
            Verdict::Acquit
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use std::collections::BTreeMap;

    fn pts(v: &[usize]) -> Points {
        v.iter().copied().collect()
    }

    fn one_pair(p: Rational) -> (Agenda, Charge) {
        let charge = Charge::from_point_masses(BTreeMap::from([(0, p.clone()), (1, Rational::one() - p)])).unwrap();
        let agenda = Agenda::new(pts(&[0, 1]), vec![PropositionPair { id: "s".into(), positive: pts(&[0]) }]).unwrap();
        (agenda, charge)
    }

    fn w(r: i64, p: i64) -> ScoreWeights {
        ScoreWeights::new(int(r), int(p)).unwrap()
    }

    #[test]
    fn scores() {
        let (agenda, _) = one_pair(rat(1, 2));
        let weights = w(2, 5);
        let opts = ScoreOptions::default();
        assert_eq!(agenda.score(&DoxasticState(vec![Attitude::Withhold]), 0, &weights, opts).unwrap(), int(0));
        assert_eq!(agenda.score(&DoxasticState(vec![Attitude::BelievePositive]), 0, &weights, opts).unwrap(), int(2));
        assert_eq!(agenda.score(&DoxasticState(vec![Attitude::BelievePositive]), 1, &weights, opts).unwrap(), int(-5));
        assert_eq!(agenda.score(&DoxasticState(vec![Attitude::BelieveNegative]), 1, &weights, opts).unwrap(), int(2));
    }

    #[test]
    fn expected_score_expands_definition() {
        let p = rat(2, 7);
        let (agenda, charge) = one_pair(p.clone());
        let weights = w(3, 4);
        let believe = DoxasticState(vec![Attitude::BelievePositive]);
        let got = agenda.expected_score(&believe, &charge, &weights, ScoreOptions::default()).unwrap();
        assert_eq!(got, &p * int(3) - (int(1) - &p) * int(4));
        let none = DoxasticState(vec![Attitude::Withhold]);
        assert_eq!(agenda.expected_score(&none, &charge, &weights, ScoreOptions::default()).unwrap(), int(0));
    }

    #[test]
    fn threshold_and_ties() {
        let weights = w(1, 3);
        assert_eq!(weights.threshold(), rat(3, 4));
        let opts = ScoreOptions::default();

        let (agenda, charge) = one_pair(rat(4, 5));
        let opt = agenda.optimal_doxastic_state(&charge, &weights, opts).unwrap();
        assert_eq!(opt.state.0, vec![Attitude::BelievePositive]);
        assert!(opt.ties.is_empty());
        let brute = brute_force_optimal(&agenda, &charge, &weights, opts).unwrap();
        assert_eq!(brute, vec![opt.state]);

        let (agenda, charge) = one_pair(rat(3, 4));
        let opt = agenda.optimal_doxastic_state(&charge, &weights, opts).unwrap();
        assert_eq!(opt.state.0, vec![Attitude::BelievePositive]);
        assert_eq!(opt.ties, vec![0]);
        let brute = brute_force_optimal(&agenda, &charge, &weights, opts).unwrap();
        assert_eq!(
            brute,
            vec![DoxasticState(vec![Attitude::BelievePositive]), DoxasticState(vec![Attitude::Withhold])]
        );
    }

    #[test]
    fn independent_pairs_give_product_maximizers() {
        // Ground {0,1,2,3} = two independent coin flips, pair a on bit 0, pair b on bit 1.
        let pa = rat(9, 10);
        let pb = rat(1, 5);
        let masses: BTreeMap<usize, Rational> = (0..4usize)
            .map(|i| {
                let a = if i & 1 == 1 { pa.clone() } else { int(1) - &pa };
                let b = if i & 2 == 2 { pb.clone() } else { int(1) - &pb };
                (i, a * b)
            })
            .collect();
        let charge = Charge::from_point_masses(masses).unwrap();
        let agenda = Agenda::new(
            pts(&[0, 1, 2, 3]),
            vec![
                PropositionPair { id: "a".into(), positive: pts(&[1, 3]) },
                PropositionPair { id: "b".into(), positive: pts(&[2, 3]) },
            ],
        )
        .unwrap();
        let weights = w(1, 2);
        let brute = brute_force_optimal(&agenda, &charge, &weights, ScoreOptions::default()).unwrap();
        // Per pair: a believed (0.9 ≥ 2/3); b's negation believed (0.8 ≥ 2/3).
        assert_eq!(brute, vec![DoxasticState(vec![Attitude::BelievePositive, Attitude::BelieveNegative])]);
        let opt = agenda.optimal_doxastic_state(&charge, &weights, ScoreOptions::default()).unwrap();
        assert_eq!(opt.state, brute[0]);
    }

    #[test]
    fn trivial_pairs_are_excluded_by_default() {
        let charge = Charge::uniform(pts(&[0, 1])).unwrap();
        let agenda = Agenda::new(pts(&[0, 1]), vec![PropositionPair { id: "⊤".into(), positive: pts(&[0, 1]) }]).unwrap();
        let weights = w(1, 1);
        let believe = DoxasticState(vec![Attitude::BelievePositive]);
        assert_eq!(agenda.expected_score(&believe, &charge, &weights, ScoreOptions::default()).unwrap(), int(0));
        let with = ScoreOptions { include_trivial: true };
        assert_eq!(agenda.expected_score(&believe, &charge, &weights, with).unwrap(), int(1));
        assert_eq!(
            agenda.optimal_doxastic_state(&charge, &weights, with).unwrap().state.0,
            vec![Attitude::BelievePositive]
        );
        assert_eq!(
            brute_force_optimal(&agenda, &charge, &weights, ScoreOptions::default()).unwrap(),
            vec![DoxasticState(vec![Attitude::Withhold])]
        );
    }

    #[test]
    fn brute_force_cap() {
        let pairs = (0..11).map(|i| PropositionPair { id: i.to_string(), positive: pts(&[0]) }).collect();
        let agenda = Agenda::new(pts(&[0, 1]), pairs).unwrap();
        let charge = Charge::uniform(pts(&[0, 1])).unwrap();
        assert!(matches!(
            brute_force_optimal(&agenda, &charge, &w(1, 1), ScoreOptions::default()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn verdict_thresholds() {
        let u = UtilityQuadruple::new(int(1), int(-9), int(0), int(0));
        assert_eq!(u.verdict_threshold().unwrap(), rat(9, 10));
        for k in 0..=100 {
            let p = rat(k, 100);
            let (c, a) = u.expected_verdict_utilities(&p);
            assert_eq!(c >= a, p >= rat(9, 10));
        }
        let weights = ScoreWeights::new(rat(2, 3), rat(5, 7)).unwrap();
        assert_eq!(UtilityQuadruple::from_weights(&weights).verdict_threshold().unwrap(), weights.threshold());
        let symmetric = UtilityQuadruple::new(int(3), int(-2), int(-2), int(3));
        assert_eq!(symmetric.verdict_threshold().unwrap(), rat(1, 2));
        let degenerate = UtilityQuadruple::new(int(1), int(1), int(1), int(1));
        assert_eq!(degenerate.verdict_threshold(), Err(Error::DegenerateUtilities));
    }

    #[test]
    fn expected_utilities_at_extremes_and_threshold() {
        let u = UtilityQuadruple::new(int(5), int(-7), int(-1), int(2));
        assert_eq!(u.expected_verdict_utilities(&int(1)), (int(5), int(-1)));
        assert_eq!(u.expected_verdict_utilities(&int(0)), (int(-7), int(2)));
        let t = u.verdict_threshold().unwrap();
        let (c, a) = u.expected_verdict_utilities(&t);
        assert_eq!(c, a);
        assert_eq!(u.best_verdict(&t), Verdict::Convict);
        assert!(u.satisfies_sign_conditions());
    }

    #[test]
    fn affine_invariance() {
        let u = UtilityQuadruple::new(int(4), int(-3), int(1), int(2));
        let t = u.verdict_threshold().unwrap();
        let shift = rat(17, 3);
        let scale = rat(5, 2);
        let moved = UtilityQuadruple::new(
            &u.guilty_convict * &scale + &shift,
            &u.innocent_convict * &scale + &shift,
            &u.guilty_acquit * &scale + &shift,
            &u.innocent_acquit * &scale + &shift,
        );
        assert_eq!(moved.verdict_threshold().unwrap(), t);
    }

    #[test]
    fn juror_weights_reproduce_theta() {
        let theta = rat(9, 10);
        assert_eq!(ScoreWeights::for_threshold(&theta).unwrap().threshold(), theta);
        assert!(ScoreWeights::new(int(0), int(1)).is_err());
    }
}
