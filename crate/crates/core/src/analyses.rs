//! Executable versions of the constraint analyses: uniform suspect-pool
//! priors, the blood-type paternity sample space, odds-form updating and
//! relevance, and priors whose guilt posterior may only grow by a bounded
//! ratio per testimony.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{BooleanSubalgebra, Points};
use crate::charges::Charge;
use crate::error::{Error, Result};
use crate::rational::{format_rational, format_terminating, half, to_f64, Rational};
use crate::world::{event_heard_all, guilt_event, world_ground, TestimonyCatalog, Transcript};

/// Odds `a : b`, kept scaled so the smaller component is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Odds {
    for_count: Rational,
    against_count: Rational,
}

impl Odds {
    pub fn new(for_count: Rational, against_count: Rational) -> Result<Self> {
        if !for_count.is_positive() || !against_count.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "odds components must be positive, got {}:{}",
                format_rational(&for_count),
                format_rational(&against_count)
            )));
        }
        let scale = if for_count <= against_count { for_count.clone() } else { against_count.clone() };
        Ok(Self { for_count: for_count / &scale, against_count: against_count / &scale })
    }

    /// Odds `p : 1 − p` for `0 < p < 1`.
    pub fn from_probability(p: &Rational) -> Result<Self> {
        Self::new(p.clone(), Rational::one() - p)
    }

    /// Parses `"a:b"` with exact rational components.
    pub fn parse(text: &str) -> Result<Self> {
        let (a, b) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("`{text}` is not odds of the form a:b")))?;
        Self::new(crate::rational::parse_rational(a)?, crate::rational::parse_rational(b)?)
    }

    pub fn for_count(&self) -> &Rational {
        &self.for_count
    }

    pub fn against_count(&self) -> &Rational {
        &self.against_count
    }

    /// `a / (a + b)`.
    pub fn probability(&self) -> Rational {
        &self.for_count / (&self.for_count + &self.against_count)
    }
}

impl fmt::Display for Odds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", format_terminating(&self.for_count), format_terminating(&self.against_count))
    }
}

/// Bayes in odds form: the "for" side scales by the likelihood ratio.
pub fn posterior_odds(prior: &Odds, likelihood_ratio: &Rational) -> Result<Odds> {
    if !likelihood_ratio.is_positive() {
        return Err(Error::NonpositiveRatio(format_rational(likelihood_ratio)));
    }
    Odds::new(&prior.for_count * likelihood_ratio, prior.against_count.clone())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioVariant {
    /// `P(E | H) / P(E | ¬H)`.
    Standard,
    /// `P(E | H) / P(E)`, bounded above by `1 / P(H)`.
    Impact,
}

pub fn likelihood_ratio(charge: &Charge, evidence: &Points, hypothesis: &Points, variant: RatioVariant) -> Result<Rational> {
    let p_h = charge.measure(hypothesis)?;
    if p_h.is_zero() || p_h.is_one() {
        return Err(Error::UndefinedRatio("hypothesis has probability 0 or 1"));
    }
    let p_e = charge.measure(evidence)?;
    let e_and_h: Points = evidence.intersection(hypothesis).copied().collect();
    let p_eh = charge.measure(&e_and_h)?;
    let given_h = &p_eh / &p_h;
    match variant {
        RatioVariant::Standard => {
            let given_not_h = (&p_e - &p_eh) / (Rational::one() - &p_h);
            if given_not_h.is_zero() {
                return Err(Error::UndefinedRatio("P(E | ¬H) is zero"));
            }
            Ok(given_h / given_not_h)
        }
        RatioVariant::Impact => {
            if p_e.is_zero() {
                return Err(Error::UndefinedRatio("P(E) is zero"));
            }
            Ok(given_h / p_e)
        }
    }
}

/// Relevance in the likelihood-ratio sense: the standard ratio differs from one.
pub fn is_relevant(charge: &Charge, evidence: &Points, hypothesis: &Points) -> Result<bool> {
    Ok(!likelihood_ratio(charge, evidence, hypothesis, RatioVariant::Standard)?.is_one())
}

/// The upper bound `1 / P(H)` on the impact ratio. The standard ratio has
/// no such bound.
pub fn impact_ratio_bound(charge: &Charge, hypothesis: &Points) -> Result<Rational> {
    let p_h = charge.measure(hypothesis)?;
    if p_h.is_zero() {
        return Err(Error::UndefinedRatio("hypothesis has probability 0"));
    }
    Ok(Rational::one() / p_h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuspectPool {
    pub size: u64,
    pub matching: u64,
    pub defendant_matches: bool,
}

impl SuspectPool {
    pub fn new(size: u64, matching: u64, defendant_matches: bool) -> Result<Self> {
        if size == 0 || matching > size {
            return Err(Error::InvalidPool(format!("|X| = {size}, |E_T| = {matching}")));
        }
        Ok(Self { size, matching, defendant_matches })
    }
}

/// `1 / |X|`.
pub fn uniform_guilt_prior(pool: &SuspectPool) -> Rational {
    Rational::new(1.into(), pool.size.into())
}

/// Posterior after an infallible witness narrows the pool to the matching
/// members: `1 / |E_T|` if the defendant matches, otherwise 0.
pub fn certain_witness_posterior(pool: &SuspectPool) -> Result<Rational> {
    if !pool.defendant_matches {
        return Ok(Rational::zero());
    }
    if pool.matching == 0 {
        return Err(Error::EmptyMatchWithMatchingDefendant);
    }
    Ok(Rational::new(1.into(), pool.matching.into()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FallibleWitness {
    pub prior: Rational,
    pub posterior: Rational,
    /// The testimonial event is the whole pool, so conditioning is a no-op.
    pub degenerate: bool,
}

/// A possibly mistaken witness rules nobody out: the testimonial event is
/// all of `X` and conditioning on it returns the prior.
///
/// The pool is represented by the two-atom algebra {defendant, everyone
/// else}, which carries the same guilt probability as the uniform charge.
pub fn fallible_witness_event(pool: &SuspectPool) -> Result<FallibleWitness> {
    let prior = uniform_guilt_prior(pool);
    let defendant = Points::from([0]);
    let charge = if pool.size == 1 {
        Charge::from_atoms(vec![(defendant.clone(), Rational::one())])?
    } else {
        Charge::from_atoms(vec![(defendant.clone(), prior.clone()), (Points::from([1]), Rational::one() - &prior)])?
    };
    let testimony = charge.ground().clone();
    let updated = charge.condition(&testimony)?;
    let posterior = updated.measure(&defendant)?;
    Ok(FallibleWitness { degenerate: updated == charge, prior, posterior })
}

/// The eight phenotypes, in the order used to index the sample space.
pub const BLOOD_TYPES: [&str; 8] = ["A+", "A-", "AB+", "AB-", "B+", "B-", "O+", "O-"];

/// Tuples `(b_X, b_Y, parent)` with a uniform charge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpannSpace {
    pub charge: Charge,
    pub paternity: Points,
}

impl SpannSpace {
    /// Index of `(b_X, b_Y, parent)`: `(8·b_X + b_Y)·2 + parent`.
    pub fn point(blood_x: usize, blood_y: usize, parent: bool) -> usize {
        (blood_x * BLOOD_TYPES.len() + blood_y) * 2 + parent as usize
    }

    pub fn size(&self) -> usize {
        self.charge.ground().len()
    }

    pub fn paternity_prior(&self) -> Rational {
        self.charge.measure(&self.paternity).expect("paternity is a member")
    }

    /// Embeds the sample space in a finer world set that also records
    /// whether X was abroad at the relevant time. Each tuple becomes an atom
    /// of two worlds; the alibi event takes one world from every atom.
    pub fn with_alibi(&self) -> Result<AlibiRefinement> {
        let refined_ground: Points = (0..2 * self.size()).collect();
        let cells: Vec<Points> = (0..self.size()).map(|t| Points::from([2 * t, 2 * t + 1])).collect();
        let algebra = BooleanSubalgebra::from_partition(refined_ground, cells).expect("cells partition");
        let charge = Charge::uniform_on_atoms(algebra)?;
        let paternity: Points = self.paternity.iter().flat_map(|&t| [2 * t, 2 * t + 1]).collect();
        let alibi: Points = (0..self.size()).map(|t| 2 * t + 1).collect();
        Ok(AlibiRefinement { charge, paternity, alibi })
    }
}

pub fn build_spann_space() -> SpannSpace {
    let n = BLOOD_TYPES.len();
    let ground: Points = (0..n * n * 2).collect();
    let paternity = (0..n)
        .flat_map(|x| (0..n).map(move |y| SpannSpace::point(x, y, true)))
        .collect();
    SpannSpace { charge: Charge::uniform(ground).expect("nonempty"), paternity }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlibiRefinement {
    /// The original uniform prior; its atoms are the tuple cells.
    pub charge: Charge,
    pub paternity: Points,
    /// Worlds where X was out of the country.
    pub alibi: Points,
}

impl AlibiRefinement {
    pub fn alibi_expressible(&self) -> bool {
        self.charge.algebra().is_expressible(&self.alibi)
    }

    /// Extends the prior so that `P(paternity | alibi) = target`. Any value
    /// in [0, 1] is reachable; the coarse prior alone does not fix it.
    pub fn paternity_given_alibi(&self, target: &Rational) -> Result<Charge> {
        self.charge.extend_with_conditional(&self.paternity, &self.alibi, target)
    }
}

/// Ratio slack `γ` and verdict threshold `θ`, starting from `P(E_G) = 1/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RateBoundConfig {
    pub gamma: Rational,
    pub theta: Rational,
}

impl RateBoundConfig {
    pub fn new(gamma: Rational, theta: Rational) -> Result<Self> {
        if !gamma.is_positive() {
            return Err(Error::InvalidParameter(format!("gamma must be positive, got {}", format_rational(&gamma))));
        }
        if !theta.is_positive() || theta >= Rational::one() {
            return Err(Error::ThetaOutOfRange { value: format_rational(&theta), expected: "(0, 1)" });
        }
        Ok(Self { gamma, theta })
    }

    fn growth(&self) -> Rational {
        Rational::one() + &self.gamma
    }

    /// `log(2θ) / log(1 + γ)`, the logarithmic form of the bound. Floating
    /// point, for comparison only.
    pub fn log_bound(&self) -> f64 {
        (2.0 * to_f64(&self.theta)).ln() / to_f64(&self.growth()).ln()
    }
}

/// Smallest `m` with `(1/2)(1+γ)^m ≥ θ`, by exact powering.
pub fn min_convicting_testimony_count(cfg: &RateBoundConfig) -> usize {
    let growth = cfg.growth();
    let mut posterior = half();
    let mut m = 0;
    while posterior < cfg.theta {
        posterior *= &growth;
        m += 1;
    }
    m
}

/// True iff `m` is the least integer at or above the logarithmic bound,
/// allowing for rounding in the floating-point logarithms.
pub fn count_matches_log_bound(m: usize, log_bound: f64) -> bool {
    const SLACK: f64 = 1e-9;
    m as f64 >= log_bound - SLACK && (m == 0 || (m as f64 - 1.0) < log_bound + SLACK)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RateBoundPrior {
    pub charge: Charge,
    /// `P(E_G | H_k)` for `k = 0..=steps`, where `H_k` is the event of
    /// hearing the first `k` testimonies.
    pub posteriors: Vec<Rational>,
    pub steps: usize,
    /// Set when `θ ≤ 1/2`: the juror already convicts on an empty transcript.
    pub violates_poi: bool,
}

/// Builds a prior with `P(E_G) = 1/2` whose guilt posterior rises by a
/// factor of at most `1 + γ` per testimony along `t1, t2, …` and reaches
/// `θ` after [`min_convicting_testimony_count`] testimonies.
///
/// Each step conditions on the chain event so far, adjoins the next one
/// with the prescribed conditional guilt value, and splices the result back
/// in scaled by the chain event's mass.
pub fn build_ratio_bounded_convicting_prior(catalog: &TestimonyCatalog, cfg: &RateBoundConfig) -> Result<RateBoundPrior> {
    let steps = min_convicting_testimony_count(cfg);
    if catalog.len() < steps {
        return Err(Error::CatalogTooSmall { size: catalog.len(), needed: steps });
    }
    let ground = world_ground(catalog);
    let guilt = guilt_event(catalog).into_points();
    let innocence: Points = ground.difference(&guilt).copied().collect();
    let mut charge = Charge::from_atoms(vec![(guilt.clone(), half()), (innocence, half())])?;

    let growth = cfg.growth();
    let mut current = half();
    let mut posteriors = vec![current.clone()];
    let mut chain = event_heard_all(catalog, Transcript::EMPTY)?.into_points();
    for k in 0..steps {
        let next = event_heard_all(catalog, Transcript::from_indices(0..=k))?.into_points();
        let target = (&current * &growth).min(cfg.theta.clone());
        let within = charge.condition(&chain)?;
        let guilty_within: Points = guilt.intersection(&chain).copied().collect();
        let extended = within.extend_with_conditional(&guilty_within, &next, &target)?;
        charge = splice(&charge, &chain, &extended)?;
        posteriors.push(target.clone());
        current = target;
        chain = next;
    }
    Ok(RateBoundPrior { charge, posteriors, steps, violates_poi: cfg.theta <= half() })
}

/// Atoms of `refined` inside `region` get `P(region)` times their refined
/// mass; atoms outside keep their mass under `base`.
fn splice(base: &Charge, region: &Points, refined: &Charge) -> Result<Charge> {
    let scale = base.measure(region)?;
    let atoms = refined
        .atoms()
        .map(|(atom, m)| {
            let mass = if atom.is_subset(region) { &scale * m } else { base.measure(atom)? };
            Ok((atom.clone(), mass))
        })
        .collect::<Result<Vec<_>>>()?;
    Charge::from_atoms(atoms)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RateBoundAudit {
    pub guilt_prior: Rational,
    pub posteriors: Vec<Rational>,
    pub ratios: Vec<Rational>,
    pub ratios_within_bound: bool,
    pub final_meets_threshold: bool,
}

impl RateBoundAudit {
    pub fn passes(&self) -> bool {
        self.guilt_prior == half() && self.ratios_within_bound && self.final_meets_threshold
    }
}

/// Re-measures `P(E_G | H_k)` along the chain from the charge alone and
/// checks every successive ratio against `[1/(1+γ), 1+γ]`.
pub fn audit_rate_bound(catalog: &TestimonyCatalog, charge: &Charge, cfg: &RateBoundConfig, steps: usize) -> Result<RateBoundAudit> {
    if charge.ground() != &world_ground(catalog) {
        return Err(Error::CatalogMismatch);
    }
    let guilt = guilt_event(catalog).into_points();
    let guilt_prior = charge.measure(&guilt)?;
    let mut posteriors = Vec::with_capacity(steps + 1);
    for k in 0..=steps {
        let heard = Transcript::from_indices(0..k);
        let chain = event_heard_all(catalog, heard)?.into_points();
        posteriors.push(charge.conditional(&guilt, &chain)?.value);
    }
    let growth = cfg.growth();
    let shrink = Rational::one() / &growth;
    let ratios: Vec<Rational> = posteriors.windows(2).map(|w| &w[1] / &w[0]).collect();
    let ratios_within_bound = ratios.iter().all(|r| r >= &shrink && r <= &growth);
    let final_meets_threshold = posteriors.last().is_some_and(|p| p >= &cfg.theta);
    Ok(RateBoundAudit { guilt_prior, posteriors, ratios, ratios_within_bound, final_meets_threshold })
}
