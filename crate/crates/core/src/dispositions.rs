//! Conviction dispositions and priors that rationalize them.
//!
//! A disposition maps every transcript to a verdict. It is stored sparsely
//! as the set of convicting transcripts; everything else acquits.
//!
//! [`rationalize`] builds, for any disposition that acquits on the empty
//! transcript and convicts on some transcript, a prior on the world space
//! with `P(E_G) = 1/2` under which the threshold rule
//! `convict ⇔ P(E_G | E_T) ≥ θ` reproduces the disposition exactly. The
//! prior is an even mixture of two charges: one supported on the
//! convicting transcripts with guilt share `θ`, one on the acquitting
//! transcripts with guilt share `1 − θ`. [`verify_rationalization`] checks
//! any candidate prior from its atom masses alone.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::charges::{mix, Charge, ChargeFile};
use crate::error::{Axiom, Error, Result};
use crate::rational::{approx, format_rational, half, rat, Rational};
use crate::world::{event_of_transcript, guilt_event, world_ground, GuiltValue, TestimonyCatalog, Transcript, World};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Convict,
    Acquit,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Convict => "convict",
            Verdict::Acquit => "acquit",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disposition {
    catalog: TestimonyCatalog,
    convicting: BTreeSet<Transcript>,
}

impl Disposition {
    pub fn new(catalog: TestimonyCatalog, convicting: impl IntoIterator<Item = Transcript>) -> Result<Self> {
        let convicting: BTreeSet<Transcript> = convicting.into_iter().collect();
        for &t in &convicting {
            catalog.check(t)?;
        }
        Ok(Self { catalog, convicting })
    }

    pub fn from_fn(catalog: TestimonyCatalog, mut rule: impl FnMut(Transcript) -> Verdict) -> Self {
        let convicting = catalog.transcripts().filter(|&t| rule(t) == Verdict::Convict).collect();
        Self { catalog, convicting }
    }

    /// Convicts on every nonempty transcript.
    pub fn always_convict_nonempty(catalog: TestimonyCatalog) -> Self {
        Self::from_fn(catalog, |t| if t.is_empty() { Verdict::Acquit } else { Verdict::Convict })
    }

    /// Convicts as soon as at least `k` testimonies are heard, whatever they say.
    pub fn at_least(catalog: TestimonyCatalog, k: usize) -> Self {
        Self::from_fn(catalog, |t| if t.len() >= k { Verdict::Convict } else { Verdict::Acquit })
    }

    /// Every disposition over `catalog`, indexed by a bitmask over
    /// transcripts. There are `2^(2^n)` of them, so `n` is limited to 5.
    pub fn exhaustive(catalog: &TestimonyCatalog) -> impl Iterator<Item = Disposition> + '_ {
        assert!(catalog.len() <= 5, "exhaustive enumeration limited to 5 testimonies");
        let transcripts = catalog.transcript_count() as u32;
        (0..1u64 << transcripts).map(move |mask| {
            let convicting = (0..transcripts).filter(|i| mask >> i & 1 == 1).map(Transcript).collect();
            Disposition { catalog: catalog.clone(), convicting }
        })
    }

    pub fn catalog(&self) -> &TestimonyCatalog {
        &self.catalog
    }

    pub fn convicting(&self) -> &BTreeSet<Transcript> {
        &self.convicting
    }

    pub fn acquitting(&self) -> impl Iterator<Item = Transcript> + '_ {
        self.catalog.transcripts().filter(|t| !self.convicting.contains(t))
    }

    pub fn verdict(&self, t: Transcript) -> Verdict {
        if self.convicting.contains(&t) {
            Verdict::Convict
        } else {
            Verdict::Acquit
        }
    }

    /// Presumption of innocence: `f(∅) = Acquit`.
    pub fn check_poi(&self) -> bool {
        !self.convicting.contains(&Transcript::EMPTY)
    }

    /// Willingness to convict: some transcript convicts.
    pub fn check_wtc(&self) -> bool {
        !self.convicting.is_empty()
    }

    pub fn check_axioms(&self) -> Result<()> {
        if !self.check_poi() {
            return Err(Error::AxiomViolation(Axiom::PresumptionOfInnocence));
        }
        if !self.check_wtc() {
            return Err(Error::AxiomViolation(Axiom::WillingnessToConvict));
        }
        Ok(())
    }

    pub fn to_file(&self) -> DispositionFile {
        DispositionFile {
            catalog: self.catalog.labels().to_vec(),
            convicting: self
                .convicting
                .iter()
                .map(|&t| self.catalog.labels_of(t).into_iter().map(String::from).collect())
                .collect(),
            default: None,
        }
    }
}

/// On-disk disposition. Transcripts not listed under `convicting` acquit;
/// `"acquit"` is the only supported `default`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DispositionFile {
    pub catalog: Vec<String>,
    pub convicting: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub default: Option<String>,
}

impl DispositionFile {
    pub fn into_disposition(self, cap: usize) -> Result<Disposition> {
        if let Some(d) = &self.default {
            if d != "acquit" {
                return Err(Error::Parse(format!("unsupported default verdict `{d}` (only \"acquit\")")));
            }
        }
        let catalog = TestimonyCatalog::with_cap(self.catalog, cap)?;
        let convicting = self
            .convicting
            .iter()
            .map(|labels| catalog.transcript(labels))
            .collect::<Result<Vec<_>>>()?;
        Disposition::new(catalog, convicting)
    }

    pub fn parse(text: &str, cap: usize) -> Result<Disposition> {
        let file: DispositionFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.into_disposition(cap)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosteriorEntry {
    pub transcript: Transcript,
    pub verdict: Verdict,
    pub posterior: Rational,
}

/// A prior together with the exact guilt posteriors it yields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalizationCertificate {
    pub catalog: TestimonyCatalog,
    pub prior: Charge,
    pub theta: Rational,
    pub mixture_weight: Rational,
    pub guilt_prior: Rational,
    pub posteriors: Vec<PosteriorEntry>,
}

/// Builds a prior with `P(E_G) = 1/2` that `theta`-rationalizes `f`.
///
/// Requires `1/2 < theta < 1` and both axioms.
pub fn rationalize(f: &Disposition, theta: &Rational) -> Result<RationalizationCertificate> {
    f.check_axioms()?;
    if theta <= &half() || theta >= &Rational::one() {
        return Err(Error::ThetaOutOfRange { value: format_rational(theta), expected: "(1/2, 1)" });
    }
    let catalog = f.catalog();
    let n_convict = Rational::from_integer(f.convicting().len().into());
    let n_acquit = Rational::from_integer((catalog.transcript_count() - f.convicting().len()).into());
    let rest = Rational::one() - theta;

    let support_charge = |convicting_side: bool| -> Result<Charge> {
        let (n, guilt_share) = if convicting_side { (&n_convict, theta) } else { (&n_acquit, &rest) };
        let innocence_share = Rational::one() - guilt_share;
        let masses = (0..catalog.world_count())
            .map(|i| {
                let w = World::from_index(i);
                let in_support = f.convicting().contains(&w.transcript) == convicting_side;
                let m = match (in_support, w.guilt) {
                    (false, _) => Rational::zero(),
                    (true, GuiltValue::G) => guilt_share / n,
                    (true, GuiltValue::I) => &innocence_share / n,
                };
                (i, m)
            })
            .collect();
        Charge::from_point_masses(masses)
    };
    let convict_part = support_charge(true)?;
    let acquit_part = support_charge(false)?;

    // α·θ + (1−α)(1−θ) = 1/2 forces α = 1/2 whenever θ ≠ 1/2.
    let alpha = half();
    let prior = mix(&alpha, &convict_part, &acquit_part)?;
    let guilt_prior = prior.measure(guilt_event(catalog).points())?;

    let posteriors = catalog
        .transcripts()
        .map(|t| {
            let verdict = f.verdict(t);
            let posterior = if verdict == Verdict::Convict { theta.clone() } else { rest.clone() };
            PosteriorEntry { transcript: t, verdict, posterior }
        })
        .collect();

    Ok(RationalizationCertificate {
        catalog: catalog.clone(),
        prior,
        theta: theta.clone(),
        mixture_weight: alpha,
        guilt_prior,
        posteriors,
    })
}

/// Outcome of checking `f(T) = C ⇔ P(E_G | E_T) ≥ θ` on every transcript.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub holds: bool,
    /// First transcript (canonical order) where the biconditional fails.
    pub witness: Option<Transcript>,
    pub posteriors: Vec<(Transcript, Rational)>,
}

/// `P(E_G | E_T)` for every transcript, recomputed from atom masses.
pub fn guilt_posteriors(catalog: &TestimonyCatalog, prior: &Charge) -> Result<Vec<(Transcript, Rational)>> {
    if prior.ground() != &world_ground(catalog) {
        return Err(Error::CatalogMismatch);
    }
    let guilt = guilt_event(catalog);
    catalog
        .transcripts()
        .map(|t| {
            let e_t = event_of_transcript(catalog, t)?;
            let mass = prior.measure(e_t.points())?;
            if mass.is_zero() {
                return Err(Error::ZeroTranscriptMass(catalog.render(t)));
            }
            let joint = prior.measure(e_t.intersection(&guilt).points())?;
            Ok((t, joint / mass))
        })
        .collect()
}

pub fn verify_rationalization(f: &Disposition, theta: &Rational, prior: &Charge) -> Result<Verification> {
    let posteriors = guilt_posteriors(f.catalog(), prior)?;
    let witness = posteriors
        .iter()
        .find(|(t, post)| (post >= theta) != (f.verdict(*t) == Verdict::Convict))
        .map(|(t, _)| *t);
    Ok(Verification { holds: witness.is_none(), witness, posteriors })
}

/// True iff no transcript of positive mass has a guilt posterior of 0 or 1.
pub fn is_open_door(catalog: &TestimonyCatalog, prior: &Charge) -> Result<bool> {
    if prior.ground() != &world_ground(catalog) {
        return Err(Error::CatalogMismatch);
    }
    let guilt = guilt_event(catalog);
    for t in catalog.transcripts() {
        let e_t = event_of_transcript(catalog, t)?;
        let mass = prior.measure(e_t.points())?;
        if mass.is_zero() {
            continue;
        }
        let post = prior.measure(e_t.intersection(&guilt).points())? / mass;
        if post.is_zero() || post.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Threshold used when `theta ≤ 1/2`: any value above one half gives
/// posteriors that still clear `theta`.
pub fn posner_fallback_threshold() -> Rational {
    rat(51, 100)
}

/// A prior with even odds of guilt under which every nonempty transcript
/// pushes the guilt posterior to at least `theta`.
pub fn posner_even_odds_prior(catalog: &TestimonyCatalog, theta: &Rational) -> Result<Charge> {
    if theta <= &Rational::zero() || theta >= &Rational::one() {
        return Err(Error::ThetaOutOfRange { value: format_rational(theta), expected: "(0, 1)" });
    }
    let effective = if theta > &half() { theta.clone() } else { posner_fallback_threshold() };
    let f = Disposition::always_convict_nonempty(catalog.clone());
    Ok(rationalize(&f, &effective)?.prior)
}

impl RationalizationCertificate {
    pub fn to_report(&self) -> CertificateReport {
        let labels = self.catalog.labels();
        CertificateReport {
            catalog: labels.to_vec(),
            theta: format_rational(&self.theta),
            mixture_weight: format_rational(&self.mixture_weight),
            guilt_prior: format_rational(&self.guilt_prior),
            posteriors: self
                .posteriors
                .iter()
                .map(|e| PosteriorRow {
                    transcript: self.catalog.labels_of(e.transcript).into_iter().map(String::from).collect(),
                    verdict: e.verdict.to_string(),
                    posterior: format_rational(&e.posterior),
                })
                .collect(),
            prior: self.prior.to_file(Some(labels)),
        }
    }

    /// Plain-text table; decimals are approximate.
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "theta = {} (≈{})\nP(E_G) = {}\nmixture weight = {}\n\n",
            format_rational(&self.theta),
            approx(&self.theta, 6),
            format_rational(&self.guilt_prior),
            format_rational(&self.mixture_weight),
        );
        let full = self.catalog.transcripts().last().unwrap_or(Transcript::EMPTY);
        let w = self.catalog.render_world(World::new(full, GuiltValue::G)).chars().count().max(10);
        out.push_str(&format!("{:<w$} {:<8} {:>12} {:>10}\n", "transcript", "verdict", "P(E_G|E_T)", "≈"));
        for e in &self.posteriors {
            out.push_str(&format!(
                "{:<w$} {:<8} {:>12} {:>10}\n",
                self.catalog.render(e.transcript),
                e.verdict.to_string(),
                format_rational(&e.posterior),
                approx(&e.posterior, 6)
            ));
        }
        out.push_str(&format!("\n{:<w$} {:>12}\n", "world", "prior mass"));
        for (atom, m) in self.prior.atoms() {
            for &p in atom {
                out.push_str(&format!("{:<w$} {:>12}\n", self.catalog.render_world(World::from_index(p)), format_rational(m)));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub catalog: Vec<String>,
    pub theta: String,
    pub mixture_weight: String,
    pub guilt_prior: String,
    pub posteriors: Vec<PosteriorRow>,
    pub prior: ChargeFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosteriorRow {
    pub transcript: Vec<String>,
    pub verdict: String,
    pub posterior: String,
}
