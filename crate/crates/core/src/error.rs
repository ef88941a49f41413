use std::fmt;

use thiserror::Error;

/// The two jurisprudential axioms a disposition must satisfy before it can
/// be rationalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// Presumption of innocence: the empty transcript acquits.
    PresumptionOfInnocence,
    /// Willingness to convict: some transcript convicts.
    WillingnessToConvict,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::PresumptionOfInnocence => f.write_str("PoI (presumption of innocence: f(∅) must be Acquit)"),
            Axiom::WillingnessToConvict => f.write_str("WtC (willingness to convict: some transcript must convict)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("catalog has {size} testimonies, above the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("duplicate testimony label `{0}`")]
    DuplicateLabel(String),

    #[error("testimony `{0}` is not in the catalog")]
    ForeignTestimony(String),

    #[error("event is not a union of atoms of the algebra")]
    NotExpressible,

    #[error("conditioning event has zero mass")]
    ZeroConditioningEvent,

    #[error("charges are defined on different algebras")]
    AlgebraMismatch,

    #[error("value {value} lies outside the admissible range [{low}, {high}]")]
    OutOfRange { value: String, low: String, high: String },

    #[error("set is not strictly independent of the algebra")]
    NotIndependent,

    #[error("prior of the conditioned event is {0}; extension needs a value strictly between 0 and 1")]
    DegeneratePrior(String),

    #[error("invalid charge: {0}")]
    InvalidCharge(String),

    #[error("axiom violated: {0}")]
    AxiomViolation(Axiom),

    #[error("threshold {value} outside {expected}")]
    ThetaOutOfRange { value: String, expected: &'static str },

    #[error("transcript {0} has zero prior mass; the verdict biconditional is undefined there")]
    ZeroTranscriptMass(String),

    #[error("charge is not defined on the world space of this catalog")]
    CatalogMismatch,

    #[error("utility quadruple has a zero denominator (α_GC − α_NGC − α_GA + α_NGA = 0)")]
    DegenerateUtilities,

    #[error("defendant matches the testimony but the matching set is empty")]
    EmptyMatchWithMatchingDefendant,

    #[error("suspect pool must be nonempty and hold at least as many members as match: {0}")]
    InvalidPool(String),

    #[error("likelihood ratio must be positive, got {0}")]
    NonpositiveRatio(String),

    #[error("likelihood ratio undefined: {0}")]
    UndefinedRatio(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("catalog has {size} testimonies but the chain needs {needed}")]
    CatalogTooSmall { size: usize, needed: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
