//! Exact finite models of Bayesian threshold jurors.
//!
//! A juror hears a set of testimonies (a *transcript*) drawn from a finite
//! catalog and returns a verdict. The crate works in the world space of
//! `(transcript, guilt)` pairs with exact rational probabilities and
//! provides:
//!
//! * [`world`] and [`algebra`]: transcripts, worlds, events and finite
//!   Boolean algebras given by their atoms;
//! * [`charges`]: finitely additive probability charges, conditioning,
//!   mixtures and the two measure-extension constructions;
//! * [`dispositions`]: conviction dispositions, the presumption-of-innocence
//!   and willingness-to-convict checks, and construction plus independent
//!   verification of priors that rationalize a disposition;
//! * [`epistemic`]: doxastic scoring, its optimal-belief threshold, and the
//!   four-outcome verdict utility threshold;
//! * [`analyses`]: suspect-pool priors, the blood-type sample space, odds
//!   updating and relevance, and ratio-bounded convergence;
//! * [`cli`]: the `juror` command-line front end.

pub mod algebra;
pub mod analyses;
pub mod charges;
pub mod cli;
pub mod dispositions;
pub mod epistemic;
pub mod error;
pub mod rational;
pub mod world;

pub use algebra::{BooleanSubalgebra, Points};
pub use charges::{mix, Charge};
pub use error::{Error, Result};
pub use rational::{parse_rational, Rational};
pub use world::{GuiltValue, TestimonyCatalog, Transcript, World};
