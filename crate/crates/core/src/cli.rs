//! The `juror` command-line front end.
//!
//! Reports go to stdout as deterministic JSON (or a plain table with
//! `--format table`); diagnostics go to stderr. [`run`] returns the exit
//! code and both streams so the binary stays a one-liner and the commands
//! are testable in-process.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::Points;
use crate::analyses::{
    audit_rate_bound, build_ratio_bounded_convicting_prior, build_spann_space, count_matches_log_bound,
    min_convicting_testimony_count, posterior_odds, Odds, RateBoundConfig, BLOOD_TYPES,
};
use crate::charges::{parse_points, Charge};
use crate::dispositions::{
    posner_even_odds_prior, posner_fallback_threshold, rationalize, verify_rationalization, Disposition,
    DispositionFile,
};
use crate::epistemic::{ScoreWeights, UtilityQuadruple};
use crate::error::Error;
use crate::rational::{approx, format_rational, parse_rational, rat, Rational};
use crate::world::{guilt_event, TestimonyCatalog, DEFAULT_CAP, MAX_CAP};

/// Exit code for unreadable or unwritable files.
pub const EXIT_IO: i32 = 1;

/// The documented exit code of every library error.
pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::AxiomViolation(_) => 2,
        Error::Parse(_) => 3,
        Error::CatalogMismatch => 4,
        Error::NotIndependent => 5,
        Error::CapExceeded { .. } => 6,
        Error::DuplicateLabel(_) => 7,
        Error::ForeignTestimony(_) => 8,
        Error::NotExpressible => 9,
        Error::ZeroConditioningEvent => 10,
        Error::AlgebraMismatch => 11,
        Error::OutOfRange { .. } => 12,
        Error::DegeneratePrior(_) => 13,
        Error::InvalidCharge(_) => 14,
        Error::ThetaOutOfRange { .. } => 15,
        Error::ZeroTranscriptMass(_) => 16,
        Error::DegenerateUtilities => 17,
        Error::EmptyMatchWithMatchingDefendant => 18,
        Error::InvalidPool(_) => 19,
        Error::NonpositiveRatio(_) => 20,
        Error::UndefinedRatio(_) => 21,
        Error::InvalidParameter(_) => 22,
        Error::CatalogTooSmall { .. } => 23,
    }
}

#[derive(Debug, Parser)]
#[command(name = "juror", version, about = "Exact Bayesian threshold-juror computations")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Largest accepted testimony catalog.
    #[arg(long, env = "JUROR_MAX_TESTIMONIES", default_value_t = DEFAULT_CAP, global = true)]
    pub max_testimonies: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a prior that rationalizes a disposition at threshold theta.
    Rationalize {
        disposition: PathBuf,
        #[arg(long)]
        theta: String,
        /// Also write the prior as a charge file.
        #[arg(long)]
        prior_out: Option<PathBuf>,
    },
    /// Check whether a prior rationalizes a disposition.
    Verify {
        disposition: PathBuf,
        charge: PathBuf,
        #[arg(long)]
        theta: String,
    },
    /// Extend a charge so that P(event | given) equals the target.
    Extend {
        charge: PathBuf,
        /// Comma-separated point indices.
        #[arg(long)]
        event: String,
        #[arg(long)]
        given: String,
        #[arg(long)]
        target: String,
        /// Write the extended charge here instead of embedding it in the report.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verdict or belief threshold from score weights or a utility quadruple.
    Threshold {
        #[arg(long, num_args = 2, value_names = ["R", "W"], conflicts_with = "quadruple", required_unless_present = "quadruple")]
        weights: Option<Vec<String>>,
        #[arg(long, num_args = 4, value_names = ["GC", "NGC", "GA", "NGA"], allow_hyphen_values = true)]
        quadruple: Option<Vec<String>>,
    },
    /// Posterior odds from prior odds and a likelihood ratio.
    Odds {
        #[arg(long)]
        prior: String,
        #[arg(long)]
        lr: String,
    },
    /// Fewest testimonies to reach theta when each may raise the posterior by a factor of at most 1 + gamma.
    Rate {
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        theta: String,
        /// Also build and audit the prior over a catalog of this many testimonies.
        #[arg(long)]
        catalog_size: Option<usize>,
    },
    /// Regenerate a worked example.
    Scenario {
        #[arg(value_enum)]
        name: Scenario,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scenario {
    Spann,
    TwoWitness,
    Posner,
}

/// Outcome of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Library(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

type CmdResult = std::result::Result<String, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(mut stdout) => {
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(Failure::Library(e)) => {
            Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") }
        }
        Err(Failure::Io(msg)) => Outcome { code: EXIT_IO, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

fn execute(cli: &Cli) -> CmdResult {
    if cli.max_testimonies > MAX_CAP {
        return Err(Error::InvalidParameter(format!("--max-testimonies must be at most {MAX_CAP}")).into());
    }
    let cap = cli.max_testimonies;
    match &cli.command {
        Command::Rationalize { disposition, theta, prior_out } => {
            cmd_rationalize(disposition, theta, prior_out.as_deref(), cap, cli.format)
        }
        Command::Verify { disposition, charge, theta } => cmd_verify(disposition, charge, theta, cap, cli.format),
        Command::Extend { charge, event, given, target, out } => {
            cmd_extend(charge, event, given, target, out.as_deref(), cli.format)
        }
        Command::Threshold { weights, quadruple } => cmd_threshold(weights.as_deref(), quadruple.as_deref(), cli.format),
        Command::Odds { prior, lr } => cmd_odds(prior, lr, cli.format),
        Command::Rate { gamma, theta, catalog_size } => cmd_rate(gamma, theta, *catalog_size, cap, cli.format),
        Command::Scenario { name } => cmd_scenario(*name, cli.format),
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

/// Two-column table, keys left-aligned. Decimal columns are marked `≈`.
fn table(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

fn row(key: &str, value: impl Into<String>) -> (String, String) {
    (key.to_string(), value.into())
}

fn approx_row(key: &str, value: &Rational) -> (String, String) {
    (format!("{key} (approx.)"), format!("≈ {}", approx(value, 6)))
}

fn cmd_rationalize(path: &Path, theta: &str, prior_out: Option<&Path>, cap: usize, format: Format) -> CmdResult {
    let f = DispositionFile::parse(&read(path)?, cap)?;
    let theta = parse_rational(theta)?;
    let cert = rationalize(&f, &theta)?;
    let report = cert.to_report();
    if let Some(out) = prior_out {
        write(out, &(to_json(&report.prior) + "\n"))?;
    }
    Ok(match format {
        Format::Json => to_json(&report),
        Format::Table => cert.to_table(),
    })
}

fn cmd_verify(disposition: &Path, charge: &Path, theta: &str, cap: usize, format: Format) -> CmdResult {
    let f = DispositionFile::parse(&read(disposition)?, cap)?;
    let (prior, catalog) = Charge::from_json(&read(charge)?)?;
    if catalog.as_deref().is_some_and(|labels| labels != f.catalog().labels()) {
        return Err(Error::CatalogMismatch.into());
    }
    let theta = parse_rational(theta)?;
    let v = verify_rationalization(&f, &theta, &prior)?;
    let witness = v.witness.map(|t| f.catalog().labels_of(t).into_iter().map(String::from).collect::<Vec<_>>());
    Ok(match format {
        Format::Json => to_json(&json!({
            "rationalizes": v.holds,
            "theta": format_rational(&theta),
            "witness": witness,
        })),
        Format::Table => {
            let mut rows = vec![row("rationalizes", v.holds.to_string()), row("theta", format_rational(&theta))];
            if let Some(t) = v.witness {
                rows.push(row("witness", f.catalog().render(t)));
            }
            table(&rows)
        }
    })
}

fn cmd_extend(path: &Path, event: &str, given: &str, target: &str, out: Option<&Path>, format: Format) -> CmdResult {
    let (charge, catalog) = Charge::from_json(&read(path)?)?;
    let event: Points = parse_points(event)?;
    let given: Points = parse_points(given)?;
    let target = parse_rational(target)?;
    let extended = charge.extend_with_conditional(&event, &given, &target)?;
    let achieved = extended.conditional(&event, &given)?.value;
    let verified = achieved == target;
    let restriction = extended.restricts_to(&charge);
    let file = extended.to_file(catalog.as_deref());
    if let Some(out) = out {
        write(out, &(to_json(&file) + "\n"))?;
    }
    Ok(match format {
        Format::Json => {
            let mut report = json!({
                "target": format_rational(&target),
                "conditional": format_rational(&achieved),
                "verified": verified,
                "restriction_preserved": restriction,
                "atoms": extended.algebra().atom_count(),
            });
            if out.is_none() {
                report["charge"] = serde_json::to_value(&file).expect("charge serializes");
            }
            to_json(&report)
        }
        Format::Table => table(&[
            row("target", format_rational(&target)),
            row("conditional", format_rational(&achieved)),
            row("verified", verified.to_string()),
            row("restriction preserved", restriction.to_string()),
            row("atoms", extended.algebra().atom_count().to_string()),
        ]),
    })
}

fn parse_all(values: &[String]) -> crate::Result<Vec<Rational>> {
    values.iter().map(|v| parse_rational(v)).collect()
}

fn cmd_threshold(weights: Option<&[String]>, quadruple: Option<&[String]>, format: Format) -> CmdResult {
    let (source, q, threshold) = match (weights, quadruple) {
        (Some(w), _) => {
            let w = parse_all(w)?;
            let sw = ScoreWeights::new(w[0].clone(), w[1].clone())?;
            let t = sw.threshold();
            ("weights", UtilityQuadruple::from_weights(&sw), t)
        }
        (None, Some(q)) => {
            let q = parse_all(q)?;
            let uq = UtilityQuadruple::new(q[0].clone(), q[1].clone(), q[2].clone(), q[3].clone());
            let t = uq.verdict_threshold()?;
            ("quadruple", uq, t)
        }
        (None, None) => return Err(Error::Parse("one of --weights or --quadruple is required".into()).into()),
    };
    let sign = q.satisfies_sign_conditions();
    Ok(match format {
        Format::Json => to_json(&json!({
            "source": source,
            "threshold": format_rational(&threshold),
            "threshold_decimal": approx(&threshold, 6),
            "sign_conditions": sign,
        })),
        Format::Table => table(&[
            row("source", source),
            row("threshold", format_rational(&threshold)),
            approx_row("threshold", &threshold),
            row("sign conditions", sign.to_string()),
        ]),
    })
}

fn cmd_odds(prior: &str, lr: &str, format: Format) -> CmdResult {
    let prior = Odds::parse(prior)?;
    let lr = parse_rational(lr)?;
    let post = posterior_odds(&prior, &lr)?;
    let p = post.probability();
    Ok(match format {
        Format::Json => to_json(&json!({
            "prior": prior.to_string(),
            "likelihood_ratio": format_rational(&lr),
            "posterior": post.to_string(),
            "posterior_probability": format_rational(&p),
        })),
        Format::Table => table(&[
            row("prior", prior.to_string()),
            row("likelihood ratio", format_rational(&lr)),
            row("posterior", post.to_string()),
            row("posterior probability", format_rational(&p)),
            approx_row("posterior probability", &p),
        ]),
    })
}

fn cmd_rate(gamma: &str, theta: &str, catalog_size: Option<usize>, cap: usize, format: Format) -> CmdResult {
    let cfg = RateBoundConfig::new(parse_rational(gamma)?, parse_rational(theta)?)?;
    let m = min_convicting_testimony_count(&cfg);
    let log_bound = cfg.log_bound();
    let mut report = json!({
        "gamma": format_rational(&cfg.gamma),
        "theta": format_rational(&cfg.theta),
        "testimonies_needed": m,
        "log_bound_decimal": format!("{log_bound:.6}"),
        "consistent_with_log_bound": count_matches_log_bound(m, log_bound),
    });
    if let Some(n) = catalog_size {
        let catalog = TestimonyCatalog::with_cap((1..=n).map(|i| format!("t{i}")), cap)?;
        let built = build_ratio_bounded_convicting_prior(&catalog, &cfg)?;
        let audit = audit_rate_bound(&catalog, &built.charge, &cfg, built.steps)?;
        report["chain"] = json!({
            "guilt_prior": format_rational(&audit.guilt_prior),
            "posteriors": audit.posteriors.iter().map(format_rational).collect::<Vec<_>>(),
            "ratios": audit.ratios.iter().map(format_rational).collect::<Vec<_>>(),
            "audit_passes": audit.passes(),
        });
    }
    Ok(match format {
        Format::Json => to_json(&report),
        Format::Table => json_table(&report),
    })
}

/// Flattens a JSON report into `key  value` rows.
fn json_table(value: &Value) -> String {
    fn walk(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
        match value {
            Value::Object(map) => {
                for (k, v) in map {
                    let key = if prefix.is_empty() { k.replace('_', " ") } else { format!("{prefix}.{}", k.replace('_', " ")) };
                    walk(&key, v, rows);
                }
            }
            Value::Array(items) => rows.push((
                prefix.to_string(),
                items.iter().map(|v| v.as_str().map_or_else(|| v.to_string(), String::from)).collect::<Vec<_>>().join(", "),
            )),
            Value::String(s) => rows.push((prefix.to_string(), s.clone())),
            other => rows.push((prefix.to_string(), other.to_string())),
        }
    }
    let mut rows = Vec::new();
    walk("", value, &mut rows);
    table(&rows)
}

fn cmd_scenario(name: Scenario, format: Format) -> CmdResult {
    let report = match name {
        Scenario::Spann => spann_report()?,
        Scenario::TwoWitness => two_witness_report()?,
        Scenario::Posner => posner_report()?,
    };
    Ok(match format {
        Format::Json => to_json(&report),
        Format::Table => json_table(&report),
    })
}

fn spann_report() -> crate::Result<Value> {
    let space = build_spann_space();
    let refined = space.with_alibi()?;
    let low = refined.paternity_given_alibi(&rat(0, 1))?;
    let high = refined.paternity_given_alibi(&rat(1, 1))?;
    let reached = |c: &Charge| -> crate::Result<String> {
        Ok(format_rational(&c.conditional(&refined.paternity, &refined.alibi)?.value))
    };
    Ok(json!({
        "blood_types": BLOOD_TYPES,
        "size": space.size(),
        "paternity_worlds": space.paternity.len(),
        "paternity_prior": format_rational(&space.paternity_prior()),
        "alibi": {
            "refined_size": refined.charge.ground().len(),
            "expressible": refined.alibi_expressible(),
            "paternity_given_alibi_reachable": [reached(&low)?, reached(&high)?],
        },
    }))
}

fn two_witness_report() -> crate::Result<Value> {
    let catalog = TestimonyCatalog::numbered(4)?;
    let f = Disposition::at_least(catalog.clone(), 2);
    let theta = rat(3, 4);
    let cert = rationalize(&f, &theta)?;
    let v = verify_rationalization(&f, &theta, &cert.prior)?;
    let convicting = f.convicting().iter().map(|&t| catalog.render(t)).collect::<Vec<_>>();
    Ok(json!({
        "catalog": catalog.labels(),
        "rule": "convict iff at least two testimonies",
        "theta": format_rational(&theta),
        "convicting": convicting,
        "guilt_prior": format_rational(&cert.guilt_prior),
        "rationalizes": v.holds,
    }))
}

fn posner_report() -> crate::Result<Value> {
    let catalog = TestimonyCatalog::numbered(4)?;
    let mut cases = Vec::new();
    for theta in [rat(2, 3), rat(3, 4), rat(9, 10), rat(1, 2)] {
        let prior = posner_even_odds_prior(&catalog, &theta)?;
        let guilt = guilt_event(&catalog).into_points();
        let f = Disposition::always_convict_nonempty(catalog.clone());
        let effective = theta.clone().max(posner_fallback_threshold());
        let v = verify_rationalization(&f, &effective, &prior)?;
        let min_posterior = v
            .posteriors
            .iter()
            .filter(|(t, _)| !t.is_empty())
            .map(|(_, p)| p.clone())
            .min()
            .expect("catalog is nonempty");
        cases.push(json!({
            "theta": format_rational(&theta),
            "guilt_prior": format_rational(&prior.measure(&guilt)?),
            "min_nonempty_posterior": format_rational(&min_posterior),
            "convicts_every_nonempty_transcript": v.holds,
        }));
    }
    Ok(json!({ "catalog": catalog.labels(), "cases": cases }))
}
