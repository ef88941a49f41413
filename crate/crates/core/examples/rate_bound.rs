//! If no single testimony may raise the guilt posterior by more than a
//! factor of 1 + gamma, how many are needed to reach theta from even odds?
//! Also builds a prior that meets the bound exactly and audits it.
//!
//! cargo run --example rate_bound

use threshold_juror::analyses::{audit_rate_bound, build_ratio_bounded_convicting_prior, min_convicting_testimony_count, RateBoundConfig};
use threshold_juror::rational::{format_rational, int, rat};
use threshold_juror::TestimonyCatalog;

fn main() -> threshold_juror::Result<()> {
    for (gamma, theta) in [(rat(1, 2), rat(3, 4)), (rat(1, 10), rat(3, 4)), (int(1), rat(9, 10)), (rat(1, 100), rat(99, 100))] {
        let cfg = RateBoundConfig::new(gamma, theta)?;
        let m = min_convicting_testimony_count(&cfg);
        println!("gamma = {:<5} theta = {:<6} needs {m:>3} testimonies (log bound {:.3})", format_rational(&cfg.gamma), format_rational(&cfg.theta), cfg.log_bound());
    }

    let cfg = RateBoundConfig::new(rat(1, 10), rat(3, 4))?;
    let catalog = TestimonyCatalog::numbered(6)?;
    let built = build_ratio_bounded_convicting_prior(&catalog, &cfg)?;
    let audit = audit_rate_bound(&catalog, &built.charge, &cfg, built.steps)?;
    println!("chain posteriors: {}", audit.posteriors.iter().map(format_rational).collect::<Vec<_>>().join(" -> "));
    println!("audit passes: {}", audit.passes());
    assert!(audit.passes());
    Ok(())
}
