//! Uniform priors over a pool of suspects, with a certain and a fallible
//! eyewitness.
//!
//! cargo run --example suspect_pool

use threshold_juror::analyses::{certain_witness_posterior, fallible_witness_event, uniform_guilt_prior, SuspectPool};
use threshold_juror::rational::format_rational;

fn main() -> threshold_juror::Result<()> {
    let pool = SuspectPool::new(1_600_000, 40, true)?;
    println!("prior over {} suspects: {}", pool.size, format_rational(&uniform_guilt_prior(&pool)));
    println!("a certain witness narrowing to {} matches: {}", pool.matching, format_rational(&certain_witness_posterior(&pool)?));

    let cleared = SuspectPool::new(1_600_000, 40, false)?;
    println!("defendant outside the match: {}", format_rational(&certain_witness_posterior(&cleared)?));

    let fallible = fallible_witness_event(&SuspectPool::new(1_600_000, 1_600_000, true)?)?;
    println!(
        "a witness who may be wrong rules nobody out: {} -> {} (degenerate: {})",
        format_rational(&fallible.prior),
        format_rational(&fallible.posterior),
        fallible.degenerate
    );
    Ok(())
}
