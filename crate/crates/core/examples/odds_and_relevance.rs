//! Odds-form updating and relevance as a likelihood ratio different from 1.
//!
//! cargo run --example odds_and_relevance

use std::collections::BTreeMap;

use threshold_juror::algebra::Points;
use threshold_juror::analyses::{impact_ratio_bound, is_relevant, likelihood_ratio, posterior_odds, Odds, RatioVariant};
use threshold_juror::charges::Charge;
use threshold_juror::rational::{format_rational, int, rat};

fn main() -> threshold_juror::Result<()> {
    for prior in ["1:2", "1:10"] {
        let prior = Odds::parse(prior)?;
        let post = posterior_odds(&prior, &int(8))?;
        println!("{prior} x 8 -> {post}  (P = {})", format_rational(&post.probability()));
    }

    // H = {0,1}, E = {0,2}: P(H) = 1/3, P(E|H) = 4/5, P(E|not H) = 1/10.
    let charge = Charge::from_point_masses(BTreeMap::from([(0, rat(4, 15)), (1, rat(1, 15)), (2, rat(1, 15)), (3, rat(3, 5))]))?;
    let h = Points::from([0, 1]);
    let e = Points::from([0, 2]);
    let standard = likelihood_ratio(&charge, &e, &h, RatioVariant::Standard)?;
    let impact = likelihood_ratio(&charge, &e, &h, RatioVariant::Impact)?;
    println!("standard ratio {}, impact ratio {}, impact bound {}", format_rational(&standard), format_rational(&impact), format_rational(&impact_ratio_bound(&charge, &h)?));
    println!("relevant: {}", is_relevant(&charge, &e, &h)?);

    // Evidence independent of the hypothesis has ratio 1.
    let flat = Charge::uniform((0..4).collect())?;
    println!("under a uniform charge, relevant: {}", is_relevant(&flat, &e, &h)?);
    Ok(())
}
