//! Doxastic scoring: reward R for a true belief, penalty W for a false one.
//! Believing is optimal exactly when the probability reaches W/(R+W); the
//! closed form is cross-checked by exhaustive search.
//!
//! cargo run --example doxastic_scoring

use std::collections::BTreeMap;

use threshold_juror::algebra::Points;
use threshold_juror::charges::Charge;
use threshold_juror::epistemic::{brute_force_optimal, Agenda, PropositionPair, ScoreOptions, ScoreWeights};
use threshold_juror::rational::{format_rational, int, rat};

fn main() -> threshold_juror::Result<()> {
    let weights = ScoreWeights::new(int(1), int(3))?;
    println!("threshold W/(R+W) = {}", format_rational(&weights.threshold()));

    let charge = Charge::from_point_masses(BTreeMap::from([(0, rat(1, 2)), (1, rat(1, 4)), (2, rat(1, 8)), (3, rat(1, 8))]))?;
    let pairs = [("guilty", vec![0, 1]), ("armed", vec![0]), ("present", vec![0, 1, 2]), ("alibi", vec![3])]
        .into_iter()
        .map(|(id, pts)| PropositionPair { id: id.into(), positive: pts.into_iter().collect() })
        .collect();
    let agenda = Agenda::new(Points::from([0, 1, 2, 3]), pairs)?;

    let opts = ScoreOptions::default();
    let best = agenda.optimal_doxastic_state(&charge, &weights, opts)?;
    for (pair, attitude) in agenda.pairs().iter().zip(&best.state.0) {
        println!("  {:<8} P = {:<4} -> {:?}", pair.id, format_rational(&charge.measure(&pair.positive)?), attitude);
    }
    println!("ties at pairs {:?}", best.ties);
    println!("expected score {}", format_rational(&agenda.expected_score(&best.state, &charge, &weights, opts)?));

    let brute = brute_force_optimal(&agenda, &charge, &weights, opts)?;
    assert!(brute.contains(&best.state));
    println!("brute force agrees ({} optimal state(s))", brute.len());
    Ok(())
}
