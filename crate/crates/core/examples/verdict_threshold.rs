//! Expected-utility verdicts from the four outcome utilities, and the
//! threshold at which convicting starts to pay.
//!
//! cargo run --example verdict_threshold

use threshold_juror::epistemic::{ScoreWeights, UtilityQuadruple};
use threshold_juror::rational::{approx, format_rational, int, rat};

fn main() -> threshold_juror::Result<()> {
    // Convicting an innocent is nine times as bad as acquitting the guilty.
    let u = UtilityQuadruple::new(int(1), int(-9), int(0), int(0));
    let t = u.verdict_threshold()?;
    println!("threshold = {} (≈ {})", format_rational(&t), approx(&t, 4));
    for p in [rat(1, 2), rat(9, 10), rat(19, 20)] {
        let (c, a) = u.expected_verdict_utilities(&p);
        println!("  P(guilty) = {:<5} E[convict] = {:<6} E[acquit] = {:<3} -> {}", format_rational(&p), format_rational(&c), format_rational(&a), u.best_verdict(&p));
    }

    // Doxastic scoring embeds as (R, -W, 0, 0).
    let w = ScoreWeights::new(int(1), int(3))?;
    assert_eq!(UtilityQuadruple::from_weights(&w).verdict_threshold()?, w.threshold());
    println!("scoring weights R=1, W=3 give threshold {}", format_rational(&w.threshold()));
    Ok(())
}
