//! The blood-type paternity space: 8 x 8 x 2 tuples with an even prior on
//! paternity. An alibi is not an event of that space, so its bearing on
//! paternity is left entirely open.
//!
//! cargo run --example paternity_sample_space

use threshold_juror::analyses::{build_spann_space, SpannSpace, BLOOD_TYPES};
use threshold_juror::rational::{format_rational, rat};

fn main() -> threshold_juror::Result<()> {
    let space = build_spann_space();
    println!("worlds: {}, paternity worlds: {}, P(paternity) = {}", space.size(), space.paternity.len(), format_rational(&space.paternity_prior()));
    let example = SpannSpace::point(2, 6, true);
    println!("(X = {}, Y = {}, parent) is world {example}", BLOOD_TYPES[2], BLOOD_TYPES[6]);

    let refined = space.with_alibi()?;
    println!("with the alibi recorded: {} worlds; alibi expressible in the prior's algebra: {}", refined.charge.ground().len(), refined.alibi_expressible());
    for target in [rat(0, 1), rat(1, 2), rat(1, 1)] {
        let ext = refined.paternity_given_alibi(&target)?;
        let got = ext.conditional(&refined.paternity, &refined.alibi)?.value;
        println!("  one admissible extension gives P(paternity | alibi) = {}", format_rational(&got));
    }
    Ok(())
}
