//! Extend a coarse charge so that a conditional probability it leaves open
//! takes any prescribed value, without disturbing the original masses.
//!
//! cargo run --example conditional_extension

use threshold_juror::algebra::Points;
use threshold_juror::charges::Charge;
use threshold_juror::rational::{format_rational, rat};

fn main() -> threshold_juror::Result<()> {
    // Worlds 0..6 in two atoms; the charge knows nothing finer.
    let guilty = Points::from([0, 1, 2]);
    let coarse = Charge::from_atoms(vec![(guilty.clone(), rat(1, 2)), (Points::from([3, 4, 5]), rat(1, 2))])?;

    // A testimony event cutting both atoms: its probability is not fixed.
    let testimony = Points::from([0, 3, 4]);
    let (inner, outer) = coarse.inner_outer(&testimony);
    println!("P(testimony) lies in [{}, {}]", format_rational(&inner), format_rational(&outer));
    assert!(coarse.is_strictly_independent(&testimony));

    for target in [rat(0, 1), rat(1, 5), rat(3, 4), rat(1, 1)] {
        let extended = coarse.extend_with_conditional(&guilty, &testimony, &target)?;
        let got = extended.conditional(&guilty, &testimony)?;
        println!(
            "target {:>4}  ->  P(guilty | testimony) = {:>4}, P(testimony) = {}, restricts: {}",
            format_rational(&target),
            format_rational(&got.value),
            format_rational(&got.conditioning_mass),
            extended.restricts_to(&coarse)
        );
        assert_eq!(got.value, target);
    }

    // Plain extension to an unconditional value inside the bounds.
    let e = coarse.extend_charge(&testimony, &rat(1, 3))?;
    println!("extend_charge: P(testimony) = {}", format_rational(&e.measure(&testimony)?));
    Ok(())
}
