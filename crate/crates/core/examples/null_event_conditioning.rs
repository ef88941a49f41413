//! Conditioning never revives a null event: once a prior gives guilt
//! probability 0, no testimony with positive probability can raise it.
//!
//! cargo run --example null_event_conditioning

use std::collections::BTreeMap;

use threshold_juror::algebra::Points;
use threshold_juror::charges::Charge;
use threshold_juror::rational::{format_rational, rat};
use threshold_juror::Error;

fn main() -> threshold_juror::Result<()> {
    // Worlds: 0 = guilty, 1..4 = innocent variants. Guilt gets zero mass.
    let prior = Charge::from_point_masses(BTreeMap::from([(0, rat(0, 1)), (1, rat(1, 4)), (2, rat(1, 4)), (3, rat(1, 4)), (4, rat(1, 4))]))?;
    let guilty = Points::from([0]);
    for testimony in [Points::from([0, 1]), Points::from([0, 2, 3]), Points::from([0, 1, 2, 3, 4])] {
        let post = prior.condition(&testimony)?.measure(&guilty)?;
        println!("after {:?}: P(guilty) = {}", testimony, format_rational(&post));
        assert_eq!(post, rat(0, 1));
    }
    // Testimony with zero probability cannot be conditioned on at all.
    assert_eq!(prior.condition(&guilty).unwrap_err(), Error::ZeroConditioningEvent);
    println!("conditioning on a null event is refused");
    Ok(())
}
