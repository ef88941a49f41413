//! An even-odds prior under which any single testimony pushes the guilt
//! posterior past the threshold, so the juror convicts on every nonempty
//! transcript.
//!
//! cargo run --example even_odds_prior

use threshold_juror::dispositions::{guilt_posteriors, posner_even_odds_prior};
use threshold_juror::rational::{format_rational, rat};
use threshold_juror::world::guilt_event;
use threshold_juror::TestimonyCatalog;

fn main() -> threshold_juror::Result<()> {
    let catalog = TestimonyCatalog::numbered(3)?;
    for theta in [rat(2, 3), rat(9, 10), rat(1, 3)] {
        let prior = posner_even_odds_prior(&catalog, &theta)?;
        println!("theta = {}, P(guilty) = {}", format_rational(&theta), format_rational(&prior.measure(guilt_event(&catalog).points())?));
        for (t, p) in guilt_posteriors(&catalog, &prior)? {
            println!("  {:<12} P(guilty | heard) = {}", catalog.render(t), format_rational(&p));
            if !t.is_empty() {
                assert!(p >= theta);
            }
        }
    }
    Ok(())
}
