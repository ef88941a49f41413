//! Build and independently verify a prior that makes the "convict on two or
//! more witnesses" juror a threshold Bayesian.
//!
//! cargo run --example rationalize_disposition

use threshold_juror::dispositions::{is_open_door, rationalize, verify_rationalization, Disposition, Verdict};
use threshold_juror::rational::rat;
use threshold_juror::TestimonyCatalog;

fn main() -> threshold_juror::Result<()> {
    let catalog = TestimonyCatalog::new(["alice", "bob", "carol", "dan"])?;
    let juror = Disposition::from_fn(catalog.clone(), |t| if t.len() >= 2 { Verdict::Convict } else { Verdict::Acquit });
    juror.check_axioms()?;

    let theta = rat(3, 4);
    let cert = rationalize(&juror, &theta)?;
    println!("{}", cert.to_table());

    let check = verify_rationalization(&juror, &theta, &cert.prior)?;
    println!("verified: {}  open door: {}", check.holds, is_open_door(&catalog, &cert.prior)?);
    assert!(check.holds);
    Ok(())
}
