// d I0 u = I1 du as an exact polynomial identity.

use std::error::Error;

use fecc::element1d::{monomial_probes, verify_commutation};
use fecc::{Element1D, FormDegree, Polynomial};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let e = Element1D::build(2, 6)?;
    let u = Polynomial::from_ints(&[1, 0, -3, 0, 0, 0, 0, 0, 2]);
    let d_i0 = e.interpolate(FormDegree::Zero, &u).differentiate();
    let i1_d = e.interpolate(FormDegree::One, &u.differentiate());
    println!("u        = {u}");
    println!("d I0 u   = {d_i0}");
    println!("I1 du    = {i1_d}");
    assert_eq!(d_i0, i1_d);

    let report = verify_commutation(&e, &monomial_probes(11));
    println!("{report}");
    if !report.passed {
        return Err("commutation failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("commutation");
}
