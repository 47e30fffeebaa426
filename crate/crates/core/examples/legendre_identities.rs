// Shifted Legendre polynomials and their iterated integrals.

use std::error::Error;

use fecc::legendre::{iterated_legendre_integral, legendre, legendre_expansion};
use fecc::rational::{self, int};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for j in 0..=4 {
        println!("l_{j} = {}", legendre(j));
    }
    for j in 1..=10 {
        let lhs = iterated_legendre_integral(1, j).scale(&int(2 * (2 * j as i64 + 1)));
        assert_eq!(lhs, &legendre(j + 1) - &legendre(j - 1));
    }
    let l = iterated_legendre_integral(3, 5);
    let coeffs: Vec<String> = legendre_expansion(&l).iter().map(rational::format).collect();
    println!("L^3_5 in the Legendre basis: {coeffs:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("legendre identities");
}
