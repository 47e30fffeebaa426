// Corrupted constructions and the verifiers that catch them.

use std::error::Error;

use fecc::element1d::{fixtures, monomial_probes, verify_commutation, verify_lemma_hypotheses, verify_unisolvence};
use fecc::tensor::{verify_dd_zero_with, SignConvention};
use fecc::Element1D;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let reports = [
        verify_unisolvence(&fixtures::swapped_basis(1, 4)?),
        verify_lemma_hypotheses(&fixtures::wrong_functional_order(1, 4)?, 8)?,
        verify_commutation(&fixtures::permuted_alpha1(1, 4)?, &monomial_probes(8)),
        verify_dd_zero_with(2, &Element1D::build(1, 4)?, 2, SignConvention::Unsigned)?,
    ];
    for r in &reports {
        println!("{r}");
        if r.passed || r.witnesses.is_empty() {
            return Err(format!("{} should have failed", r.property).into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("negative controls");
}
