// Node functionals of the C^2 tensor-product element with n = 5 on the square.

use std::error::Error;

use fecc::tensor::{enumerate_chi, tensor_functionals};
use fecc::Element1D;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let e = Element1D::build(2, 5)?;
    for nu in 0..=2 {
        for chi in enumerate_chi(2, nu)? {
            println!("block {chi}");
            for f in tensor_functionals(&e, &chi).iter().filter(|f| f.indices[0] == 0) {
                println!("  {}(u⊗v) = {:<40} {}(u) = {}", f.label(), f.latex_rank_one(), f.label(), f.latex_function("u"));
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("quintic functionals");
}
