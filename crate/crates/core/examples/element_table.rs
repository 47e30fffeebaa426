// The C^2 quintic element: node functionals, basis, and node matrices.

use std::error::Error;

use fecc::element1d::describe_functionals;
use fecc::{Element1D, FormDegree};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let e = Element1D::build(2, 5)?;
    for k in [FormDegree::Zero, FormDegree::One] {
        println!("{k}-forms, dimension {}", e.dim(k));
        for (d, phi) in describe_functionals(&e, k).iter().zip(e.basis(k)) {
            println!("  N{k}_{} = {:<28} phi{k}_{} = {phi}", d.index, d.latex, d.index);
        }
        println!("M{k} =\n{}", e.node_matrix(k));
    }
    assert_eq!(e.node_matrix(FormDegree::One), &e.node_matrix(FormDegree::Zero).without_last());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("element table");
}
