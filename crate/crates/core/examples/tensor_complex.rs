// The tensor-product complex on the unit square and cube.

use std::error::Error;

use fecc::tensor::{
    enumerate_chi, monomial_rank_one_probes, space_dimension, tensor_interpolate, verify_dd_zero, verify_dimensions,
    verify_kronecker_structure, verify_tensor_commutation, Factor, FormSum, RankOneForm, SignConvention,
};
use fecc::{Element1D, FormDegree, Polynomial};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let e = Element1D::build(1, 3)?;
    for n_factors in [2, 3] {
        let dims: Vec<usize> = (0..=n_factors)
            .map(|nu| space_dimension(n_factors, nu, &e))
            .collect::<Result<_, _>>()?;
        println!("N={n_factors}: dimensions {dims:?}, blocks of degree 1 {:?}",
            enumerate_chi(n_factors, 1)?.iter().map(|c| c.to_string()).collect::<Vec<_>>());
        let mut reports = vec![verify_dimensions(n_factors, &e)?, verify_dd_zero(n_factors, &e, 3)?];
        for nu in 0..=n_factors {
            reports.push(verify_kronecker_structure(n_factors, nu, &e)?);
            let probes = monomial_rank_one_probes(n_factors, nu, 5)?;
            reports.push(verify_tensor_commutation(n_factors, nu, &probes, &e)?);
        }
        for r in &reports {
            println!("  {r}");
        }
        if reports.iter().any(|r| !r.passed) {
            return Err("tensor verification failed".into());
        }
    }

    // I(du) = d(Iu) for u = x^5 ⊗ (1 + y^4) on the square.
    let u = FormSum::from_term(RankOneForm::unit(vec![
        Factor::new(FormDegree::Zero, Polynomial::from_ints(&[0, 0, 0, 0, 0, 1])),
        Factor::new(FormDegree::Zero, Polynomial::from_ints(&[1, 0, 0, 0, 1])),
    ]));
    let lhs = tensor_interpolate(&e, 1, &u.exterior_derivative(SignConvention::Alternating))?;
    let rhs = tensor_interpolate(&e, 0, &u)?.exterior_derivative(SignConvention::Alternating);
    assert_eq!(lhs, rhs);
    println!("I(du) = d(Iu): {} nonzero coefficients", lhs.nonzero_entries().len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("tensor complex");
}
