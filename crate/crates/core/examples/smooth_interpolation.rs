// Interpolating sin and exp through derivative callbacks and Gauss quadrature.

use std::error::Error;

use fecc::tolerances::{COMMUTATION_1D, SMOOTH_QUADRATURE_ORDER};
use fecc::{Element1D, FormDegree, SmoothFunction1D};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (m, n) in [(1, 3), (2, 5)] {
        let e = Element1D::build(m, n)?;
        for u in [SmoothFunction1D::sin(), SmoothFunction1D::exp()] {
            let i0 = e.interpolate_smooth(FormDegree::Zero, &u, SMOOTH_QUADRATURE_ORDER)?;
            let error = (0..=100)
                .map(|k| k as f64 / 100.0)
                .fold(0.0f64, |acc, x| acc.max((i0.evaluate(x) - u.value(x)).abs()));
            let residual = e.commutation_residual_smooth(&u, SMOOTH_QUADRATURE_ORDER)?;
            println!("m={m} n={n} {:>3}: max|u - I0u| = {error:.2e}, max|d I0u - I1 du| = {residual:.2e}", u.name());
            if residual > COMMUTATION_1D {
                return Err("smooth commutation residual too large".into());
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("smooth interpolation");
}
