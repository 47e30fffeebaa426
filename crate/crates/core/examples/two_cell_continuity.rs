// Two cells sharing x = 1: the piecewise interpolant is C^m there.

use std::error::Error;

use fecc::element1d::two_cell_continuity_demo;
use fecc::{Element1D, SmoothFunction1D};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (m, n) in [(1, 3), (2, 5)] {
        let e = Element1D::build(m, n)?;
        let report = two_cell_continuity_demo(&e, &SmoothFunction1D::sin())?;
        println!("{report}");
        if !report.passed {
            return Err("junction mismatch".into());
        }
    }

    // |x-1|(x-1)^2 is only C^2 at the junction.
    let kink = SmoothFunction1D::kink();
    let c2 = two_cell_continuity_demo(&Element1D::build(2, 5)?, &kink)?;
    let c3 = two_cell_continuity_demo(&Element1D::build(3, 7)?, &kink)?;
    println!("{c2}\n{c3}");
    assert!(c2.passed && c3.has_failure("input-regularity"));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("two-cell continuity");
}
