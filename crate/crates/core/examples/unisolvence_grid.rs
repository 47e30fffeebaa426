// Structural checks of the node matrix over a grid of (m, n).

use std::error::Error;

use fecc::element1d::{verify_lemma_hypotheses, verify_node_matrix_commute, verify_unisolvence};
use fecc::Element1D;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for m in 0..=3 {
        for n in 2 * m + 1..=2 * m + 3 {
            let e = Element1D::build(m, n)?;
            let reports = [
                verify_unisolvence(&e),
                verify_node_matrix_commute(&e),
                verify_lemma_hypotheses(&e, n + 5)?,
            ];
            let ok = reports.iter().all(|r| r.passed);
            println!("m={m} n={n}: {}", if ok { "unisolvent, hypotheses hold" } else { "FAILED" });
            if !ok {
                return Err(format!("{:?}", reports).into());
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("unisolvence grid");
}
