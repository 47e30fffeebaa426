//! Deliberately corrupted elements. Each one breaks a single ingredient so
//! that the verifier aimed at it can be shown to fail.

use crate::error::Result;
use crate::form_degree::FormDegree;
use crate::hermite::Endpoint;

use super::element::Element1D;
use super::functional::NodeFunctional;

/// Swaps `φ⁰_1 ↔ φ⁰_2` (and `φ¹_1 ↔ φ¹_2` alongside, so `dφ⁰_j = φ¹_j` still
/// holds). The interpolation operators are unchanged; only the block structure
/// of `M₀` is destroyed. Needs `m ≥ 1`.
pub fn swapped_basis(m: usize, n: usize) -> Result<Element1D> {
    let e = Element1D::build(m, n)?;
    let mut b0 = e.basis(FormDegree::Zero).to_vec();
    let mut b1 = e.basis(FormDegree::One).to_vec();
    b0.swap(0, 1);
    b1.swap(0, 1);
    Element1D::from_parts(
        m,
        n,
        e.functionals(FormDegree::Zero).to_vec(),
        e.functionals(FormDegree::One).to_vec(),
        b0,
        b1,
    )
}

/// Replaces `𝒩¹_1 = v(0)` by `∂^m_x v(0)`, an order the 1-form family does not
/// use, which breaks `𝒩¹_1(du) = 𝒩⁰_1(u)`. Needs `m ≥ 1`.
pub fn wrong_functional_order(m: usize, n: usize) -> Result<Element1D> {
    let e = Element1D::build(m, n)?;
    let mut f1 = e.functionals(FormDegree::One).to_vec();
    f1[0] = NodeFunctional::endpoint_derivative(FormDegree::One, Endpoint::Left, m.max(1));
    Element1D::from_parts(
        m,
        n,
        e.functionals(FormDegree::Zero).to_vec(),
        f1,
        e.basis(FormDegree::Zero).to_vec(),
        e.basis(FormDegree::One).to_vec(),
    )
}

/// Swaps the first two rows of `α¹ = M₁⁻¹` without touching `M₁`.
pub fn permuted_alpha1(m: usize, n: usize) -> Result<Element1D> {
    let mut e = Element1D::build(m, n)?;
    let mut alpha1 = e.alpha(FormDegree::One).clone();
    alpha1.swap_rows(0, 1);
    e.set_alpha1(alpha1);
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element1d::{
        monomial_probes, verify_commutation, verify_lemma_hypotheses, verify_node_matrix_commute,
        verify_unisolvence,
    };

    #[test]
    fn swapped_basis_fails_only_unisolvence() {
        let e = swapped_basis(1, 3).unwrap();
        let r = verify_unisolvence(&e);
        assert!(!r.passed);
        assert!(r.witnesses.iter().any(|w| w.indices == vec![1, 2]));
        assert!(verify_lemma_hypotheses(&e, 8).unwrap().passed);
        assert!(verify_commutation(&e, &monomial_probes(8)).passed);
    }

    #[test]
    fn wrong_order_fails_functional_commutation() {
        for (m, n) in [(1, 4), (2, 5), (3, 9)] {
            let e = wrong_functional_order(m, n).unwrap();
            let r = verify_lemma_hypotheses(&e, n + 4).unwrap();
            assert!(!r.passed);
            assert_eq!(r.failed_checks(), vec!["v:functional-commute"]);
            assert!(verify_unisolvence(&e).passed);
            assert!(!verify_node_matrix_commute(&e).passed);
        }
    }

    #[test]
    fn permuted_alpha_fails_commutation() {
        let e = permuted_alpha1(1, 4).unwrap();
        let r = verify_commutation(&e, &monomial_probes(9));
        assert!(!r.passed);
        assert!(!r.witnesses.is_empty());
        assert!(verify_unisolvence(&e).passed);
        assert!(verify_lemma_hypotheses(&e, 8).unwrap().passed);
    }
}
