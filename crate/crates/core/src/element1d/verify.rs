//! Exact structural checks on an element: unisolvence, the separation and
//! commutation hypotheses of the commuting-interpolation lemma, and the
//! commutation `d I₀ = I₁ d` itself.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::form_degree::FormDegree;
use crate::matrix::RationalMatrix;
use crate::polynomial::Polynomial;
use crate::rational::{self, Rational};
use crate::report::VerificationReport;

use super::element::Element1D;

fn params(report: VerificationReport, e: &Element1D) -> VerificationReport {
    report.with_param("m", e.continuity()).with_param("n", e.degree())
}

fn delta(i: usize, j: usize) -> Rational {
    if i == j { Rational::one() } else { Rational::zero() }
}

/// `1, x, …, x^max_degree`.
pub fn monomial_probes(max_degree: usize) -> Vec<Polynomial> {
    (0..=max_degree).map(|k| Polynomial::monomial(Rational::one(), k)).collect()
}

/// Block structure of `M₀`:
/// (a) identity Hermite block, (b) Hermite rows vanish on bubbles,
/// (c) lower-triangular bubble block, (d) isolated last row and column,
/// (e) nonzero diagonal, (f) `M₀` and `M₁` invertible.
pub fn verify_unisolvence(e: &Element1D) -> VerificationReport {
    let mut report = params(VerificationReport::new("unisolvence"), e);
    let m0 = e.node_matrix(FormDegree::Zero);
    let n = e.degree();
    let hermite = 2 * e.continuity() + 1;

    for i in 0..hermite {
        for j in 0..hermite {
            report.require(*m0.get(i, j) == delta(i, j), "a:hermite-identity", vec![i + 1, j + 1], || {
                format!("entry {}", rational::format(m0.get(i, j)))
            });
        }
        for j in hermite..n {
            report.require(m0.get(i, j).is_zero(), "b:bubble-endpoint-roots", vec![i + 1, j + 1], || {
                format!("entry {}", rational::format(m0.get(i, j)))
            });
        }
    }
    for i in hermite..n {
        for j in i + 1..n {
            report.require(m0.get(i, j).is_zero(), "c:bubble-lower-triangular", vec![i + 1, j + 1], || {
                format!("entry {}", rational::format(m0.get(i, j)))
            });
        }
    }
    for k in 0..=n {
        report.require(*m0.get(n, k) == delta(n, k), "d:kernel-isolation", vec![n + 1, k + 1], || {
            format!("last row entry {}", rational::format(m0.get(n, k)))
        });
        if k < n {
            report.require(m0.get(k, n).is_zero(), "d:kernel-isolation", vec![k + 1, n + 1], || {
                format!("last column entry {}", rational::format(m0.get(k, n)))
            });
        }
    }
    for i in 0..=n {
        report.require(!m0.get(i, i).is_zero(), "e:nonzero-diagonal", vec![i + 1, i + 1], || {
            "zero diagonal entry".to_string()
        });
    }
    for (k, label) in [(FormDegree::Zero, 0), (FormDegree::One, 1)] {
        let mk = e.node_matrix(k);
        let rank = mk.rank();
        report.require(rank == mk.rows(), "f:invertible", vec![label], || {
            format!("M{label} has rank {rank} < {}", mk.rows())
        });
    }
    report
}

/// `𝒩¹_i(φ¹_j) = 𝒩⁰_i(φ⁰_j)` for `i, j ≤ n`: `M₁` is `M₀` without its last row and column.
pub fn verify_node_matrix_commute(e: &Element1D) -> VerificationReport {
    let mut report = params(VerificationReport::new("node-matrix-commute"), e);
    let m0 = e.node_matrix(FormDegree::Zero);
    let m1 = e.node_matrix(FormDegree::One);
    let expected = m0.without_last();
    report.require(
        m1.rows() == expected.rows() && m1.cols() == expected.cols(),
        "shape",
        vec![m1.rows(), m1.cols()],
        || format!("M1 is {}x{}, expected {}x{}", m1.rows(), m1.cols(), expected.rows(), expected.cols()),
    );
    if report.passed {
        for i in 0..m1.rows() {
            for j in 0..m1.cols() {
                report.require(m1.get(i, j) == expected.get(i, j), "deletion-identity", vec![i + 1, j + 1], || {
                    format!(
                        "M1 entry {} differs from M0 entry {}",
                        rational::format(m1.get(i, j)),
                        rational::format(expected.get(i, j))
                    )
                });
            }
        }
    }
    report
}

/// Hypotheses of the commuting-interpolation lemma with `r = n`:
/// (i) `φ⁰_{n+1}` spans `ker d`; (ii) functionals separate kernel and cokernel;
/// (iii) `φ¹_1..φ¹_n` span `range d = ℙ_{n-1}`; (iv) `dφ⁰_j = φ¹_j`;
/// (v) `𝒩¹_i(du) = 𝒩⁰_i(u)` on monomial probes up to `probe_degree`.
pub fn verify_lemma_hypotheses(e: &Element1D, probe_degree: usize) -> Result<VerificationReport> {
    let n = e.degree();
    if probe_degree < n {
        return Err(Error::ProbeDegreeTooLow { probe_degree, n });
    }
    let mut report = params(VerificationReport::new("lemma-hypotheses"), e).with_param("probe_degree", probe_degree);
    let r = e.rank_d();
    let b0 = e.basis(FormDegree::Zero);
    let b1 = e.basis(FormDegree::One);
    let f0 = e.functionals(FormDegree::Zero);
    let f1 = e.functionals(FormDegree::One);

    // (i) ker d on ℙ_n is the constants.
    let kernel = &b0[r];
    report.require(
        kernel.degree() == Some(0),
        "i:kernel-basis",
        vec![r + 1],
        || format!("φ⁰_{} = {kernel} is not a nonzero constant", r + 1),
    );
    for (j, phi) in b0.iter().enumerate().take(r) {
        report.require(phi.degree().is_some_and(|d| d > 0), "i:kernel-basis", vec![j + 1], || {
            format!("φ⁰_{} = {phi} lies in ker d", j + 1)
        });
    }

    // (ii)
    for (i, f) in f0.iter().enumerate().take(r) {
        let v = f.apply(kernel);
        report.require(v.is_zero(), "ii:domain-separation", vec![i + 1, r + 1], || {
            format!("𝒩⁰_{}(φ⁰_{}) = {}", i + 1, r + 1, rational::format(&v))
        });
    }
    if let Some(last) = f0.get(r) {
        for (j, phi) in b0.iter().enumerate().take(r) {
            let v = last.apply(phi);
            report.require(v.is_zero(), "ii:domain-separation", vec![r + 1, j + 1], || {
                format!("𝒩⁰_{}(φ⁰_{}) = {}", r + 1, j + 1, rational::format(&v))
            });
        }
    }

    // (iii) range d = ℙ_{n-1}, of dimension n = r; the complement in ℙ_{n-1} is empty.
    report.require(b1.len() == r, "iii:range-basis", vec![b1.len()], || {
        format!("{} 1-form basis functions, expected {r}", b1.len())
    });
    for (j, phi) in b1.iter().enumerate() {
        report.require(phi.degree().is_some_and(|d| d < n), "iii:range-basis", vec![j + 1], || {
            format!("φ¹_{} = {phi} is not in ℙ_{}", j + 1, n - 1)
        });
    }
    let coeffs = RationalMatrix::from_fn(b1.len(), n, |j, k| b1[j].coeff(k));
    let rank = coeffs.rank();
    report.require(rank == n, "iii:range-basis", vec![rank], || {
        format!("1-form basis spans a space of dimension {rank} < {n}")
    });

    // (iv)
    for j in 0..r.min(b1.len()) {
        let d = b0[j].differentiate();
        report.require(d == b1[j], "iv:derivative-basis", vec![j + 1], || {
            format!("dφ⁰_{} = {d} but φ¹_{} = {}", j + 1, j + 1, b1[j])
        });
    }

    // (v)
    for u in monomial_probes(probe_degree) {
        let du = u.differentiate();
        for i in 0..r.min(f1.len()) {
            let lhs = f1[i].apply(&du);
            let rhs = f0[i].apply(&u);
            report.require(lhs == rhs, "v:functional-commute", vec![i + 1, u.degree().unwrap_or(0)], || {
                format!(
                    "𝒩¹_{}(d x^{}) = {} but 𝒩⁰_{}(x^{}) = {}",
                    i + 1,
                    u.degree().unwrap_or(0),
                    rational::format(&lhs),
                    i + 1,
                    u.degree().unwrap_or(0),
                    rational::format(&rhs)
                )
            });
        }
    }
    Ok(report)
}

/// `d(I₀u) − I₁(du)` for one polynomial.
pub fn commutation_residual(e: &Element1D, u: &Polynomial) -> Polynomial {
    let lhs = e.interpolate(FormDegree::Zero, u).differentiate();
    let rhs = e.interpolate(FormDegree::One, &u.differentiate());
    &lhs - &rhs
}

/// `d I₀u = I₁ du` exactly, for every probe.
pub fn verify_commutation(e: &Element1D, probes: &[Polynomial]) -> VerificationReport {
    let mut report = params(VerificationReport::new("commutation"), e).with_param("probes", probes.len());
    for (idx, u) in probes.iter().enumerate() {
        let residual = commutation_residual(e, u);
        report.require(residual.is_zero(), "residual", vec![idx + 1], || {
            format!("u = {u}: d I0 u - I1 du = {residual}")
        });
    }
    report
}

/// `I₀ p = p` on `ℙ_n` and `I₁ q = q` on `ℙ_{n-1}`, checked on monomial bases.
pub fn verify_projection(e: &Element1D) -> VerificationReport {
    let mut report = params(VerificationReport::new("projection"), e);
    for (k, top) in [(FormDegree::Zero, e.degree()), (FormDegree::One, e.degree() - 1)] {
        for p in monomial_probes(top) {
            let ip = e.interpolate(k, &p);
            report.require(ip == p, "reproduction", vec![k.value(), p.degree().unwrap_or(0)], || {
                format!("I{k}(x^{}) = {ip}", p.degree().unwrap_or(0))
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unisolvence_small_cases() {
        for (m, n) in [(0, 1), (2, 7), (1, 3), (3, 7)] {
            let e = Element1D::build(m, n).unwrap();
            let r = verify_unisolvence(&e);
            assert!(r.passed, "{r}");
            assert!(verify_node_matrix_commute(&e).passed);
        }
        assert!(Element1D::build(0, 1).unwrap().node_matrix(FormDegree::Zero).is_identity());
    }

    #[test]
    fn bubble_block_of_one_form_matrix_is_lower_triangular() {
        let e = Element1D::build(0, 3).unwrap();
        let m1 = e.node_matrix(FormDegree::One);
        for i in 1..3 {
            for j in i + 1..3 {
                assert!(m1.get(i, j).is_zero());
            }
            assert!(!m1.get(i, i).is_zero());
        }
    }

    #[test]
    fn lemma_hypotheses_hold() {
        let r = verify_lemma_hypotheses(&Element1D::build(1, 4).unwrap(), 8).unwrap();
        assert!(r.passed, "{r}");
        let r = verify_lemma_hypotheses(&Element1D::build(0, 2).unwrap(), 6).unwrap();
        assert!(r.passed, "{r}");
        assert!(verify_lemma_hypotheses(&Element1D::build(0, 2).unwrap(), 1).is_err());
    }

    #[test]
    fn commutation_on_monomials() {
        let e = Element1D::build(2, 6).unwrap();
        let r = verify_commutation(&e, &monomial_probes(e.degree() + 5));
        assert!(r.passed, "{r}");
        let constant = Polynomial::constant(rational::frac(7, 3));
        assert!(e.interpolate(FormDegree::Zero, &constant).differentiate().is_zero());
        assert!(commutation_residual(&e, &constant).is_zero());
    }

    #[test]
    fn projection_holds() {
        for (m, n) in [(0, 1), (1, 3), (2, 8)] {
            assert!(verify_projection(&Element1D::build(m, n).unwrap()).passed);
        }
    }
}
