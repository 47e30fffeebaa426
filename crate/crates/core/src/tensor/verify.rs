//! Verifiers for the tensor-product complex.

use rayon::prelude::*;

use crate::element1d::Element1D;
use crate::error::{Error, Result};
use crate::form_degree::FormDegree;
use crate::polynomial::Polynomial;
use crate::rational::{self, Rational};
use crate::report::{VerificationReport, Witness};

use num_traits::One;

use super::chi::{enumerate_chi, SignConvention};
use super::form::{flat_index, rank_one_basis_elements, space_dimension, Factor, FormSum, RankOneForm, TensorForm};
use super::functional::{kronecker_node_matrix, tensor_functionals, tensor_node_matrix};
use super::interp::TensorInterpolator;

/// Largest block for which the tensor node matrix is inverted directly.
const DIRECT_INVERSION_LIMIT: usize = 128;

/// `x^{a_1} ⊗ … ⊗ x^{a_N}` for every block of degree `nu` and every `a_ℓ ≤ max_degree`.
pub fn monomial_rank_one_probes(n_factors: usize, nu: usize, max_degree: usize) -> Result<Vec<RankOneForm>> {
    let mut out = Vec::new();
    for chi in enumerate_chi(n_factors, nu)? {
        let shape = vec![max_degree + 1; n_factors];
        let count = (max_degree + 1).pow(n_factors as u32);
        for flat in 0..count {
            let exps = super::form::multi_index(&shape, flat);
            let factors = exps
                .iter()
                .enumerate()
                .map(|(l, &a)| Factor::new(chi.degree(l), Polynomial::monomial(Rational::one(), a)))
                .collect();
            out.push(RankOneForm::unit(factors));
        }
    }
    Ok(out)
}

fn describe_first_entry(t: &TensorForm<Rational>) -> String {
    match t.nonzero_entries().first() {
        Some((chi, j, c)) => format!("block {chi}, basis index {j:?}: {}", rational::format(c)),
        None => "zero".to_string(),
    }
}

fn probe_label(u: &RankOneForm) -> String {
    u.factors
        .iter()
        .map(|f| format!("[{}]{}", f.poly, if f.degree == FormDegree::One { "d" } else { "" }))
        .collect::<Vec<_>>()
        .join(" ⊗ ")
}

/// `I^{⊗N}_{ν+1}(du) = d(I^{⊗N}_ν u)` exactly on every probe.
pub fn verify_tensor_commutation(
    n_factors: usize,
    nu: usize,
    probes: &[RankOneForm],
    element: &Element1D,
) -> Result<VerificationReport> {
    verify_tensor_commutation_with(n_factors, nu, probes, element, SignConvention::Alternating)
}

/// As [`verify_tensor_commutation`], with `convention` used for `d` on both sides.
pub fn verify_tensor_commutation_with(
    n_factors: usize,
    nu: usize,
    probes: &[RankOneForm],
    element: &Element1D,
    convention: SignConvention,
) -> Result<VerificationReport> {
    if nu > n_factors {
        return Err(Error::NuOutOfRange { nu, n_factors });
    }
    for p in probes {
        if p.n_factors() != n_factors {
            return Err(Error::FactorCountMismatch {
                expected: n_factors,
                found: p.n_factors(),
            });
        }
        if p.form_degree() != nu {
            return Err(Error::FormDegreeMismatch {
                expected: nu,
                found: p.form_degree(),
            });
        }
    }
    let failures: Vec<Witness> = probes
        .par_iter()
        .enumerate()
        .map_init(
            || TensorInterpolator::new(element),
            |interp, (i, u)| -> Result<Option<Witness>> {
                let du = u.exterior_derivative(convention);
                let lhs = if nu < n_factors {
                    interp.interpolate(&du)?
                } else {
                    if !du.is_zero() {
                        return Ok(Some(Witness::new("tensor-commutation", vec![i + 1], "du of a top form is nonzero")));
                    }
                    TensorForm::zeros(n_factors, nu + 1, element.degree())?
                };
                let rhs = interp.interpolate(&FormSum::from_term(u.clone()))?.exterior_derivative(convention);
                let residual = lhs.sub(&rhs)?;
                Ok((!residual.is_zero()).then(|| {
                    Witness::new(
                        "tensor-commutation",
                        vec![i + 1],
                        format!("probe {}: residual at {}", probe_label(u), describe_first_entry(&residual)),
                    )
                }))
            },
        )
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut report = VerificationReport::new("tensor-commutation")
        .with_param("m", element.continuity())
        .with_param("n", element.degree())
        .with_param("N", n_factors)
        .with_param("nu", nu)
        .with_param("probes", probes.len());
    for w in failures {
        report.fail(w);
    }
    Ok(report)
}

/// `d ∘ d = 0` exactly on every rank-one basis element of degree `ν ≤ N − 2`,
/// and on monomial forms with per-factor degree up to `degree_cap`.
pub fn verify_dd_zero(n_factors: usize, element: &Element1D, degree_cap: usize) -> Result<VerificationReport> {
    verify_dd_zero_with(n_factors, element, degree_cap, SignConvention::Alternating)
}

pub fn verify_dd_zero_with(
    n_factors: usize,
    element: &Element1D,
    degree_cap: usize,
    convention: SignConvention,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("dd-zero")
        .with_param("m", element.continuity())
        .with_param("n", element.degree())
        .with_param("N", n_factors)
        .with_param("degree_cap", degree_cap);
    for nu in 0..=n_factors.saturating_sub(2).min(n_factors) {
        if nu + 2 > n_factors {
            break;
        }
        let basis = rank_one_basis_elements(element, n_factors, nu)?;
        let failures: Vec<Witness> = basis
            .par_iter()
            .filter_map(|(chi, j, form)| {
                let dd = form.exterior_derivative(convention).exterior_derivative(convention);
                (!dd.is_zero()).then(|| {
                    let mut indices: Vec<usize> = j.iter().map(|x| x + 1).collect();
                    indices.insert(0, nu);
                    Witness::new("dd-zero-basis", indices, format!("d(d φ) ≠ 0 for basis element in block {chi}"))
                })
            })
            .collect();
        for w in failures {
            report.fail(w);
        }

        // Same identity in basis coordinates.
        let mut coords_ok = true;
        for (chi, j, _) in basis.iter().take(if report.passed { usize::MAX } else { 0 }) {
            let mut t = TensorForm::<Rational>::zeros(n_factors, nu, element.degree())?;
            t.block_mut(chi).expect("block")[flat_index(&chi.shape(element.degree()), j)] = Rational::one();
            let dd = t.exterior_derivative(convention).exterior_derivative(convention);
            if !dd.is_zero() && coords_ok {
                coords_ok = false;
                report.fail(Witness::new(
                    "dd-zero-coordinates",
                    j.iter().map(|x| x + 1).collect(),
                    format!("coordinate d∘d nonzero from block {chi}: {}", describe_first_entry(&dd)),
                ));
            }
        }

        let probes = monomial_rank_one_probes(n_factors, nu, degree_cap)?;
        if let Some((i, _)) = probes.iter().enumerate().find(|(_, p)| {
            !p.exterior_derivative(convention)
                .exterior_derivative(convention)
                .is_zero()
        }) {
            report.fail(Witness::new(
                "dd-zero-monomial",
                vec![nu, i + 1],
                format!("d(d u) ≠ 0 for {}", probe_label(&probes[i])),
            ));
        }
    }
    Ok(report)
}

/// Dimension formula against brute-force enumeration, functional counts, and
/// the Euler characteristic `Σ_ν (−1)^ν dim = 1`.
pub fn verify_dimensions(n_factors: usize, element: &Element1D) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("dimensions")
        .with_param("m", element.continuity())
        .with_param("n", element.degree())
        .with_param("N", n_factors);
    let mut euler: i64 = 0;
    for nu in 0..=n_factors {
        let formula = space_dimension(n_factors, nu, element)?;
        let enumerated = rank_one_basis_elements(element, n_factors, nu)?.len();
        let functionals: usize = enumerate_chi(n_factors, nu)?
            .iter()
            .map(|chi| tensor_functionals(element, chi).len())
            .sum();
        let storage = TensorForm::<Rational>::zeros(n_factors, nu, element.degree())?.dimension();
        report.require(
            formula == enumerated && formula == functionals && formula == storage,
            "dimension-count",
            vec![nu],
            || format!("formula {formula}, basis {enumerated}, functionals {functionals}, storage {storage}"),
        );
        euler += if nu % 2 == 0 { formula as i64 } else { -(formula as i64) };
    }
    report.require(euler == 1, "euler-characteristic", vec![], || format!("alternating sum {euler}"));
    Ok(report)
}

/// Per block: the tensor node matrix equals the Kronecker product of the 1D
/// node matrices and is invertible.
pub fn verify_kronecker_structure(n_factors: usize, nu: usize, element: &Element1D) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("kronecker-structure")
        .with_param("m", element.continuity())
        .with_param("n", element.degree())
        .with_param("N", n_factors)
        .with_param("nu", nu);
    for (b, chi) in enumerate_chi(n_factors, nu)?.iter().enumerate() {
        let direct = tensor_node_matrix(element, chi);
        let kron = kronecker_node_matrix(element, chi);
        report.require(direct == kron, "kronecker-identity", vec![b + 1], || {
            format!("block {chi} differs from M_i1 ⊗ … ⊗ M_iN")
        });
        let invertible = if direct.rows() <= DIRECT_INVERSION_LIMIT {
            direct.inverse().is_some_and(|inv| direct.mul(&inv).is_identity())
        } else {
            let alpha = (0..chi.len()).fold(crate::matrix::RationalMatrix::identity(1), |acc, l| {
                acc.kron(element.alpha(chi.degree(l)))
            });
            direct.mul(&alpha).is_identity()
        };
        report.require(invertible, "invertible", vec![b + 1], || format!("block {chi} is singular"));
    }
    Ok(report)
}
