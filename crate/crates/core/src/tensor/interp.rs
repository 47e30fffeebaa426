//! Tensor interpolation `I^{⊗N}_ν = Σ_{𝐢 ∈ χ_ν} I_{i_1} ⊗ … ⊗ I_{i_N}`.

use std::collections::HashMap;

use num_traits::Zero;

use crate::element1d::Element1D;
use crate::error::{Error, Result};
use crate::form_degree::FormDegree;
use crate::matrix::RationalMatrix;
use crate::polynomial::Polynomial;
use crate::quadrature::Quadrature;
use crate::rational::Rational;

use super::chi::CharacteristicVector;
use super::form::{flat_index, multi_index, FormSum, RankOneForm, Scalar, TensorForm};
use super::functional::tensor_functionals;
use super::smooth::SmoothFormND;

/// Exact tensor interpolation with a cache of 1D coefficient vectors, so
/// repeated factors across probes are interpolated once.
pub struct TensorInterpolator<'a> {
    element: &'a Element1D,
    cache: HashMap<(FormDegree, Polynomial), Vec<Rational>>,
}

impl<'a> TensorInterpolator<'a> {
    pub fn new(element: &'a Element1D) -> Self {
        TensorInterpolator {
            element,
            cache: HashMap::new(),
        }
    }

    pub fn element(&self) -> &Element1D {
        self.element
    }

    fn coefficients(&mut self, k: FormDegree, p: &Polynomial) -> Vec<Rational> {
        let element = self.element;
        self.cache
            .entry((k, p.clone()))
            .or_insert_with(|| element.interpolation_coefficients(k, p))
            .clone()
    }

    /// Adds `I(u) = ⊗_ℓ I_{i_ℓ}(u_ℓ)` into `out`.
    pub fn accumulate_rank_one(&mut self, u: &RankOneForm, out: &mut TensorForm<Rational>) {
        if u.is_zero() {
            return;
        }
        let chi = u.chi();
        let vectors: Vec<Vec<Rational>> = u.factors.iter().map(|f| self.coefficients(f.degree, &f.poly)).collect();
        let shape = chi.shape(self.element.degree());
        let block = out.block_mut(&chi).expect("block of matching degree");
        for (flat, slot) in block.iter_mut().enumerate() {
            let j = multi_index(&shape, flat);
            let mut c = u.weight.clone();
            for (v, &jl) in vectors.iter().zip(&j) {
                if c.is_zero() {
                    break;
                }
                c *= &v[jl];
            }
            if !c.is_zero() {
                *slot += c;
            }
        }
    }

    pub fn interpolate(&mut self, u: &FormSum) -> Result<TensorForm<Rational>> {
        let mut out = TensorForm::zeros(u.n_factors(), u.nu(), self.element.degree())?;
        for term in u.terms() {
            self.accumulate_rank_one(term, &mut out);
        }
        Ok(out)
    }
}

/// `I^{⊗N}_ν u` for an exact polynomial form of degree `nu`.
pub fn tensor_interpolate(element: &Element1D, nu: usize, u: &FormSum) -> Result<TensorForm<Rational>> {
    check_degree(nu, u.nu())?;
    TensorInterpolator::new(element).interpolate(u)
}

/// `I^{⊗N}_ν u` for `u` already in the tensor space; evaluates the tensor
/// functionals through the 1D node matrices, so the result should equal `u`.
pub fn tensor_interpolate_tensor(element: &Element1D, u: &TensorForm<Rational>) -> Result<TensorForm<Rational>> {
    let mut out = TensorForm::zeros(u.n_factors(), u.nu(), element.degree())?;
    let chis: Vec<CharacteristicVector> = u.blocks().keys().cloned().collect();
    for chi in chis {
        let values: Vec<Rational> = tensor_functionals(element, &chi)
            .iter()
            .map(|f| f.apply_tensor(element, u))
            .collect();
        let coeffs = mode_products(element, &chi, values);
        *out.block_mut(&chi).expect("same layout") = coeffs;
    }
    Ok(out)
}

/// `I^{⊗N}_ν u` for a smooth form, with Gauss–Legendre moments of `quadrature_order` points per axis.
pub fn tensor_interpolate_smooth(
    element: &Element1D,
    nu: usize,
    u: &SmoothFormND,
    quadrature_order: usize,
) -> Result<TensorForm<f64>> {
    check_degree(nu, u.nu())?;
    let quadrature = Quadrature::gauss_legendre(quadrature_order)?;
    let mut out = TensorForm::zeros(u.n_factors(), nu, element.degree())?;
    let chis: Vec<CharacteristicVector> = out.blocks().keys().cloned().collect();
    for chi in chis {
        if !u.has_component(&chi) {
            continue;
        }
        let values = tensor_functionals(element, &chi)
            .iter()
            .map(|f| f.apply_smooth(u, &quadrature))
            .collect::<Result<Vec<f64>>>()?;
        *out.block_mut(&chi).expect("block exists") = mode_products(element, &chi, values);
    }
    Ok(out)
}

fn check_degree(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::FormDegreeMismatch { expected, found });
    }
    Ok(())
}

/// Applies `α^{i_1} ⊗ … ⊗ α^{i_N}` to functional values laid out row-major.
fn mode_products<S: Scalar>(element: &Element1D, chi: &CharacteristicVector, mut data: Vec<S>) -> Vec<S> {
    let shape = chi.shape(element.degree());
    for axis in 0..chi.len() {
        let alpha: &RationalMatrix = element.alpha(chi.degree(axis));
        let a: Vec<Vec<S>> = (0..alpha.rows())
            .map(|r| alpha.row(r).iter().map(S::from_rational).collect())
            .collect();
        let mut next = vec![S::zero(); data.len()];
        for (flat, slot) in next.iter_mut().enumerate() {
            let mut idx = multi_index(&shape, flat);
            let row = &a[idx[axis]];
            let mut acc = S::zero();
            for (f, coeff) in row.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                idx[axis] = f;
                acc = acc + coeff.clone() * data[flat_index(&shape, &idx)].clone();
            }
            *slot = acc;
        }
        data = next;
    }
    data
}
