//! Differential forms on `[0, 1]^N` built from univariate factors.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::element1d::Element1D;
use crate::error::{Error, Result};
use crate::form_degree::FormDegree;
use crate::polynomial::Polynomial;
use crate::rational::{self, Rational};

use super::chi::{enumerate_chi, CharacteristicVector, SignConvention};

/// One univariate factor of a rank-one form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub degree: FormDegree,
    pub poly: Polynomial,
}

impl Factor {
    pub fn new(degree: FormDegree, poly: Polynomial) -> Self {
        Factor { degree, poly }
    }
}

/// `weight · u_1 ⊗ … ⊗ u_N` with polynomial factors of arbitrary degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneForm {
    pub weight: Rational,
    pub factors: Vec<Factor>,
}

impl RankOneForm {
    pub fn new(weight: Rational, factors: Vec<Factor>) -> Self {
        RankOneForm { weight, factors }
    }

    pub fn unit(factors: Vec<Factor>) -> Self {
        Self::new(Rational::one(), factors)
    }

    pub fn n_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn chi(&self) -> CharacteristicVector {
        CharacteristicVector::from_degrees(&self.factors.iter().map(|f| f.degree).collect::<Vec<_>>())
    }

    pub fn form_degree(&self) -> usize {
        self.factors.iter().map(|f| f.degree.value()).sum()
    }

    /// Whether every factor lies in `ℙ_{n − i_ℓ}`.
    pub fn in_space(&self, n: usize) -> bool {
        self.factors
            .iter()
            .all(|f| f.poly.degree().is_none_or(|d| d + f.degree.value() <= n))
    }

    pub fn is_zero(&self) -> bool {
        self.weight.is_zero() || self.factors.iter().any(|f| f.poly.is_zero())
    }

    /// `Σ_t θ_t u_1 ⊗ … ⊗ d u_t ⊗ … ⊗ u_N` over the 0-form factors `t`.
    pub fn exterior_derivative(&self, convention: SignConvention) -> FormSum {
        let chi = self.chi();
        let mut out = FormSum::zero(self.n_factors(), self.form_degree() + 1);
        for t in 0..self.n_factors() {
            if self.factors[t].degree == FormDegree::One {
                continue;
            }
            let derivative = self.factors[t].poly.differentiate();
            if derivative.is_zero() {
                continue;
            }
            let mut factors = self.factors.clone();
            factors[t] = Factor::new(FormDegree::One, derivative);
            let weight = &self.weight * rational::int(convention.theta(&chi, t));
            out.terms.push(RankOneForm::new(weight, factors));
        }
        out
    }

    pub fn evaluate_f64(&self, point: &[f64]) -> f64 {
        self.factors
            .iter()
            .zip(point)
            .fold(rational::to_f64(&self.weight), |acc, (f, &x)| acc * f.poly.evaluate_f64(x))
    }
}

/// Monomial exponents of all factors, keyed with the block.
pub type MonomialKey = (CharacteristicVector, Vec<usize>);

/// Finite linear combination of rank-one forms of one form degree.
#[derive(Clone, Debug, PartialEq)]
pub struct FormSum {
    n_factors: usize,
    nu: usize,
    terms: Vec<RankOneForm>,
}

impl FormSum {
    pub fn zero(n_factors: usize, nu: usize) -> Self {
        FormSum {
            n_factors,
            nu,
            terms: Vec::new(),
        }
    }

    pub fn from_term(term: RankOneForm) -> Self {
        FormSum {
            n_factors: term.n_factors(),
            nu: term.form_degree(),
            terms: vec![term],
        }
    }

    pub fn push(&mut self, term: RankOneForm) -> Result<()> {
        if term.n_factors() != self.n_factors {
            return Err(Error::FactorCountMismatch {
                expected: self.n_factors,
                found: term.n_factors(),
            });
        }
        if term.form_degree() != self.nu {
            return Err(Error::FormDegreeMismatch {
                expected: self.nu,
                found: term.form_degree(),
            });
        }
        self.terms.push(term);
        Ok(())
    }

    pub fn n_factors(&self) -> usize {
        self.n_factors
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn terms(&self) -> &[RankOneForm] {
        &self.terms
    }

    pub fn exterior_derivative(&self, convention: SignConvention) -> FormSum {
        let mut out = FormSum::zero(self.n_factors, self.nu + 1);
        for term in &self.terms {
            out.terms.extend(term.exterior_derivative(convention).terms);
        }
        out
    }

    pub fn sub(&self, other: &FormSum) -> FormSum {
        let mut out = self.clone();
        out.terms.extend(
            other
                .terms
                .iter()
                .map(|t| RankOneForm::new(-&t.weight, t.factors.clone())),
        );
        out
    }

    /// Expansion in the monomial basis of each block, zero coefficients dropped.
    pub fn canonical(&self) -> BTreeMap<MonomialKey, Rational> {
        let mut out: BTreeMap<MonomialKey, Rational> = BTreeMap::new();
        for term in &self.terms {
            if term.is_zero() {
                continue;
            }
            let chi = term.chi();
            let supports: Vec<Vec<(usize, &Rational)>> = term
                .factors
                .iter()
                .map(|f| {
                    f.poly
                        .coeffs()
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .collect()
                })
                .collect();
            for_each_product(&supports, &mut |picks| {
                let exponents: Vec<usize> = picks.iter().map(|(k, _)| *k).collect();
                let value = picks.iter().fold(term.weight.clone(), |acc, (_, c)| acc * *c);
                *out.entry((chi.clone(), exponents)).or_insert_with(Rational::zero) += value;
            });
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().is_empty()
    }
}

fn for_each_product<'a, T>(lists: &'a [Vec<T>], f: &mut impl FnMut(&[&'a T])) {
    fn rec<'a, T>(lists: &'a [Vec<T>], picked: &mut Vec<&'a T>, f: &mut impl FnMut(&[&'a T])) {
        if picked.len() == lists.len() {
            f(picked);
            return;
        }
        for item in &lists[picked.len()] {
            picked.push(item);
            rec(lists, picked, f);
            picked.pop();
        }
    }
    rec(lists, &mut Vec::with_capacity(lists.len()), f);
}

/// Coefficient field of a [`TensorForm`]: exact rationals, or `f64` for smooth inputs.
pub trait Scalar:
    Clone + Debug + PartialEq + Zero + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn from_rational(r: &Rational) -> Self;
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Scalar for f64 {
    fn from_rational(r: &Rational) -> Self {
        rational::to_f64(r)
    }
}

/// Row-major offset of a multi-index.
pub fn flat_index(shape: &[usize], index: &[usize]) -> usize {
    shape.iter().zip(index).fold(0, |acc, (&s, &i)| acc * s + i)
}

/// Inverse of [`flat_index`].
pub fn multi_index(shape: &[usize], mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; shape.len()];
    for (slot, &s) in out.iter_mut().zip(shape).rev() {
        *slot = flat % s;
        flat /= s;
    }
    out
}

/// An element of the tensor product space of form degree `ν`: one dense
/// coefficient array per characteristic vector, over the rank-one basis
/// `φ^{i_1}_{j_1} ⊗ … ⊗ φ^{i_N}_{j_N}` in row-major order of `(j_1, …, j_N)`.
///
/// A form of degree `N + 1` is the (only) zero form and has no blocks.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorForm<S> {
    n: usize,
    n_factors: usize,
    nu: usize,
    blocks: BTreeMap<CharacteristicVector, Vec<S>>,
}

impl<S: Scalar> TensorForm<S> {
    pub fn zeros(n_factors: usize, nu: usize, n: usize) -> Result<Self> {
        let chis = if nu == n_factors + 1 {
            Vec::new()
        } else {
            enumerate_chi(n_factors, nu)?
        };
        let blocks = chis
            .into_iter()
            .map(|chi| {
                let size = chi.shape(n).iter().product();
                (chi, vec![S::zero(); size])
            })
            .collect();
        Ok(TensorForm {
            n,
            n_factors,
            nu,
            blocks,
        })
    }

    pub fn n_factors(&self) -> usize {
        self.n_factors
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &BTreeMap<CharacteristicVector, Vec<S>> {
        &self.blocks
    }

    pub fn block(&self, chi: &CharacteristicVector) -> Option<&[S]> {
        self.blocks.get(chi).map(Vec::as_slice)
    }

    pub fn block_mut(&mut self, chi: &CharacteristicVector) -> Option<&mut Vec<S>> {
        self.blocks.get_mut(chi)
    }

    pub fn get(&self, chi: &CharacteristicVector, index: &[usize]) -> Option<&S> {
        self.blocks.get(chi).map(|b| &b[flat_index(&chi.shape(self.n), index)])
    }

    /// Total number of basis coefficients, `dim (ℙΛ^{⊗N})^ν`.
    pub fn dimension(&self) -> usize {
        self.blocks.values().map(Vec::len).sum()
    }

    /// Exterior derivative in basis coordinates: `dφ⁰_j = φ¹_j` for `j ≤ n`
    /// and `dφ⁰_{n+1} = 0`, with the signs of `convention`.
    pub fn exterior_derivative(&self, convention: SignConvention) -> Self {
        let mut out = TensorForm::zeros(self.n_factors, self.nu + 1, self.n).expect("nu + 1 <= N + 1");
        for (chi, coeffs) in &self.blocks {
            let shape = chi.shape(self.n);
            for t in 0..self.n_factors {
                if chi.bits()[t] == 1 {
                    continue;
                }
                let target = chi.raised(t);
                let target_shape = target.shape(self.n);
                let sign = S::from_rational(&rational::int(convention.theta(chi, t)));
                let dest: &mut Vec<S> = out.blocks.get_mut(&target).expect("target block exists");
                for (flat, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let j = multi_index(&shape, flat);
                    if j[t] == self.n {
                        continue;
                    }
                    let slot = &mut dest[flat_index(&target_shape, &j)];
                    *slot = slot.clone() + sign.clone() * c.clone();
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.n_factors != other.n_factors {
            return Err(Error::FactorCountMismatch {
                expected: self.n_factors,
                found: other.n_factors,
            });
        }
        if self.nu != other.nu {
            return Err(Error::FormDegreeMismatch {
                expected: self.nu,
                found: other.nu,
            });
        }
        let mut out = self.clone();
        for (chi, coeffs) in &other.blocks {
            let dest = out.blocks.get_mut(chi).expect("same block layout");
            for (a, b) in dest.iter_mut().zip(coeffs) {
                *a = a.clone() - b.clone();
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().flatten().all(Zero::is_zero)
    }

    /// Nonzero coefficients as `(block, 1-based index, value)`.
    pub fn nonzero_entries(&self) -> Vec<(CharacteristicVector, Vec<usize>, S)> {
        let mut out = Vec::new();
        for (chi, coeffs) in &self.blocks {
            let shape = chi.shape(self.n);
            for (flat, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    let idx = multi_index(&shape, flat).into_iter().map(|j| j + 1).collect();
                    out.push((chi.clone(), idx, c.clone()));
                }
            }
        }
        out
    }
}

impl TensorForm<f64> {
    pub fn max_abs(&self) -> f64 {
        self.blocks.values().flatten().fold(0.0, |acc, c| acc.max(c.abs()))
    }
}

impl TensorForm<Rational> {
    /// Expands the basis coefficients into rank-one polynomial forms.
    pub fn to_form_sum(&self, element: &Element1D) -> FormSum {
        let mut out = FormSum::zero(self.n_factors, self.nu);
        for (chi, coeffs) in &self.blocks {
            let shape = chi.shape(self.n);
            for (flat, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let j = multi_index(&shape, flat);
                let mut term = rank_one_basis(element, chi, &j);
                term.weight = c.clone();
                out.terms.push(term);
            }
        }
        out
    }

    pub fn evaluate(&self, element: &Element1D, chi: &CharacteristicVector, point: &[f64]) -> f64 {
        self.to_form_sum(element)
            .terms
            .iter()
            .filter(|t| &t.chi() == chi)
            .map(|t| t.evaluate_f64(point))
            .sum()
    }
}

/// `φ^{i_1}_{j_1} ⊗ … ⊗ φ^{i_N}_{j_N}` with 0-based `j`.
pub fn rank_one_basis(element: &Element1D, chi: &CharacteristicVector, j: &[usize]) -> RankOneForm {
    let factors = (0..chi.len())
        .map(|l| {
            let k = chi.degree(l);
            Factor::new(k, element.basis(k)[j[l]].clone())
        })
        .collect();
    RankOneForm::unit(factors)
}

/// Every rank-one basis element of `(ℙΛ^{⊗N})^ν`, block by block, row-major.
pub fn rank_one_basis_elements(
    element: &Element1D,
    n_factors: usize,
    nu: usize,
) -> Result<Vec<(CharacteristicVector, Vec<usize>, RankOneForm)>> {
    let mut out = Vec::new();
    for chi in enumerate_chi(n_factors, nu)? {
        let shape = chi.shape(element.degree());
        let size: usize = shape.iter().product();
        for flat in 0..size {
            let j = multi_index(&shape, flat);
            let form = rank_one_basis(element, &chi, &j);
            out.push((chi.clone(), j, form));
        }
    }
    Ok(out)
}

/// `Σ_{χ ∈ χ_ν} Π_ℓ (n + 1 − i_ℓ)`.
pub fn space_dimension(n_factors: usize, nu: usize, element: &Element1D) -> Result<usize> {
    Ok(enumerate_chi(n_factors, nu)?
        .iter()
        .map(|chi| chi.shape(element.degree()).iter().product::<usize>())
        .sum())
}
