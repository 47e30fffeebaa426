use num_traits::Zero;

use crate::error::{Error, Result};
use crate::form_degree::FormDegree;
use crate::hermite::{hermite_basis, Endpoint};
use crate::legendre::iterated_legendre_integral;
use crate::matrix::RationalMatrix;
use crate::polynomial::{FloatPolynomial, Polynomial};
use crate::quadrature::Quadrature;
use crate::rational::{self, Rational};

use super::functional::{FunctionalKind, NodeFunctional};
use super::smooth::SmoothFunction1D;

/// The `C^m` element pair on `[0, 1]`: `ℙ_n Λ⁰` and `ℙ_{n-1} Λ¹` with their
/// bases, node functionals, node matrices and inverses.
///
/// Vectors are stored 0-based; entry `i` corresponds to the 1-based index `i + 1`
/// of the usual numbering.
#[derive(Clone, Debug, PartialEq)]
pub struct Element1D {
    m: usize,
    n: usize,
    functionals0: Vec<NodeFunctional>,
    functionals1: Vec<NodeFunctional>,
    basis0: Vec<Polynomial>,
    basis1: Vec<Polynomial>,
    m0: RationalMatrix,
    m1: RationalMatrix,
    alpha0: RationalMatrix,
    alpha1: RationalMatrix,
}

/// `𝒩⁰_1..𝒩⁰_{n+1}`: Hermite derivatives of order `1..=m`, moments of `∂_x u`
/// against `ℓ_0..ℓ_{n-2m-1}`, then `u(1) + u(0)`.
pub fn functionals0(m: usize, n: usize) -> Vec<NodeFunctional> {
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..m {
        out.push(NodeFunctional::endpoint_derivative(FormDegree::Zero, Endpoint::Left, i + 1));
        out.push(NodeFunctional::endpoint_derivative(FormDegree::Zero, Endpoint::Right, i + 1));
    }
    for i in 1..=n - 2 * m {
        out.push(NodeFunctional::moment(FormDegree::Zero, i - 1, true));
    }
    out.push(NodeFunctional::endpoint_sum());
    out
}

/// `𝒩¹_1..𝒩¹_n`: endpoint derivatives of order `0..m`, then moments against `ℓ_0..ℓ_{n-2m-1}`.
pub fn functionals1(m: usize, n: usize) -> Vec<NodeFunctional> {
    let mut out = Vec::with_capacity(n);
    for i in 0..m {
        out.push(NodeFunctional::endpoint_derivative(FormDegree::One, Endpoint::Left, i));
        out.push(NodeFunctional::endpoint_derivative(FormDegree::One, Endpoint::Right, i));
    }
    for i in 1..=n - 2 * m {
        out.push(NodeFunctional::moment(FormDegree::One, i - 1, false));
    }
    out
}

/// `φ⁰_1..φ⁰_{n+1}`: the Hermite subset, the integrated-Legendre bubbles, and the constant `1/2`.
pub fn basis0(m: usize, n: usize) -> Result<Vec<Polynomial>> {
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..m {
        out.push(hermite_basis(m, Endpoint::Left, j + 1)?);
        out.push(hermite_basis(m, Endpoint::Right, j + 1)?);
    }
    let half = rational::frac(1, 2);
    let difference = &hermite_basis(m, Endpoint::Right, 0)? - &hermite_basis(m, Endpoint::Left, 0)?;
    out.push(difference.scale(&half));
    for j in 2..=n - 2 * m {
        out.push(iterated_legendre_integral(m + 1, j + m - 1));
    }
    out.push(Polynomial::constant(half));
    Ok(out)
}

/// `M[i][j] = 𝒩_i(φ_j)`.
pub fn node_matrix_of(functionals: &[NodeFunctional], basis: &[Polynomial]) -> RationalMatrix {
    RationalMatrix::from_fn(functionals.len(), basis.len(), |i, j| functionals[i].apply(&basis[j]))
}

/// Invariants a node functional must satisfy within the family of its form degree.
pub fn functional_is_admissible(f: &NodeFunctional, m: usize) -> bool {
    match (f.form_degree, &f.kind) {
        (FormDegree::Zero, FunctionalKind::EndpointDerivative { order, of_derivative, .. }) => {
            !of_derivative && (1..=m).contains(order)
        }
        (FormDegree::Zero, FunctionalKind::Moment { of_derivative, .. }) => *of_derivative,
        (FormDegree::Zero, FunctionalKind::EndpointSum) => true,
        (FormDegree::One, FunctionalKind::EndpointDerivative { order, of_derivative, .. }) => {
            !of_derivative && *order < m
        }
        (FormDegree::One, FunctionalKind::Moment { of_derivative, .. }) => !of_derivative,
        (FormDegree::One, FunctionalKind::EndpointSum) => false,
    }
}

impl Element1D {
    /// Builds the element pair for continuity `m` and polynomial degree `n ≥ 2m+1`.
    pub fn build(m: usize, n: usize) -> Result<Self> {
        if n < 2 * m + 1 {
            return Err(Error::DegreeTooLow { m, n });
        }
        let basis0 = basis0(m, n)?;
        let basis1: Vec<Polynomial> = basis0[..n].iter().map(Polynomial::differentiate).collect();
        let element = Self::from_parts(m, n, functionals0(m, n), functionals1(m, n), basis0, basis1)?;
        debug_assert!(element.functionals0.iter().all(|f| functional_is_admissible(f, m)));
        debug_assert!(element.functionals1.iter().all(|f| functional_is_admissible(f, m)));
        Ok(element)
    }

    /// Assembles an element from explicit functionals and bases, computing the
    /// node matrices and their inverses. No structural checks beyond invertibility.
    pub(crate) fn from_parts(
        m: usize,
        n: usize,
        functionals0: Vec<NodeFunctional>,
        functionals1: Vec<NodeFunctional>,
        basis0: Vec<Polynomial>,
        basis1: Vec<Polynomial>,
    ) -> Result<Self> {
        let m0 = node_matrix_of(&functionals0, &basis0);
        let m1 = node_matrix_of(&functionals1, &basis1);
        let alpha0 = m0.inverse().ok_or(Error::SingularMatrix)?;
        let alpha1 = m1.inverse().ok_or(Error::SingularMatrix)?;
        Ok(Element1D {
            m,
            n,
            functionals0,
            functionals1,
            basis0,
            basis1,
            m0,
            m1,
            alpha0,
            alpha1,
        })
    }

    pub(crate) fn set_alpha1(&mut self, alpha1: RationalMatrix) {
        self.alpha1 = alpha1;
    }

    pub fn continuity(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// `r = rank d = n`.
    pub fn rank_d(&self) -> usize {
        self.n
    }

    /// `n + 1` for 0-forms, `n` for 1-forms.
    pub fn dim(&self, k: FormDegree) -> usize {
        match k {
            FormDegree::Zero => self.n + 1,
            FormDegree::One => self.n,
        }
    }

    pub fn functionals(&self, k: FormDegree) -> &[NodeFunctional] {
        match k {
            FormDegree::Zero => &self.functionals0,
            FormDegree::One => &self.functionals1,
        }
    }

    pub fn basis(&self, k: FormDegree) -> &[Polynomial] {
        match k {
            FormDegree::Zero => &self.basis0,
            FormDegree::One => &self.basis1,
        }
    }

    /// `M_k`.
    pub fn node_matrix(&self, k: FormDegree) -> &RationalMatrix {
        match k {
            FormDegree::Zero => &self.m0,
            FormDegree::One => &self.m1,
        }
    }

    /// `M_k⁻¹`. Interpolation coefficients are `c = M_k⁻¹ · (𝒩_i(u))_i`.
    pub fn alpha(&self, k: FormDegree) -> &RationalMatrix {
        match k {
            FormDegree::Zero => &self.alpha0,
            FormDegree::One => &self.alpha1,
        }
    }

    pub fn default_quadrature_order(&self) -> usize {
        2 * (self.n + 2)
    }

    pub fn functional_values(&self, k: FormDegree, u: &Polynomial) -> Vec<Rational> {
        self.functionals(k).iter().map(|f| f.apply(u)).collect()
    }

    /// Basis coefficients of `I_k u`.
    pub fn interpolation_coefficients(&self, k: FormDegree, u: &Polynomial) -> Vec<Rational> {
        self.alpha(k).mul_vec(&self.functional_values(k, u))
    }

    /// `Σ_j c_j φ^k_j`.
    pub fn combine(&self, k: FormDegree, coeffs: &[Rational]) -> Polynomial {
        self.basis(k)
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .fold(Polynomial::zero(), |acc, (phi, c)| &acc + &phi.scale(c))
    }

    /// `I_k u = Σ_i 𝒩^k_i(u) Σ_j α^k_{ij} φ^k_j`, exactly.
    pub fn interpolate(&self, k: FormDegree, u: &Polynomial) -> Polynomial {
        self.combine(k, &self.interpolation_coefficients(k, u))
    }

    pub fn functional_values_smooth(
        &self,
        k: FormDegree,
        u: &SmoothFunction1D,
        quadrature: &Quadrature,
    ) -> Result<Vec<f64>> {
        self.functionals(k)
            .iter()
            .map(|f| f.apply_smooth_with(u, quadrature))
            .collect()
    }

    /// Basis coefficients of `I_k u` from already computed functional values.
    pub fn coefficients_from_values(&self, k: FormDegree, values: &[f64]) -> Vec<f64> {
        let alpha = self.alpha(k);
        (0..alpha.rows())
            .map(|j| {
                alpha
                    .row(j)
                    .iter()
                    .zip(values)
                    .map(|(a, v)| rational::to_f64(a) * v)
                    .sum()
            })
            .collect()
    }

    pub fn combine_f64(&self, k: FormDegree, coeffs: &[f64]) -> FloatPolynomial {
        let mut out = FloatPolynomial::default();
        for (phi, &c) in self.basis(k).iter().zip(coeffs) {
            out.add_scaled(&phi.to_float(), c);
        }
        out
    }

    /// `I_k u` for a smooth input, with moments integrated by Gauss–Legendre of `quadrature_order` points.
    pub fn interpolate_smooth(
        &self,
        k: FormDegree,
        u: &SmoothFunction1D,
        quadrature_order: usize,
    ) -> Result<FloatPolynomial> {
        let quadrature = Quadrature::gauss_legendre(quadrature_order)?;
        let values = self.functional_values_smooth(k, u, &quadrature)?;
        Ok(self.combine_f64(k, &self.coefficients_from_values(k, &values)))
    }

    /// `max |d I₀u − I₁ du|` over a uniform grid, for a smooth `u`.
    pub fn commutation_residual_smooth(&self, u: &SmoothFunction1D, quadrature_order: usize) -> Result<f64> {
        let d_i0 = self.interpolate_smooth(FormDegree::Zero, u, quadrature_order)?.differentiate();
        let i1_d = self.interpolate_smooth(FormDegree::One, &u.derivative_function(), quadrature_order)?;
        Ok(d_i0.max_difference(&i1_d, 1001))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use approx::assert_abs_diff_eq;

    #[test]
    fn lowest_element() {
        let e = Element1D::build(0, 1).unwrap();
        assert_eq!(
            e.basis(FormDegree::Zero),
            &[
                Polynomial::new(vec![frac(-1, 2), int(1)]),
                Polynomial::constant(frac(1, 2))
            ]
        );
        assert!(e.node_matrix(FormDegree::Zero).is_identity());
        let f = e.functionals(FormDegree::Zero);
        assert_eq!(f[0], NodeFunctional::moment(FormDegree::Zero, 0, true));
        assert_eq!(f[1], NodeFunctional::endpoint_sum());
    }

    #[test]
    fn cubic_hermite_element() {
        let e = Element1D::build(1, 3).unwrap();
        let expected = vec![
            Polynomial::from_ints(&[0, 1, -2, 1]),
            Polynomial::from_ints(&[0, 0, -1, 1]),
            Polynomial::new(vec![frac(-1, 2), int(0), int(3), int(-2)]),
            Polynomial::constant(frac(1, 2)),
        ];
        assert_eq!(e.basis(FormDegree::Zero), expected.as_slice());
        assert!(e.node_matrix(FormDegree::Zero).is_identity());
        assert!(e.node_matrix(FormDegree::One).is_identity());
    }

    #[test]
    fn quintic_c2_functional_order() {
        let e = Element1D::build(2, 5).unwrap();
        let rendered: Vec<String> = e
            .functionals(FormDegree::Zero)
            .iter()
            .map(|f| crate::element1d::latex_key(&f.latex("u", "x")))
            .collect();
        assert_eq!(
            rendered,
            [
                "\\partial_xu(0)",
                "\\partial_xu(1)",
                "\\partial^2_xu(0)",
                "\\partial^2_xu(1)",
                "(u(1)-u(0))",
                "(u(1)+u(0))"
            ]
        );
    }

    #[test]
    fn rejects_low_degree() {
        assert_eq!(Element1D::build(2, 4), Err(Error::DegreeTooLow { m: 2, n: 4 }));
    }

    #[test]
    fn degree_bookkeeping() {
        for m in 0..=3 {
            for n in 2 * m + 1..=2 * m + 5 {
                let e = Element1D::build(m, n).unwrap();
                let b0 = e.basis(FormDegree::Zero);
                assert_eq!(b0.len(), n + 1);
                assert_eq!(e.basis(FormDegree::One).len(), n);
                for (idx, phi) in b0.iter().enumerate().take(2 * m + 1) {
                    assert!(phi.degree().unwrap() <= 2 * m + 1, "φ⁰_{}", idx + 1);
                }
                for j in 2..=n - 2 * m {
                    assert_eq!(b0[2 * m + j - 1].degree(), Some(2 * m + j));
                }
                assert!(e.functionals(FormDegree::Zero).iter().all(|f| functional_is_admissible(f, m)));
                assert!(e.functionals(FormDegree::One).iter().all(|f| functional_is_admissible(f, m)));
            }
        }
    }

    #[test]
    fn interpolation_examples() {
        let e = Element1D::build(1, 3).unwrap();
        let cubic = Polynomial::from_ints(&[0, 0, 0, 1]);
        assert_eq!(e.interpolate(FormDegree::Zero, &cubic), cubic);

        // Independent route: solve the 4x4 monomial system N_i(p) = N_i(x^4).
        let quartic = Polynomial::from_ints(&[0, 0, 0, 0, 1]);
        let f = e.functionals(FormDegree::Zero);
        let system = RationalMatrix::from_fn(4, 4, |i, k| f[i].apply(&Polynomial::monomial(int(1), k)));
        let rhs: Vec<Rational> = f.iter().map(|fi| fi.apply(&quartic)).collect();
        let expected = Polynomial::new(system.solve(&rhs).unwrap());
        let got = e.interpolate(FormDegree::Zero, &quartic);
        assert_eq!(got, expected);
        for fi in f {
            assert_eq!(fi.apply(&got), fi.apply(&quartic));
        }

        let e01 = Element1D::build(0, 1).unwrap();
        assert_eq!(e01.interpolate(FormDegree::One, &Polynomial::one()), Polynomial::one());
    }

    #[test]
    fn smooth_interpolation_of_sine() {
        let e = Element1D::build(1, 3).unwrap();
        let got = e.interpolate_smooth(FormDegree::Zero, &SmoothFunction1D::sin(), 12).unwrap();
        // The cubic is determined by its functional values, which are known in closed form.
        let (s1, c1) = (1f64.sin(), 1f64.cos());
        let target = [1.0, c1, s1, s1];
        let f = e.functionals(FormDegree::Zero);
        let values = [
            got.differentiate().evaluate(0.0),
            got.differentiate().evaluate(1.0),
            got.evaluate(1.0) - got.evaluate(0.0),
            got.evaluate(1.0) + got.evaluate(0.0),
        ];
        assert_eq!(f.len(), 4);
        for (v, t) in values.iter().zip(target) {
            assert_abs_diff_eq!(*v, t, epsilon = 1e-14);
        }
    }

    #[test]
    fn smooth_matches_exact_on_polynomials() {
        let e = Element1D::build(1, 4).unwrap();
        let p = Polynomial::from_ints(&[0, 0, 1]);
        let exact = e.interpolate(FormDegree::Zero, &p).to_float();
        let smooth = e
            .interpolate_smooth(FormDegree::Zero, &SmoothFunction1D::polynomial(p), 12)
            .unwrap();
        for (a, b) in exact.coeffs().iter().zip(smooth.coeffs()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-14);
        }
    }

    #[test]
    fn smooth_commutation_residual_for_exp() {
        let e = Element1D::build(2, 6).unwrap();
        let r = e.commutation_residual_smooth(&SmoothFunction1D::exp(), 12).unwrap();
        assert!(r <= 1e-12, "residual {r}");
    }
}
