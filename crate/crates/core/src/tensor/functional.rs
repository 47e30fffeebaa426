//! Tensor-product node functionals `𝒩^𝐢_𝐣 = 𝒩^{i_1}_{j_1} ⊗ … ⊗ 𝒩^{i_N}_{j_N}`.

use num_traits::Zero;

use crate::element1d::{partial, Element1D, FunctionalKind, NodeFunctional, Sample};
use crate::error::Result;
use crate::matrix::RationalMatrix;
use crate::quadrature::Quadrature;
use crate::rational::Rational;

use super::chi::CharacteristicVector;
use super::form::{multi_index, FormSum, RankOneForm, TensorForm};
use super::smooth::SmoothFormND;

/// Default variable and coordinate names for factor `ℓ`.
pub const VARIABLES: [&str; 3] = ["u", "v", "w"];
pub const COORDINATES: [&str; 3] = ["x", "y", "z"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorNodeFunctional {
    pub chi: CharacteristicVector,
    /// 0-based position of each part within its 1D family.
    pub indices: Vec<usize>,
    pub parts: Vec<NodeFunctional>,
}

impl TensorNodeFunctional {
    pub fn n_factors(&self) -> usize {
        self.parts.len()
    }

    /// Label such as `N^{00}_{15}`.
    pub fn label(&self) -> String {
        let sep = if self.indices.iter().any(|&j| j >= 9) { "," } else { "" };
        let idx: Vec<String> = self.indices.iter().map(|j| (j + 1).to_string()).collect();
        format!("N^{{{}}}_{{{}}}", self.chi.label(), idx.join(sep))
    }

    /// Product of the 1D values; zero when the blocks differ.
    pub fn apply_rank_one(&self, u: &RankOneForm) -> Rational {
        if u.chi() != self.chi {
            return Rational::zero();
        }
        let mut acc = u.weight.clone();
        for (part, factor) in self.parts.iter().zip(&u.factors) {
            if acc.is_zero() {
                break;
            }
            acc *= part.apply(&factor.poly);
        }
        acc
    }

    pub fn apply_form(&self, u: &FormSum) -> Rational {
        u.terms().iter().map(|t| self.apply_rank_one(t)).sum()
    }

    /// Value on a form given in basis coordinates, through the 1D node matrices.
    pub fn apply_tensor(&self, element: &Element1D, u: &TensorForm<Rational>) -> Rational {
        let Some(block) = u.block(&self.chi) else {
            return Rational::zero();
        };
        let shape = self.chi.shape(element.degree());
        let matrices: Vec<&RationalMatrix> = (0..self.n_factors())
            .map(|l| element.node_matrix(self.chi.degree(l)))
            .collect();
        let mut total = Rational::zero();
        for (flat, c) in block.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let j = multi_index(&shape, flat);
            let mut term = c.clone();
            for (l, m) in matrices.iter().enumerate() {
                term *= m.get(self.indices[l], j[l]);
                if term.is_zero() {
                    break;
                }
            }
            total += term;
        }
        total
    }

    /// Value on a smooth form: endpoint parts evaluate mixed partials directly,
    /// moment parts use the tensorized `quadrature`.
    pub fn apply_smooth(&self, u: &SmoothFormND, quadrature: &Quadrature) -> Result<f64> {
        if !u.has_component(&self.chi) {
            return Ok(0.0);
        }
        let samples: Vec<Vec<Sample>> = self.parts.iter().map(|p| p.samples(quadrature)).collect();
        let mut total = 0.0;
        let mut orders = vec![0; self.n_factors()];
        let mut point = vec![0.0; self.n_factors()];
        let mut pos = vec![0usize; self.n_factors()];
        'outer: loop {
            let mut weight = 1.0;
            for l in 0..self.n_factors() {
                let s = samples[l][pos[l]];
                weight *= s.weight;
                orders[l] = s.order;
                point[l] = s.x;
            }
            if weight != 0.0 {
                total += weight * u.partial(&self.chi, &orders, &point)?;
            }
            for l in (0..self.n_factors()).rev() {
                pos[l] += 1;
                if pos[l] < samples[l].len() {
                    continue 'outer;
                }
                pos[l] = 0;
            }
            break;
        }
        Ok(total)
    }

    /// Rendering on a rank-one input `u ⊗ v ⊗ …`, e.g. `\partial_x u(0)(v(1)-v(0))`.
    pub fn latex_rank_one(&self) -> String {
        self.parts
            .iter()
            .enumerate()
            .map(|(l, p)| p.latex(VARIABLES[l % 3], COORDINATES[l % 3]))
            .collect()
    }

    /// Rendering on a single function of `N` variables, e.g.
    /// `\partial_x u(0,1) - \partial_x u(0,0)`.
    pub fn latex_function(&self, var: &str) -> String {
        let mut integrals = Vec::new();
        let mut choices: Vec<Vec<(i8, usize, String)>> = Vec::new();
        for (l, part) in self.parts.iter().enumerate() {
            let coord = COORDINATES[l % 3];
            let order = part.derivative_order();
            let point_terms = match part.kind {
                FunctionalKind::EndpointDerivative { point, .. } => vec![(1, order, point.index().to_string())],
                FunctionalKind::Moment {
                    legendre_index: 0,
                    of_derivative: true,
                } => vec![(1, 0, "1".to_string()), (-1, 0, "0".to_string())],
                FunctionalKind::EndpointSum => vec![(1, 0, "1".to_string()), (1, 0, "0".to_string())],
                FunctionalKind::Moment { legendre_index, .. } => {
                    integrals.push((legendre_index, coord));
                    vec![(1, order, coord.to_string())]
                }
            };
            choices.push(point_terms);
        }

        let mut terms: Vec<(i8, String)> = Vec::new();
        let mut pos = vec![0usize; choices.len()];
        'outer: loop {
            let mut sign = 1;
            let mut ops = String::new();
            let mut points = Vec::new();
            for (l, choice) in choices.iter().enumerate() {
                let (s, order, p) = &choice[pos[l]];
                sign *= s;
                ops.push_str(partial(*order, COORDINATES[l % 3]).trim_end());
                points.push(p.clone());
            }
            terms.push((sign, format!("{ops} {var}({})", points.join(","))));
            for l in (0..choices.len()).rev() {
                pos[l] += 1;
                if pos[l] < choices[l].len() {
                    continue 'outer;
                }
                pos[l] = 0;
            }
            break;
        }

        let mut body = String::new();
        for (i, (sign, t)) in terms.iter().enumerate() {
            let t = t.trim_start();
            match (i, sign) {
                (0, 1) => body.push_str(t),
                (0, _) => body.push_str(&format!("-{t}")),
                (_, 1) => body.push_str(&format!(" + {t}")),
                _ => body.push_str(&format!(" - {t}")),
            }
        }
        if integrals.is_empty() {
            return body;
        }
        let mut prefix = String::new();
        let mut suffix = String::new();
        for (k, coord) in &integrals {
            prefix.push_str("\\int_0^1 ");
            if *k > 0 {
                prefix.push_str(&format!("\\ell_{{{k}}}({coord}) "));
            }
            suffix.push_str(&format!("\\,\\dif {coord}"));
        }
        if terms.len() > 1 {
            body = format!("({body})");
        }
        format!("{prefix}{body}{suffix}")
    }
}

/// All functionals of block `chi`, row-major in the 1D indices.
pub fn tensor_functionals(element: &Element1D, chi: &CharacteristicVector) -> Vec<TensorNodeFunctional> {
    let shape = chi.shape(element.degree());
    let size: usize = shape.iter().product();
    (0..size)
        .map(|flat| {
            let indices = multi_index(&shape, flat);
            let parts = indices
                .iter()
                .enumerate()
                .map(|(l, &j)| element.functionals(chi.degree(l))[j].clone())
                .collect();
            TensorNodeFunctional {
                chi: chi.clone(),
                indices,
                parts,
            }
        })
        .collect()
}

/// `[𝒩^𝐢_𝐣(φ^𝐢_𝐣')]` for one block, by applying each tensor functional to each
/// rank-one basis polynomial.
pub fn tensor_node_matrix(element: &Element1D, chi: &CharacteristicVector) -> RationalMatrix {
    let functionals = tensor_functionals(element, chi);
    let shape = chi.shape(element.degree());
    let basis: Vec<RankOneForm> = (0..functionals.len())
        .map(|flat| super::form::rank_one_basis(element, chi, &multi_index(&shape, flat)))
        .collect();
    RationalMatrix::from_fn(functionals.len(), basis.len(), |r, c| functionals[r].apply_rank_one(&basis[c]))
}

/// `M_{i_1} ⊗ … ⊗ M_{i_N}` from the stored 1D node matrices.
pub fn kronecker_node_matrix(element: &Element1D, chi: &CharacteristicVector) -> RationalMatrix {
    (0..chi.len()).fold(RationalMatrix::identity(1), |acc, l| {
        acc.kron(element.node_matrix(chi.degree(l)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element1d::latex_key;
    use crate::element1d::SmoothFunction1D;
    use crate::form_degree::FormDegree;
    use crate::tensor::chi::enumerate_chi;
    use approx::assert_abs_diff_eq;

    fn chi(bits: &[u8]) -> CharacteristicVector {
        CharacteristicVector::new(bits.to_vec()).unwrap()
    }

    fn first_row(e: &Element1D, c: &CharacteristicVector) -> Vec<TensorNodeFunctional> {
        tensor_functionals(e, c).into_iter().filter(|f| f.indices[0] == 0).collect()
    }

    fn keys(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| latex_key(s)).collect()
    }

    #[test]
    fn quintic_c2_lists() {
        let e = Element1D::build(2, 5).unwrap();
        let got = |c| first_row(&e, &chi(c)).iter().map(|f| latex_key(&f.latex_rank_one())).collect::<Vec<_>>();
        assert_eq!(
            got(&[0, 0]),
            keys(&[
                r"\partial_x u(0)\partial_y v(0)",
                r"\partial_x u(0)\partial_y v(1)",
                r"\partial_x u(0)\partial^2_y v(0)",
                r"\partial_x u(0)\partial^2_y v(1)",
                r"\partial_x u(0)(v(1)-v(0))",
                r"\partial_x u(0)(v(1)+v(0))",
            ])
        );
        assert_eq!(
            got(&[0, 1]),
            keys(&[
                r"\partial_x u(0)v(0)",
                r"\partial_x u(0)v(1)",
                r"\partial_x u(0)\partial_y v(0)",
                r"\partial_x u(0)\partial_y v(1)",
                r"\partial_x u(0)\int_0^1 v\,\dif x",
            ])
        );
        assert_eq!(
            got(&[1, 1]),
            keys(&[
                r"u(0)v(0)",
                r"u(0)v(1)",
                r"u(0)\partial_y v(0)",
                r"u(0)\partial_y v(1)",
                r"u(0)\int_0^1 v\, \dif x",
            ])
        );
        let smooth: Vec<String> = first_row(&e, &chi(&[0, 0])).iter().map(|f| latex_key(&f.latex_function("u"))).collect();
        assert_eq!(
            smooth,
            keys(&[
                r"\partial_x\partial_y u(0,0)",
                r"\partial_x\partial_y u(0,1)",
                r"\partial_x\partial^2_y u(0,0)",
                r"\partial_x\partial^2_y u(0,1)",
                r"\partial_x u(0,1) - \partial_x u(0,0)",
                r"\partial_x u(0,1) + \partial_x u(0,0)",
            ])
        );
        assert_eq!(first_row(&e, &chi(&[0, 0]))[4].label(), "N^{00}_{15}");
    }

    #[test]
    fn smooth_application_matches_closed_form() {
        let e = Element1D::build(2, 5).unwrap();
        let q = Quadrature::gauss_legendre(12).unwrap();
        let u = SmoothFormND::from_product(vec![
            (FormDegree::Zero, SmoothFunction1D::sin()),
            (FormDegree::Zero, SmoothFunction1D::exp()),
        ]);
        let f = &first_row(&e, &chi(&[0, 0]))[4];
        // ∂_x u(0,1) − ∂_x u(0,0) for u = sin x · e^y.
        let expected = (1.0f64.exp() - 1.0) * 0.0f64.cos();
        assert_abs_diff_eq!(f.apply_smooth(&u, &q).unwrap(), expected, epsilon = 1e-14);
        let mixed = SmoothFormND::from_product(vec![
            (FormDegree::Zero, SmoothFunction1D::sin()),
            (FormDegree::One, SmoothFunction1D::exp()),
        ]);
        let g = &first_row(&e, &chi(&[0, 1]))[4];
        assert_abs_diff_eq!(g.apply_smooth(&mixed, &q).unwrap(), 1.0f64.exp() - 1.0, epsilon = 1e-14);
    }

    #[test]
    fn node_matrix_is_kronecker_product() {
        for (m, n) in [(0, 1), (1, 3), (2, 5)] {
            let e = Element1D::build(m, n).unwrap();
            for nu in 0..=2 {
                for c in enumerate_chi(2, nu).unwrap() {
                    assert_eq!(tensor_node_matrix(&e, &c), kronecker_node_matrix(&e, &c));
                }
            }
        }
    }

    #[test]
    fn functionals_vanish_across_blocks() {
        let e = Element1D::build(1, 3).unwrap();
        let f = &tensor_functionals(&e, &chi(&[0, 1]))[0];
        let phi = super::super::form::rank_one_basis(&e, &chi(&[1, 0]), &[0, 0]);
        assert!(f.apply_rank_one(&phi).is_zero());
    }
}
