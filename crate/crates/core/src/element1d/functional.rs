//! Node functionals of the interval element: endpoint derivatives, Legendre
//! moments, and the endpoint sum.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::form_degree::FormDegree;
use crate::hermite::Endpoint;
use crate::legendre::legendre;
use crate::polynomial::Polynomial;
use crate::quadrature::Quadrature;
use crate::rational::{self, Rational};

use super::smooth::SmoothFunction1D;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum FunctionalKind {
    /// `∂^order (·)(point)`, or `∂^order ∂_x(·)(point)` when `of_derivative`.
    EndpointDerivative {
        point: Endpoint,
        order: usize,
        of_derivative: bool,
    },
    /// `∫₀¹ ℓ_k (·) dx`, or `∫₀¹ ℓ_k ∂_x(·) dx` when `of_derivative`.
    Moment { legendre_index: usize, of_derivative: bool },
    /// `(·)(1) + (·)(0)`.
    EndpointSum,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NodeFunctional {
    pub form_degree: FormDegree,
    #[serde(flatten)]
    pub kind: FunctionalKind,
}

/// A weighted point evaluation `weight · ∂^order u(x)`; every functional is a
/// finite sum of these once moments are replaced by a quadrature rule.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sample {
    pub weight: f64,
    pub order: usize,
    pub x: f64,
}

impl NodeFunctional {
    pub fn endpoint_derivative(form_degree: FormDegree, point: Endpoint, order: usize) -> Self {
        NodeFunctional {
            form_degree,
            kind: FunctionalKind::EndpointDerivative {
                point,
                order,
                of_derivative: false,
            },
        }
    }

    pub fn moment(form_degree: FormDegree, legendre_index: usize, of_derivative: bool) -> Self {
        NodeFunctional {
            form_degree,
            kind: FunctionalKind::Moment {
                legendre_index,
                of_derivative,
            },
        }
    }

    pub fn endpoint_sum() -> Self {
        NodeFunctional {
            form_degree: FormDegree::Zero,
            kind: FunctionalKind::EndpointSum,
        }
    }

    /// Highest derivative of the argument the functional reads.
    pub fn derivative_order(&self) -> usize {
        match self.kind {
            FunctionalKind::EndpointDerivative {
                order, of_derivative, ..
            } => order + usize::from(of_derivative),
            FunctionalKind::Moment { of_derivative, .. } => usize::from(of_derivative),
            FunctionalKind::EndpointSum => 0,
        }
    }

    /// Exact value on a polynomial.
    pub fn apply(&self, u: &Polynomial) -> Rational {
        match self.kind {
            FunctionalKind::EndpointDerivative { point, .. } => {
                u.evaluate_derivative(self.derivative_order(), &point.coordinate())
            }
            FunctionalKind::Moment {
                legendre_index,
                of_derivative,
            } => {
                let weight = legendre(legendre_index);
                if of_derivative {
                    (&weight * &u.differentiate()).definite_integral()
                } else {
                    (&weight * u).definite_integral()
                }
            }
            FunctionalKind::EndpointSum => u.evaluate(&rational::int(1)) + u.evaluate(&rational::int(0)),
        }
    }

    /// Point samples realizing the functional; moments use `quadrature`.
    pub fn samples(&self, quadrature: &Quadrature) -> Vec<Sample> {
        match self.kind {
            FunctionalKind::EndpointDerivative { point, .. } => vec![Sample {
                weight: 1.0,
                order: self.derivative_order(),
                x: point.coordinate_f64(),
            }],
            FunctionalKind::Moment { legendre_index, .. } => {
                let weight = legendre(legendre_index);
                quadrature
                    .points()
                    .map(|(x, w)| Sample {
                        weight: w * weight.evaluate_f64(x),
                        order: self.derivative_order(),
                        x,
                    })
                    .collect()
            }
            FunctionalKind::EndpointSum => vec![
                Sample { weight: 1.0, order: 0, x: 1.0 },
                Sample { weight: 1.0, order: 0, x: 0.0 },
            ],
        }
    }

    /// Value on a smooth input. Endpoint variants call the derivative
    /// callbacks directly; moments use a Gauss–Legendre rule of the given order.
    pub fn apply_smooth(&self, u: &SmoothFunction1D, quadrature_order: usize) -> Result<f64> {
        let quadrature = Quadrature::gauss_legendre(quadrature_order)?;
        self.apply_smooth_with(u, &quadrature)
    }

    pub fn apply_smooth_with(&self, u: &SmoothFunction1D, quadrature: &Quadrature) -> Result<f64> {
        self.samples(quadrature)
            .iter()
            .map(|s| Ok(s.weight * u.derivative(s.order, s.x)?))
            .sum()
    }

    /// LaTeX rendering applied to the factor `var` with spatial coordinate `coord`,
    /// e.g. `\partial^2_y v(0)` or `\int_0^1 v\,\dif x`.
    pub fn latex(&self, var: &str, coord: &str) -> String {
        match self.kind {
            FunctionalKind::EndpointDerivative { point, .. } => {
                format!("{}{var}({})", partial(self.derivative_order(), coord), point.index())
            }
            FunctionalKind::Moment {
                legendre_index: 0,
                of_derivative: true,
            } => format!("({var}(1)-{var}(0))"),
            FunctionalKind::Moment {
                legendre_index,
                of_derivative,
            } => {
                let weight = if legendre_index == 0 {
                    String::new()
                } else {
                    format!("\\ell_{{{legendre_index}}} ")
                };
                let d = if of_derivative { partial(1, coord) } else { String::new() };
                format!("\\int_0^1 {weight}{d}{var}\\,\\dif x")
            }
            FunctionalKind::EndpointSum => format!("({var}(1)+{var}(0))"),
        }
    }
}

/// `\partial_c`, `\partial^2_c`, or nothing for order zero.
pub(crate) fn partial(order: usize, coord: &str) -> String {
    match order {
        0 => String::new(),
        1 => format!("\\partial_{coord} "),
        s => format!("\\partial^{s}_{coord} "),
    }
}

/// Whitespace-insensitive comparison key for LaTeX descriptors.
pub fn latex_key(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}
