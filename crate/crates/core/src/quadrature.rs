//! Gauss–Legendre rules mapped to `[0, 1]`.

use std::num::NonZeroUsize;

use gauss_quad::legendre::GaussLegendre;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Quadrature {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl Quadrature {
    /// `order`-point rule on `[0, 1]`, exact for polynomials of degree `2·order − 1`.
    pub fn gauss_legendre(order: usize) -> Result<Self> {
        let order = NonZeroUsize::new(order).ok_or(Error::InvalidQuadratureOrder)?;
        let rule = GaussLegendre::new(order);
        let (nodes, weights) = rule
            .as_node_weight_pairs()
            .iter()
            .map(|&(x, w)| (0.5 * (x + 1.0), 0.5 * w))
            .unzip();
        Ok(Quadrature { nodes, weights })
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.points().map(|(x, w)| w * f(x)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn exact_for_polynomials_up_to_twice_order_minus_one() {
        let q = Quadrature::gauss_legendre(4).unwrap();
        assert_abs_diff_eq!(q.integrate(|x| x.powi(7)), 1.0 / 8.0, epsilon = 1e-15);
        assert_abs_diff_eq!(q.integrate(|_| 1.0), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn exponential_moment() {
        let q = Quadrature::gauss_legendre(10).unwrap();
        assert_abs_diff_eq!(q.integrate(f64::exp), std::f64::consts::E - 1.0, epsilon = 1e-14);
    }

    #[test]
    fn zero_order_rejected() {
        assert!(matches!(Quadrature::gauss_legendre(0), Err(Error::InvalidQuadratureOrder)));
    }
}
