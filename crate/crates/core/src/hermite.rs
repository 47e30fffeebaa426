//! Two-point Hermite interpolation basis on `[0, 1]`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::polynomial::Polynomial;
use crate::rational::{self, Rational};

/// Interval endpoint, `0` or `1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(into = "usize", try_from = "usize")]
pub enum Endpoint {
    Left,
    Right,
}

impl From<Endpoint> for usize {
    fn from(p: Endpoint) -> usize {
        p.index()
    }
}

impl TryFrom<usize> for Endpoint {
    type Error = String;
    fn try_from(v: usize) -> std::result::Result<Self, String> {
        match v {
            0 => Ok(Endpoint::Left),
            1 => Ok(Endpoint::Right),
            other => Err(format!("endpoint must be 0 or 1, got {other}")),
        }
    }
}

impl Endpoint {
    pub fn index(self) -> usize {
        match self {
            Endpoint::Left => 0,
            Endpoint::Right => 1,
        }
    }

    pub fn opposite(self) -> Endpoint {
        match self {
            Endpoint::Left => Endpoint::Right,
            Endpoint::Right => Endpoint::Left,
        }
    }

    pub fn coordinate(self) -> Rational {
        rational::int(self.index() as i64)
    }

    pub fn coordinate_f64(self) -> f64 {
        self.index() as f64
    }
}

/// `h_{α,β}` of degree `2m+1`: `∂^γ h(α) = δ_{βγ}` and `∂^γ h(1-α) = 0` for `γ = 0..=m`.
pub fn hermite_basis(m: usize, endpoint: Endpoint, beta: usize) -> Result<Polynomial> {
    if beta > m {
        return Err(Error::HermiteIndex { m, beta });
    }
    let size = 2 * m + 2;
    // Rows: ∂^γ at the own endpoint, then ∂^γ at the opposite endpoint.
    let conditions: Vec<(Endpoint, usize)> = (0..=m)
        .map(|g| (endpoint, g))
        .chain((0..=m).map(|g| (endpoint.opposite(), g)))
        .collect();
    let system = RationalMatrix::from_fn(size, size, |row, k| {
        let (point, order) = conditions[row];
        Polynomial::monomial(Rational::one(), k).evaluate_derivative(order, &point.coordinate())
    });
    let rhs: Vec<Rational> = (0..size)
        .map(|row| if row == beta { Rational::one() } else { Rational::zero() })
        .collect();
    let coeffs = system.solve(&rhs).ok_or(Error::SingularMatrix)?;
    let h = Polynomial::new(coeffs);

    let violated = conditions.iter().enumerate().any(|(row, &(point, order))| {
        h.evaluate_derivative(order, &point.coordinate()) != rhs[row]
    });
    if violated {
        return Err(Error::HermitePostcondition {
            m,
            endpoint: endpoint.index(),
            beta,
        });
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn linear_hermite() {
        assert_eq!(hermite_basis(0, Endpoint::Left, 0).unwrap(), Polynomial::from_ints(&[1, -1]));
        assert_eq!(hermite_basis(0, Endpoint::Right, 0).unwrap(), Polynomial::x());
    }

    #[test]
    fn cubic_hermite() {
        assert_eq!(
            hermite_basis(1, Endpoint::Left, 0).unwrap(),
            Polynomial::from_ints(&[1, 0, -3, 2])
        );
        let h11 = hermite_basis(1, Endpoint::Right, 1).unwrap();
        assert_eq!(h11, Polynomial::from_ints(&[0, 0, -1, 1]));
        assert_eq!(h11.evaluate_derivative(1, &int(1)), int(1));
        assert_eq!(h11.evaluate(&int(1)), int(0));
    }

    #[test]
    fn endpoint_conditions_hold_up_to_m4() {
        for m in 0..=4 {
            for endpoint in [Endpoint::Left, Endpoint::Right] {
                for beta in 0..=m {
                    let h = hermite_basis(m, endpoint, beta).unwrap();
                    assert!(h.degree().unwrap() <= 2 * m + 1);
                    for gamma in 0..=m {
                        let own = h.evaluate_derivative(gamma, &endpoint.coordinate());
                        let other = h.evaluate_derivative(gamma, &endpoint.opposite().coordinate());
                        assert_eq!(own, if gamma == beta { int(1) } else { int(0) });
                        assert_eq!(other, int(0));
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_beta_above_m() {
        assert!(matches!(
            hermite_basis(1, Endpoint::Left, 2),
            Err(Error::HermiteIndex { .. })
        ));
    }
}
