//! Univariate polynomials with exact rational coefficients on the reference interval `[0, 1]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{self, Rational};

/// Coefficients in ascending powers of `x`; no trailing zeros, so the zero
/// polynomial is the empty sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polynomial {
    #[serde(with = "crate::rational::serde_rational_vec")]
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The identity `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// Convenience constructor from integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn differentiate(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// `order`-fold derivative.
    pub fn derivative(&self, order: usize) -> Self {
        if order == 0 {
            return self.clone();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(order)
                .map(|(k, c)| c * Rational::from_integer(rational::falling_factorial(k, order)))
                .collect(),
        )
    }

    /// Antiderivative vanishing at `x = 0`.
    pub fn integrate_from_zero(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rational::from_integer(BigInt::from(k + 1)));
        }
        Self::new(coeffs)
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `∂^order p (x)` without materializing the derivative when `x` is an endpoint.
    pub fn evaluate_derivative(&self, order: usize, x: &Rational) -> Rational {
        if x.is_zero() {
            return self.coeff(order) * rational::factorial(order);
        }
        if x.is_one() {
            return self
                .coeffs
                .iter()
                .enumerate()
                .skip(order)
                .map(|(k, c)| c * Rational::from_integer(rational::falling_factorial(k, order)))
                .fold(Rational::zero(), |acc, t| acc + t);
        }
        self.derivative(order).evaluate(x)
    }

    /// Exact `∫₀¹ p dx`.
    pub fn definite_integral(&self) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c / Rational::from_integer(BigInt::from(k + 1)))
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    pub fn to_float(&self) -> FloatPolynomial {
        FloatPolynomial::new(self.coeffs.iter().map(rational::to_f64).collect())
    }

    pub fn evaluate_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + rational::to_f64(c))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_coeff = k == 0 || !magnitude.is_one();
            if show_coeff {
                if magnitude.is_integer() {
                    write!(f, "{}", magnitude.numer())?;
                } else {
                    write!(f, "{}/{}", magnitude.numer(), magnitude.denom())?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Polynomial with floating coefficients, produced by interpolating smooth inputs.
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FloatPolynomial {
    coeffs: Vec<f64>,
}

impl FloatPolynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        FloatPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn differentiate(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        )
    }

    pub fn derivative(&self, order: usize) -> Self {
        (0..order).fold(self.clone(), |p, _| p.differentiate())
    }

    pub fn add_scaled(&mut self, other: &FloatPolynomial, weight: f64) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), 0.0);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += weight * b;
        }
    }

    /// `max |p(x) - q(x)|` over `samples` uniform points of `[0, 1]`.
    pub fn max_difference(&self, other: &FloatPolynomial, samples: usize) -> f64 {
        let samples = samples.max(2);
        (0..samples)
            .map(|i| {
                let x = i as f64 / (samples - 1) as f64;
                (self.evaluate(x) - other.evaluate(x)).abs()
            })
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn ring_operations() {
        assert_eq!(&p(&[0, 1]) + &p(&[1, -1]), p(&[1]));
        assert_eq!(&p(&[-1, 2]) * &p(&[-1, 2]), p(&[1, -4, 4]));
        assert_eq!(
            p(&[0, 0, 1]).scale(&frac(3, 2)),
            Polynomial::new(vec![int(0), int(0), frac(3, 2)])
        );
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), Polynomial::zero());
        assert_eq!((&p(&[1, 1]) * &Polynomial::zero()).degree(), None);
    }

    #[test]
    fn derivatives() {
        assert_eq!(p(&[0, 0, 0, 1]).differentiate(), p(&[0, 0, 3]));
        assert!(Polynomial::constant(frac(1, 2)).differentiate().is_zero());
        // 3x^2 - 2x^3 - 1/2
        let u = Polynomial::new(vec![frac(-1, 2), int(0), int(3), int(-2)]);
        assert_eq!(u.differentiate(), p(&[0, 6, -6]));
        assert_eq!(p(&[0, 0, 0, 1]).derivative(2), p(&[0, 6]));
    }

    #[test]
    fn antiderivatives() {
        assert_eq!(Polynomial::one().integrate_from_zero(), Polynomial::x());
        assert_eq!(p(&[-1, 2]).integrate_from_zero(), p(&[0, -1, 1]));
        assert!(Polynomial::zero().integrate_from_zero().is_zero());
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[1, -6, 6]).evaluate(&int(1)), int(1));
        assert_eq!(p(&[0, 0, 0, 1]).evaluate_derivative(2, &int(1)), int(6));
        assert_eq!(p(&[-1, 2]).evaluate(&frac(1, 2)), int(0));
        let q = p(&[3, -1, 4, 1, -5]);
        for order in 0..6 {
            for x in [int(0), int(1), frac(2, 7)] {
                assert_eq!(q.evaluate_derivative(order, &x), q.derivative(order).evaluate(&x));
            }
        }
    }

    #[test]
    fn integrals() {
        assert_eq!(Polynomial::one().definite_integral(), int(1));
        let l1 = p(&[-1, 2]);
        assert_eq!((&l1 * &l1).definite_integral(), frac(1, 3));
        assert_eq!((&Polynomial::one() * &l1).definite_integral(), int(0));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -6, 6]).to_string(), "6x^2 - 6x + 1");
        assert_eq!(Polynomial::new(vec![frac(-1, 2)]).to_string(), "-1/2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn serializes_as_num_den_strings() {
        let u = Polynomial::new(vec![frac(-1, 2), int(0), int(3)]);
        let json = serde_json::to_string(&u).unwrap();
        assert_eq!(json, r#"["-1/2","0/1","3/1"]"#);
        assert_eq!(serde_json::from_str::<Polynomial>(&json).unwrap(), u);
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-20i64..20, 1i64..9), 0..10).prop_map(|cs| {
            Polynomial::new(cs.into_iter().map(|(a, b)| frac(a, b)).collect())
        })
    }

    proptest! {
        #[test]
        fn differentiate_inverts_integrate(q in arb_poly()) {
            prop_assert_eq!(q.integrate_from_zero().differentiate(), q);
        }

        #[test]
        fn product_degree_adds(a in arb_poly(), b in arb_poly()) {
            let prod = &a * &b;
            match (a.degree(), b.degree()) {
                (Some(da), Some(db)) => prop_assert_eq!(prod.degree(), Some(da + db)),
                _ => prop_assert!(prod.is_zero()),
            }
        }

        #[test]
        fn integral_matches_antiderivative(q in arb_poly()) {
            prop_assert_eq!(q.definite_integral(), q.integrate_from_zero().evaluate(&int(1)));
        }
    }
}
