//! Smooth inputs for the interpolation operators, given through derivative callbacks.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;

pub type DerivativeFn = Arc<dyn Fn(usize, f64) -> f64 + Send + Sync>;

/// A function on the reference interval known through `∂^order u(x)` callbacks,
/// optionally backed by an exact polynomial.
#[derive(Clone)]
pub struct SmoothFunction1D {
    name: String,
    derivative: DerivativeFn,
    max_order: Option<usize>,
    exact: Option<Polynomial>,
}

impl fmt::Debug for SmoothFunction1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SmoothFunction1D")
            .field("name", &self.name)
            .field("max_order", &self.max_order)
            .field("exact", &self.exact)
            .finish()
    }
}

impl SmoothFunction1D {
    /// `max_order = None` means derivatives of every order are available.
    pub fn new(
        name: impl Into<String>,
        max_order: Option<usize>,
        derivative: impl Fn(usize, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        SmoothFunction1D {
            name: name.into(),
            derivative: Arc::new(derivative),
            max_order,
            exact: None,
        }
    }

    pub fn sin() -> Self {
        Self::new("sin", None, |order, x| match order % 4 {
            0 => x.sin(),
            1 => x.cos(),
            2 => -x.sin(),
            _ => -x.cos(),
        })
    }

    pub fn cos() -> Self {
        Self::new("cos", None, |order, x| match order % 4 {
            0 => x.cos(),
            1 => -x.sin(),
            2 => -x.cos(),
            _ => x.sin(),
        })
    }

    pub fn exp() -> Self {
        Self::new("exp", None, |_, x| x.exp())
    }

    /// `|x-1| (x-1)^2`: `C^2` across `x = 1`, with a jump in the third derivative.
    pub fn kink() -> Self {
        Self::new("kink", Some(3), |order, x| {
            let t = x - 1.0;
            match order {
                0 => t.abs() * t * t,
                1 => 3.0 * t.abs() * t,
                2 => 6.0 * t.abs(),
                _ => 6.0 * t.signum(),
            }
        })
    }

    /// Built-in functions by name: `sin`, `cos`, `exp`, `kink`.
    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "sin" => Ok(Self::sin()),
            "cos" => Ok(Self::cos()),
            "exp" => Ok(Self::exp()),
            "kink" => Ok(Self::kink()),
            other => Err(Error::UnknownFunction(other.to_string())),
        }
    }

    /// Exact polynomial input; callbacks evaluate its derivatives in floating point.
    pub fn polynomial(p: Polynomial) -> Self {
        let derivatives: Vec<Polynomial> = match p.degree() {
            Some(d) => (0..=d).map(|s| p.derivative(s)).collect(),
            None => Vec::new(),
        };
        let floats: Vec<_> = derivatives.iter().map(Polynomial::to_float).collect();
        SmoothFunction1D {
            name: p.to_string(),
            derivative: Arc::new(move |order, x| floats.get(order).map_or(0.0, |q| q.evaluate(x))),
            max_order: None,
            exact: Some(p),
        }
    }

    /// Attaches an exact polynomial after spot-checking the callbacks against it.
    pub fn with_exact_polynomial(mut self, p: Polynomial) -> Result<Self> {
        let top = p.degree().unwrap_or(0).min(self.max_order.unwrap_or(usize::MAX));
        for &x in &[0.0, 0.25, 0.5, 0.8, 1.0] {
            for order in 0..=top {
                let expected = p.derivative(order).evaluate_f64(x);
                let got = (self.derivative)(order, x);
                if (expected - got).abs() > 1e-9 * (1.0 + expected.abs()) {
                    return Err(Error::InconsistentSmoothInput {
                        name: self.name.clone(),
                        x,
                    });
                }
            }
        }
        self.exact = Some(p);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn max_order(&self) -> Option<usize> {
        self.max_order
    }

    pub fn exact_polynomial(&self) -> Option<&Polynomial> {
        self.exact.as_ref()
    }

    pub fn value(&self, x: f64) -> f64 {
        (self.derivative)(0, x)
    }

    pub fn derivative(&self, order: usize, x: f64) -> Result<f64> {
        match self.max_order {
            Some(available) if order > available => Err(Error::MissingDerivative {
                name: self.name.clone(),
                order,
                available,
            }),
            _ => Ok((self.derivative)(order, x)),
        }
    }

    /// `du`, as the coefficient of the 1-form `u' dx`.
    pub fn derivative_function(&self) -> SmoothFunction1D {
        let inner = Arc::clone(&self.derivative);
        SmoothFunction1D {
            name: format!("d({})", self.name),
            derivative: Arc::new(move |order, x| inner(order + 1, x)),
            max_order: self.max_order.map(|m| m.saturating_sub(1)),
            exact: self.exact.as_ref().map(Polynomial::differentiate),
        }
    }

    /// Pullback to the reference interval of a cell `[origin, origin + width]`:
    /// `ξ ↦ u(origin + width·ξ)`, so `∂^s` picks up a factor `width^s`.
    pub fn pullback(&self, origin: f64, width: f64) -> SmoothFunction1D {
        let inner = Arc::clone(&self.derivative);
        SmoothFunction1D {
            name: format!("{} on [{origin}, {}]", self.name, origin + width),
            derivative: Arc::new(move |order, xi| width.powi(order as i32) * inner(order, origin + width * xi)),
            max_order: self.max_order,
            exact: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn builtin_derivatives_cycle() {
        let s = SmoothFunction1D::sin();
        assert_abs_diff_eq!(s.derivative(5, 0.3).unwrap(), 0.3f64.cos(), epsilon = 1e-16);
        let c = SmoothFunction1D::cos();
        assert_abs_diff_eq!(c.derivative(3, 0.3).unwrap(), 0.3f64.sin(), epsilon = 1e-16);
        assert!(SmoothFunction1D::by_name("tan").is_err());
    }

    #[test]
    fn exact_polynomial_consistency() {
        let p = Polynomial::from_ints(&[0, 0, 1]);
        let ok = SmoothFunction1D::new("square", None, |order, x| match order {
            0 => x * x,
            1 => 2.0 * x,
            2 => 2.0,
            _ => 0.0,
        });
        assert!(ok.with_exact_polynomial(p.clone()).is_ok());
        let wrong = SmoothFunction1D::new("wrong", None, |_, x| x);
        assert!(matches!(
            wrong.with_exact_polynomial(p),
            Err(Error::InconsistentSmoothInput { .. })
        ));
    }

    #[test]
    fn derivative_function_shifts_orders() {
        let limited = SmoothFunction1D::new("limited", Some(2), |order, x| x.powi(3 - order as i32));
        let du = limited.derivative_function();
        assert_eq!(du.max_order(), Some(1));
        assert!(du.derivative(2, 0.5).is_err());
    }

    #[test]
    fn pullback_scales_by_width() {
        let u = SmoothFunction1D::sin().pullback(1.0, 0.5);
        assert_abs_diff_eq!(u.derivative(0, 1.0).unwrap(), 1.5f64.sin(), epsilon = 1e-16);
        assert_abs_diff_eq!(u.derivative(1, 0.0).unwrap(), 0.5 * 1f64.cos(), epsilon = 1e-16);
    }
}
