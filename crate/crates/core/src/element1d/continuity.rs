//! Two neighbouring cells sharing an endpoint: interpolation with the
//! implementation-facing Hermite data `u(a), u(b), ∂u, …, ∂^m u` and a check
//! that the piecewise interpolant is `C^m` at the shared node.

use crate::error::Result;
use crate::form_degree::FormDegree;
use crate::polynomial::FloatPolynomial;
use crate::quadrature::Quadrature;
use crate::report::{VerificationReport, Witness};

use super::element::Element1D;
use super::functional::FunctionalKind;
use super::smooth::SmoothFunction1D;

pub const JUNCTION_TOLERANCE: f64 = 1e-12;

/// Step used to probe one-sided derivatives of the input around the junction.
const REGULARITY_STEP: f64 = 1e-6;
const REGULARITY_JUMP: f64 = 1e-4;

/// Local 0-form functional values of a pulled-back input, with the endpoint
/// combinations `u(1) ∓ u(0)` taken from point values rather than quadrature.
pub fn hermite_dof_values(e: &Element1D, local: &SmoothFunction1D, quadrature: &Quadrature) -> Result<Vec<f64>> {
    e.functionals(FormDegree::Zero)
        .iter()
        .map(|f| match f.kind {
            FunctionalKind::Moment {
                legendre_index: 0,
                of_derivative: true,
            } => Ok(local.derivative(0, 1.0)? - local.derivative(0, 0.0)?),
            _ => f.apply_smooth_with(local, quadrature),
        })
        .collect()
}

/// A cell `[origin, origin + width]` and the interpolant in its reference coordinate.
#[derive(Clone, Debug)]
pub struct CellInterpolant {
    pub origin: f64,
    pub width: f64,
    pub reference: FloatPolynomial,
}

impl CellInterpolant {
    /// `∂^order` of the interpolant in physical coordinates at reference point `xi`.
    pub fn derivative_at(&self, order: usize, xi: f64) -> f64 {
        self.reference.derivative(order).evaluate(xi) / self.width.powi(order as i32)
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.origin && x <= self.origin + self.width
    }

    pub fn to_reference(&self, x: f64) -> f64 {
        (x - self.origin) / self.width
    }
}

pub fn interpolate_cells(e: &Element1D, u: &SmoothFunction1D, cells: &[(f64, f64)]) -> Result<Vec<CellInterpolant>> {
    let quadrature = Quadrature::gauss_legendre(e.default_quadrature_order())?;
    cells
        .iter()
        .map(|&(origin, width)| {
            let local = u.pullback(origin, width);
            let values = hermite_dof_values(e, &local, &quadrature)?;
            let coeffs = e.coefficients_from_values(FormDegree::Zero, &values);
            Ok(CellInterpolant {
                origin,
                width,
                reference: e.combine_f64(FormDegree::Zero, &coeffs),
            })
        })
        .collect()
}

/// Interpolates `u` on `[0, 1]` and `[1, 2]` and checks that one-sided
/// derivatives of orders `0..=m` agree at `x = 1` within [`JUNCTION_TOLERANCE`].
/// If the input itself jumps in one of those derivatives, the report fails
/// with an `input-regularity` witness.
pub fn two_cell_continuity_demo(e: &Element1D, u: &SmoothFunction1D) -> Result<VerificationReport> {
    let m = e.continuity();
    let mut report = VerificationReport::new("two-cell-continuity")
        .with_param("m", m)
        .with_param("n", e.degree());
    let cells = interpolate_cells(e, u, &[(0.0, 1.0), (1.0, 1.0)])?;
    let (left, right) = (&cells[0], &cells[1]);
    for order in 0..=m {
        let from_left = left.derivative_at(order, 1.0);
        let from_right = right.derivative_at(order, 0.0);
        let mismatch = (from_left - from_right).abs();
        report.require(mismatch <= JUNCTION_TOLERANCE, "junction-mismatch", vec![order], || {
            format!("order {order}: left {from_left:e}, right {from_right:e}, mismatch {mismatch:e}")
        });

        let below = u.derivative(order, 1.0 - REGULARITY_STEP)?;
        let above = u.derivative(order, 1.0 + REGULARITY_STEP)?;
        let at = u.derivative(order, 1.0)?;
        let jump = (above - below).abs();
        if jump > REGULARITY_JUMP * (1.0 + at.abs()) {
            report.fail(Witness::new(
                "input-regularity",
                vec![order],
                format!("input derivative of order {order} jumps by {jump:e} across x = 1"),
            ));
        }
    }
    Ok(report)
}
