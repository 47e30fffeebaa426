//! Tolerances for the floating-point paths. Everything on polynomial inputs is exact.

/// `‖d I₀u − I₁du‖_∞` for analytic `u`.
pub const COMMUTATION_1D: f64 = 1e-12;

/// One-sided derivative mismatch at a shared cell node.
pub const CONTINUITY: f64 = crate::element1d::JUNCTION_TOLERANCE;

/// Coefficient-wise residual of the tensor commutation on analytic inputs.
pub const COMMUTATION_ND: f64 = 1e-11;

/// Default Gauss–Legendre order for the smooth acceptance checks.
pub const SMOOTH_QUADRATURE_ORDER: usize = 12;
