//! The one-dimensional `C^m` element pair for 0- and 1-forms.

mod continuity;
mod element;
mod export;
pub mod fixtures;
mod functional;
mod smooth;
mod verify;

pub use continuity::{
    hermite_dof_values, interpolate_cells, two_cell_continuity_demo, CellInterpolant, JUNCTION_TOLERANCE,
};
pub use element::{basis0, functional_is_admissible, functionals0, functionals1, node_matrix_of, Element1D};
pub use export::{
    basis_samples_csv, describe_functionals, element_json, format_float, uniform_grid, ElementExport,
    FunctionalDescriptor, ELEMENT_SCHEME,
};
pub(crate) use export::write_csv;
pub use functional::{latex_key, FunctionalKind, NodeFunctional, Sample};
pub(crate) use functional::partial;
pub use smooth::{DerivativeFn, SmoothFunction1D};
pub use verify::{
    commutation_residual, monomial_probes, verify_commutation, verify_lemma_hypotheses, verify_node_matrix_commute,
    verify_projection, verify_unisolvence,
};
