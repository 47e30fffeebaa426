//! Tensor-product cochain complexes on `[0, 1]^N` built from the 1D element.

mod chi;
mod export;
mod form;
mod functional;
mod interp;
mod smooth;
mod verify;

pub use chi::{binomial, enumerate_chi, CharacteristicVector, SignConvention};
pub use export::{
    basis_samples_2d_csv, tensor_export, tensor_json, TensorBlockExport, TensorDegreeExport, TensorExport,
    TensorFunctionalDescriptor, TENSOR_SCHEME,
};
pub use form::{
    flat_index, multi_index, rank_one_basis, rank_one_basis_elements, space_dimension, Factor, FormSum, MonomialKey,
    RankOneForm, Scalar, TensorForm,
};
pub use functional::{
    kronecker_node_matrix, tensor_functionals, tensor_node_matrix, TensorNodeFunctional, COORDINATES, VARIABLES,
};
pub use interp::{tensor_interpolate, tensor_interpolate_smooth, tensor_interpolate_tensor, TensorInterpolator};
pub use smooth::{MixedPartialFn, SmoothFormND};
pub use verify::{
    monomial_rank_one_probes, verify_dd_zero, verify_dd_zero_with, verify_dimensions, verify_kronecker_structure,
    verify_tensor_commutation, verify_tensor_commutation_with,
};
