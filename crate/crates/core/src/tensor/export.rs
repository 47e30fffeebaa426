//! JSON tables and plot samples for the tensor-product elements.

use serde::Serialize;

use crate::element1d::{format_float, uniform_grid, write_csv, Element1D};
use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;

use super::chi::{enumerate_chi, CharacteristicVector};
use super::form::multi_index;
use super::functional::{kronecker_node_matrix, tensor_functionals, TensorNodeFunctional};

pub const TENSOR_SCHEME: &str = "fecc-tensor/v1";

#[derive(Clone, Debug, Serialize)]
pub struct TensorFunctionalDescriptor {
    pub label: String,
    /// 1-based indices into the 1D families.
    pub indices: Vec<usize>,
    /// Rendering on a rank-one input `u ⊗ v ⊗ …`.
    pub latex: String,
    /// Rendering on a function of `N` variables.
    pub latex_function: String,
}

impl TensorFunctionalDescriptor {
    pub fn new(f: &TensorNodeFunctional) -> Self {
        TensorFunctionalDescriptor {
            label: f.label(),
            indices: f.indices.iter().map(|j| j + 1).collect(),
            latex: f.latex_rank_one(),
            latex_function: f.latex_function("u"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorBlockExport {
    pub chi: CharacteristicVector,
    pub shape: Vec<usize>,
    pub dimension: usize,
    pub functionals: Vec<TensorFunctionalDescriptor>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub node_matrix: Option<RationalMatrix>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorDegreeExport {
    pub nu: usize,
    pub dimension: usize,
    pub blocks: Vec<TensorBlockExport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorExport {
    pub scheme: &'static str,
    #[serde(rename = "N")]
    pub n_factors: usize,
    pub m: usize,
    pub n: usize,
    pub degrees: Vec<TensorDegreeExport>,
}

/// Table for every `ν` (or only `nu`), optionally with the Kronecker node matrices.
pub fn tensor_export(
    element: &Element1D,
    n_factors: usize,
    nu: Option<usize>,
    include_matrices: bool,
) -> Result<TensorExport> {
    let degrees: Vec<usize> = match nu {
        Some(v) if v > n_factors => return Err(Error::NuOutOfRange { nu: v, n_factors }),
        Some(v) => vec![v],
        None => (0..=n_factors).collect(),
    };
    let mut out = Vec::new();
    for nu in degrees {
        let mut blocks = Vec::new();
        for chi in enumerate_chi(n_factors, nu)? {
            let shape = chi.shape(element.degree());
            let functionals: Vec<TensorFunctionalDescriptor> = tensor_functionals(element, &chi)
                .iter()
                .map(TensorFunctionalDescriptor::new)
                .collect();
            blocks.push(TensorBlockExport {
                dimension: functionals.len(),
                node_matrix: include_matrices.then(|| kronecker_node_matrix(element, &chi)),
                chi,
                shape,
                functionals,
            });
        }
        out.push(TensorDegreeExport {
            nu,
            dimension: blocks.iter().map(|b| b.dimension).sum(),
            blocks,
        });
    }
    Ok(TensorExport {
        scheme: TENSOR_SCHEME,
        n_factors,
        m: element.continuity(),
        n: element.degree(),
        degrees: out,
    })
}

pub fn tensor_json(element: &Element1D, n_factors: usize, nu: Option<usize>, include_matrices: bool) -> Result<String> {
    let export = tensor_export(element, n_factors, nu, include_matrices)?;
    serde_json::to_string_pretty(&export).map_err(|e| Error::Io(e.to_string()))
}

/// Values of every 2D rank-one basis function of block `chi` on a `samples × samples` grid.
pub fn basis_samples_2d_csv(element: &Element1D, chi: &CharacteristicVector, samples: usize) -> Result<String> {
    if chi.len() != 2 {
        return Err(Error::FactorCountMismatch {
            expected: 2,
            found: chi.len(),
        });
    }
    let shape = chi.shape(element.degree());
    let count: usize = shape.iter().product();
    let factors: Vec<Vec<_>> = (0..2)
        .map(|l| element.basis(chi.degree(l)).iter().map(|p| p.to_float()).collect())
        .collect();
    let mut header = vec!["x".to_string(), "y".to_string()];
    for flat in 0..count {
        let j = multi_index(&shape, flat);
        header.push(format!("phi{}_{}_{}", chi.label(), j[0] + 1, j[1] + 1));
    }
    let grid = uniform_grid(samples);
    let rows = grid.iter().flat_map(|&y| grid.iter().map(move |&x| (x, y))).map(|(x, y)| {
        let mut row = vec![format_float(x), format_float(y)];
        for flat in 0..count {
            let j = multi_index(&shape, flat);
            row.push(format_float(factors[0][j[0]].evaluate(x) * factors[1][j[1]].evaluate(y)));
        }
        row
    });
    write_csv(&header, rows)
}
