//! JSON element tables and CSV plot samples.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::form_degree::FormDegree;
use crate::matrix::RationalMatrix;
use crate::polynomial::Polynomial;

use super::element::Element1D;
use super::functional::{FunctionalKind, NodeFunctional};

pub const ELEMENT_SCHEME: &str = "fecc-element1d/v1";

#[derive(Clone, Debug, Serialize)]
pub struct FunctionalDescriptor {
    pub index: usize,
    pub form_degree: FormDegree,
    #[serde(flatten)]
    pub kind: FunctionalKind,
    pub latex: String,
}

impl FunctionalDescriptor {
    pub fn new(index: usize, f: &NodeFunctional) -> Self {
        let (var, coord) = match f.form_degree {
            FormDegree::Zero => ("u", "x"),
            FormDegree::One => ("v", "x"),
        };
        FunctionalDescriptor {
            index,
            form_degree: f.form_degree,
            kind: f.kind.clone(),
            latex: f.latex(var, coord),
        }
    }
}

pub fn describe_functionals(e: &Element1D, k: FormDegree) -> Vec<FunctionalDescriptor> {
    e.functionals(k)
        .iter()
        .enumerate()
        .map(|(i, f)| FunctionalDescriptor::new(i + 1, f))
        .collect()
}

/// Complete element table; field order is fixed.
#[derive(Clone, Debug, Serialize)]
pub struct ElementExport<'a> {
    pub scheme: &'static str,
    pub m: usize,
    pub n: usize,
    pub functionals0: Vec<FunctionalDescriptor>,
    pub functionals1: Vec<FunctionalDescriptor>,
    pub basis0: &'a [Polynomial],
    pub basis1: &'a [Polynomial],
    #[serde(rename = "M0")]
    pub m0: &'a RationalMatrix,
    #[serde(rename = "M1")]
    pub m1: &'a RationalMatrix,
    pub alpha0: &'a RationalMatrix,
    pub alpha1: &'a RationalMatrix,
}

impl<'a> ElementExport<'a> {
    pub fn new(e: &'a Element1D) -> Self {
        ElementExport {
            scheme: ELEMENT_SCHEME,
            m: e.continuity(),
            n: e.degree(),
            functionals0: describe_functionals(e, FormDegree::Zero),
            functionals1: describe_functionals(e, FormDegree::One),
            basis0: e.basis(FormDegree::Zero),
            basis1: e.basis(FormDegree::One),
            m0: e.node_matrix(FormDegree::Zero),
            m1: e.node_matrix(FormDegree::One),
            alpha0: e.alpha(FormDegree::Zero),
            alpha1: e.alpha(FormDegree::One),
        }
    }
}

pub fn element_json(e: &Element1D) -> Result<String> {
    serde_json::to_string_pretty(&ElementExport::new(e)).map_err(|err| Error::Io(err.to_string()))
}

/// Floating values in plot data carry 17 significant digits.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Uniform grid on `[0, 1]`.
pub fn uniform_grid(samples: usize) -> Vec<f64> {
    let samples = samples.max(2);
    (0..samples).map(|i| i as f64 / (samples - 1) as f64).collect()
}

pub(crate) fn write_csv(header: &[String], rows: impl Iterator<Item = Vec<String>>) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header).map_err(|e| Error::Io(e.to_string()))?;
    for row in rows {
        writer.write_record(&row).map_err(|e| Error::Io(e.to_string()))?;
    }
    let bytes = writer.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

/// Every 0- and 1-form basis function sampled on a uniform grid: columns
/// `x, phi0_1, …, phi0_{n+1}, phi1_1, …, phi1_n`.
pub fn basis_samples_csv(e: &Element1D, samples: usize) -> Result<String> {
    let mut header = vec!["x".to_string()];
    let b0: Vec<_> = e.basis(FormDegree::Zero).iter().map(Polynomial::to_float).collect();
    let b1: Vec<_> = e.basis(FormDegree::One).iter().map(Polynomial::to_float).collect();
    header.extend((1..=b0.len()).map(|j| format!("phi0_{j}")));
    header.extend((1..=b1.len()).map(|j| format!("phi1_{j}")));
    let rows = uniform_grid(samples).into_iter().map(|x| {
        std::iter::once(x)
            .chain(b0.iter().map(|p| p.evaluate(x)))
            .chain(b1.iter().map(|p| p.evaluate(x)))
            .map(format_float)
            .collect()
    });
    write_csv(&header, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_has_fixed_field_order_and_rational_strings() {
        let e = Element1D::build(1, 3).unwrap();
        let json = element_json(&e).unwrap();
        let keys = ["\"scheme\"", "\"m\"", "\"n\"", "\"functionals0\"", "\"functionals1\"", "\"basis0\"", "\"basis1\"", "\"M0\"", "\"M1\"", "\"alpha0\"", "\"alpha1\""];
        let positions: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["basis0"][3], serde_json::json!(["1/2"]));
        assert_eq!(value["M0"][0][0], "1/1");
        assert_eq!(value["functionals0"][2]["type"], "moment");
        assert_eq!(json, element_json(&e).unwrap());
    }

    #[test]
    fn csv_sampler_shape() {
        let e = Element1D::build(0, 2).unwrap();
        let csv = basis_samples_csv(&e, 5).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0], "x,phi0_1,phi0_2,phi0_3,phi1_1,phi1_2");
        assert!(lines[3].starts_with("5.0000000000000000e-1,"));
    }
}
