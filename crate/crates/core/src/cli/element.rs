use std::fmt::Write;

use serde_json::json;

use crate::element1d::{basis_samples_csv, describe_functionals, element_json, write_csv, Element1D};
use crate::error::{Error, Result};
use crate::form_degree::FormDegree;
use crate::matrix::RationalMatrix;

use super::args::{ElementArgs, ElementEmit, Format};
use super::output::to_json;

pub fn cmd_element(args: &ElementArgs) -> Result<String> {
    let e = Element1D::build(args.m, args.n)?;
    let format = args.output.format.unwrap_or(match args.emit {
        ElementEmit::BasisSamples => Format::Csv,
        _ => Format::Json,
    });
    let degrees = [FormDegree::Zero, FormDegree::One];
    match (args.emit, format) {
        (ElementEmit::BasisSamples, Format::Csv) => basis_samples_csv(&e, args.samples),
        (ElementEmit::BasisSamples, _) => Err(Error::Config("basis samples are emitted as csv only".into())),
        (ElementEmit::Table, Format::Json) => element_json(&e).map(|s| s + "\n"),
        (ElementEmit::Table, Format::Text) => Ok(text_table(&e)),
        (ElementEmit::Table, Format::Csv) => Err(Error::Config("the element table has no csv form".into())),
        (ElementEmit::Matrix, f) => matrices("M", f, |k| e.node_matrix(k)),
        (ElementEmit::Alpha, f) => matrices("alpha", f, |k| e.alpha(k)),
        (ElementEmit::Basis, Format::Json) => to_json(&json!({
            "basis0": e.basis(FormDegree::Zero),
            "basis1": e.basis(FormDegree::One),
        })),
        (ElementEmit::Basis, Format::Text) => {
            let mut s = String::new();
            for k in degrees {
                for (j, p) in e.basis(k).iter().enumerate() {
                    let _ = writeln!(s, "phi{}_{} = {p}", k.value(), j + 1);
                }
            }
            Ok(s)
        }
        (ElementEmit::Basis, Format::Csv) => {
            let header: Vec<String> = ["form_degree", "index", "power", "coefficient"].map(String::from).to_vec();
            let mut rows = Vec::new();
            for k in degrees {
                for (j, p) in e.basis(k).iter().enumerate() {
                    for (power, c) in p.coeffs().iter().enumerate() {
                        rows.push(vec![
                            k.value().to_string(),
                            (j + 1).to_string(),
                            power.to_string(),
                            crate::rational::format(c),
                        ]);
                    }
                }
            }
            write_csv(&header, rows.into_iter())
        }
        (ElementEmit::Functionals, Format::Json) => to_json(&json!({
            "functionals0": describe_functionals(&e, FormDegree::Zero),
            "functionals1": describe_functionals(&e, FormDegree::One),
        })),
        (ElementEmit::Functionals, Format::Text) => {
            let mut s = String::new();
            for k in degrees {
                for d in describe_functionals(&e, k) {
                    let _ = writeln!(s, "N{}_{} = {}", k.value(), d.index, d.latex);
                }
            }
            Ok(s)
        }
        (ElementEmit::Functionals, Format::Csv) => {
            let header: Vec<String> = ["form_degree", "index", "latex"].map(String::from).to_vec();
            let rows = degrees.iter().flat_map(|&k| {
                describe_functionals(&e, k)
                    .into_iter()
                    .map(move |d| vec![k.value().to_string(), d.index.to_string(), d.latex])
            });
            write_csv(&header, rows)
        }
    }
}

fn matrices<'a>(
    name: &str,
    format: Format,
    get: impl Fn(FormDegree) -> &'a RationalMatrix,
) -> Result<String> {
    let (a, b) = (get(FormDegree::Zero), get(FormDegree::One));
    match format {
        Format::Json => to_json(&json!({ format!("{name}0"): a, format!("{name}1"): b })),
        Format::Text => Ok(format!("{name}0 =\n{a}\n{name}1 =\n{b}")),
        Format::Csv => {
            let header: Vec<String> = ["matrix", "row", "col", "value"].map(String::from).to_vec();
            let mut rows = Vec::new();
            for (k, mat) in [(0, a), (1, b)] {
                for (i, row) in mat.to_strings().into_iter().enumerate() {
                    for (j, v) in row.into_iter().enumerate() {
                        rows.push(vec![format!("{name}{k}"), (i + 1).to_string(), (j + 1).to_string(), v]);
                    }
                }
            }
            write_csv(&header, rows.into_iter())
        }
    }
}

fn text_table(e: &Element1D) -> String {
    let mut s = format!("C^{} element, n = {}\n", e.continuity(), e.degree());
    for k in [FormDegree::Zero, FormDegree::One] {
        let _ = writeln!(s, "\n{}-forms (dim {}):", k.value(), e.dim(k));
        for (d, p) in describe_functionals(e, k).iter().zip(e.basis(k)) {
            let _ = writeln!(s, "  N{k}_{i} = {:<40} phi{k}_{i} = {p}", d.latex, k = k.value(), i = d.index);
        }
        let _ = write!(s, "M{} =\n{}", k.value(), e.node_matrix(k));
    }
    s
}
