use std::fmt::Write;

use crate::element1d::{write_csv, Element1D};
use crate::error::{Error, Result};
use crate::tensor::{basis_samples_2d_csv, tensor_export, tensor_json, CharacteristicVector};

use super::args::{Format, TensorArgs, TensorEmit};

pub fn cmd_tensor(args: &TensorArgs) -> Result<String> {
    let e = Element1D::build(args.m, args.n)?;
    match args.emit {
        TensorEmit::Samples => {
            let bits = args
                .chi
                .split(',')
                .map(|b| b.trim().parse::<u8>().map_err(|_| Error::Parse(format!("bad χ vector `{}`", args.chi))))
                .collect::<Result<Vec<_>>>()?;
            let chi = CharacteristicVector::new(bits)?;
            if let Some(f) = args.output.format.filter(|f| *f != Format::Csv) {
                return Err(Error::Config(format!("2D samples are emitted as csv only, not {f:?}")));
            }
            basis_samples_2d_csv(&e, &chi, args.samples)
        }
        TensorEmit::Table => match args.output.format.unwrap_or(Format::Json) {
            Format::Json => tensor_json(&e, args.n_factors, args.nu, args.matrices).map(|s| s + "\n"),
            Format::Text => {
                let export = tensor_export(&e, args.n_factors, args.nu, false)?;
                let mut s = format!(
                    "N = {}, C^{} factors of degree n = {}\n",
                    export.n_factors, export.m, export.n
                );
                for degree in &export.degrees {
                    let _ = writeln!(s, "\nnu = {} (dim {})", degree.nu, degree.dimension);
                    for block in &degree.blocks {
                        let _ = writeln!(s, "  block {} shape {:?}", block.chi, block.shape);
                        for f in &block.functionals {
                            let _ = writeln!(s, "    {} = {}    [on u: {}]", f.label, f.latex, f.latex_function);
                        }
                    }
                }
                Ok(s)
            }
            Format::Csv => {
                let export = tensor_export(&e, args.n_factors, args.nu, false)?;
                let header: Vec<String> = ["nu", "chi", "label", "latex", "latex_function"].map(String::from).to_vec();
                let mut rows = Vec::new();
                for degree in &export.degrees {
                    for block in &degree.blocks {
                        for f in &block.functionals {
                            rows.push(vec![
                                degree.nu.to_string(),
                                block.chi.label(),
                                f.label.clone(),
                                f.latex.clone(),
                                f.latex_function.clone(),
                            ]);
                        }
                    }
                }
                write_csv(&header, rows.into_iter())
            }
        },
    }
}
