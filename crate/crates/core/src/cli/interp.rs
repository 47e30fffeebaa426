use serde::Serialize;

use crate::element1d::{format_float, interpolate_cells, two_cell_continuity_demo, uniform_grid, write_csv, Element1D};
use crate::error::Result;
use crate::form_degree::FormDegree;
use crate::report::VerificationReport;
use crate::tolerances::COMMUTATION_1D;

use super::args::{Format, InterpArgs};
use super::output::to_json;
use super::parse::parse_input;

#[derive(Clone, Debug, Serialize)]
pub struct InterpSample {
    pub x: f64,
    pub cell: usize,
    pub u: f64,
    #[serde(rename = "I0u")]
    pub i0u: f64,
    #[serde(rename = "dI0u")]
    pub d_i0u: f64,
    #[serde(rename = "I1du")]
    pub i1_du: f64,
    pub residual: f64,
}

pub struct InterpResult {
    pub samples: Vec<InterpSample>,
    pub continuity: Option<VerificationReport>,
}

impl InterpResult {
    pub fn max_residual(&self) -> f64 {
        self.samples.iter().fold(0.0, |acc, s| acc.max(s.residual.abs()))
    }

    pub fn passed(&self) -> bool {
        self.max_residual() <= COMMUTATION_1D && self.continuity.as_ref().is_none_or(|r| r.passed)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => to_json(&self.samples),
            Format::Csv | Format::Text => {
                let two_cells = self.continuity.is_some();
                let mut header = vec!["x"];
                if two_cells {
                    header.push("cell");
                }
                header.extend(["u", "I0u", "dI0u", "I1du", "residual"]);
                let header: Vec<String> = header.into_iter().map(String::from).collect();
                let rows = self.samples.iter().map(|s| {
                    let mut row = vec![format_float(s.x)];
                    if two_cells {
                        row.push(s.cell.to_string());
                    }
                    row.extend([s.u, s.i0u, s.d_i0u, s.i1_du, s.residual].map(format_float));
                    row
                });
                write_csv(&header, rows)
            }
        }
    }
}

/// Samples `u`, `I₀u`, `d I₀u`, `I₁ du` and the commutation residual on one
/// cell, or on `[0, 1] ∪ [1, 2]` with a junction check at `x = 1`.
pub fn cmd_interp(args: &InterpArgs) -> Result<InterpResult> {
    let e = Element1D::build(args.m, args.n)?;
    let u = parse_input(&args.input)?;
    let q = args.quadrature_order.unwrap_or_else(|| e.default_quadrature_order());
    let grid = uniform_grid(args.samples);
    let mut samples = Vec::new();
    let cells: Vec<(f64, f64)> = (0..args.cells as usize).map(|c| (c as f64, 1.0)).collect();
    let interpolants = interpolate_cells(&e, &u, &cells)?;
    for (c, (cell, &(origin, width))) in interpolants.iter().zip(&cells).enumerate() {
        let local_du = u.pullback(origin, width).derivative_function();
        let i1 = e.interpolate_smooth(FormDegree::One, &local_du, q)?;
        for &xi in &grid {
            if c > 0 && xi == 0.0 {
                continue;
            }
            let x = origin + width * xi;
            let d_i0u = cell.derivative_at(1, xi);
            let i1_du = i1.evaluate(xi) / width;
            samples.push(InterpSample {
                x,
                cell: c + 1,
                u: u.value(x),
                i0u: cell.derivative_at(0, xi),
                d_i0u,
                i1_du,
                residual: d_i0u - i1_du,
            });
        }
    }
    let continuity = if args.cells == 2 {
        Some(two_cell_continuity_demo(&e, &u)?)
    } else {
        None
    };
    Ok(InterpResult { samples, continuity })
}
