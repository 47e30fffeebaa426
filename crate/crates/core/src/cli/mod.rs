//! The `fecc` command-line front end.

mod args;
mod element;
mod grid;
mod interp;
mod output;
mod parse;
mod tensor;
mod verify;

pub use args::{Check, Cli, Command, ElementArgs, ElementEmit, Fixture, Format, InterpArgs, TensorArgs, TensorEmit, VerifyArgs};
pub use element::cmd_element;
pub use grid::{expand_grid, DegreeSpec, RangeSpec};
pub use interp::{cmd_interp, InterpResult, InterpSample};
pub use output::{resolve_out_path, write_artifact, OUT_DIR_VAR};
pub use parse::{parse_input, parse_polynomial};
pub use tensor::cmd_tensor;
pub use verify::{cmd_verify, random_probes, SuiteResult, VERIFY_SCHEME};

use crate::error::Result;

/// Runs one command and returns the process exit code: 0 on success, 1 when
/// a verification fails. Errors map to exit code 2 in the binary.
pub fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Element(a) => {
            write_artifact(&cmd_element(a)?, a.output.out.as_deref())?;
            Ok(0)
        }
        Command::Tensor(a) => {
            write_artifact(&cmd_tensor(a)?, a.output.out.as_deref())?;
            Ok(0)
        }
        Command::Verify(a) => {
            let suite = cmd_verify(a)?;
            write_artifact(&suite.render(a.output.format.unwrap_or(Format::Json))?, a.output.out.as_deref())?;
            Ok(suite.exit_code())
        }
        Command::Interp(a) => {
            let result = cmd_interp(a)?;
            write_artifact(&result.render(a.output.format.unwrap_or(Format::Csv))?, a.output.out.as_deref())?;
            eprintln!("max |d I0u - I1 du| = {:e}", result.max_residual());
            if let Some(report) = &result.continuity {
                eprintln!("{report}");
            }
            Ok(if result.passed() { 0 } else { 1 })
        }
    }
}
