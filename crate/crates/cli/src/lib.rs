//! Command-line surface for circulant network capacity experiments: row and
//! spec-file parsing, report rendering and the `circmem` subcommands.

pub mod app;
pub mod emit;
pub mod error;
pub mod parse;

pub use emit::{emit_report, figure_csv, Format, Report, CAPACITY_CSV_HEADER};
pub use error::CliError;
pub use parse::{parse_first_row, render_first_row, MatrixSpecFile};
