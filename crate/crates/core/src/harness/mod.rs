//! Verification suites, report serialization, tables and the command line.

pub mod cli;
mod report;
mod suites;
mod tables;

pub use report::{report_emit, report_emit_named, Format, Instance, Kind, Report, Status, Table, MAX_WITNESSES};
pub use suites::{gessel_polynomial, verify, verify_named, Suite, VerifyOptions};
pub use tables::{table, table_named, TableKind};
