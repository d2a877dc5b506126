//! Command implementations behind the `iwasawa` binary.

pub mod commands;
pub mod document;
pub mod report;

pub use commands::{
    cmd_check, cmd_classify, cmd_decompose, cmd_dress, cmd_selftest, cmd_sym, CheckSet, Method,
};
pub use document::{MatrixDocument, ParseError};
pub use report::{Diagnostics, ExitStatus, Report};
