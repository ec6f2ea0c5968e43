//! Command-line front end: the expression language for elements and the
//! subcommands behind the `idinf` binary. Everything the binary prints is
//! produced here so it can be tested without spawning processes.

pub mod checks;
pub mod commands;
pub mod error;
pub mod expr;
pub mod scan;

pub use error::CliError;
pub use expr::{parse_element, parse_expr, parse_isometry, parse_set, Expr, ParseError};
