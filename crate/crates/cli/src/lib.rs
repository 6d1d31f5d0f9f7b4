//! Command-line front end for `qvn-core`.

pub mod commands;
pub mod config;
pub mod error;
pub mod io;

pub use error::{CliError, Result};

/// Colour is used only on a terminal and never when `NO_COLOR` is set.
pub fn use_color() -> bool {
    use std::io::IsTerminal;
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stdout().is_terminal()
}
