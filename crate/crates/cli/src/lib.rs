//! File format and verbs for the `cobkit` command-line tool.

pub mod commands;
pub mod format;

pub use format::{parse_str, read, serialize, CobFile, ParseError};
