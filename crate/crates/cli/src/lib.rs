//! Library half of the `alt-xi` command-line tool.

pub mod checks;
pub mod commands;
pub mod output;
pub mod parse;
