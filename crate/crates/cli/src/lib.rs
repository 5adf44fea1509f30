//! Graph files, JSON documents and the `artin` command line.

pub mod cli;
pub mod format;
pub mod json;

pub use cli::{run, verify_document, Outcome};
pub use format::{parse_graph, serialize_graph, FormatError};
