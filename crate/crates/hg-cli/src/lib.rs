//! Text format and output rendering for the `hg` command-line tool, exposed
//! as a library so integration tests can drive the parser directly.

pub mod format;
pub mod output;
