//! Command-line tool, file formats, thread-based fan-out and acceptance
//! suites on top of `longpath-core`.

pub mod cli;
pub mod documents;
pub mod fanout;
pub mod format;
pub mod suites;
pub mod witness;
