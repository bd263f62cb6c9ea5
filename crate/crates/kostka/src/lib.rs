//! File formats, JSON encodings and the command line for `kostka-core`.

pub mod cli;
pub mod format;
pub mod json;
pub mod sweep;
