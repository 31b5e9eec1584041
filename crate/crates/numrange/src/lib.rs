//! IO and the command line for `numrange-core`.

pub mod cli;
pub mod format;
pub mod report;
pub mod reproduce;
pub mod spec_json;
pub mod svg;
