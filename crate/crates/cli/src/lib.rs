//! Command-line plumbing for `cosys`: exit codes, JSON reports and the
//! verification harness.

pub mod error;
pub mod json;
pub mod report;
