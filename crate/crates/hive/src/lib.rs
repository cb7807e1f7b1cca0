//! Command-line front end and JSON formats for the `hive-core` library.
//!
//! - [`json`]: labelings, partitions, tableaux and reports as JSON.
//! - [`suites`]: parallel verification suites behind `hive verify`.
//! - [`cli`]: argument parsing and dispatch.

pub mod cli;
pub mod json;
pub mod suites;
