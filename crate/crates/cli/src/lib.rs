//! Command-line front end for `sl2dyn`: the input grammar, seeded sample
//! generators, verification suites and their reports.

pub mod commands;
pub mod gen;
pub mod parse;
pub mod report;
pub mod suites;
