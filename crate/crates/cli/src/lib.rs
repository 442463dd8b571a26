//! Command-line front end for the solvtrip engine: group resolution,
//! line-delimited run reports and the verification suite.

pub mod commands;
pub mod report;
pub mod suite;
