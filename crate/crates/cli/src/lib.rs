//! Command-line front end for `fermatlab-core`: claim audit, triple checks,
//! sweeps and their file formats.

pub mod audit;
pub mod bounds;
pub mod check;
pub mod emit;
pub mod error;
pub mod format;
pub mod parallel;
pub mod registry;
pub mod report;
