//! Graph documents, budgets, verification suites and the command line for
//! the `girth5-core` library.

pub mod budget;
pub mod cli;
pub mod doc;
pub mod parallel;
pub mod random;
pub mod report;
pub mod suites;
