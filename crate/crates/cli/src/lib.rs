//! Command-line companion to the exact core: file formats, verification
//! report machinery, floating-point growth summaries, and the check suites
//! reproducing the desk-scale claims.

pub mod checks;
pub mod estimates;
pub mod formats;
pub mod report;
