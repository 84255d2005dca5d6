//! Verification suites: each returns the assertion records of one group of
//! desk-scale claims.

pub mod dimension;
pub mod growth;
pub mod semiring;
pub mod thoma;
pub mod tprime;
pub mod verlinde;
