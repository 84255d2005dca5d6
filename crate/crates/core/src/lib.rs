//! Exact computations with truncations of ideals in the group algebra of
//! the infinite symmetric group.
//!
//! The crate works levelwise: an ideal of the infinite group algebra is
//! carried as its intersections with the finite group algebras up to a
//! truncation level, each stored as a row-reduced subspace in canonical
//! permutation coordinates. All arithmetic is exact (arbitrary-precision
//! rationals or a prime field), so every computed equality is a proof at
//! the given truncation.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod group_algebra;
pub mod ideals;
pub mod linalg;
pub mod partitions;
pub mod rep;
pub mod scalar;
pub mod thoma;
pub mod verlinde;
