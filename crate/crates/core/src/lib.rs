//! Finite Coxeter groups and their twisted conjugacy classes.
//!
//! The crate enumerates finite Coxeter groups exactly and provides:
//!
//! * [`coxcore`]: Coxeter matrices, root systems, element arithmetic, Bruhat order
//!   and parabolic decompositions;
//! * [`pieces`]: the partition of `W₁ × W₂` into pieces indexed by pairs of
//!   minimal coset representatives, and the decomposition of double cosets;
//! * [`minlen`]: length-reducing conjugation moves and minimal-length elements;
//! * [`cuspidal`]: twisted conjugacy classes, characteristic polynomials and
//!   explicit cuspidal representatives;
//! * [`braid`]: Garside normal forms in the positive braid monoid and good elements;
//! * [`hecke`]: Iwahori–Hecke algebras and twisted trace functionals.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod hecke;
pub mod scalar;

pub mod braid;
pub mod coxcore;
pub mod cuspidal;
pub mod minlen;
pub mod pieces;
pub mod verdict;

pub use coxcore::{CoxeterGroup, CoxeterSystem, Elem, GenMap, GenSet};
pub use error::{Error, Result};
