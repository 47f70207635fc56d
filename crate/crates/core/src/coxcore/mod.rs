//! Finite Coxeter systems: matrices, roots, enumeration and element operations.

mod genset;
mod group;
mod matrix;
mod system;

pub use genset::{GenMap, GenSet};
pub use group::{format_word, parse_word, CoxeterGroup, Elem, Extremum, Side, DEFAULT_ELEMENT_CAP};
pub use matrix::{irreducible_matrix, twist_permutation, Component, CoxeterMatrix, TypeSpec, INFINITY};
pub use system::{CoxeterSystem, DEFAULT_ROOT_CAP};
