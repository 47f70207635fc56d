//! Iwahori–Hecke algebras `H(W, L)` over `ℤ[v, v⁻¹]` with weights `L`, the
//! isomorphism `D : H_J → H_{J'}` induced by `δ`, and trace-like functionals
//! `ζ` with `ζ(h'h) = ζ(h D(h'))`.

mod algebra;
mod laurent;
mod linalg;
mod zeta;

pub use algebra::{HeckeAlgebra, HeckeElement, WeightFunction};
pub use laurent::Laurent;
pub use linalg::{nullspace, QPoly, RatFunc, SparseRow};
pub use zeta::{
    constraint_rows, full_residual_vanishes, solve_zeta_space, verify_zeta_constancy, zeta_report, OrbitConstancy,
    ZetaFunctional, ZetaReport,
};
