//! Twisted conjugacy classes of a finite Coxeter group, their characteristic
//! polynomials `p_{w,σ}(q) = det(q · id − wσ)`, cuspidality, and the explicit
//! cuspidal representatives of the classical types.

mod charpoly;
mod classes;
mod poly;
mod reps;
mod verify;

pub use charpoly::{
    berkowitz, char_poly, char_poly_oracle_agrees, determinant, preserves_root_lengths, twisted_matrix, CharPoly,
};
pub use classes::{
    is_cuspidal, orbit_leaders, proper_stable_subsets, sigma_orbit, twisted_classes, ClassRow, GeneratorClasses,
    TwistedClass,
};
pub use poly::IntPoly;
pub use reps::{b_word, d_factor, d_word, representatives, twisted_a_word, CuspidalFamily, Partition, Representative};
pub use verify::{
    classify_cuspidal, twisted_e6_words, verify_class_invariants, verify_inverse_conjugacy, verify_explicit_classes,
    verify_min_length_reduction, verify_length_bound, verify_support_monotonicity, verify_support_equivalence, CuspidalReport, RepMatch,
};
