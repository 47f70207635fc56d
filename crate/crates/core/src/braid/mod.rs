//! The positive braid monoid `B⁺` of a finite Coxeter system, Garside normal
//! forms, and good elements `w` whose twisted power `f(w) σ(f(w)) ⋯ σ^{d−1}(f(w))`
//! is a decreasing product of squares `f(w_{I₁})² f(w_{I₂})² ⋯`.

mod garside;
mod good;
mod identities;
mod rewrite;

pub use garside::{
    apply_sigma, braid_equal, embed, left_divide, left_weight, mul_simple, normal_form, power, product, BraidWord,
    GarsideForm,
};
pub use good::{
    good_element_check, good_element_check_capped, good_elements, good_row, longest_braid, sigma_order,
    square_chain, twisted_power, verify_good_elements, GoodRow, GoodnessCertificate, DEFAULT_SEARCH_CAP,
};
pub use identities::{factorisation_partitions, verify_longest_factorisation, verify_longest_factorisation_all, verify_power_identities};
pub use rewrite::{relation_moves, rewriting_class, verify_rewriting_oracle};
