//! Pieces of `W₁ × W₂` attached to a pair of admissible triples.
//!
//! For `c = (J₁, J₂, δ)` and `c' = (J'₁, J'₂, δ')` the group `W_{c'} × W_c` acts on
//! `W₁ × W₂` by `(x, δ'(x)) (w₁, w₂) (y, δ(y))`. The projection
//! [`PairSpace::project`] sends every pair to an index in `ᴶ'¹W₁ × W₂^{J₂}`, and its
//! fibres are unions of double cosets.

mod decompose;
mod distinguished;
mod sequence;
mod space;
mod triple;
mod verify;

pub use decompose::{
    orbit_decomposition, orbit_piece_i, Decomposition, DecompositionReport, DoubleCoset, OrbitPiece, OrbitReport,
    Piece, PieceReport, TriplesJson,
};
pub use distinguished::ClassBijection;
pub use sequence::{BedardState, Projection, Recursion};
pub use space::PairSpace;
pub use triple::{AdmissibleTriple, TripleJson};
pub use verify::{all_triple_pairs, verify_orbit_pieces};
