use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("group is infinite or too large: {0}")]
    InfiniteOrTooLarge(String),
    #[error("unsupported bond m = {0} (only 2, 3, 4, 6 and infinity are allowed)")]
    UnsupportedBond(u32),
    #[error("objects belong to different Coxeter systems")]
    SystemMismatch,
    #[error("parabolic subgroup on {0} is infinite")]
    InfiniteParabolic(String),
    #[error("sequence is not in minimal coset form: {0}")]
    NotInMinimalCosetForm(String),
    #[error("recursion did not stabilise after {0} steps")]
    NonStabilizing(usize),
    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
    #[error("twisting map leaves the parabolic subgroup: {0}")]
    SigmaNotInternal(String),
    #[error("coset is not distinguished")]
    NotDistinguished,
    #[error("invalid generator map: {0}")]
    BadIsomorphism(String),
    #[error("elements have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("element is not a twisted involution")]
    NotTwistedInvolution,
    #[error("characteristic polynomial has an irrational coefficient: {0}")]
    IrrationalLeak(String),
    #[error("unsupported type: {0}")]
    UnsupportedType(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("automorphism must have order at most two")]
    SigmaOrderNotTwo,
    #[error("rank {0} is too large for the subset-chain search")]
    RankTooLargeForSearch(usize),
    #[error("support outside the parabolic subgroup")]
    SupportOutsideParabolic,
    #[error("weight function incompatible: {0}")]
    WeightIncompatible(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
