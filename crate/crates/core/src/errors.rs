use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Lattice(#[from] crate::lattice::LatticeError),

    #[error("wrong shape: expected {expected}, got {got}")]
    WrongShape { expected: String, got: String },

    #[error("simple roots are not linearly independent")]
    DependentSimples,

    #[error("pairing matrix is not a generalized Cartan matrix: {reason}")]
    NotCartan { reason: String },

    #[error("Cartan matrix is not of finite type")]
    NotFiniteType,

    #[error("root/coroot pair {index} pairs to {found}, expected 2")]
    PairingNotTwo { index: usize, found: BigInt },

    #[error("roots and coroots misaligned: {detail}")]
    Misaligned { detail: String },

    #[error("root set is not reflection stable: {detail}")]
    NotReflectionStable { detail: String },

    #[error("root set is not symmetric under negation")]
    NotSymmetric,

    #[error("zero vector listed as a root")]
    ZeroRoot,

    #[error("duplicate root in datum")]
    DuplicateRoot,

    #[error("order vector is not generic: pairs to zero against root {root:?}")]
    NonGenericVector { root: Vec<BigInt> },

    #[error("matrix is not an involution: its square is not the identity")]
    NotInvolution,

    #[error("involution does not preserve the root set: image of {root:?} is not a root")]
    RootNotPreserved { root: Vec<BigInt> },

    #[error("involution breaks root/coroot alignment at {root:?}")]
    CorootIncompatible { root: Vec<BigInt> },

    #[error("folding certificate failed: {detail}")]
    FoldingFailed { detail: String },

    #[error("folded coroot {coroot:?} lands outside the minus cocharacter lattice")]
    CorootOutsideMinusLattice { coroot: Vec<BigInt> },

    #[error("invalid rank for builder: {detail}")]
    InvalidRank { detail: String },

    #[error("unknown catalog case `{name}`")]
    UnknownCase { name: String },

    #[error("group-case cross-check failed: {detail}")]
    GroupCaseCheckFailed { detail: String },

    #[error("input error: {0}")]
    Input(String),

    #[error("report value exceeds the i64 wire range")]
    ReportRange,

    #[error("internal defect (contradicts a proved statement): {0}")]
    Internal(String),
}
