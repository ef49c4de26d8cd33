use thiserror::Error;

/// Errors produced by the module toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot factor zero")]
    FactorZero,
    #[error("ideal generator {generator} does not divide ring modulus {modulus}")]
    InvalidIdeal { generator: u64, modulus: u64 },
    #[error("the whole ring is not a proper ideal")]
    ImproperIdeal,
    #[error("operation needs a finite ring Z/nZ, got Z")]
    InfiniteRing,
    #[error("ring mismatch: Z/{left}Z vs Z/{right}Z")]
    RingMismatch { left: u64, right: u64 },
    #[error("invalid factor {0}: cyclic factors must be at least 2")]
    InvalidFactor(u64),
    #[error("module exponent {exponent} does not divide ring modulus {modulus}")]
    ExponentMismatch { exponent: u64, modulus: u64 },
    #[error("element {0:?} does not belong to the module")]
    ForeignElement(Vec<u64>),
    #[error("submodules live in different modules")]
    ParentMismatch,
    #[error("submodule must be proper")]
    ImproperSubmodule,
    #[error("submodule must be non-zero")]
    ZeroSubmodule,
    #[error("coproduct power must be at least 1")]
    ZeroPower,
    #[error("ill-defined homomorphism: {0}")]
    IllDefinedHom(String),
    #[error("{what} bound exceeded: limit {limit}, reached {reached}")]
    BoundExceeded {
        what: &'static str,
        limit: usize,
        reached: usize,
    },
    #[error("invalid ring split {n1} x {n2} of Z/{modulus}Z")]
    InvalidSplit { modulus: u64, n1: u64, n2: u64 },
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("unknown class id `{0}`")]
    UnknownClass(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid corpus: {0}")]
    InvalidCorpus(String),
    #[error("classification invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
