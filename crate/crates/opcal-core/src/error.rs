//! Error type shared by every fallible operation in the crate.

use alloc::string::String;

/// Errors surfaced by operad construction, composition and the derived
/// calculus. Internal algebraic identities are asserted, not errored: a
/// failed assertion means the implementation is wrong, and the few places
/// where that is checked at runtime report [`Error::ComplexBroken`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("composition index {index} out of range 1..={arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("elements belong to different operad instances")]
    InstanceMismatch,
    #[error("expected arity {expected}, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("arity must be at least 1")]
    ZeroArity,
    #[error("coefficient vector has length {got}, expected {expected}")]
    BadCoefficientCount { expected: usize, got: usize },
    #[error("arity {arity} exceeds the bound {max} this instance was built for")]
    ArityUnsupported { arity: usize, max: usize },
    #[error("element is not a multiplication: composition defect is nonzero")]
    NotAMultiplication,
    #[error("pair fails the representation identities")]
    InvalidRepresentation,
    #[error("element does not preserve the multiplication")]
    NotPreserving,
    #[error("element fails the {kind} identity")]
    NotOperator { kind: &'static str },
    #[error("kind rota-baxter requires a weight")]
    MissingWeight,
    #[error("malformed algebra description: {0}")]
    MalformedSpec(String),
    #[error("element is not fixed by the twist: alpha-equivariance fails")]
    AlphaNotCompatible,
    #[error("leaf index {index} out of range 0..={max}")]
    LeafOutOfRange { index: usize, max: usize },
    #[error("tree has too few leaves for this operation")]
    TreeUnderflow,
    #[error("tree arity mismatch: expected a tree in Y_{expected}, got Y_{got}")]
    TreeArityMismatch { expected: usize, got: usize },
    #[error("degree {degree} out of range 1..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("cochain complex is broken: consecutive coboundaries do not compose to zero")]
    ComplexBroken,
    #[error("internal identity violated: {0}")]
    TheoremViolated(&'static str),
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
}

pub type Result<T> = core::result::Result<T, Error>;
