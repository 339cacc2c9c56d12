//! Error types shared across the crate.

use thiserror::Error;

use crate::Elem;

/// Everything that can go wrong while validating or constructing a structure.
///
/// Counterexamples always report the lexicographically first witness in the
/// scan order of the operation that produced them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    Malformed(String),

    #[error("operation is not associative: ({a} {b}) {c} != {a} ({b} {c})")]
    NotAssociative { a: Elem, b: Elem, c: Elem },

    #[error("element {elem} has no inverse")]
    NoInverse { elem: Elem },

    #[error("element {elem} has more than one inverse ({first} and {second})")]
    NonUniqueInverse { elem: Elem, first: Elem, second: Elem },

    #[error("additive table is not an inverse semigroup: {0}")]
    AddNotInverse(Box<Error>),

    #[error("multiplicative table is not an inverse semigroup: {0}")]
    MulNotInverse(Box<Error>),

    #[error("distributivity a(b+c) = ab - a + ac fails at ({a}, {b}, {c})")]
    DistributivityFails { a: Elem, b: Elem, c: Elem },

    #[error("inverse link a a^- = -a + a fails at {a}")]
    InverseLinkFails { a: Elem },

    #[error("orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("order {order} exceeds the configured cap {cap}")]
    OrderTooLarge { order: usize, cap: usize },

    #[error("carrier of size {order} exceeds the configured cap {cap}")]
    CarrierTooLarge { order: usize, cap: usize },

    #[error("semigroup is not Clifford: idempotent {idempotent} does not commute with {witness}")]
    NotClifford { idempotent: Elem, witness: Elem },

    #[error("map {index} of the action family is not an automorphism (fails at ({a}, {b}))")]
    ActionNotAutomorphism { index: usize, a: Elem, b: Elem },

    #[error("map {index} of the action family is not a bijection")]
    ActionNotBijective { index: usize },

    #[error("unsupported construction kind: {0}")]
    UnsupportedKind(String),

    #[error("product kind {kind} precondition failed: {detail}")]
    PreconditionFailed { kind: u8, detail: String },

    #[error("(anti)homomorphism law fails at pair ({a}, {b})")]
    HomLawFails { a: Elem, b: Elem },

    #[error("matched-system compatibility condition {side} fails at (a={a}, u={u}, x={x})")]
    CompatibilityFails { side: u8, a: Elem, u: Elem, x: Elem },

    #[error("matched-system idempotent condition fails at (a={a}, u={u})")]
    IdempotentConditionFails { a: Elem, u: Elem },

    #[error("double-system condition (u-u)^a = u-u fails at (a={a}, u={u})")]
    DoubleFixesPartialUnits { a: Elem, u: Elem },

    #[error("double-system compatibility condition fails at (a={a}, b={b}, u={u}, v={v}, w={w})")]
    DoubleCompatibilityFails { a: Elem, b: Elem, u: Elem, v: Elem, w: Elem },

    #[error("computed op-solution disagrees with the opposite-brace solution at ({a}, {b})")]
    MismatchWithOpposite { a: Elem, b: Elem },

    #[error("solution formula disagrees with the constructed brace at ({x}, {y})")]
    SolutionFormulaMismatch { x: Elem, y: Elem },

    #[error("factor is not a Clifford semigroup as a standalone table")]
    FactorNotClifford,

    #[error("swapped factor pair is not an exact factorization: {detail}")]
    SwappedNotExact { detail: String },

    #[error("no exact factorization at index {index}; only {count} available")]
    NoSuchFactorization { index: usize, count: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
