//! Finite weak braces and the set-theoretic Yang-Baxter solutions they
//! induce.
//!
//! A weak brace is a set with two inverse-semigroup operations `+` and `o`
//! satisfying `a o (b + c) = a o b - a + a o c` and `a o a^- = -a + a`.
//! Every weak brace yields a solution `r(a, b) = (lambda_a(b), rho_b(a))` of
//! the set-theoretic Yang-Baxter equation, and that solution is completely
//! regular in the transformation semigroup on `S x S`.
//!
//! The crate covers, for finite carriers given as Cayley tables:
//! axiom verification, the lambda/rho machinery and its identity toolbox,
//! braid-relation checking, solution classification and equivalence search,
//! product and factorization constructions, and small-order enumeration up
//! to isomorphism. Everything is exact and exhaustively checked; there are
//! no numeric tolerances anywhere.

pub mod brace;
pub mod construct;
pub mod doc;
pub mod enumerate;
pub mod error;
pub mod factor;
pub mod inverse;
pub mod perm;
pub mod table;
pub mod ybe;

/// Elements of every finite carrier are canonical indices `0..n-1`.
pub type Elem = usize;

pub use brace::{make_weak_brace, StructureClass, WeakBrace};
pub use error::{Error, Result};
pub use inverse::{as_inverse_semigroup, InverseSemigroupView};
pub use table::CayleyTable;
pub use ybe::PairMap;
