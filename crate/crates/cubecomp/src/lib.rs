//! Exact-arithmetic building blocks for composition laws on small
//! prehomogeneous spaces.
//!
//! The crate covers six interlocking pieces, all over arbitrary-precision
//! integers and rationals:
//!
//! * [`arith`] — small dense integer/rational matrices, the Kronecker
//!   symbol, p-adic valuations.
//! * [`bqf`] — positive definite binary quadratic forms: reduction with
//!   transform tracking, Gauss composition, class groups, Heegner points.
//! * [`cube`] — 2×2×2 integer cubes: the three slicings and their quadratic
//!   forms, the `SL2^3` action, the discriminant invariant and its
//!   character, the triple composition law, and bounded orbit search.
//! * [`altpair`] — pairs of quaternary alternating 2-forms: Pfaffians,
//!   fusion from cubes, the `SL2 × SL4` and parabolic actions, relative
//!   invariants and characters, canonical orbit representatives with their
//!   stabilizers.
//! * [`localcount`] — counts of square roots of a discriminant modulo
//!   `4 p^k` (exhaustive scan and CRT + Hensel fast path) and exact Euler
//!   factors of the quadratic character.
//! * [`zeta`] — Hurwitz-style class-number coefficients, their sieve,
//!   partial sums and truncated Dirichlet series with a stated tail bound.
//!
//! Every nontrivial identity has an independent brute-force check in
//! [`oracle`]; the test suites and the `cubecomp` CLI (`verify all`) run
//! those checks at desk scale.

pub mod altpair;
pub mod arith;
pub mod bqf;
pub mod cube;
pub mod localcount;
pub mod oracle;
pub mod zeta;

pub use arith::{IMat2, IMat4, Int, QMat2, QMat4, Rational};
pub use bqf::Bqf;

/// Errors reported by domain-checked operations.
///
/// Operations whose contracts exclude failure return plain values and treat
/// internal inconsistencies as bugs (panics).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Input not congruent to 0 or 1 mod 4 (or with the wrong sign for the
    /// operation): not a discriminant in the accepted domain.
    #[error("{0} is not a valid discriminant here")]
    NotADiscriminant(Int),
    /// A discriminant that is required to be fundamental is not.
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(Int),
    /// A form that must be positive definite is not.
    #[error("form ({0}, {1}, {2}) is not positive definite")]
    NotPositiveDefinite(Int, Int, Int),
    /// A form that must be primitive has content > 1.
    #[error("form ({0}, {1}, {2}) is imprimitive")]
    Imprimitive(Int, Int, Int),
    /// Two forms that must share a discriminant do not.
    #[error("discriminant mismatch: {0} vs {1}")]
    DiscriminantMismatch(Int, Int),
    /// A cube operation that needs a negative invariant got `P >= 0`.
    #[error("cube invariant {0} is not negative")]
    NonNegativeInvariant(Int),
    /// Slice index outside 1..=3.
    #[error("slice index {0} out of range (expected 1, 2 or 3)")]
    SliceIndex(u8),
    /// An argument that must be nonzero was zero.
    #[error("argument must be nonzero")]
    ZeroArgument,
    /// Valuation of zero requested.
    #[error("0 has no finite p-adic valuation")]
    ZeroValuation,
    /// A modulus or base outside the accepted range.
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    /// Group element outside the block shape required by the operation.
    #[error("group element does not have the required block shape")]
    BlockShape,
    /// Antisymmetry violated when reading a 4×4 matrix as an alternating form.
    #[error("matrix is not alternating")]
    NotAlternating,
}

pub type Result<T> = std::result::Result<T, Error>;
