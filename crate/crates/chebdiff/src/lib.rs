//! Exact arbitrary-order differentiation of Chebyshev polynomials, carried
//! out entirely in the Chebyshev basis with arbitrary-precision rational
//! arithmetic.
//!
//! The s-th derivative of U_n (or T_n) comes straight out of a closed-form
//! coefficient formula as an expansion in U (or T) polynomials; no recursion
//! over lower derivative orders and no floating point anywhere. Each closed
//! form is paired with an independent baseline (term-by-term monomial
//! differentiation followed by basis re-expansion) plus exhaustive
//! verification sweeps over every identity the formulas rest on.
//!
//! Module map:
//! - [`combinatorics`]: exact integers/rationals, binomials, falling
//!   factorials, Iverson brackets.
//! - [`poly`]: sparse monomial polynomials and basis-tagged Chebyshev
//!   expansions, classical monomial forms, power-to-U inversion, Clenshaw
//!   evaluation, JSON codec.
//! - [`deriv`]: the closed-form derivative expansions, the unsimplified
//!   double-sum cross-check, the monomial-route oracle, the collapsed
//!   inner-sum identity, and sparse differentiation operators.
//! - [`verify`]: exhaustive sweeps comparing independent computation paths,
//!   with machine-readable counterexample reports.
//! - [`bench`]: closed form vs. baseline wall-clock comparison that refuses
//!   to report timings unless the two paths agree exactly.
//! - [`cli`]: the `chebdiff` command-line interface.
//!
//! ```
//! use chebdiff::{clenshaw_eval, parse_rational, u_derivative_explicit, ChebBasis, DiffMatrix};
//!
//! // Second derivative of U_6, exactly: 120 U_4 + 120 U_2 + 48 U_0.
//! let d2 = u_derivative_explicit(6, 2);
//! assert_eq!(d2.coeff(4), parse_rational("120").unwrap());
//!
//! // Its exact value at 3/5.
//! let x = parse_rational("3/5").unwrap();
//! let value = clenshaw_eval(&d2, &x);
//! assert_eq!(value.to_string(), "-6096/125");
//!
//! // The same derivative through the dense operator.
//! let op = DiffMatrix::new(ChebBasis::SecondKind, 2, 8);
//! let via_matrix = op.apply(&u_derivative_explicit(6, 0)).unwrap();
//! assert_eq!(via_matrix, d2);
//! ```

pub mod bench;
pub mod cli;
pub mod combinatorics;
pub mod deriv;
pub mod poly;
pub mod verify;

pub use bench::{run_bench, BenchReport, BenchRow};
pub use combinatorics::{binomial, factorial, falling_factorial, iverson, ExactInt, ExactRational};
pub use deriv::{
    derivative_oracle, inner_sum_pair, t_derivative_explicit, u_derivative_explicit,
    u_derivative_triple_sum, DiffMatrix, InnerSumCase,
};
pub use poly::{
    chebyshev_t_monomial, chebyshev_u_monomial, clenshaw_eval, expansion_to_monomial,
    monomial_power_to_u, monomial_to_u, parse_rational, ChebBasis, ChebExpansion, MonomialPoly,
};
pub use verify::{
    verify_inner_sum, verify_inversion, verify_t_explicit, verify_triple_sum, verify_u_explicit,
    Failure, VerificationReport,
};

/// Errors surfaced by the fallible operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument was outside the documented domain of the operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// An operator was applied to an expansion in a different basis.
    #[error("basis mismatch: operator acts on {expected} expansions, got {found}")]
    BasisMismatch {
        expected: poly::ChebBasis,
        found: poly::ChebBasis,
    },
    /// An expansion's degree exceeds the operator's bound.
    #[error("expansion degree {degree} exceeds the operator bound n_max = {n_max}")]
    DegreeOverflow { degree: usize, n_max: usize },
    /// A string was not a valid exact rational.
    #[error("cannot parse {0:?} as an exact rational (want \"p\" or \"p/q\", q != 0)")]
    ParseRational(String),
    /// A coefficient-map key was not a valid degree.
    #[error("cannot parse {0:?} as a degree (want a nonnegative integer)")]
    ParseDegree(String),
    /// A string named neither Chebyshev family.
    #[error("unknown basis {0:?} (want \"T\" or \"U\")")]
    ParseBasis(String),
    /// The two derivative paths disagreed during a bench run.
    #[error("derivative paths disagree at n = {n}, s = {s}; refusing to report timings")]
    BenchMismatch { n: usize, s: usize },
}
