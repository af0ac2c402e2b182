//! Exact face numbers, homology and Cohen–Macaulay tests for finite
//! simplicial complexes, with builders for the standard extremal spheres
//! and a harness that checks face-number inequalities on concrete inputs.

pub mod balanced;
pub mod cm;
pub mod complex;
pub mod constructions;
pub mod error;
pub mod face;
pub mod homology;
pub mod io;
pub mod iso;
pub mod linalg;
pub mod numbers;
pub mod polynomial;
pub mod report;
pub mod verify;

use num_bigint::BigInt;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use face::{Face, Vertex, MAX_VERTICES};
pub use homology::{Coefficients, HomologyProfile};
pub use numbers::{FVector, HProfile};

/// Polynomials with machine-integer coefficients (f- and h-polynomials).
pub type IntPolynomial = polynomial::Polynomial<i64>;
/// Polynomials with arbitrary-precision coefficients.
pub type BigPolynomial = polynomial::Polynomial<BigInt>;
/// Fraction-free elimination over ℤ; ranks are ranks over ℚ.
pub type RationalElimination = linalg::FractionFree<BigInt>;
/// Invariant factors over arbitrary-precision integers.
pub type IntegerSmithForm = linalg::SmithForm<BigInt>;
