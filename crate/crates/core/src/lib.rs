//! Exact Waring ranks and certified sum-of-powers decompositions of monomials.
//!
//! The crate is organised bottom-up:
//! - [`exactnum`]: integer polynomials, cyclotomic polynomials and exact
//!   arithmetic in `Q(ζ_N)`.
//! - [`monomial`]: monomials, canonical forms, closed-form rank formulas and
//!   bounds, perp ideals and monomial ideal intersection.
//! - [`hilbert`]: Hilbert functions of monomial complete intersections.
//! - [`waring`]: the decomposition engine, exact expansion and verification.

pub mod error;
pub mod exactnum;
pub mod hilbert;
pub mod monomial;
pub mod waring;

pub use error::{Error, Result};
pub use exactnum::{
    cyclotomic_polynomial, euler_totient, zeta_power, BigRational, CyclotomicNumber,
    IntegerPolynomial,
};
pub use monomial::{normalize, CanonicalMonomial, Monomial, MonomialIdeal, Partition};
pub use waring::{decompose, verify, Decomposition, DecompositionTerm};
