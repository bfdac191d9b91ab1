//! Exact numeric substrate: integer polynomials and cyclotomic fields.

mod cyclotomic;
mod intpoly;

pub use cyclotomic::{
    cyclotomic_polynomial, euler_totient, parse_rational, rational_to_string, zeta_power,
    CyclotomicNumber, CyclotomicRepr,
};
pub use intpoly::IntegerPolynomial;
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
