//! Exact-arithmetic and verified-numerics workbench for the even rational
//! polynomial families `Xi_n` and `Lambda_n`.
//!
//! The crate constructs the polynomials exactly over arbitrary-precision
//! rationals, proves their structural properties at desk scale (sign
//! alternation, log-concavity, real-rootedness, interlacing, endpoint
//! bounds), and validates their integral representations of
//! `beta(2n)/pi^(2n-1)` and `zeta(2n+1)/pi^(2n)` by arbitrary-precision
//! quadrature against independent series references.
//!
//! Everything outside [`quad`] and [`bigfloat`] is exact: results are
//! `BigInt`/`BigRational` values that compare bit-identically.

#![no_std]

extern crate alloc;

pub mod bigfloat;
pub mod exact;
pub mod poly;
pub mod quad;
pub mod report;
pub mod roots;
pub mod special;
pub mod suites;

pub use exact::{Int, Rational};
pub use poly::{EvenPolynomial, Family};
