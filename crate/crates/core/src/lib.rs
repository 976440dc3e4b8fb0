//! Exact C-fractions of formal power series and their Hankel transforms.
//!
//! The crate converts truncated power series to and from C-fractions
//! `1/(1 + a_1 x^{q_1}/(1 + a_2 x^{q_2}/(1 + …)))`, computes Hankel
//! determinants by fraction-free elimination, and evaluates the closed-form
//! product formulas that predict those determinants from `(a_k, q_k)`.
//! Everything runs over exact rationals or polynomials in one parameter γ.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod catalog;
pub mod cfrac;
pub mod closedform;
pub mod exact;
pub mod hankel;

pub use cfrac::{CFraction, Status};
pub use closedform::Convention;
pub use exact::{ParamPoly, Rational, Scalar, Series};
