//! Fiber cones of monomial ideals in `K[x, y]`.
//!
//! Ideals are stored by their minimal generators sorted lex-descending, so
//! `u_1` is the pure power of `x` and `u_m` the pure power of `y` once the
//! ideal is normalized.

pub mod depth;
pub mod error;
pub mod modp;
pub mod monomial;
pub mod parse;
pub mod powers;
pub mod presentation;
pub mod report;
pub mod semigroup;
pub mod shape;
pub mod symmetric;

pub use error::{Error, Result};
pub use monomial::{ExpVec, MonomialIdeal};
