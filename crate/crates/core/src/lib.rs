//! Exact invariants of algebraic numbers given by their minimal polynomials
//! over the integers, and density experiments built on them.
//!
//! An algebraic number is identified with its canonical minimal polynomial
//! [`algnum::MinPoly`]; conjugates share every invariant computed here. The
//! main entry points are [`algnum::profile`] (denominator, leading
//! coefficient, numerator, norm), [`density::density_report`] (counts over
//! all polynomials of bounded degree and height) and the [`partition`]
//! module for the even-number partition of the integers `>= 2`.

pub mod algnum;
pub mod arith;
pub mod density;
pub mod error;
pub mod exact_poly;
pub mod factor;
mod json;
pub mod partition;

pub use error::{Error, Result};
pub use exact_poly::{BigInt, IntPoly, Rat};
pub use json::fraction;
