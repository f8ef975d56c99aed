//! Coefficient scalar abstraction.
//!
//! Polynomial and series arithmetic only needs exact ring operations plus a
//! sign, so the core is generic over any integer-like scalar. The crate root
//! instantiates everything with arbitrary-precision integers; the generic
//! layer keeps small fixed-width scalars available for cheap tests.

use std::fmt::{Debug, Display};

use num_traits::{Num, Signed};

/// Exact signed scalar usable as a polynomial coefficient.
///
/// `Num` supplies ring operations together with equality, `Signed` supplies
/// negation and sign queries, and `From<i32>` lets callers write small
/// literal coefficients. Division and remainder must be exact integer-style
/// operations for `Poly::exact_div` to detect non-divisibility; every
/// counting path in this crate therefore instantiates with `BigInt`.
pub trait Coeff: Num + Signed + Clone + Debug + Display + From<i32> {}

impl<T> Coeff for T where T: Num + Signed + Clone + Debug + Display + From<i32> {}
