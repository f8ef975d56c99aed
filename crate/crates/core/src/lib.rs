//! Exact q-series toolkit for counting partitions and plane partitions.
//!
//! The layers, bottom up:
//!
//! * [`poly`] and [`series`]: dense polynomials and truncated power series,
//!   generic over any exact scalar implementing [`scalar::Coeff`];
//! * [`qseries`]: brackets `1 - x^m` and Gaussian binomial coefficients;
//! * [`identities`]: partition / plane-partition generating series, the
//!   bivariate trace expansions, their numerator polynomial tables, and
//!   verification of each identity by independent reconstruction;
//! * [`oracle`]: brute-force enumeration used to cross-check everything;
//! * [`asymptotics`]: a closed-form estimate of pp(n) with log-domain
//!   comparison against exact counts.
//!
//! All counting paths use arbitrary-precision integers; the crate root
//! fixes the concrete instantiations below.

pub mod asymptotics;
mod error;
pub mod identities;
pub mod oracle;
pub mod poly;
pub mod qseries;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use scalar::Coeff;

pub use asymptotics::WrightEstimate;
pub use identities::{GnTable, HnTable, IdentityKind, Mismatch, TraceTable, VerifyReport};
pub use oracle::PlanePartition;
pub use qseries::GaussianBinomial;

/// Arbitrary-precision signed integer backing every exact computation.
pub type Int = num_bigint::BigInt;

/// Integer-coefficient polynomial.
pub type IntPoly = poly::Poly<Int>;

/// Integer-coefficient power series truncated in `x`.
pub type XSeries = series::XSeries<Int>;

/// Integer-coefficient bivariate series in `a` over `x`.
pub type ASeries = series::ASeries<Int>;
