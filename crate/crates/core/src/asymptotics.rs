//! Asymptotic size of the plane partition counting function.
//!
//! The estimate implemented here is
//!
//! ```text
//! pp(n) ~ zeta(3)^(7/36) / sqrt(12 pi)
//!         * (n/2)^(-25/36)
//!         * exp(3 zeta(3)^(1/3) (n/2)^(2/3) + zeta'(-1))
//! ```
//!
//! The power of `(n/2)` is -25/36; the sign is pinned down empirically by
//! the ratio test in the acceptance suite (with +25/36 the ratio to the
//! exact count degrades as n grows instead of improving). All floating
//! work happens in log space so the comparison against exact big-integer
//! counts stays usable far beyond the range where `exp` would overflow.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::identities::macmahon_series;
use crate::Int;

/// Apery's constant, zeta(3).
pub const ZETA_3: f64 = 1.2020569031595942854;

/// Derivative of the Riemann zeta function at -1.
pub const ZETA_PRIME_NEG_ONE: f64 = -0.16542114370045092921;

/// An asymptotic estimate of pp(n), optionally paired with the exact count.
#[derive(Debug, Clone, PartialEq)]
pub struct WrightEstimate {
    pub n: usize,
    /// The closed-form estimate evaluated as a double.
    pub estimate: f64,
    /// Exact pp(n), when requested.
    pub exact: Option<Int>,
    /// exact / estimate, when the exact count is present.
    pub ratio: Option<f64>,
}

/// Natural log of the estimate. Panics for `n = 0`; the estimate is only
/// defined for positive n.
pub fn log_estimate(n: usize) -> f64 {
    assert!(n >= 1, "asymptotic estimate requires n >= 1");
    let half = n as f64 / 2.0;
    (7.0 / 36.0) * ZETA_3.ln() - 0.5 * (12.0 * std::f64::consts::PI).ln()
        - (25.0 / 36.0) * half.ln()
        + 3.0 * ZETA_3.cbrt() * half.powf(2.0 / 3.0)
        + ZETA_PRIME_NEG_ONE
}

/// The estimate alone. Errors once the value no longer fits in an `f64`
/// (around n = 6600); use [`log_estimate`] directly past that point.
pub fn wright_pp(n: usize) -> Result<WrightEstimate> {
    let log = log_estimate(n);
    if log >= f64::MAX.ln() {
        return Err(Error::EstimateOutOfRange(n));
    }
    Ok(WrightEstimate {
        n,
        estimate: log.exp(),
        exact: None,
        ratio: None,
    })
}

/// The estimate together with the exact count from [`macmahon_series`] and
/// their ratio, computed as `exp(ln(exact) - ln(estimate))`.
pub fn wright_pp_with_exact(n: usize) -> Result<WrightEstimate> {
    let mut est = wright_pp(n)?;
    let exact = macmahon_series(n).coeff(n);
    est.ratio = Some((ln_int(&exact) - log_estimate(n)).exp());
    est.exact = Some(exact);
    Ok(est)
}

/// Natural log of a positive big integer, accurate to double precision.
/// Panics on zero or negative input.
pub fn ln_int(v: &Int) -> f64 {
    assert!(v.sign() == num_bigint::Sign::Plus, "ln_int needs a positive value");
    let bits = v.bits();
    if bits <= 64 {
        return v.to_f64().expect("fits in f64").ln();
    }
    // Top 64 bits carry all the precision an f64 can hold; the rest is a
    // power-of-two rescale.
    let shifted = (v >> (bits - 64) as usize).to_f64().expect("64-bit mantissa");
    shifted.ln() + (bits - 64) as f64 * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_estimate_increases_over_the_tested_range() {
        let mut prev = f64::NEG_INFINITY;
        for n in 1..=500 {
            let l = log_estimate(n);
            assert!(l.is_finite());
            assert!(l > prev, "estimate dipped at n = {n}");
            prev = l;
        }
    }

    #[test]
    fn estimate_is_positive_and_finite() {
        let e = wright_pp(100).unwrap();
        assert!(e.estimate.is_finite() && e.estimate > 0.0);
        assert_eq!(e.n, 100);
        assert!(e.exact.is_none() && e.ratio.is_none());
    }

    #[test]
    fn huge_n_is_a_range_error() {
        assert_eq!(
            wright_pp(10_000),
            Err(Error::EstimateOutOfRange(10_000))
        );
    }

    #[test]
    #[should_panic(expected = "n >= 1")]
    fn zero_is_rejected() {
        let _ = log_estimate(0);
    }

    #[test]
    fn ln_int_matches_known_logs() {
        let v = Int::from(10).pow(50);
        let expect = 50.0 * 10f64.ln();
        assert!((ln_int(&v) - expect).abs() < 1e-9);
        assert!((ln_int(&Int::from(1)) - 0.0).abs() < 1e-12);
        assert!((ln_int(&Int::from(2)).exp() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn ratio_at_moderate_n_is_near_one() {
        let e = wright_pp_with_exact(100).unwrap();
        let ratio = e.ratio.unwrap();
        assert!(ratio > 0.5 && ratio < 1.5, "ratio = {ratio}");
        assert_eq!(e.exact.unwrap(), macmahon_series(100).coeff(100));
    }
}
