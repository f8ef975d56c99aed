//! Generating-function identities for partitions and plane partitions.
//!
//! The univariate side produces the classic partition and plane-partition
//! counting series. The bivariate side expands four products in `a` and `x`
//! and checks each against an independent reconstruction from closed-form
//! numerators:
//!
//! * `prod (1 - a x^m)^{-1}`  vs  `1 + sum_n x^n a^n / f_n`
//! * `prod (1 + a x^m)`       vs  `1 + sum_n x^(n(n+1)/2) a^n / f_n`
//! * `prod (1 - a x^m)^{-m}`  vs  `1 + sum_n g_n x^n a^n / f_n^2`
//! * `prod (1 + a x^m)^{m}`   vs  `1 + sum_n h_n x^n a^n / f_n^2`
//!
//! where `f_n = bracket_factorial(n)`. The `g_n` and `h_n` numerator
//! polynomials come from q-binomial recursions and can also be recovered
//! from the raw expansions by clearing denominators; both routes are kept
//! available so they can be played against each other.

use std::fmt;
use std::ops::Index;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qseries::{bracket, bracket_factorial, bracket_range, gauss_binom};
use crate::{ASeries, Int, IntPoly, XSeries};

// ---------------------------------------------------------------------------
// Univariate counting series
// ---------------------------------------------------------------------------

/// Partition generating series `1 / prod_{m=1..order} (1 - x^m)` modulo
/// `x^(order+1)`. Coefficient of `x^n` is p(n) for every `n <= order`.
pub fn euler_partition_series(order: usize) -> XSeries {
    let mut prod = XSeries::one(order);
    for m in 1..=order {
        prod = &prod * &XSeries::new(bracket(m), order);
    }
    prod.inverse().expect("constant term is one")
}

/// Plane partition generating series `1 / prod_{m=1..order} (1 - x^m)^m`
/// modulo `x^(order+1)`. Coefficient of `x^n` is pp(n) for `n <= order`.
pub fn macmahon_series(order: usize) -> XSeries {
    let mut prod = XSeries::one(order);
    for m in 1..=order {
        prod = &prod * &bracket_power_series(m, m, order);
    }
    prod.inverse().expect("constant term is one")
}

/// `(1 - x^m)^w` truncated, expanded by the binomial theorem with an
/// incrementally updated coefficient (exact big-integer division).
fn bracket_power_series(m: usize, w: usize, order: usize) -> XSeries {
    let mut c = Int::from(1);
    let mut s = XSeries::zero(order);
    let mut j = 0usize;
    while j <= w && m * j <= order {
        let signed = if j % 2 == 0 { c.clone() } else { -c.clone() };
        s = &s + &XSeries::monomial(signed, m * j, order);
        c = c * Int::from(w - j) / Int::from(j + 1);
        j += 1;
    }
    s
}

// ---------------------------------------------------------------------------
// Bivariate product expansions
// ---------------------------------------------------------------------------

/// `prod_{m=1..x_order} (1 - a x^m)^{-m}` as an [`ASeries`].
///
/// The coefficient of `a^j x^i` counts plane partitions of weight `i` with
/// trace `j`; the `a^1` slot is `sum_m m x^m`.
pub fn stanley_lhs(a_order: usize, x_order: usize) -> ASeries {
    let mut acc = ASeries::one(a_order, x_order);
    for m in 1..=x_order {
        acc = &acc * &factor_inv_power(m, m, a_order, x_order);
    }
    acc
}

/// `prod_{m=1..x_order} (1 + a x^m)^{m}` as an [`ASeries`].
pub fn plus_powers_lhs(a_order: usize, x_order: usize) -> ASeries {
    let mut acc = ASeries::one(a_order, x_order);
    for m in 1..=x_order {
        acc = &acc * &factor_plus_power(m, m, a_order, x_order);
    }
    acc
}

/// `(1 - a x^m)^{-w}`: the `a^j` slot is the single monomial
/// `C(w + j - 1, j) x^(m j)`.
fn factor_inv_power(m: usize, w: usize, a_order: usize, x_order: usize) -> ASeries {
    let mut parts = Vec::with_capacity(a_order + 1);
    let mut c = Int::from(1);
    for j in 0..=a_order {
        parts.push(XSeries::monomial(c.clone(), m * j, x_order));
        c = c * Int::from(w + j) / Int::from(j + 1);
    }
    ASeries::new(parts)
}

/// `(1 + a x^m)^{w}`: the `a^j` slot is `C(w, j) x^(m j)`, zero past `j = w`.
fn factor_plus_power(m: usize, w: usize, a_order: usize, x_order: usize) -> ASeries {
    let mut parts = Vec::with_capacity(a_order + 1);
    let mut c = Int::from(1);
    for j in 0..=a_order {
        parts.push(XSeries::monomial(c.clone(), m * j, x_order));
        c = if j < w {
            c * Int::from(w - j) / Int::from(j + 1)
        } else {
            Int::zero()
        };
    }
    ASeries::new(parts)
}

fn euler_inverse_lhs(a_order: usize, x_order: usize) -> ASeries {
    let mut acc = ASeries::one(a_order, x_order);
    for m in 1..=x_order {
        let factor = ASeries::from_parts(
            vec![
                XSeries::one(x_order),
                XSeries::monomial(Int::from(-1), m, x_order),
            ],
            a_order,
            x_order,
        )
        .inverse()
        .expect("constant term is one");
        acc = &acc * &factor;
    }
    acc
}

fn euler_plus_lhs(a_order: usize, x_order: usize) -> ASeries {
    let mut acc = ASeries::one(a_order, x_order);
    for m in 1..=x_order {
        let factor = ASeries::from_parts(
            vec![
                XSeries::one(x_order),
                XSeries::monomial(Int::from(1), m, x_order),
            ],
            a_order,
            x_order,
        );
        acc = &acc * &factor;
    }
    acc
}

// ---------------------------------------------------------------------------
// Numerator polynomial tables
// ---------------------------------------------------------------------------

/// Numerators `g_0 ..= g_nmax` for the trace expansion: the `a^n`
/// coefficient of `prod (1 - a x^m)^{-m}` equals
/// `g_n(x) x^n / bracket_factorial(n)^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GnTable {
    polys: Vec<IntPoly>,
}

/// Numerators `h_0 ..= h_nmax` for the signed-exponent analogue: the `a^n`
/// coefficient of `prod (1 + a x^m)^{m}` equals
/// `h_n(x) x^n / bracket_factorial(n)^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnTable {
    polys: Vec<IntPoly>,
}

macro_rules! table_impl {
    ($t:ty) => {
        impl $t {
            /// Largest index stored.
            pub fn max_n(&self) -> usize {
                self.polys.len() - 1
            }

            pub fn get(&self, n: usize) -> &IntPoly {
                &self.polys[n]
            }

            pub fn entries(&self) -> &[IntPoly] {
                &self.polys
            }
        }

        impl Index<usize> for $t {
            type Output = IntPoly;
            fn index(&self, n: usize) -> &IntPoly {
                &self.polys[n]
            }
        }
    };
}

table_impl!(GnTable);
table_impl!(HnTable);

/// Builds `g_0 ..= g_nmax` bottom-up by the recursion
///
/// `g_n = sum_{k=1..n} [n choose k]_x * (1-x^(n-k+1))...(1-x^(n-1))
///        * g_(n-k) * x^(n-k)`,  `g_0 = 1`.
pub fn g_polynomials(n_max: usize) -> GnTable {
    GnTable {
        polys: recursion_table(n_max, |n, k| n - k),
    }
}

/// Builds `h_0 ..= h_nmax` bottom-up by the recursion
///
/// `h_n = sum_{k=1..n} [n choose k]_x * (1-x^(n-k+1))...(1-x^(n-1))
///        * h_(n-k) * x^(n + k(k-3)/2)`,  `h_0 = 1`.
pub fn h_polynomials(n_max: usize) -> HnTable {
    HnTable {
        polys: recursion_table(n_max, |n, k| {
            // n + k(k-3)/2 >= k(k-1)/2 >= 0, and k(k-3) is always even.
            let shift = n as i64 + (k as i64) * (k as i64 - 3) / 2;
            shift as usize
        }),
    }
}

fn recursion_table(n_max: usize, shift: impl Fn(usize, usize) -> usize) -> Vec<IntPoly> {
    let mut polys = vec![IntPoly::one()];
    for n in 1..=n_max {
        let mut acc = IntPoly::zero();
        for k in 1..=n {
            let term = gauss_binom::<Int>(n, k).into_poly()
                * bracket_range::<Int>(n - k + 1, n - 1)
                * polys[n - k].shifted(shift(n, k));
            acc = acc + term;
        }
        polys.push(acc);
    }
    polys
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

/// Which identity a report refers to; `name` matches the CLI spelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityKind {
    Stanley,
    New,
    EulerInverse,
    EulerPlus,
}

impl IdentityKind {
    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Stanley => "stanley",
            IdentityKind::New => "new",
            IdentityKind::EulerInverse => "euler2",
            IdentityKind::EulerPlus => "eulerplus",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First coefficient at which two expansions disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub a_degree: usize,
    pub x_degree: usize,
    pub lhs: Int,
    pub rhs: Int,
}

/// Outcome of comparing a product expansion against its reconstruction.
/// A mismatch is a report outcome, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub identity: IdentityKind,
    pub a_order: usize,
    pub x_order: usize,
    pub passed: bool,
    pub mismatch: Option<Mismatch>,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(
                f,
                "{}: PASS (a-order {}, x-order {})",
                self.identity, self.a_order, self.x_order
            )
        } else {
            let m = self.mismatch.as_ref().expect("failed report has a mismatch");
            write!(
                f,
                "{}: FAIL at a^{} x^{}: lhs {} vs rhs {} (a-order {}, x-order {})",
                self.identity, m.a_degree, m.x_degree, m.lhs, m.rhs, self.a_order, self.x_order
            )
        }
    }
}

/// Coefficient-by-coefficient comparison, scanning a-degree ascending and
/// x-degree ascending within it, recording the first disagreement.
pub fn compare(identity: IdentityKind, lhs: &ASeries, rhs: &ASeries) -> VerifyReport {
    assert_eq!(lhs.a_order(), rhs.a_order(), "a-order mismatch in compare");
    assert_eq!(lhs.x_order(), rhs.x_order(), "x-order mismatch in compare");
    let (a_order, x_order) = (lhs.a_order(), lhs.x_order());
    for j in 0..=a_order {
        for i in 0..=x_order {
            let l = lhs.coeff(j).coeff(i);
            let r = rhs.coeff(j).coeff(i);
            if l != r {
                return VerifyReport {
                    identity,
                    a_order,
                    x_order,
                    passed: false,
                    mismatch: Some(Mismatch {
                        a_degree: j,
                        x_degree: i,
                        lhs: l,
                        rhs: r,
                    }),
                };
            }
        }
    }
    VerifyReport {
        identity,
        a_order,
        x_order,
        passed: true,
        mismatch: None,
    }
}

/// Every reconstruction term for `a^n` carries a factor `x^n` (or higher),
/// so an x-order below the a-order would silently drop whole slots from
/// the check. Rejected up front with a descriptive error.
fn check_truncation(a_order: usize, x_order: usize) -> Result<()> {
    if x_order < a_order {
        Err(Error::TruncationTooSmall {
            needed: a_order,
            x_order,
        })
    } else {
        Ok(())
    }
}

/// Checks `prod (1 - a x^m)^{-m} = 1 + sum_n g_n x^n a^n / f_n^2` through
/// the given truncation orders.
pub fn verify_stanley(a_order: usize, x_order: usize) -> Result<VerifyReport> {
    check_truncation(a_order, x_order)?;
    let gt = g_polynomials(a_order);
    let lhs = stanley_lhs(a_order, x_order);
    let rhs = numerator_rhs(gt.entries(), a_order, x_order);
    Ok(compare(IdentityKind::Stanley, &lhs, &rhs))
}

/// Checks `prod (1 + a x^m)^{m} = 1 + sum_n h_n x^n a^n / f_n^2` through
/// the given truncation orders.
pub fn verify_new(a_order: usize, x_order: usize) -> Result<VerifyReport> {
    check_truncation(a_order, x_order)?;
    let ht = h_polynomials(a_order);
    let lhs = plus_powers_lhs(a_order, x_order);
    let rhs = numerator_rhs(ht.entries(), a_order, x_order);
    Ok(compare(IdentityKind::New, &lhs, &rhs))
}

/// Checks `prod (1 - a x^m)^{-1} = 1 + sum_n x^n a^n / f_n`.
pub fn verify_euler_inverse(a_order: usize, x_order: usize) -> VerifyReport {
    let lhs = euler_inverse_lhs(a_order, x_order);
    let rhs = euler_inverse_rhs(a_order, x_order);
    compare(IdentityKind::EulerInverse, &lhs, &rhs)
}

/// Checks `prod (1 + a x^m) = 1 + sum_n x^(n(n+1)/2) a^n / f_n`.
pub fn verify_euler_plus(a_order: usize, x_order: usize) -> VerifyReport {
    let lhs = euler_plus_lhs(a_order, x_order);
    let rhs = euler_plus_rhs(a_order, x_order);
    compare(IdentityKind::EulerPlus, &lhs, &rhs)
}

/// Expands `prod (1 - a x^m)^{-1}` as a product of [`ASeries`] inverses,
/// asserts it equals the closed-form sum, and returns the common value.
pub fn euler_inverse_product(a_order: usize, x_order: usize) -> Result<ASeries> {
    let lhs = euler_inverse_lhs(a_order, x_order);
    let report = compare(IdentityKind::EulerInverse, &lhs, &euler_inverse_rhs(a_order, x_order));
    into_checked(lhs, report)
}

/// Expands `prod (1 + a x^m)`, asserts it equals the closed-form sum, and
/// returns the common value.
pub fn euler_plus_product(a_order: usize, x_order: usize) -> Result<ASeries> {
    let lhs = euler_plus_lhs(a_order, x_order);
    let report = compare(IdentityKind::EulerPlus, &lhs, &euler_plus_rhs(a_order, x_order));
    into_checked(lhs, report)
}

fn into_checked(lhs: ASeries, report: VerifyReport) -> Result<ASeries> {
    match report.mismatch {
        None => Ok(lhs),
        Some(m) => Err(Error::IdentityViolation {
            a_degree: m.a_degree,
            x_degree: m.x_degree,
            lhs: m.lhs.to_string(),
            rhs: m.rhs.to_string(),
        }),
    }
}

fn inverse_factorial(n: usize, x_order: usize) -> XSeries {
    XSeries::new(bracket_factorial(n), x_order)
        .inverse()
        .expect("constant term is one")
}

fn inverse_factorial_squared(n: usize, x_order: usize) -> XSeries {
    let f = bracket_factorial::<Int>(n);
    XSeries::new(&f * &f, x_order)
        .inverse()
        .expect("constant term is one")
}

fn euler_inverse_rhs(a_order: usize, x_order: usize) -> ASeries {
    let parts = (0..=a_order)
        .map(|n| &XSeries::monomial(Int::from(1), n, x_order) * &inverse_factorial(n, x_order))
        .collect();
    ASeries::new(parts)
}

fn euler_plus_rhs(a_order: usize, x_order: usize) -> ASeries {
    let parts = (0..=a_order)
        .map(|n| {
            let num = XSeries::monomial(Int::from(1), n * (n + 1) / 2, x_order);
            &num * &inverse_factorial(n, x_order)
        })
        .collect();
    ASeries::new(parts)
}

/// `1 + sum_n numer[n] x^n a^n / bracket_factorial(n)^2` as an [`ASeries`].
fn numerator_rhs(numer: &[IntPoly], a_order: usize, x_order: usize) -> ASeries {
    let parts = (0..=a_order)
        .map(|n| {
            let num = XSeries::new(numer[n].shifted(n), x_order);
            &num * &inverse_factorial_squared(n, x_order)
        })
        .collect();
    ASeries::new(parts)
}

// ---------------------------------------------------------------------------
// Trace table
// ---------------------------------------------------------------------------

/// Counts of plane partitions by weight (row) and trace (column), read off
/// the coefficients of `prod (1 - a x^m)^{-m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceTable {
    counts: Vec<Vec<Int>>,
}

impl TraceTable {
    pub fn weight_max(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn trace_max(&self) -> usize {
        self.counts[0].len() - 1
    }

    /// Number of plane partitions of the given weight with the given trace.
    pub fn count(&self, weight: usize, trace: usize) -> &Int {
        &self.counts[weight][trace]
    }

    /// Rows indexed by weight; each row indexed by trace.
    pub fn rows(&self) -> &[Vec<Int>] {
        &self.counts
    }
}

/// Tabulates `count(weight, trace)` for `weight <= weight_max` and
/// `trace <= trace_max`.
pub fn trace_table(weight_max: usize, trace_max: usize) -> TraceTable {
    let lhs = stanley_lhs(trace_max, weight_max);
    let counts = (0..=weight_max)
        .map(|i| (0..=trace_max).map(|j| lhs.coeff(j).coeff(i)).collect())
        .collect();
    TraceTable { counts }
}

// ---------------------------------------------------------------------------
// Denominator clearing (independent recovery of the numerators)
// ---------------------------------------------------------------------------

/// Recovers `g_n` from the raw product: takes the `a^n` coefficient of
/// [`stanley_lhs`], multiplies by `bracket_factorial(n)^2` and divides by
/// `x^n` exactly.
///
/// The result is complete only when `x_order` is at least `n + deg(g_n)`;
/// smaller orders return the truncation that survives. Errors if the `x^n`
/// division leaves a remainder.
pub fn g_from_expansion(n: usize, x_order: usize) -> Result<IntPoly> {
    let lhs = stanley_lhs(n, x_order);
    clear_denominator(lhs.coeff(n), n, x_order)
}

/// Recovers `h_n` from the raw product [`plus_powers_lhs`], mirroring
/// [`g_from_expansion`].
pub fn h_from_expansion(n: usize, x_order: usize) -> Result<IntPoly> {
    let lhs = plus_powers_lhs(n, x_order);
    clear_denominator(lhs.coeff(n), n, x_order)
}

fn clear_denominator(cn: &XSeries, n: usize, x_order: usize) -> Result<IntPoly> {
    let f = bracket_factorial::<Int>(n);
    let num = cn * &XSeries::new(&f * &f, x_order);
    let p = num.into_poly();
    if p.coeffs().iter().take(n).any(|c| !c.is_zero()) {
        return Err(Error::NonzeroRemainder);
    }
    if p.coeffs().len() <= n {
        return Ok(IntPoly::zero());
    }
    Ok(IntPoly::from_coeffs(p.coeffs()[n..].to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i32]) -> IntPoly {
        IntPoly::from_ints(coeffs)
    }

    #[test]
    fn partition_series_begins_correctly() {
        let s = euler_partition_series(5);
        assert_eq!(s.poly(), &poly(&[1, 1, 2, 3, 5, 7]));
    }

    #[test]
    fn plane_partition_series_begins_correctly() {
        let s = macmahon_series(5);
        assert_eq!(s.poly(), &poly(&[1, 1, 3, 6, 13, 24]));
    }

    #[test]
    fn bracket_power_matches_poly_power() {
        for m in 1..=4usize {
            for w in 0..=5usize {
                let direct = bracket_power_series(m, w, 12);
                let mut by_mul = XSeries::one(12);
                for _ in 0..w {
                    by_mul = &by_mul * &XSeries::new(bracket(m), 12);
                }
                assert_eq!(direct, by_mul, "m = {m}, w = {w}");
            }
        }
    }

    #[test]
    fn g_table_known_values() {
        let gt = g_polynomials(3);
        assert_eq!(gt[0], poly(&[1]));
        assert_eq!(gt[1], poly(&[1]));
        assert_eq!(gt[2], poly(&[1, 0, 1]));
        assert_eq!(gt[3], poly(&[1, 0, 1, 2, 1, 0, 1]));
        assert_eq!(gt[3].eval_at_one(), Int::from(6));
        assert_eq!(gt[3].to_string(), "1 + x^2 + 2*x^3 + x^4 + x^6");
    }

    #[test]
    fn h_table_known_values() {
        let ht = h_polynomials(5);
        assert_eq!(ht[0], poly(&[1]));
        assert_eq!(ht[1], poly(&[1]));
        assert_eq!(ht[2], poly(&[0, 2]));
        assert_eq!(ht[3], poly(&[0, 0, 1, 4, 1]));
        assert_eq!(ht[4], poly(&[0, 0, 0, 0, 3, 4, 10, 4, 3]));
        assert_eq!(
            ht[5],
            poly(&[0, 0, 0, 0, 0, 0, 3, 8, 15, 20, 28, 20, 15, 8, 3])
        );
    }

    #[test]
    fn stanley_first_slot_is_weighted_geometric() {
        let lhs = stanley_lhs(1, 4);
        assert_eq!(lhs.coeff(0), &XSeries::one(4));
        assert_eq!(lhs.coeff(1).poly(), &poly(&[0, 1, 2, 3, 4]));
    }

    #[test]
    fn stanley_second_slot_counts_trace_two() {
        let lhs = stanley_lhs(2, 5);
        assert_eq!(lhs.coeff(2).poly(), &poly(&[0, 0, 1, 2, 6, 10]));
    }

    #[test]
    fn closed_form_factors_match_generic_route() {
        let m = 2;
        let base = ASeries::from_parts(
            vec![
                XSeries::one(8),
                XSeries::monomial(Int::from(-1), m, 8),
            ],
            3,
            8,
        );
        let squared_inverse = (&base * &base).inverse().unwrap();
        assert_eq!(factor_inv_power(m, 2, 3, 8), squared_inverse);

        let plus = ASeries::from_parts(
            vec![
                XSeries::one(8),
                XSeries::monomial(Int::from(1), 3, 8),
            ],
            3,
            8,
        );
        let cubed = &(&plus * &plus) * &plus;
        assert_eq!(factor_plus_power(3, 3, 3, 8), cubed);
    }

    #[test]
    fn euler_inverse_product_second_slot() {
        // a^2 slot is x^2 / ((1-x)(1-x^2)): partitions into exactly two parts.
        let p = euler_inverse_product(2, 4).unwrap();
        assert_eq!(p.coeff(1).poly(), &poly(&[0, 1, 1, 1, 1]));
        assert_eq!(p.coeff(2).poly(), &poly(&[0, 0, 1, 1, 2]));
    }

    #[test]
    fn euler_plus_product_counts_distinct_parts() {
        let p = euler_plus_product(2, 4).unwrap();
        assert_eq!(p.coeff(1).poly(), &poly(&[0, 1, 1, 1, 1]));
        assert_eq!(p.coeff(2).poly(), &poly(&[0, 0, 0, 1, 1]));
    }

    #[test]
    fn verify_all_four_at_small_orders() {
        assert!(verify_stanley(3, 20).unwrap().passed);
        assert!(verify_new(3, 20).unwrap().passed);
        assert!(verify_euler_inverse(4, 16).passed);
        assert!(verify_euler_plus(4, 16).passed);
    }

    #[test]
    fn truncation_precondition_is_enforced() {
        assert_eq!(
            verify_stanley(1, 0),
            Err(Error::TruncationTooSmall {
                needed: 1,
                x_order: 0
            })
        );
        assert!(verify_new(5, 4).is_err());
    }

    #[test]
    fn compare_reports_first_mismatch() {
        let lhs = stanley_lhs(2, 4);
        let mut parts: Vec<XSeries> = lhs.coeffs().to_vec();
        parts[1] = &parts[1] + &XSeries::monomial(Int::from(1), 2, 4);
        let corrupted = ASeries::new(parts);
        let report = compare(IdentityKind::Stanley, &lhs, &corrupted);
        assert!(!report.passed);
        let m = report.mismatch.unwrap();
        assert_eq!((m.a_degree, m.x_degree), (1, 2));
        assert_eq!(m.rhs - m.lhs, Int::from(1));
    }

    #[test]
    fn trace_table_matches_frozen_counts() {
        let t = trace_table(5, 2);
        assert_eq!(t.count(4, 2), &Int::from(6));
        assert_eq!(t.count(5, 2), &Int::from(10));
        assert_eq!(t.count(0, 0), &Int::from(1));
        assert_eq!(t.count(3, 0), &Int::from(0));
    }

    #[test]
    fn numerators_recovered_from_raw_expansions() {
        let gt = g_polynomials(4);
        for n in 0..=4 {
            let order = n + gt[n].degree().unwrap_or(0) + 4;
            assert_eq!(g_from_expansion(n, order).unwrap(), gt[n], "g_{n}");
        }
        let ht = h_polynomials(4);
        for n in 0..=4 {
            let order = n + ht[n].degree().unwrap_or(0) + 4;
            assert_eq!(h_from_expansion(n, order).unwrap(), ht[n], "h_{n}");
        }
    }

    #[test]
    fn substituting_a_one_recovers_plane_partition_series() {
        let lhs = stanley_lhs(8, 8);
        assert_eq!(lhs.at_a_one(), macmahon_series(8));
    }
}
