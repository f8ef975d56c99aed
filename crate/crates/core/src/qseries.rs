//! Brackets `1 - x^m` and Gaussian binomial coefficients.
//!
//! The Gaussian binomial is built two independent ways: by exact division
//! of bracket factorials ([`gauss_binom`]) and by the q-Pascal recurrence
//! ([`gauss_binom_pascal`]). The two routes deliberately share no code so
//! each can serve as an oracle for the other.

use crate::poly::Poly;
use crate::scalar::Coeff;

/// `1 - x^m`. Panics for `m = 0` (the bracket is only defined for m >= 1).
pub fn bracket<C: Coeff>(m: usize) -> Poly<C> {
    assert!(m >= 1, "bracket requires m >= 1");
    let mut coeffs = vec![C::zero(); m + 1];
    coeffs[0] = C::one();
    coeffs[m] = -C::one();
    Poly::from_coeffs(coeffs)
}

/// `(1 - x)(1 - x^2)...(1 - x^m)`; the empty product 1 for `m = 0`.
pub fn bracket_factorial<C: Coeff>(m: usize) -> Poly<C> {
    bracket_range(1, m)
}

/// `prod_{j=lo..=hi} (1 - x^j)`; 1 when the range is empty (`lo > hi`).
pub fn bracket_range<C: Coeff>(lo: usize, hi: usize) -> Poly<C> {
    let mut acc = Poly::one();
    for j in lo..=hi {
        acc = &acc * &bracket(j);
    }
    acc
}

/// A Gaussian binomial coefficient together with its parameters.
///
/// The polynomial has degree `k(n - k)`, palindromic nonnegative
/// coefficients, and value `C(n, k)` at `x = 1`; the test suite checks all
/// of these exhaustively over a range of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianBinomial<C> {
    n: usize,
    k: usize,
    poly: Poly<C>,
}

impl<C: Coeff> GaussianBinomial<C> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn poly(&self) -> &Poly<C> {
        &self.poly
    }

    pub fn into_poly(self) -> Poly<C> {
        self.poly
    }
}

/// Gaussian binomial via exact division:
/// `bracket_factorial(n) / (bracket_factorial(k) * bracket_factorial(n-k))`.
///
/// Panics if `k > n`. The division is exact by construction; a remainder
/// would mean the bracket arithmetic itself is broken, so it is treated as
/// an internal invariant breach.
pub fn gauss_binom<C: Coeff>(n: usize, k: usize) -> GaussianBinomial<C> {
    assert!(k <= n, "gauss_binom requires k <= n, got k = {k}, n = {n}");
    let den = &bracket_factorial::<C>(k) * &bracket_factorial::<C>(n - k);
    let poly = bracket_factorial::<C>(n)
        .exact_div(&den)
        .expect("bracket factorial quotient is exact");
    GaussianBinomial { n, k, poly }
}

/// Gaussian binomial via the q-Pascal recurrence, kept division-free and
/// independent of [`gauss_binom`]:
///
/// `[n, k] = [n-1, k-1] + x^k * [n-1, k]`, with `[n, 0] = [n, n] = 1`.
pub fn gauss_binom_pascal<C: Coeff>(n: usize, k: usize) -> Poly<C> {
    assert!(k <= n, "gauss_binom_pascal requires k <= n, got k = {k}, n = {n}");
    let mut row: Vec<Poly<C>> = vec![Poly::one()];
    for r in 1..=n {
        let mut next = Vec::with_capacity(r + 1);
        next.push(Poly::one());
        for j in 1..r {
            next.push(&row[j - 1] + &row[j].shifted(j));
        }
        next.push(Poly::one());
        row = next;
    }
    row.swap_remove(k)
}
