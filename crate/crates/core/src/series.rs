//! Truncated formal power series.
//!
//! [`XSeries`] is a univariate series known modulo `x^(order+1)`; the
//! truncation order is part of the value. [`ASeries`] layers a second
//! variable `a` on top: a vector of `XSeries` indexed by a-degree, truncated
//! in both variables.
//!
//! Arithmetic never coerces: combining operands with different truncation
//! orders is a caller bug and panics with an order-mismatch message.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Coeff;

/// Power series in `x` truncated to `x^order` inclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XSeries<C> {
    poly: Poly<C>,
    order: usize,
}

impl<C: Coeff> XSeries<C> {
    /// Wraps a polynomial, discarding any terms above `x^order`.
    pub fn new(poly: Poly<C>, order: usize) -> Self {
        let poly = if poly.degree().is_some_and(|d| d > order) {
            Poly::from_coeffs(poly.coeffs()[..=order].to_vec())
        } else {
            poly
        };
        XSeries { poly, order }
    }

    pub fn zero(order: usize) -> Self {
        XSeries {
            poly: Poly::zero(),
            order,
        }
    }

    pub fn one(order: usize) -> Self {
        XSeries {
            poly: Poly::one(),
            order,
        }
    }

    /// `c * x^degree`, or zero if the monomial falls beyond the order.
    pub fn monomial(c: C, degree: usize, order: usize) -> Self {
        if degree > order {
            Self::zero(order)
        } else {
            XSeries {
                poly: Poly::monomial(c, degree),
                order,
            }
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn poly(&self) -> &Poly<C> {
        &self.poly
    }

    pub fn into_poly(self) -> Poly<C> {
        self.poly
    }

    pub fn coeff(&self, degree: usize) -> C {
        self.poly.coeff(degree)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn check_order(&self, other: &Self, op: &str) {
        assert_eq!(
            self.order, other.order,
            "truncation order mismatch in series {op}: {} vs {}",
            self.order, other.order
        );
    }

    /// Multiplicative inverse modulo `x^(order+1)`.
    ///
    /// The constant term must be 1 or -1; anything else has no inverse over
    /// the integers and yields [`Error::NonUnitConstantTerm`].
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.poly.coeff(0);
        if !(c0 == C::one() || c0 == -C::one()) {
            return Err(Error::NonUnitConstantTerm(c0.to_string()));
        }
        // c0 is its own inverse, so the usual recurrence needs no division:
        // q[n] = -c0 * sum_{k>=1} p[k] q[n-k].
        let nonzero: Vec<(usize, C)> = self
            .poly
            .coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect();
        let mut q = vec![C::zero(); self.order + 1];
        q[0] = c0.clone();
        for n in 1..=self.order {
            let mut s = C::zero();
            for (k, pk) in &nonzero {
                if *k > n {
                    break;
                }
                s = s + pk.clone() * q[n - k].clone();
            }
            q[n] = -(c0.clone() * s);
        }
        Ok(XSeries::new(Poly::from_coeffs(q), self.order))
    }
}

impl<C: Coeff> Add for &XSeries<C> {
    type Output = XSeries<C>;

    fn add(self, rhs: &XSeries<C>) -> XSeries<C> {
        self.check_order(rhs, "addition");
        XSeries {
            poly: &self.poly + &rhs.poly,
            order: self.order,
        }
    }
}

impl<C: Coeff> Sub for &XSeries<C> {
    type Output = XSeries<C>;

    fn sub(self, rhs: &XSeries<C>) -> XSeries<C> {
        self.check_order(rhs, "subtraction");
        XSeries {
            poly: &self.poly - &rhs.poly,
            order: self.order,
        }
    }
}

impl<C: Coeff> Mul for &XSeries<C> {
    type Output = XSeries<C>;

    fn mul(self, rhs: &XSeries<C>) -> XSeries<C> {
        self.check_order(rhs, "multiplication");
        let order = self.order;
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.poly.coeffs().iter().enumerate() {
            if i > order {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.poly.coeffs().iter().enumerate() {
                if i + j > order {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        XSeries::new(Poly::from_coeffs(coeffs), order)
    }
}

impl<C: Coeff> Neg for &XSeries<C> {
    type Output = XSeries<C>;

    fn neg(self) -> XSeries<C> {
        XSeries {
            poly: -&self.poly,
            order: self.order,
        }
    }
}

macro_rules! forward_owned_series_binop {
    ($t:ty, $trait:ident, $method:ident) => {
        impl<C: Coeff> $trait for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                (&self).$method(&rhs)
            }
        }
        impl<C: Coeff> $trait<&$t> for $t {
            type Output = $t;
            fn $method(self, rhs: &$t) -> $t {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_series_binop!(XSeries<C>, Add, add);
forward_owned_series_binop!(XSeries<C>, Sub, sub);
forward_owned_series_binop!(XSeries<C>, Mul, mul);

impl<C: Coeff> fmt::Display for XSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(x^{})", self.poly, self.order + 1)
    }
}

/// Bivariate series: coefficients of `a^0 ..= a^(a_order)`, each an
/// [`XSeries`] sharing one x-truncation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ASeries<C> {
    coeffs: Vec<XSeries<C>>,
}

impl<C: Coeff> ASeries<C> {
    /// Wraps explicit a-coefficients. Panics if the vector is empty or the
    /// x-orders disagree.
    pub fn new(coeffs: Vec<XSeries<C>>) -> Self {
        assert!(!coeffs.is_empty(), "an ASeries needs at least the a^0 slot");
        let x_order = coeffs[0].order();
        for c in &coeffs[1..] {
            assert_eq!(
                c.order(),
                x_order,
                "x-order mismatch inside ASeries: {} vs {x_order}",
                c.order()
            );
        }
        ASeries { coeffs }
    }

    /// Builds from the leading a-coefficients, padding with zero series up
    /// to `a_order`. Panics if more than `a_order + 1` parts are supplied.
    pub fn from_parts(parts: Vec<XSeries<C>>, a_order: usize, x_order: usize) -> Self {
        assert!(
            parts.len() <= a_order + 1,
            "{} parts exceed a-order {a_order}",
            parts.len()
        );
        let mut coeffs = parts;
        while coeffs.len() <= a_order {
            coeffs.push(XSeries::zero(x_order));
        }
        Self::new(coeffs)
    }

    /// The constant series 1 at the given truncation orders.
    pub fn one(a_order: usize, x_order: usize) -> Self {
        Self::from_parts(vec![XSeries::one(x_order)], a_order, x_order)
    }

    pub fn a_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn x_order(&self) -> usize {
        self.coeffs[0].order()
    }

    /// Coefficient of `a^degree`.
    pub fn coeff(&self, degree: usize) -> &XSeries<C> {
        &self.coeffs[degree]
    }

    pub fn coeffs(&self) -> &[XSeries<C>] {
        &self.coeffs
    }

    fn check_orders(&self, other: &Self, op: &str) {
        assert_eq!(
            self.a_order(),
            other.a_order(),
            "a-order mismatch in {op}: {} vs {}",
            self.a_order(),
            other.a_order()
        );
        assert_eq!(
            self.x_order(),
            other.x_order(),
            "x-order mismatch in {op}: {} vs {}",
            self.x_order(),
            other.x_order()
        );
    }

    /// Multiplicative inverse modulo `a^(a_order+1)` and `x^(x_order+1)`.
    /// The a^0 coefficient must itself be invertible as an [`XSeries`].
    pub fn inverse(&self) -> Result<Self> {
        let q0 = self.coeffs[0].inverse()?;
        let x_order = self.x_order();
        let mut q = Vec::with_capacity(self.coeffs.len());
        q.push(q0.clone());
        for n in 1..self.coeffs.len() {
            let mut s = XSeries::zero(x_order);
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                s = &s + &(&self.coeffs[k] * &q[n - k]);
            }
            q.push(-&(&q0 * &s));
        }
        Ok(ASeries { coeffs: q })
    }

    /// Substitutes `a = 1` by summing the a-coefficients.
    ///
    /// Faithful only while the x-order does not exceed the a-order, since
    /// higher a-degrees beyond the stored range could still contribute to
    /// retained x-degrees.
    pub fn at_a_one(&self) -> XSeries<C> {
        self.coeffs
            .iter()
            .fold(XSeries::zero(self.x_order()), |acc, c| &acc + c)
    }
}

impl<C: Coeff> Mul for &ASeries<C> {
    type Output = ASeries<C>;

    fn mul(self, rhs: &ASeries<C>) -> ASeries<C> {
        self.check_orders(rhs, "ASeries multiplication");
        let x_order = self.x_order();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for n in 0..self.coeffs.len() {
            let mut s = XSeries::zero(x_order);
            for k in 0..=n {
                if self.coeffs[k].is_zero() || rhs.coeffs[n - k].is_zero() {
                    continue;
                }
                s = &s + &(&self.coeffs[k] * &rhs.coeffs[n - k]);
            }
            coeffs.push(s);
        }
        ASeries { coeffs }
    }
}

impl<C: Coeff> Mul for ASeries<C> {
    type Output = ASeries<C>;

    fn mul(self, rhs: ASeries<C>) -> ASeries<C> {
        &self * &rhs
    }
}
