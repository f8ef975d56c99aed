//! Dense univariate polynomials with exact coefficients.
//!
//! Coefficients are stored ascending by degree and kept canonical: no
//! trailing zeros, so the zero polynomial is the empty vector and equality
//! is plain coefficient equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// Polynomial in one variable `x` over an exact scalar `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros so the representation is canonical.
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Convenience constructor from small literal coefficients, ascending.
    pub fn from_ints(coeffs: &[i32]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| C::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(c: C, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); degree + 1];
        coeffs[degree] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial. The zero polynomial has
    /// no numeric degree; callers must treat `None` as smaller than any
    /// `Some` value.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^degree`; zero beyond the stored length.
    pub fn coeff(&self, degree: usize) -> C {
        self.coeffs.get(degree).cloned().unwrap_or_else(C::zero)
    }

    /// Ascending coefficient slice without trailing zeros.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Sum of all coefficients, i.e. the value at `x = 1`.
    pub fn eval_at_one(&self) -> C {
        self.coeffs
            .iter()
            .fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// Multiplies by `x^k`.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k + self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[k + i] = c.clone();
        }
        Poly { coeffs }
    }

    /// Exact quotient `self / den`.
    ///
    /// Errors with [`Error::NonzeroRemainder`] unless `den` divides `self`
    /// exactly over the coefficient ring. Panics if `den` is zero.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        assert!(!den.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let nd = self.coeffs.len() - 1;
        let dd = den.coeffs.len() - 1;
        if nd < dd {
            return Err(Error::NonzeroRemainder);
        }
        let lead = den.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let r = rem[k + dd].clone();
            if r.is_zero() {
                continue;
            }
            let q = r.clone() / lead.clone();
            if q.clone() * lead.clone() != r {
                return Err(Error::NonzeroRemainder);
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] = rem[k + j].clone() - q.clone() * d.clone();
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonzeroRemainder);
        }
        Ok(Self::from_coeffs(quot))
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl<C: Coeff> $trait for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Coeff> $trait<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        -&self
    }
}

/// Canonical text form: ascending terms joined by ` + `/` - `, coefficient 1
/// elided, `x^1` written `x`, `x^0` written as a bare constant.
///
/// Examples: `0`, `1 - x`, `1 + x^2 + 2*x^3 + x^4 + x^6`, `-2 + x`.
impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match (mag.is_one(), d) {
                (true, 0) => write!(f, "1")?,
                (true, 1) => write!(f, "x")?,
                (true, _) => write!(f, "x^{d}")?,
                (false, 0) => write!(f, "{mag}")?,
                (false, 1) => write!(f, "{mag}*x")?,
                (false, _) => write!(f, "{mag}*x^{d}")?,
            }
        }
        Ok(())
    }
}
