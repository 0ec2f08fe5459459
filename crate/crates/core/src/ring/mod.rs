//! Exact scalars, sparse multivariate polynomials, matrices and determinants.

mod matrix;
mod poly;
mod rational;
mod unipoly;

pub use matrix::Matrix;
pub use poly::{Monomial, MultiPoly};
pub use rational::Rational;
pub use unipoly::{interpolate_integer_nodes, UniPoly};

use std::fmt;

/// A commutative ring containing the rationals.
///
/// Every ring used here (`Rational`, `MultiPoly`) is an integral domain of
/// characteristic zero, so scaling by a rational is always defined.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    /// Inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;
    /// `self / rhs` when the quotient lies in the ring.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
    /// Image in the polynomial ring (constants for `Rational`).
    fn to_multipoly(&self) -> MultiPoly;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.recip().ok()
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(rhs).ok()
    }
    fn to_multipoly(&self) -> MultiPoly {
        MultiPoly::constant(self.clone())
    }
    fn pow(&self, exp: u32) -> Self {
        Rational::pow(self, exp as i64).expect("nonnegative exponent")
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        MultiPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        MultiPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        MultiPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn from_rational(r: &Rational) -> Self {
        MultiPoly::constant(r.clone())
    }
    fn scale(&self, r: &Rational) -> Self {
        MultiPoly::scale(self, r)
    }
    fn unit_inverse(&self) -> Option<Self> {
        let c = self.as_constant()?;
        c.recip().ok().map(MultiPoly::constant)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        MultiPoly::div_exact(self, rhs).ok()
    }
    fn to_multipoly(&self) -> MultiPoly {
        self.clone()
    }
    fn pow(&self, exp: u32) -> Self {
        MultiPoly::pow(self, exp)
    }
}
