use std::fmt;

use serde::{Deserialize, Serialize};

use super::{MultiPoly, Rational, Ring};

/// Dense univariate polynomial over a ring, coefficients in ascending degree.
///
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, at: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc.mul(at).add(c))
    }

    /// `x^(slots-1) p(1/x)`, treating `p` as having `slots` coefficient slots.
    pub fn mirror(&self, slots: usize) -> Self {
        assert!(self.coeffs.len() <= slots, "degree exceeds slot count");
        let mut v = vec![R::zero(); slots];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[slots - 1 - i] = c.clone();
        }
        Self::new(v)
    }

    /// Embeds the polynomial into `MultiPoly` with indeterminate `var`.
    pub fn to_multipoly(&self, var: &str) -> MultiPoly {
        let x = MultiPoly::var(var);
        self.coeffs
            .iter()
            .rev()
            .fold(MultiPoly::zero(), |acc, c| acc.mul(&x).add(&c.to_multipoly()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }
}

impl<R: Ring> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly{:?}", self.coeffs)
    }
}

/// Lagrange interpolation through `(0, v_0), (1, v_1), ...` at integer nodes.
///
/// Basis polynomials have rational coefficients, so the values may live in any
/// ring containing the rationals.
pub fn interpolate_integer_nodes<R: Ring>(values: &[R]) -> UniPoly<R> {
    let n = values.len();
    let mut out = vec![R::zero(); n];
    for (m, vm) in values.iter().enumerate() {
        // basis(x) = Π_{j != m} (x - j) / (m - j)
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for j in (0..n).filter(|&j| j != m) {
            let mut next = vec![Rational::zero(); basis.len() + 1];
            let shift = Rational::from(j as i64);
            for (d, b) in basis.iter().enumerate() {
                next[d + 1] += b;
                next[d] -= &(b * &shift);
            }
            basis = next;
            denom = denom * Rational::from(m as i64 - j as i64);
        }
        let inv = denom.recip().expect("distinct nodes");
        for (d, b) in basis.iter().enumerate() {
            if !b.is_zero() {
                out[d] = out[d].add(&vm.scale(&(b * &inv)));
            }
        }
    }
    UniPoly::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mirror_reverses_slots() {
        let p = UniPoly::new(vec![Rational::from(1), Rational::from(2)]);
        let m = p.mirror(3);
        assert_eq!(m.coeffs(), &[Rational::zero(), Rational::from(2), Rational::from(1)]);
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let f = |x: i64| Rational::from(x * x * x - 2 * x + 7);
        let values: Vec<Rational> = (0..6).map(f).collect();
        let p = interpolate_integer_nodes(&values);
        assert_eq!(p.degree(), Some(3));
        for x in -3..10 {
            assert_eq!(p.eval(&Rational::from(x)), f(x));
        }
    }
}
