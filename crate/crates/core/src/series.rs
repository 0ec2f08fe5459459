//! Truncated formal power series over a ring containing the rationals.
//!
//! A `TruncatedSeries` of order `N` stores `c_0 .. c_{N-1}` and stands for
//! the class of the series modulo `x^N`. Every operation reports the order it
//! can actually prove; nothing is zero-padded.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Rational, Ring};

#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "R: Serialize + Clone", deserialize = "R: Deserialize<'de> + Ring"))]
#[serde(try_from = "SeriesRepr<R>", into = "SeriesRepr<R>")]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr<R> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> TryFrom<SeriesRepr<R>> for TruncatedSeries<R> {
    type Error = Error;
    fn try_from(r: SeriesRepr<R>) -> Result<Self> {
        if r.coeffs.len() != r.order {
            return Err(Error::Malformed(format!(
                "order {} does not match {} coefficients",
                r.order,
                r.coeffs.len()
            )));
        }
        TruncatedSeries::new(r.coeffs)
    }
}

impl<R: Clone> From<TruncatedSeries<R>> for SeriesRepr<R> {
    fn from(s: TruncatedSeries<R>) -> Self {
        SeriesRepr { order: s.coeffs.len(), coeffs: s.coeffs }
    }
}

/// Product of two coefficient slices, keeping `len` coefficients.
fn convolve<R: Ring>(a: &[R], b: &[R], len: usize) -> Vec<R> {
    let mut out = vec![R::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&ai.mul(bj));
        }
    }
    out
}

impl<R: Ring> TruncatedSeries<R> {
    /// Series known modulo `x^coeffs.len()`.
    pub fn new(coeffs: Vec<R>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        assert!(order >= 1, "order must be at least 1");
        TruncatedSeries { coeffs: (0..order).map(f).collect() }
    }

    /// An exact polynomial viewed modulo `x^order` (extra terms dropped).
    pub fn from_poly(coeffs: &[R], order: usize) -> Self {
        Self::from_fn(order, |i| coeffs.get(i).cloned().unwrap_or_else(R::zero))
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| R::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The indeterminate `x` modulo `x^order`.
    pub fn x(order: usize) -> Self {
        Self::monomial(R::one(), 1, order)
    }

    pub fn monomial(c: R, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree < order {
            s.coeffs[degree] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^i`; panics if `i` is beyond the known order.
    pub fn coeff(&self, i: usize) -> &R {
        &self.coeffs[i]
    }

    /// Index of the first nonzero coefficient, or `order` if none is known.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.order())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Equality modulo `x^order` for the common known order.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..n] == other.coeffs[..n]
    }

    /// The développement limité `⌊a⌋_k`: the first `k` coefficients.
    pub fn truncate(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::BadRange("truncation order must be at least 1".into()));
        }
        if k > self.order() {
            return Err(Error::InsufficientPrecision { needed: k, available: self.order() });
        }
        Ok(TruncatedSeries { coeffs: self.coeffs[..k].to_vec() })
    }

    fn common_order(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        Self::from_fn(n, |i| self.coeffs[i].add(&other.coeffs[i]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        Self::from_fn(n, |i| self.coeffs[i].sub(&other.coeffs[i]))
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::neg)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|c| c.scale(r))
    }

    pub fn scale_by(&self, c: &R) -> Self {
        self.map(|x| x.mul(c))
    }

    /// Product, known modulo `x^min(orders)`.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        TruncatedSeries { coeffs: convolve(&self.coeffs, &other.coeffs, n) }
    }

    pub fn pow_int(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be a unit of the ring.
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].unit_inverse().ok_or(Error::NonInvertibleConstantTerm)?;
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = R::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc = acc.add(&self.coeffs[i].mul(&out[k - i]));
                }
            }
            out.push(acc.mul(&inv0).neg());
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self / other`, computed as `self * invert(other)`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.invert()?))
    }

    /// Multiplication by `x`; the order grows by one.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(R::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries { coeffs }
    }

    /// Division by `x`; requires a zero constant term and order at least 2.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm("division by x needs a zero constant term"));
        }
        if self.order() < 2 {
            return Err(Error::InsufficientPrecision { needed: 2, available: self.order() });
        }
        Ok(TruncatedSeries { coeffs: self.coeffs[1..].to_vec() })
    }

    /// `g ∘ f` by Horner's rule, known modulo `x^min(orders)`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTermInner);
        }
        let n = self.common_order(inner);
        let f = &inner.coeffs[..n];
        let mut acc = vec![R::zero(); n];
        for c in self.coeffs[..n].iter().rev() {
            acc = convolve(&acc, f, n);
            acc[0] = acc[0].add(c);
        }
        Ok(TruncatedSeries { coeffs: acc })
    }

    /// Compositional inverse by Newton iteration `q <- q - (p∘q - x)/(p'∘q)`.
    ///
    /// Precision doubles per step starting from `q = x/p_1`; the result is
    /// checked against `p∘q = x` at full order before it is returned.
    pub fn revert(&self) -> Result<Self> {
        let n = self.order();
        if n < 2 || !self.coeffs[0].is_zero() {
            return Err(Error::BadValuation);
        }
        let inv1 = self.coeffs[1].unit_inverse().ok_or(Error::BadValuation)?;
        let mut q = vec![R::zero(), inv1];
        let mut prec = 2usize;
        while prec < n {
            let next = (2 * prec).min(n);
            let p = TruncatedSeries { coeffs: self.coeffs[..next].to_vec() };
            let mut qs = q.clone();
            qs.resize(next, R::zero());
            let qs = TruncatedSeries { coeffs: qs };
            let mut err = p.compose(&qs)?;
            err.coeffs[1] = err.coeffs[1].sub(&R::one());
            let residual_val = err.valuation();
            debug_assert!(residual_val >= prec);
            // p' ∘ q is only known modulo x^(next-1), but the residual has
            // valuation >= prec >= 1, so the product is known modulo x^next.
            let dp = p.derivative()?.compose(&TruncatedSeries { coeffs: qs.coeffs[..next - 1].to_vec() })?;
            let w = dp.invert()?;
            let corr = convolve(&err.coeffs, &w.coeffs, next);
            q = qs.coeffs.iter().zip(&corr).map(|(a, b)| a.sub(b)).collect();
            prec = next;
        }
        q.truncate(n);
        let q = TruncatedSeries { coeffs: q };
        if self.compose(&q)? != Self::x(n) {
            return Err(Error::VerificationFailed("p∘q != x after reversion".into()));
        }
        Ok(q)
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> Result<Self> {
        if self.order() < 2 {
            return Err(Error::InsufficientPrecision { needed: 2, available: self.order() });
        }
        Ok(TruncatedSeries {
            coeffs: (1..self.order()).map(|i| self.coeffs[i].scale(&Rational::from(i))).collect(),
        })
    }

    /// Antiderivative with zero constant term; the order grows by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(R::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rational::frac(1, i as i64 + 1)));
        }
        TruncatedSeries { coeffs }
    }

    /// `exp(a)` for `a` with zero constant term, via `b' = a' b`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm("exp needs a zero constant term"));
        }
        let n = self.order();
        let mut b: Vec<R> = Vec::with_capacity(n);
        b.push(R::one());
        for m in 1..n {
            let mut acc = R::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add(&self.coeffs[k].mul(&b[m - k]).scale(&Rational::from(k)));
                }
            }
            b.push(acc.scale(&Rational::frac(1, m as i64)));
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// `log(a)` for `a` with constant term 1, as the integral of `a'/a`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm("log needs constant term 1"));
        }
        if self.order() == 1 {
            return Ok(Self::zero(1));
        }
        Ok(self.derivative()?.div(self)?.integrate())
    }

    /// `a^tau = exp(tau log a)` for `a` with constant term 1.
    pub fn pow(&self, tau: &Rational) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm("rational powers need constant term 1"));
        }
        self.log()?.scale(tau).exp()
    }
}

impl<R: Ring> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order())
    }
}

impl<R: Ring> fmt::Debug for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `Σ x^n/n!` modulo `x^order`.
pub fn exp_series(order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::from_fn(order, |n| Rational::factorial(n as u64).recip().unwrap())
}
