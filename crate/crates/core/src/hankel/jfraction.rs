use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Rational, Ring};
use crate::series::TruncatedSeries;

/// `d0 / (1 - p(0)u - q(0)u^2 / (1 - p(1)u - q(1)u^2 / (... / (1 - p(m)u))))`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "R: Serialize", deserialize = "R: Deserialize<'de>"))]
pub struct JFraction<R> {
    pub d0: R,
    pub p: Vec<R>,
    pub q: Vec<R>,
}

impl<R: Ring> JFraction<R> {
    /// Requires `p.len() == q.len() + 1`.
    pub fn new(d0: R, p: Vec<R>, q: Vec<R>) -> Result<Self> {
        if p.len() != q.len() + 1 {
            return Err(Error::DimensionMismatch);
        }
        Ok(JFraction { d0, p, q })
    }

    pub fn depth(&self) -> usize {
        self.q.len()
    }
}

/// Peels `depth + 1` levels off `d`.
///
/// Level `h` has a tail `c_h` with constant term 1; `p(h) = [u]c_h` and
/// `1 - p(h)u - 1/c_h = q(h) u^2 c_{h+1}`. Each level consumes two
/// coefficients, so `d` must be known to order `2 depth + 2`.
pub fn jfraction_expand(d: &TruncatedSeries<Rational>, depth: usize) -> Result<JFraction<Rational>> {
    let d0 = d.coeff(0).clone();
    if d0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let needed = 2 * depth + 2;
    if d.order() < needed {
        return Err(Error::InsufficientPrecision { needed, available: d.order() });
    }
    let mut c = d.truncate(needed)?.scale(&d0.recip()?);
    let mut p = Vec::with_capacity(depth + 1);
    let mut q = Vec::with_capacity(depth);
    for h in 0..=depth {
        let ph = c.coeff(1).clone();
        p.push(ph.clone());
        if h == depth {
            break;
        }
        let n = c.order();
        let linear = TruncatedSeries::from_poly(&[Rational::one(), -ph], n);
        let r = linear.sub(&c.invert()?);
        let qh = r.coeff(2).clone();
        if qh.is_zero() {
            return Err(Error::SingularExpansion { level: h });
        }
        c = r.shift_down()?.shift_down()?.scale(&qh.recip()?);
        q.push(qh);
    }
    JFraction::new(d0, p, q)
}

/// The series of the finite fraction modulo `u^order`, for `order <= 2 depth + 2`.
pub fn jfraction_contract<R: Ring>(jf: &JFraction<R>, order: usize) -> Result<TruncatedSeries<R>> {
    let m = jf.depth();
    if order == 0 {
        return Err(Error::BadRange("order must be at least 1".into()));
    }
    if order > 2 * m + 2 {
        return Err(Error::InsufficientDepth { depth: m, needed: (order - 1) / 2 });
    }
    let level = |h: usize| TruncatedSeries::from_poly(&[R::one(), jf.p[h].neg()], order);
    let mut tail = level(m).invert()?;
    for h in (0..m).rev() {
        let term = tail.scale_by(&jf.q[h]).shift_up().shift_up().truncate(order)?;
        tail = level(h).sub(&term).invert()?;
    }
    Ok(tail.scale_by(&jf.d0))
}

/// `d0^{k+1} q(0)^k q(1)^{k-1} ... q(k-1)`, the `(k+1) x (k+1)` leading
/// Hankel minor of the contracted series.
pub fn principal_minor_product<R: Ring>(jf: &JFraction<R>, k: usize) -> Result<R> {
    if k > jf.depth() {
        return Err(Error::InsufficientDepth { depth: jf.depth(), needed: k });
    }
    let mut acc = jf.d0.pow(k as u32 + 1);
    for h in 0..k {
        acc = acc.mul(&jf.q[h].pow((k - h) as u32));
    }
    Ok(acc)
}
