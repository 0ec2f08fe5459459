//! Reversion through développements limités.
//!
//! For `s = s_0 + s_1 x + ...` with `s_0 != 0` the polynomials
//! `P_1 = s_0`, `P_k = ⌊P_{k-1} s⌋_k` have mirrors `Q_n(x) = x^{n-1} P_n(1/x)`.
//! The constants `Q_n(0)` are the coefficients of the series `q` solving
//! `q = t s(q)`, and `Σ Q_n(x) t^n = q / (1 - x q)`.

use crate::error::{Error, Result};
use crate::ring::{interpolate_integer_nodes, Matrix, MultiPoly, Rational, Ring, UniPoly};
use crate::series::TruncatedSeries;

/// The series `s_0 + s_1 x + ...` with one indeterminate per coefficient,
/// named `{prefix}0`, `{prefix}1`, ...
pub fn letter_series(prefix: &str, order: usize) -> TruncatedSeries<MultiPoly> {
    TruncatedSeries::from_fn(order, |j| MultiPoly::var(&format!("{prefix}{j}")))
}

/// The polynomials `P_1..P_{n_max}` and their mirrors for a fixed series `s`.
#[derive(Clone, Debug)]
pub struct DLSequence<R: Ring> {
    s: TruncatedSeries<R>,
    p: Vec<UniPoly<R>>,
    q: Vec<UniPoly<R>>,
}

impl<R: Ring> DLSequence<R> {
    /// Runs the recursion `P_k = ⌊P_{k-1} s⌋_k` for `k <= n_max`.
    ///
    /// `s_0` only has to be nonzero: the recursion never divides, so symbolic
    /// letters are accepted.
    pub fn build(s: &TruncatedSeries<R>, n_max: usize) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::BadRange("n_max must be at least 1".into()));
        }
        if s.coeff(0).is_zero() {
            return Err(Error::NonInvertibleConstantTerm);
        }
        if s.order() < n_max {
            return Err(Error::InsufficientPrecision { needed: n_max, available: s.order() });
        }
        let mut p: Vec<Vec<R>> = vec![vec![s.coeff(0).clone()]];
        for k in 2..=n_max {
            let prev = &p[k - 2];
            let next: Vec<R> = (0..k)
                .map(|d| {
                    prev.iter()
                        .enumerate()
                        .take(d + 1)
                        .filter(|(_, c)| !c.is_zero())
                        .fold(R::zero(), |acc, (i, c)| acc.add(&c.mul(s.coeff(d - i))))
                })
                .collect();
            p.push(next);
        }
        let p: Vec<UniPoly<R>> = p.into_iter().map(UniPoly::new).collect();
        let q = p.iter().enumerate().map(|(i, pi)| pi.mirror(i + 1)).collect();
        Ok(DLSequence { s: s.clone(), p, q })
    }

    pub fn n_max(&self) -> usize {
        self.p.len()
    }

    pub fn source(&self) -> &TruncatedSeries<R> {
        &self.s
    }

    /// `P_n`, for `1 <= n <= n_max`.
    pub fn p(&self, n: usize) -> &UniPoly<R> {
        &self.p[n - 1]
    }

    /// `Q_n(x) = x^{n-1} P_n(1/x)`, for `1 <= n <= n_max`.
    pub fn q(&self, n: usize) -> &UniPoly<R> {
        &self.q[n - 1]
    }

    /// `Q_n(0)`, the leading slot `[x^{n-1}] P_n`.
    pub fn q_at_zero(&self, n: usize) -> R {
        self.q(n).coeff(0)
    }

    /// Recomputes every defining relation of the sequence.
    pub fn check_invariants(&self) -> bool {
        let s = &self.s;
        if self.p[0].coeffs() != std::slice::from_ref(s.coeff(0)) {
            return false;
        }
        for k in 2..=self.n_max() {
            let prev = TruncatedSeries::from_poly(self.p(k - 1).coeffs(), k);
            let expect = prev.mul(&s.truncate(k).expect("order checked at build"));
            if UniPoly::new(expect.into_coeffs()) != *self.p(k) {
                return false;
            }
        }
        (1..=self.n_max()).all(|n| {
            let pn = self.p(n);
            let qn = self.q(n);
            pn.degree().is_none_or(|d| d < n)
                && qn.degree().is_none_or(|d| d < n)
                && qn.coeff(0) == pn.coeff(n - 1)
                && (0..n).all(|j| qn.coeff(j) == pn.coeff(n - 1 - j))
        })
    }

    /// `q(t) = Σ_{n <= n_max} Q_n(0) t^n`, known modulo `t^{n_max+1}`.
    ///
    /// The functional equation `q = t s(q)` is checked before returning.
    pub fn q_series(&self) -> Result<TruncatedSeries<R>> {
        let n = self.n_max();
        let q = TruncatedSeries::from_fn(n + 1, |i| if i == 0 { R::zero() } else { self.q_at_zero(i) });
        let s = self.s.truncate(n)?;
        let rhs = s.compose(&q)?.shift_up();
        if !q.agrees_with(&rhs) {
            return Err(Error::VerificationFailed("q != t s(q)".into()));
        }
        Ok(q)
    }
}

/// `(k+1)/n [x^{n-k-1}] s(x)^n`, the coefficient of `t^n` in `q(t)^{k+1}`.
pub fn lagrange_coeff<R: Ring>(s: &TruncatedSeries<R>, n: usize, k: usize) -> Result<R> {
    if n == 0 || k >= n {
        return Err(Error::IndexOutOfRange(format!("need 0 <= k < n, got n={n}, k={k}")));
    }
    let needed = n - k;
    if s.order() < needed {
        return Err(Error::InsufficientPrecision { needed, available: s.order() });
    }
    let sn = s.truncate(needed)?.pow_int(n as u32);
    Ok(sn.coeff(n - k - 1).scale(&Rational::frac(k as i64 + 1, n as i64)))
}

/// Both sides of `n [x^n] q^k = k [x^{n-k}] (x/p)^n` for `q` the reversion of `p`.
///
/// The left side comes from Newton reversion, the right from `s = x/p`.
pub fn lagrange_burmann_check<R: Ring>(p: &TruncatedSeries<R>, n: usize, k: usize) -> Result<(R, R)> {
    if p.order() < 2 || !p.coeff(0).is_zero() || p.coeff(1).unit_inverse().is_none() {
        return Err(Error::BadValuation);
    }
    if k > n {
        return Err(Error::IndexOutOfRange(format!("need k <= n, got n={n}, k={k}")));
    }
    let order = p.order();
    if n >= order || n - k + 1 >= order {
        return Err(Error::InsufficientPrecision { needed: n + 1, available: order });
    }
    let q = p.revert()?;
    let lhs = q.pow_int(k as u32).coeff(n).scale(&Rational::from(n));
    let s = p.shift_down()?.invert()?;
    let rhs = s.pow_int(n as u32).coeff(n - k).scale(&Rational::from(k));
    Ok((lhs, rhs))
}

/// The two sides of `Σ Q_n(x) t^n = q(t) / (1 - x q(t))` as series in `t`
/// whose coefficients are polynomials in `var`.
#[derive(Clone, Debug)]
pub struct GeneratingPair {
    pub from_mirrors: TruncatedSeries<MultiPoly>,
    pub from_q: TruncatedSeries<MultiPoly>,
}

impl GeneratingPair {
    pub fn agree(&self) -> bool {
        self.from_mirrors == self.from_q
    }
}

pub fn full_generating_series<R: Ring>(dl: &DLSequence<R>, var: &str) -> Result<GeneratingPair> {
    let n = dl.n_max();
    let from_mirrors = TruncatedSeries::from_fn(n + 1, |i| {
        if i == 0 {
            MultiPoly::zero()
        } else {
            dl.q(i).to_multipoly(var)
        }
    });
    let q = dl.q_series()?.map(Ring::to_multipoly);
    let x = MultiPoly::var(var);
    let denom = TruncatedSeries::one(n + 1).sub(&q.scale_by(&x));
    let from_q = q.div(&denom)?;
    Ok(GeneratingPair { from_mirrors, from_q })
}

/// Both sides of `(k+1)(n-k) n^{n-2-k} = k Σ_{m=k}^{n-1} C(n-k, n-m) m^{m-1-k} (n-m)^{n-m-1}`.
pub fn exp_identity_sides(n: i64, k: i64) -> Result<(Rational, Rational)> {
    if !(n > k && k > 1) {
        return Err(Error::BadRange(format!("need n > k > 1, got n={n}, k={k}")));
    }
    let nn = Rational::from(n);
    let lhs = Rational::from((k + 1) * (n - k)) * nn.pow(n - 2 - k)?;
    let mut sum = Rational::zero();
    for m in k..n {
        let term = Rational::binomial(n - k, n - m)
            * Rational::from(m).pow(m - 1 - k)?
            * Rational::from(n - m).pow(n - m - 1)?;
        sum += &term;
    }
    Ok((lhs, Rational::from(k) * sum))
}

pub fn exp_identity_check(n: i64, k: i64) -> Result<bool> {
    let (l, r) = exp_identity_sides(n, k)?;
    Ok(l == r)
}

fn check_tangent<R: Ring>(f: &TruncatedSeries<R>) -> Result<()> {
    if f.order() < 2 || !f.coeff(0).is_zero() || !f.coeff(1).is_one() {
        return Err(Error::NotTangentToIdentity);
    }
    Ok(())
}

/// The `m`-fold composition `f ∘ ... ∘ f`; `m = 0` gives the identity.
pub fn composition_iterate<R: Ring>(f: &TruncatedSeries<R>, m: usize) -> Result<TruncatedSeries<R>> {
    let mut acc = TruncatedSeries::x(f.order());
    for _ in 0..m {
        acc = f.compose(&acc)?;
    }
    Ok(acc)
}

/// Polynomials `C_1(x), ..., C_{n_max}(x)` with `f^{∘x}(t) = Σ C_i(x) t^i`.
///
/// `C_n` has degree at most `n-1`, so it is the interpolant of the integer
/// iterates `f^{∘0}, ..., f^{∘(n-1)}` at nodes `0..n-1`.
pub fn compose_iterate_interpolate<R: Ring>(f: &TruncatedSeries<R>, n_max: usize) -> Result<Vec<UniPoly<R>>> {
    check_tangent(f)?;
    if f.order() <= n_max {
        return Err(Error::InsufficientPrecision { needed: n_max + 1, available: f.order() });
    }
    let f = f.truncate(n_max + 1)?;
    let mut iterates = Vec::with_capacity(n_max);
    let mut acc = TruncatedSeries::x(n_max + 1);
    for _ in 0..n_max {
        iterates.push(acc.clone());
        acc = f.compose(&acc)?;
    }
    Ok((1..=n_max)
        .map(|n| {
            let values: Vec<R> = iterates[..n].iter().map(|it| it.coeff(n).clone()).collect();
            interpolate_integer_nodes(&values)
        })
        .collect())
}

/// Upper-triangular matrix whose row `k` (1-based) holds `[x^1..x^size] f^k`.
///
/// With this orientation `M(f ∘ g) = M(f) · M(g)`.
pub fn composition_matrix<R: Ring>(f: &TruncatedSeries<R>, size: usize) -> Result<Matrix<R>> {
    if f.order() < 2 || !f.coeff(0).is_zero() || f.coeff(1).is_zero() {
        return Err(Error::BadValuation);
    }
    if f.order() <= size {
        return Err(Error::InsufficientPrecision { needed: size + 1, available: f.order() });
    }
    let f = f.truncate(size + 1)?;
    let mut rows = Vec::with_capacity(size);
    let mut power = f.clone();
    for _ in 0..size {
        rows.push(power.coeffs()[1..].to_vec());
        power = power.mul(&f);
    }
    Matrix::from_rows(rows)
}
