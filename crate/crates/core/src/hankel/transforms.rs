use crate::error::Result;
use crate::ring::{MultiPoly, Rational, Ring};
use crate::series::TruncatedSeries;

/// `a / (1 + t a)`.
pub fn inverse_transform<R: Ring>(a: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    let n = a.order();
    let denom = TruncatedSeries::one(n).add(&a.shift_up().truncate(n)?);
    a.div(&denom)
}

/// The `m`-fold iterate of [`inverse_transform`].
pub fn inverse_transform_power<R: Ring>(a: &TruncatedSeries<R>, m: usize) -> Result<TruncatedSeries<R>> {
    let mut acc = a.clone();
    for _ in 0..m {
        acc = inverse_transform(&acc)?;
    }
    Ok(acc)
}

/// `a / (1 + x t a)` with `x` a polynomial indeterminate named `var`.
///
/// At `x = m` this is the `m`-fold iterate of the inverse transform.
pub fn inverse_transform_iterate<R: Ring>(a: &TruncatedSeries<R>, var: &str) -> Result<TruncatedSeries<MultiPoly>> {
    let n = a.order();
    let a = a.map(Ring::to_multipoly);
    let x = MultiPoly::var(var);
    let denom = TruncatedSeries::one(n).add(&a.shift_up().truncate(n)?.scale_by(&x));
    a.div(&denom)
}

/// `b_k = Σ_n C(k, n) a_n x^{k-n}` by the direct sum.
pub fn binomial_transform<R: Ring>(a: &[R], x: &Rational) -> Vec<R> {
    (0..a.len())
        .map(|k| {
            a.iter().enumerate().take(k + 1).fold(R::zero(), |acc, (n, an)| {
                let w = Rational::binomial(k as i64, n as i64) * x.pow((k - n) as i64).expect("nonnegative");
                acc.add(&an.scale(&w))
            })
        })
        .collect()
}

/// The same transform as `(1 - x t)^{-1} a(t / (1 - x t))`.
pub fn binomial_transform_gf<R: Ring>(a: &[R], x: &Rational) -> Result<Vec<R>> {
    let n = a.len();
    let a = TruncatedSeries::new(a.to_vec())?;
    let one_minus = TruncatedSeries::one(n).sub(&TruncatedSeries::x(n).scale(x));
    let geom = one_minus.invert()?;
    let inner = geom.shift_up().truncate(n)?;
    Ok(a.compose(&inner)?.mul(&geom).into_coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reversion::DLSequence;

    type S = TruncatedSeries<Rational>;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn inverse_of_geometric_is_one() {
        let s = S::from_poly(&ints(&[1, 1]), 9);
        let a = DLSequence::build(&s, 9).unwrap().q_series().unwrap().shift_down().unwrap();
        assert_eq!(inverse_transform(&a).unwrap(), S::one(9));
        assert_eq!(inverse_transform(&S::zero(5)).unwrap(), S::zero(5));
    }

    #[test]
    fn iterate_low_coefficients() {
        let a = crate::reversion::letter_series("a", 3);
        let i = inverse_transform_iterate(&a, "x").unwrap();
        let v = |n: &str| MultiPoly::var(n);
        let (a0, a1, a2, x) = (v("a0"), v("a1"), v("a2"), v("x"));
        assert_eq!(i.coeff(0), &a0);
        assert_eq!(i.coeff(1), &(&a1 - &(a0.pow(2) * x.clone())));
        assert_eq!(i.coeff(2), &(a2 - MultiPoly::from(2) * a0.clone() * a1 * x.clone() + a0.pow(3) * x.pow(2)));
    }

    #[test]
    fn iterate_at_integers() {
        let a = S::from_poly(&[Rational::from(2), Rational::frac(-1, 3), Rational::from(5)], 8);
        let ix = inverse_transform_iterate(&a, "x").unwrap();
        for m in 0..4 {
            let at = ix.map(|c| MultiPoly::constant(c.substitute("x", &Rational::from(m as i64)).as_constant().unwrap()));
            let direct = inverse_transform_power(&a, m).unwrap().map(Ring::to_multipoly);
            assert_eq!(at, direct);
        }
    }

    #[test]
    fn binomial_examples() {
        let a = ints(&[3, -1, 4, 1, 5]);
        assert_eq!(binomial_transform(&a, &Rational::zero()), a);
        let ones = ints(&[1; 8]);
        let b = binomial_transform(&ones, &Rational::one());
        assert_eq!(b, (0..8).map(|k| Rational::from(1i64 << k)).collect::<Vec<_>>());
        let x = Rational::frac(-2, 3);
        assert_eq!(binomial_transform(&a, &x), binomial_transform_gf(&a, &x).unwrap());
    }
}
