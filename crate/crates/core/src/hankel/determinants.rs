use crate::error::{Error, Result};
use crate::reversion::{letter_series, DLSequence};
use crate::ring::{Matrix, MultiPoly, Rational, Ring};
use crate::series::TruncatedSeries;

use super::transforms::inverse_transform_iterate;

fn require_len(len: usize, shift: usize, size: usize) -> Result<()> {
    let needed = if size == 0 { 0 } else { shift + 2 * size - 1 };
    if len < needed {
        return Err(Error::InsufficientSequence { needed, available: len });
    }
    Ok(())
}

/// `(s_{i+j+shift})_{0 <= i, j < size}`.
pub fn hankel_matrix<R: Ring>(seq: &[R], shift: usize, size: usize) -> Result<Matrix<R>> {
    require_len(seq.len(), shift, size)?;
    Ok(Matrix::from_fn(size, size, |i, j| seq[i + j + shift].clone()))
}

/// `d_{shift,size}`; the empty determinant is 1.
pub fn hankel_det<R: Ring>(seq: &[R], shift: usize, size: usize) -> Result<R> {
    hankel_matrix(seq, shift, size)?.det_fraction_free()
}

/// `d_{shift,1}, ..., d_{shift,n_max}`.
pub fn hankel_transform<R: Ring>(seq: &[R], shift: usize, n_max: usize) -> Result<Vec<R>> {
    require_len(seq.len(), shift, n_max)?;
    (1..=n_max).map(|n| hankel_det(seq, shift, n)).collect()
}

/// `d_{0,1..n_max}` by condensation
/// `d_{k,n+1} = (d_{k,n} d_{k+2,n} - d_{k+1,n}^2) / d_{k+2,n-1}`, starting from
/// `d_{k,0} = 1` and `d_{k,1} = s_k`.
pub fn hankel_transform_condensation<R: Ring>(seq: &[R], n_max: usize) -> Result<Vec<R>> {
    require_len(seq.len(), 0, n_max)?;
    if n_max == 0 {
        return Ok(Vec::new());
    }
    let mut prev: Vec<R> = vec![R::one(); seq.len() + 1];
    let mut cur: Vec<R> = seq.to_vec();
    let mut out = vec![cur[0].clone()];
    for n in 1..n_max {
        // cur holds d_{k,n}, prev holds d_{k,n-1}; shifts up to len - 2n.
        let count = seq.len() - 2 * n;
        let mut next = Vec::with_capacity(count);
        for k in 0..count {
            let pivot = &prev[k + 2];
            if pivot.is_zero() {
                return Err(Error::ZeroPivot { shift: k + 2, size: n - 1 });
            }
            let num = cur[k].mul(&cur[k + 2]).sub(&cur[k + 1].mul(&cur[k + 1]));
            next.push(num.div_exact(pivot).ok_or(Error::InexactDivision)?);
        }
        out.push(next[0].clone());
        prev = cur;
        cur = next;
    }
    Ok(out)
}

/// Condensation when every pivot is nonzero, direct determinants otherwise.
pub fn hankel_transform_fast<R: Ring>(seq: &[R], n_max: usize) -> Result<Vec<R>> {
    match hankel_transform_condensation(seq, n_max) {
        Err(Error::ZeroPivot { .. }) => hankel_transform(seq, 0, n_max),
        other => other,
    }
}

/// Checks `d_{k-1,n+1} d_{k+1,n-1} = d_{k-1,n} d_{k+1,n} - d_{k,n}^2` for
/// `1 <= k <= k_max`, `1 <= n <= n_max`, all computed directly.
///
/// Returns the first failing `(k, n)`, or `None`.
pub fn dodgson_check<R: Ring>(seq: &[R], k_max: usize, n_max: usize) -> Result<Option<(usize, usize)>> {
    let needed = k_max + 2 * n_max;
    if seq.len() < needed {
        return Err(Error::InsufficientSequence { needed, available: seq.len() });
    }
    let d = |k: usize, n: usize| hankel_det(seq, k, n);
    for k in 1..=k_max {
        for n in 1..=n_max {
            let lhs = d(k - 1, n + 1)?.mul(&d(k + 1, n - 1)?);
            let rhs = d(k - 1, n)?.mul(&d(k + 1, n)?).sub(&d(k, n)?.pow(2));
            if lhs != rhs {
                return Ok(Some((k, n)));
            }
        }
    }
    Ok(None)
}

/// Degree in `x` of the `n x n` Hankel determinant, shifted by `k`, of the
/// coefficients of `a / (1 + x t a)`; `None` when the determinant vanishes.
pub fn laymangen_degree_check(a: &[Rational], k: usize, n: usize) -> Result<Option<u32>> {
    if a.first().is_none_or(Rational::is_zero) {
        return Err(Error::NonInvertibleConstantTerm);
    }
    require_len(a.len(), k, n)?;
    let len = if n == 0 { a.len() } else { k + 2 * n - 1 };
    let series = TruncatedSeries::new(a[..len.max(1)].to_vec())?;
    let ix = inverse_transform_iterate(&series, "x")?;
    let det = hankel_det(ix.coeffs(), k, n)?;
    Ok(det.degree_in("x"))
}

/// Whether `det((Q_{1+i+j}(x))_{0 <= i, j < n})` is free of `s_1`, over
/// letters `s_0..s_{2n-2}` and `x`.
pub fn laymangen_s1_check(n: usize) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    let m = 2 * n - 1;
    let dl = DLSequence::build(&letter_series("s", m), m)?;
    let entries: Vec<MultiPoly> = (1..=m).map(|i| dl.q(i).to_multipoly("x")).collect();
    let det = hankel_det(&entries, 0, n)?;
    Ok(det.derivative("s1").is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    fn catalan(n: usize) -> Vec<Rational> {
        (0..n as i64).map(|k| Rational::binomial(2 * k, k) / Rational::from(k + 1)).collect()
    }

    #[test]
    fn small_determinants() {
        let s: Vec<MultiPoly> = (0..5).map(|i| MultiPoly::var(&format!("s{i}"))).collect();
        assert_eq!(hankel_det(&s, 0, 2).unwrap(), &s[0] * &s[2] - &s[1] * &s[1]);
        assert_eq!(hankel_det(&s, 3, 1).unwrap(), s[3]);
        assert_eq!(hankel_det(&s, 2, 0).unwrap(), MultiPoly::one());
        assert_eq!(hankel_det(&s, 0, 4), Err(Error::InsufficientSequence { needed: 7, available: 5 }));
    }

    #[test]
    fn catalan_transforms() {
        let c = catalan(14);
        assert_eq!(hankel_transform(&c, 0, 6).unwrap(), ints(&[1; 6]));
        assert_eq!(hankel_transform(&c, 1, 6).unwrap(), ints(&[1; 6]));
        assert_eq!(hankel_transform_condensation(&c, 6).unwrap(), ints(&[1; 6]));
    }

    #[test]
    fn condensation_zero_pivot_falls_back() {
        // s_2 = 0 makes d_{2,1} vanish.
        let s = ints(&[1, 2, 0, 3, 1, -1, 2, 5, 1]);
        assert!(matches!(hankel_transform_condensation(&s, 4), Err(Error::ZeroPivot { .. })));
        assert_eq!(hankel_transform_fast(&s, 4).unwrap(), hankel_transform(&s, 0, 4).unwrap());
    }

    #[test]
    fn dodgson_symbolic() {
        let s: Vec<MultiPoly> = (0..7).map(|i| MultiPoly::var(&format!("s{i}"))).collect();
        assert_eq!(dodgson_check(&s, 2, 2).unwrap(), None);
    }

    #[test]
    fn degree_examples() {
        let a = ints(&[2, -1, 3, 1, 4, 1, 5, 9, 2, 6]);
        assert_eq!(laymangen_degree_check(&a, 0, 3).unwrap(), Some(0));
        assert_eq!(laymangen_degree_check(&a, 3, 1).unwrap(), Some(3));
        assert!(laymangen_degree_check(&a, 2, 3).unwrap().unwrap() <= 2);
    }

    #[test]
    fn s1_free_small() {
        for n in 1..=3 {
            assert!(laymangen_s1_check(n).unwrap());
        }
    }
}
