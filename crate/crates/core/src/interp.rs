//! Unit series acting on tangent diffeomorphisms.
//!
//! Pairs `(A, α)` with `A(0) = 1` and `α = x + O(x^2)` form a group under
//! `(A, α)(B, β) = (A·(B∘α), β∘α)`. For each rational `τ` the pairs
//! `(A, x A^τ)` form a subgroup, and `τ ↦ 1/(A ∘ (x A^τ)^{<-1>})` deforms
//! the multiplicative inverse `1/A` (at `τ = 0`) into `(xA)^{<-1>}/x`
//! (at `τ = 1`).

use crate::error::{Error, Result};
use crate::ring::{interpolate_integer_nodes, Rational, Ring};
use crate::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement<R: Ring> {
    a: TruncatedSeries<R>,
    alpha: TruncatedSeries<R>,
}

fn check_unit<R: Ring>(a: &TruncatedSeries<R>) -> Result<()> {
    if !a.coeff(0).is_one() {
        return Err(Error::BadConstantTerm("unit part needs constant term 1"));
    }
    Ok(())
}

fn check_diffeo<R: Ring>(alpha: &TruncatedSeries<R>) -> Result<()> {
    if alpha.order() < 2 || !alpha.coeff(0).is_zero() || !alpha.coeff(1).is_one() {
        return Err(Error::NotTangentToIdentity);
    }
    Ok(())
}

impl<R: Ring> GroupElement<R> {
    /// Both parts are truncated to their common order.
    pub fn new(a: TruncatedSeries<R>, alpha: TruncatedSeries<R>) -> Result<Self> {
        check_unit(&a)?;
        check_diffeo(&alpha)?;
        let n = a.order().min(alpha.order());
        Ok(GroupElement { a: a.truncate(n)?, alpha: alpha.truncate(n)? })
    }

    pub fn identity(order: usize) -> Self {
        GroupElement { a: TruncatedSeries::one(order), alpha: TruncatedSeries::x(order) }
    }

    pub fn unit_part(&self) -> &TruncatedSeries<R> {
        &self.a
    }

    pub fn diffeo_part(&self) -> &TruncatedSeries<R> {
        &self.alpha
    }

    pub fn order(&self) -> usize {
        self.a.order()
    }

    pub fn truncate(&self, n: usize) -> Result<Self> {
        Ok(GroupElement { a: self.a.truncate(n)?, alpha: self.alpha.truncate(n)? })
    }

    /// Whether the diffeomorphism part equals `x A^τ`.
    pub fn in_subgroup(&self, tau: &Rational) -> Result<bool> {
        let expected = self.a.pow(tau)?.shift_up();
        Ok(self.alpha.agrees_with(&expected))
    }
}

/// `(A, α)(B, β) = (A·(B∘α), β∘α)`.
pub fn group_mul<R: Ring>(g: &GroupElement<R>, h: &GroupElement<R>) -> Result<GroupElement<R>> {
    let a = g.a.mul(&h.a.compose(&g.alpha)?);
    let alpha = h.alpha.compose(&g.alpha)?;
    GroupElement::new(a, alpha)
}

/// `(A, α)^{-1} = (1/(A∘α^{<-1>}), α^{<-1>})`.
pub fn group_inv<R: Ring>(g: &GroupElement<R>) -> Result<GroupElement<R>> {
    let beta = g.alpha.revert()?;
    let a = g.a.compose(&beta)?.invert()?;
    GroupElement::new(a, beta)
}

/// `(A, x A^τ)`.
pub fn sg_element<R: Ring>(a: &TruncatedSeries<R>, tau: &Rational) -> Result<GroupElement<R>> {
    check_unit(a)?;
    let alpha = a.pow(tau)?.shift_up();
    GroupElement::new(a.clone(), alpha)
}

/// `((α/x)^{1/τ}, α)`, the subgroup element with diffeomorphism part `α`.
pub fn sg_from_diffeo<R: Ring>(alpha: &TruncatedSeries<R>, tau: &Rational) -> Result<GroupElement<R>> {
    check_diffeo(alpha)?;
    let inv_tau = tau.recip()?;
    let a = alpha.shift_down()?.pow(&inv_tau)?;
    GroupElement::new(a, alpha.clone())
}

/// `F_τ = 1/(A ∘ (x A^τ)^{<-1>})`, known to the order of `A`.
pub fn deform_inversion_reversion<R: Ring>(a: &TruncatedSeries<R>, tau: &Rational) -> Result<TruncatedSeries<R>> {
    check_unit(a)?;
    let beta = a.pow(tau)?.shift_up().revert()?;
    a.compose(&beta)?.invert()
}

/// `F_τ = ((x A^τ)^{<-1>}/x)^{1/τ}` for `τ != 0`.
///
/// Writing `β` for the reversion of `x A^τ`, `β·A(β)^τ = x` gives
/// `1/A(β) = (β/x)^{1/τ}`.
pub fn deform_via_automorphism<R: Ring>(a: &TruncatedSeries<R>, tau: &Rational) -> Result<TruncatedSeries<R>> {
    check_unit(a)?;
    let beta = a.pow(tau)?.shift_up().revert()?;
    let f = beta.shift_down()?.pow(&tau.recip()?)?;
    f.truncate(a.order())
}

/// `G_τ = 1/(A ∘ (∫_0 A^τ)^{<-1>})`.
pub fn deform_derivative_variant<R: Ring>(a: &TruncatedSeries<R>, tau: &Rational) -> Result<TruncatedSeries<R>> {
    check_unit(a)?;
    let beta = a.pow(tau)?.integrate().revert()?;
    a.compose(&beta)?.invert()
}

/// Checks that `[x^k] F_τ` is a polynomial of degree at most `k` in `τ`.
///
/// The interpolant through `τ = 0..k` must also match `τ = k+1` and
/// `τ = probe`.
pub fn deformation_is_polynomial_in_tau(a: &TruncatedSeries<Rational>, k: usize, probe: &Rational) -> Result<bool> {
    if k >= a.order() {
        return Err(Error::InsufficientPrecision { needed: k + 1, available: a.order() });
    }
    let a = a.truncate(k + 1)?;
    let coeff_at = |tau: &Rational| -> Result<Rational> {
        Ok(deform_inversion_reversion(&a, tau)?.coeff(k).clone())
    };
    let values = (0..=k as i64).map(|t| coeff_at(&Rational::from(t))).collect::<Result<Vec<_>>>()?;
    let poly = interpolate_integer_nodes(&values);
    let extra = Rational::from(k as i64 + 1);
    Ok(poly.eval(&extra) == coeff_at(&extra)? && poly.eval(probe) == coeff_at(probe)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = TruncatedSeries<Rational>;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    fn sample(order: usize) -> S {
        S::from_poly(&[Rational::one(), Rational::frac(2, 3), Rational::from(-1), Rational::frac(1, 5)], order)
    }

    #[test]
    fn neutral_and_inverse() {
        let n = 10;
        let g = GroupElement::new(sample(n), S::from_poly(&ints(&[0, 1, 3, -2]), n)).unwrap();
        let e = GroupElement::identity(n);
        assert_eq!(group_mul(&e, &g).unwrap(), g);
        assert_eq!(group_mul(&g, &e).unwrap(), g);
        let gi = group_inv(&g).unwrap();
        assert_eq!(group_mul(&g, &gi).unwrap(), e);
        assert_eq!(group_mul(&gi, &g).unwrap(), e);
        assert_eq!(group_inv(&e).unwrap(), e);
    }

    #[test]
    fn unit_subgroup_inverse() {
        let a = sample(8);
        let g = GroupElement::new(a.clone(), S::x(8)).unwrap();
        let gi = group_inv(&g).unwrap();
        assert_eq!(gi.unit_part(), &a.invert().unwrap());
        assert_eq!(gi.diffeo_part(), &S::x(8));
    }

    #[test]
    fn sg_examples() {
        let a = S::from_poly(&ints(&[1, 1]), 6);
        let g = sg_element(&a, &Rational::one()).unwrap();
        assert_eq!(g.diffeo_part(), &S::from_poly(&ints(&[0, 1, 1]), 6));
        let g0 = sg_element(&a, &Rational::zero()).unwrap();
        assert_eq!(g0.diffeo_part(), &S::x(6));
        assert_eq!(sg_element(&S::x(4), &Rational::one()), Err(Error::BadConstantTerm("unit part needs constant term 1")));
    }

    #[test]
    fn sg_closed_under_product() {
        let tau = Rational::frac(1, 2);
        let g = sg_element(&sample(10), &tau).unwrap();
        let h = sg_element(&S::from_poly(&ints(&[1, -2, 0, 7]), 10), &tau).unwrap();
        assert!(group_mul(&g, &h).unwrap().in_subgroup(&tau).unwrap());
        assert!(group_inv(&g).unwrap().in_subgroup(&tau).unwrap());
    }

    #[test]
    fn deformation_endpoints() {
        let a = sample(12);
        assert_eq!(deform_inversion_reversion(&a, &Rational::zero()).unwrap(), a.invert().unwrap());
        let f1 = deform_inversion_reversion(&a, &Rational::one()).unwrap();
        let xa_rev = a.shift_up().revert().unwrap();
        assert!(f1.shift_up().agrees_with(&xa_rev));
    }

    #[test]
    fn two_routes_agree_at_half() {
        let a = S::from_poly(&ints(&[1, 1]), 12);
        let tau = Rational::frac(1, 2);
        assert_eq!(deform_inversion_reversion(&a, &tau).unwrap(), deform_via_automorphism(&a, &tau).unwrap());
    }

    #[test]
    fn derivative_variant_closed_form() {
        let n = 10;
        let a = S::from_poly(&ints(&[1, 1]), n);
        assert_eq!(deform_derivative_variant(&a, &Rational::zero()).unwrap(), a.invert().unwrap());
        let g1 = deform_derivative_variant(&a, &Rational::one()).unwrap();
        // sqrt(1+2x) - 1 = Σ_{j>=1} C(1/2, j) (2x)^j
        let mut expected = vec![Rational::zero()];
        let mut c = Rational::one();
        for j in 1..=n as i64 {
            c = c * (Rational::frac(1, 2) - Rational::from(j - 1)) / Rational::from(j);
            expected.push(&c * Rational::from(2).pow(j).unwrap());
        }
        assert!(g1.integrate().agrees_with(&S::new(expected).unwrap()));
    }

    #[test]
    fn coefficients_polynomial_in_tau() {
        let a = sample(8);
        for k in 0..6 {
            assert!(deformation_is_polynomial_in_tau(&a, k, &Rational::frac(-3, 7)).unwrap());
        }
    }
}
