use proptest::prelude::*;

use dlrev::interp::{self, GroupElement};
use dlrev::reversion::{self, letter_series, DLSequence};
use dlrev::{MultiPoly, Rational, TruncatedSeries};

type S = TruncatedSeries<Rational>;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| Rational::frac(n, d))
}

fn series(order: usize) -> impl Strategy<Value = S> {
    prop::collection::vec(rational(), order).prop_map(|c| S::new(c).unwrap())
}

fn unit(order: usize) -> impl Strategy<Value = S> {
    prop::collection::vec(rational(), order - 1).prop_map(move |c| {
        S::from_fn(order, |i| if i == 0 { Rational::one() } else { c[i - 1].clone() })
    })
}

fn diffeo(order: usize) -> impl Strategy<Value = S> {
    prop::collection::vec(rational(), order - 2).prop_map(move |c| {
        S::from_fn(order, |i| match i {
            0 => Rational::zero(),
            1 => Rational::one(),
            _ => c[i - 2].clone(),
        })
    })
}

fn invertible(order: usize) -> impl Strategy<Value = S> {
    (series(order), rational().prop_filter("nonzero", |r| !r.is_zero()))
        .prop_map(|(s, c)| S::from_fn(s.order(), |i| if i == 0 { c.clone() } else { s.coeff(i).clone() }))
}

const N: usize = 8;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in series(N), b in series(N), c in series(N)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&S::one(N)), a.clone());
        prop_assert_eq!(a.sub(&a), S::zero(N));
    }

    #[test]
    fn inverse_and_division(a in invertible(N), b in series(N)) {
        prop_assert_eq!(a.mul(&a.invert().unwrap()), S::one(N));
        prop_assert_eq!(b.div(&a).unwrap().mul(&a), b);
    }

    #[test]
    fn leibniz_rule(a in series(N), b in series(N)) {
        let lhs = a.mul(&b).derivative().unwrap();
        let rhs = a.derivative().unwrap().mul(&b.truncate(N - 1).unwrap())
            .add(&a.truncate(N - 1).unwrap().mul(&b.derivative().unwrap()));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.integrate().derivative().unwrap(), a);
    }

    #[test]
    fn composition_group(f in diffeo(N), g in diffeo(N), h in diffeo(N)) {
        prop_assert_eq!(f.compose(&g).unwrap().compose(&h).unwrap(), f.compose(&g.compose(&h).unwrap()).unwrap());
        let fi = f.revert().unwrap();
        prop_assert_eq!(f.compose(&fi).unwrap(), S::x(N));
        prop_assert_eq!(fi.compose(&f).unwrap(), S::x(N));
        prop_assert_eq!(f.compose(&S::x(N)).unwrap(), f);
    }

    #[test]
    fn composition_is_a_ring_map(a in series(N), b in series(N), g in diffeo(N)) {
        prop_assert_eq!(a.mul(&b).compose(&g).unwrap(), a.compose(&g).unwrap().mul(&b.compose(&g).unwrap()));
        prop_assert_eq!(a.add(&b).compose(&g).unwrap(), a.compose(&g).unwrap().add(&b.compose(&g).unwrap()));
    }

    #[test]
    fn power_consistency(a in unit(N), k in 0u32..5, r in rational(), s in rational()) {
        prop_assert_eq!(a.pow(&Rational::from(k as i64)).unwrap(), a.pow_int(k));
        prop_assert_eq!(a.pow(&r).unwrap().mul(&a.pow(&s).unwrap()), a.pow(&(&r + &s)).unwrap());
        prop_assert_eq!(a.log().unwrap().exp().unwrap(), a.clone());
        prop_assert_eq!(a.pow(&Rational::from(-1)).unwrap(), a.invert().unwrap());
    }

    #[test]
    fn series_json_round_trip(a in series(N)) {
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<S>(&json).unwrap(), a);
    }

    #[test]
    fn dl_fixed_point(s in invertible(N)) {
        let dl = DLSequence::build(&s, N).unwrap();
        prop_assert!(dl.check_invariants());
        let q = dl.q_series().unwrap();
        let s_q = s.compose(&q.truncate(N).unwrap()).unwrap();
        prop_assert_eq!(q.truncate(N).unwrap().shift_down().unwrap(), s_q.truncate(N - 1).unwrap());
        let padded = S::from_fn(N + 1, |i| if i < N { s.coeff(i).clone() } else { Rational::zero() });
        prop_assert_eq!(S::x(N + 1).div(&padded).unwrap().revert().unwrap(), q);
    }

    #[test]
    fn group_axioms(a in unit(N), al in diffeo(N), b in unit(N), be in diffeo(N), c in unit(N), ga in diffeo(N)) {
        let g = GroupElement::new(a, al).unwrap();
        let h = GroupElement::new(b, be).unwrap();
        let k = GroupElement::new(c, ga).unwrap();
        let e = GroupElement::identity(N);
        let m = |x: &GroupElement<Rational>, y: &GroupElement<Rational>| interp::group_mul(x, y).unwrap();
        prop_assert_eq!(m(&m(&g, &h), &k), m(&g, &m(&h, &k)));
        prop_assert_eq!(m(&g, &e), g.clone());
        prop_assert_eq!(m(&g, &interp::group_inv(&g).unwrap()), e);
        // Projection to the diffeomorphism part reverses composition order.
        let gh = m(&g, &h);
        prop_assert_eq!(gh.diffeo_part(), &h.diffeo_part().compose(g.diffeo_part()).unwrap());
    }

    #[test]
    fn subgroup_parametrizations_agree(a in unit(N), t in rational()) {
        prop_assume!(!t.is_zero());
        let g = interp::sg_element(&a, &t).unwrap();
        prop_assert!(g.in_subgroup(&t).unwrap());
        // Dividing α by x loses one order.
        let back = interp::sg_from_diffeo(g.diffeo_part(), &t).unwrap();
        prop_assert_eq!(back.order(), N - 1);
        prop_assert_eq!(back, g.truncate(N - 1).unwrap());
        prop_assert_eq!(
            interp::deform_inversion_reversion(&a, &t).unwrap(),
            interp::deform_via_automorphism(&a, &t).unwrap()
        );
    }

    #[test]
    fn composition_matrix_homomorphism(f in diffeo(7), g in diffeo(7)) {
        let size = 6;
        let m = |x: &S| reversion::composition_matrix(x, size).unwrap();
        prop_assert_eq!(m(&f.compose(&g).unwrap()), m(&f).mul(&m(&g)).unwrap());
    }

    #[test]
    fn lagrange_burmann_random(p in diffeo(9), n in 1usize..8, k in 1usize..8) {
        prop_assume!(k <= n);
        let (a, b) = reversion::lagrange_burmann_check(&p, n, k).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn word_counts_are_catalan() {
    let nmax = 8;
    let dl = DLSequence::build(&letter_series("s", nmax), nmax).unwrap();
    let mut catalan = 1u64;
    for n in 1..=nmax {
        // Commuting letters merge words, so count monomials with multiplicity.
        let top: MultiPoly = dl.p(n).coeff(n - 1);
        assert_eq!(top.coefficient_sum(), Rational::from(catalan), "n = {n}");
        assert!(top.terms().all(|(_, c)| c.is_integer() && !c.is_negative()));
        catalan = catalan * 2 * (2 * n as u64 - 1) / (n as u64 + 1);
    }
}
