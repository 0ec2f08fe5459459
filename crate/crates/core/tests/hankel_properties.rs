use proptest::prelude::*;

use dlrev::hankel::{self, JFraction};
use dlrev::{Rational, Ring, TruncatedSeries};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| Rational::frac(n, d))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn sequence(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), len)
}

fn jfraction(depth: usize) -> impl Strategy<Value = JFraction<Rational>> {
    (nonzero(), prop::collection::vec(rational(), depth + 1), prop::collection::vec(nonzero(), depth))
        .prop_map(|(d0, p, q)| JFraction::new(d0, p, q).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn inverse_transform_preserves_hankel(a in sequence(9), m in 1usize..4) {
        let h = hankel::hankel_transform(&a, 0, 5).unwrap();
        let s = TruncatedSeries::new(a).unwrap();
        let im = hankel::inverse_transform_power(&s, m).unwrap();
        prop_assert_eq!(hankel::hankel_transform(im.coeffs(), 0, 5).unwrap(), h);
    }

    #[test]
    fn binomial_transform_preserves_hankel(a in sequence(9), x in rational()) {
        let h = hankel::hankel_transform(&a, 0, 5).unwrap();
        let b = hankel::binomial_transform(&a, &x);
        prop_assert_eq!(&b, &hankel::binomial_transform_gf(&a, &x).unwrap());
        prop_assert_eq!(hankel::hankel_transform(&b, 0, 5).unwrap(), h);
    }

    #[test]
    fn binomial_transforms_compose(a in sequence(7), x in rational(), y in rational()) {
        let twice = hankel::binomial_transform(&hankel::binomial_transform(&a, &x), &y);
        prop_assert_eq!(twice, hankel::binomial_transform(&a, &(&x + &y)));
    }

    #[test]
    fn condensation_identity(a in sequence(12)) {
        prop_assert_eq!(hankel::dodgson_check(&a, 3, 4).unwrap(), None);
    }

    #[test]
    fn fast_path_matches_direct(a in sequence(10)) {
        prop_assert_eq!(hankel::hankel_transform_fast(&a, 5).unwrap(), hankel::hankel_transform(&a, 0, 5).unwrap());
    }

    #[test]
    fn jfraction_round_trip(jf in jfraction(5)) {
        let d = hankel::jfraction_contract(&jf, 12).unwrap();
        prop_assert_eq!(hankel::jfraction_expand(&d, 5).unwrap(), jf.clone());
        let json = serde_json::to_string(&jf).unwrap();
        prop_assert_eq!(serde_json::from_str::<JFraction<Rational>>(&json).unwrap(), jf);
    }

    #[test]
    fn principal_minors_from_jfraction(jf in jfraction(4)) {
        let d = hankel::jfraction_contract(&jf, 9).unwrap();
        for k in 0..=4 {
            prop_assert_eq!(
                hankel::principal_minor_product(&jf, k).unwrap(),
                hankel::hankel_det(d.coeffs(), 0, k + 1).unwrap()
            );
        }
    }

    #[test]
    fn scaling_sequence_scales_determinants(a in sequence(9), c in nonzero()) {
        let scaled: Vec<Rational> = a.iter().map(|x| x * &c).collect();
        let h = hankel::hankel_transform(&a, 0, 5).unwrap();
        let hs = hankel::hankel_transform(&scaled, 0, 5).unwrap();
        for (n, (x, y)) in h.iter().zip(&hs).enumerate() {
            prop_assert_eq!(y, &(x * &c.pow(n as i64 + 1).unwrap()));
        }
    }
}

#[test]
fn catalan_and_motzkin_hankel() {
    let catalan: Vec<Rational> = (0..11).map(|k| Rational::binomial(2 * k, k) / Rational::from(k + 1)).collect();
    assert!(hankel::hankel_transform(&catalan, 0, 6).unwrap().iter().all(Ring::is_one));
    assert!(hankel::hankel_transform(&catalan, 1, 5).unwrap().iter().all(Ring::is_one));
    let motzkin: Vec<Rational> = [1, 1, 2, 4, 9, 21, 51, 127, 323].iter().map(|&m| Rational::from(m as i64)).collect();
    assert!(hankel::hankel_transform(&motzkin, 0, 5).unwrap().iter().all(Ring::is_one));
}
