//! Named self-check suites run by `dlrev verify`.
//!
//! Every suite recomputes one family of identities from two independent
//! routes and reports each comparison. Randomized suites draw from a seeded
//! ChaCha generator, so runs are reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combinatorics as comb;
use crate::error::{Error, Result};
use crate::hankel;
use crate::interp;
use crate::reversion::{self, letter_series, DLSequence};
use crate::ring::{Matrix, MultiPoly, Rational, Ring};
use crate::series::{exp_series, TruncatedSeries};

type S = TruncatedSeries<Rational>;

pub const SUITES: &[&str] = &[
    "closed_forms",
    "sin2",
    "thm2",
    "thm3",
    "thm1",
    "thm4",
    "exp",
    "prop52",
    "thm5i",
    "thm5ii",
    "invariance",
    "dodgson",
    "jfrac",
    "thm8",
    "lgv",
    "counts",
    "bijections",
    "prop72",
    "interpolation",
];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Overrides the suite's main size parameter.
    pub order: Option<usize>,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { order: None, seed: 0x5eed }
    }
}

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, outcome: Result<bool>) {
        let (passed, detail) = match outcome {
            Ok(b) => (b, None),
            Err(e) => (false, Some(e.to_string())),
        };
        self.checks.push(Check { name: name.into(), passed, detail });
    }

    fn finish(self, suite: &str) -> SuiteReport {
        SuiteReport { suite: suite.into(), passed: self.checks.iter().all(|c| c.passed), checks: self.checks }
    }
}

/// A rational with numerator in `-9..=9` and denominator in `1..=5`.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::frac(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

pub fn random_nonzero_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let r = random_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

fn random_unit_series(rng: &mut impl Rng, order: usize) -> S {
    S::from_fn(order, |i| if i == 0 { Rational::one() } else { random_rational(rng) })
}

fn random_diffeo(rng: &mut impl Rng, order: usize) -> S {
    S::from_fn(order, |i| match i {
        0 => Rational::zero(),
        1 => Rational::one(),
        _ => random_rational(rng),
    })
}

fn catalan(n: i64) -> Rational {
    Rational::binomial(2 * n, n) / Rational::from(n + 1)
}

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut r = Recorder::new();
    let o = cfg.order;
    match name {
        "closed_forms" => closed_forms(&mut r, o.unwrap_or(30)),
        "sin2" => sin2(&mut r, o.unwrap_or(12)),
        "thm2" => thm2(&mut r, &mut rng, o.unwrap_or(20)),
        "thm3" => thm3(&mut r, &mut rng, o.unwrap_or(20)),
        "thm1" => thm1(&mut r, &mut rng, o.unwrap_or(12)),
        "thm4" => thm4(&mut r, o.unwrap_or(8)),
        "exp" => exp_forms(&mut r, o.unwrap_or(15)),
        "prop52" => prop52(&mut r, &mut rng, o.unwrap_or(16)),
        "thm5i" => thm5i(&mut r, &mut rng, o.unwrap_or(4)),
        "thm5ii" => thm5ii(&mut r, o.unwrap_or(3)),
        "invariance" => invariance(&mut r, &mut rng, o.unwrap_or(6)),
        "dodgson" => dodgson(&mut r, &mut rng, o.unwrap_or(5)),
        "jfrac" => jfrac(&mut r, &mut rng, o.unwrap_or(6)),
        "thm8" => thm8(&mut r, &mut rng, o.unwrap_or(4)),
        "lgv" => lgv(&mut r, &mut rng),
        "counts" => counts(&mut r, o.unwrap_or(12)),
        "bijections" => bijections(&mut r, o.unwrap_or(7)),
        "prop72" => r.check("reduced words", comb::reduced_word_series_check(o.unwrap_or(10))),
        "interpolation" => interpolation(&mut r, &mut rng, o.unwrap_or(8)),
        _ => return Err(Error::Malformed(format!("unknown suite {name:?}"))),
    }
    Ok(r.finish(name))
}

/// Runs one suite, or every suite for `"all"`.
pub fn run(name: &str, cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        SUITES.iter().map(|s| run_suite(s, cfg)).collect()
    } else {
        Ok(vec![run_suite(name, cfg)?])
    }
}

fn closed_forms(r: &mut Recorder, order: usize) {
    let x = S::x(order + 1);
    let p = x.div(&S::from_poly(&[Rational::one(), Rational::one()], order + 1));
    r.check(
        "x/(1+x)",
        p.and_then(|p| p.revert()).map(|q| q.coeffs()[1..].iter().all(Ring::is_one)),
    );
    let n = order.min(20);
    let e = exp_series(n + 1).compose(&S::x(n + 1).neg()).and_then(|e| S::x(n + 1).mul(&e).revert());
    r.check(
        "x e^-x",
        e.map(|q| {
            (1..=n as i64).all(|k| *q.coeff(k as usize) == Rational::from(k).pow(k - 1).unwrap() / Rational::factorial(k as u64))
        }),
    );
    let jmax = (order.min(20) - 1) / 2;
    let m = 2 * jmax + 2;
    let sq = S::x(m).mul(&S::x(m)).neg();
    let g = exp_series(m).compose(&sq).map(|e| S::x(m).mul(&e));
    r.check(
        "x e^-x^2",
        g.and_then(|g| g.revert()).map(|q| {
            (0..=jmax as i64).all(|j| {
                *q.coeff(2 * j as usize + 1)
                    == Rational::from(2 * j + 1).pow(j - 1).unwrap() / Rational::factorial(j as u64)
            })
        }),
    );
}

/// `p` with `p(x^2) = sin(x)^2`, from squaring the sine series.
pub fn sin_squared_base(terms: usize) -> S {
    let m = 2 * terms + 1;
    let sine = S::from_fn(m, |i| {
        if i % 2 == 0 {
            Rational::zero()
        } else {
            let sign = if (i / 2) % 2 == 0 { 1 } else { -1 };
            Rational::from(sign) / Rational::factorial(i as u64)
        }
    });
    let sq = sine.mul(&sine);
    S::from_fn(terms + 1, |j| sq.coeff(2 * j).clone())
}

fn sin2(r: &mut Recorder, jmax: usize) {
    let q = sin_squared_base(jmax).revert();
    r.check(
        "coefficients",
        q.clone().map(|q| {
            (1..=jmax as i64).all(|j| {
                *q.coeff(j as usize)
                    == Rational::from(2).pow(2 * j - 1).unwrap() / (Rational::from(j * j) * Rational::binomial(2 * j, j))
            })
        }),
    );
    r.check(
        "differential equation",
        q.and_then(|q| {
            let m = q.order().min(12);
            let q = q.truncate(m)?;
            let d1 = q.derivative()?;
            let d2 = d1.derivative()?;
            let n = d2.order();
            let x = S::x(n);
            let x2_minus_x = x.mul(&x).sub(&x);
            let lin = x.sub(&S::constant(Rational::frac(1, 2), n));
            let lhs = x2_minus_x
                .mul(&d2)
                .add(&lin.mul(&d1.truncate(n)?))
                .add(&S::constant(Rational::frac(1, 2), n));
            Ok(lhs.coeffs().iter().take(10).all(Ring::is_zero) && n >= 10)
        }),
    );
}

fn random_s(rng: &mut impl Rng, order: usize) -> S {
    S::from_fn(order, |i| if i == 0 { random_nonzero_rational(rng) } else { random_rational(rng) })
}

fn thm2(r: &mut Recorder, rng: &mut impl Rng, order: usize) {
    for i in 0..5 {
        let s = random_s(rng, order);
        let outcome = (|| {
            let q = DLSequence::build(&s, order)?.q_series()?;
            // x/s to order + 1 only reads s_0..s_{order-1}, so padding is harmless.
            let padded = S::from_fn(order + 1, |j| if j < order { s.coeff(j).clone() } else { Rational::zero() });
            let newton = S::x(order + 1).div(&padded)?.revert()?;
            Ok(q == newton)
        })();
        r.check(format!("random s #{i}"), outcome);
    }
}

fn thm3(r: &mut Recorder, rng: &mut impl Rng, order: usize) {
    for i in 0..5 {
        let s = random_s(rng, order);
        let outcome = (|| {
            let q = DLSequence::build(&s, order)?.q_series()?;
            Ok((1..=order).all(|n| reversion::lagrange_coeff(&s, n, 0).map(|c| c == *q.coeff(n)).unwrap_or(false)))
        })();
        r.check(format!("random s #{i}"), outcome);
    }
}

fn thm1(r: &mut Recorder, rng: &mut impl Rng, nmax: usize) {
    for i in 0..3 {
        let p = S::from_fn(nmax + 2, |j| match j {
            0 => Rational::zero(),
            1 => random_nonzero_rational(rng),
            _ => random_rational(rng),
        });
        let outcome = (|| {
            for n in 1..=nmax {
                for k in 1..=n {
                    let (a, b) = reversion::lagrange_burmann_check(&p, n, k)?;
                    if a != b {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })();
        r.check(format!("random p #{i}"), outcome);
    }
}

fn thm4(r: &mut Recorder, order: usize) {
    let n = order.max(2) - 1;
    r.check(
        "generating series",
        DLSequence::build(&letter_series("s", n), n).and_then(|dl| Ok(reversion::full_generating_series(&dl, "x")?.agree())),
    );
    let nw = n.min(8);
    r.check(
        "word oracle",
        DLSequence::build(&letter_series("s", nw), nw).map(|dl| {
            (1..=nw).all(|m| (0..m).all(|k| dl.q(m).coeff(k) == comb::word_coefficient_oracle(m, k)))
        }),
    );
}

fn exp_forms(r: &mut Recorder, nmax: usize) {
    r.check(
        "P_n closed form",
        DLSequence::build(&exp_series(nmax), nmax).map(|dl| {
            (1..=nmax as i64).all(|n| {
                let closed: Vec<Rational> = (0..n)
                    .map(|j| {
                        Rational::frac(n - j, n) * Rational::from(n).pow(j).unwrap() / Rational::factorial(j as u64)
                    })
                    .collect();
                let pn = dl.p(n as usize);
                pn.coeffs() == closed.as_slice()
                    && pn.eval(&Rational::one()) == Rational::from(n).pow(n).unwrap() / Rational::factorial(n as u64)
                    && dl.q_at_zero(n as usize)
                        == Rational::from(n).pow(n - 2).unwrap() / Rational::factorial(n as u64 - 1)
            })
        }),
    );
    let m = nmax.min(12) as i64;
    r.check(
        "binomial identity",
        (3..=m)
            .flat_map(|n| (2..n).map(move |k| (n, k)))
            .try_fold(true, |acc, (n, k)| Ok(acc && reversion::exp_identity_check(n, k)?)),
    );
}

fn prop52(r: &mut Recorder, rng: &mut impl Rng, n: usize) {
    let e = interp::GroupElement::<Rational>::identity(n);
    let mut el = || interp::GroupElement::new(random_unit_series(rng, n), random_diffeo(rng, n));
    let (g, h, k) = (el(), el(), el());
    r.check(
        "group axioms",
        (|| {
            let (g, h, k) = (g?, h?, k?);
            let gh_k = interp::group_mul(&interp::group_mul(&g, &h)?, &k)?;
            let g_hk = interp::group_mul(&g, &interp::group_mul(&h, &k)?)?;
            let gi = interp::group_inv(&g)?;
            Ok(gh_k == g_hk
                && interp::group_mul(&e, &g)? == g
                && interp::group_mul(&g, &e)? == g
                && interp::group_mul(&g, &gi)? == e
                && interp::group_mul(&gi, &g)? == e)
        })(),
    );
    for tau in [Rational::zero(), Rational::one(), Rational::frac(1, 2), Rational::from(-1), Rational::from(3)] {
        let a = random_unit_series(rng, n);
        let b = random_unit_series(rng, n);
        r.check(
            format!("closure tau={tau}"),
            (|| {
                let g = interp::sg_element(&a, &tau)?;
                let h = interp::sg_element(&b, &tau)?;
                Ok(interp::group_mul(&g, &h)?.in_subgroup(&tau)? && interp::group_inv(&g)?.in_subgroup(&tau)?)
            })(),
        );
    }
    let a = random_unit_series(rng, n);
    r.check(
        "deformation endpoints",
        (|| {
            let f0 = interp::deform_inversion_reversion(&a, &Rational::zero())?;
            let f1 = interp::deform_inversion_reversion(&a, &Rational::one())?;
            let xa = a.shift_up().revert()?;
            Ok(f0 == a.invert()? && f1.shift_up() == xa)
        })(),
    );
    r.check(
        "derivative variant endpoints",
        (|| {
            let g0 = interp::deform_derivative_variant(&a, &Rational::zero())?;
            let g1 = interp::deform_derivative_variant(&a, &Rational::one())?;
            Ok(g0 == a.invert()? && g1.integrate() == a.integrate().revert()?)
        })(),
    );
}

fn thm5i(r: &mut Recorder, rng: &mut impl Rng, kmax: usize) {
    let nmax = kmax + 1;
    for i in 0..3 {
        let len = kmax + 2 * nmax;
        let a: Vec<Rational> =
            (0..len).map(|j| if j == 0 { random_nonzero_rational(rng) } else { random_rational(rng) }).collect();
        r.check(
            format!("random sequence #{i}"),
            (0..=kmax).flat_map(|k| (1..=nmax).map(move |n| (k, n))).try_fold(true, |acc, (k, n)| {
                Ok(acc && hankel::laymangen_degree_check(&a, k, n)?.is_none_or(|d| d as usize <= k))
            }),
        );
    }
}

fn thm5ii(r: &mut Recorder, nmax: usize) {
    for n in 1..=nmax {
        r.check(format!("n={n}"), hankel::laymangen_s1_check(n));
    }
}

fn invariance(r: &mut Recorder, rng: &mut impl Rng, n: usize) {
    let len = 2 * n - 1;
    for i in 0..3 {
        let a = random_s(rng, len);
        let base = hankel::hankel_transform(a.coeffs(), 0, n);
        r.check(
            format!("inverse transform #{i}"),
            (1..=3).try_fold(true, |acc, m| {
                let im = hankel::inverse_transform_power(&a, m)?;
                Ok(acc && hankel::hankel_transform(im.coeffs(), 0, n)? == *base.as_ref().map_err(Clone::clone)?)
            }),
        );
        let x = random_rational(rng);
        r.check(
            format!("binomial transform #{i}"),
            (|| Ok(hankel::hankel_transform(&hankel::binomial_transform(a.coeffs(), &x), 0, n)? == base.clone()?))(),
        );
    }
}

fn dodgson(r: &mut Recorder, rng: &mut impl Rng, nmax: usize) {
    let kmax = 4;
    let seq: Vec<Rational> = (0..kmax + 2 * nmax).map(|_| random_rational(rng)).collect();
    r.check("random", hankel::dodgson_check(&seq, kmax, nmax).map(|v| v.is_none()));
    let letters: Vec<MultiPoly> = (0..7).map(|i| MultiPoly::var(&format!("s{i}"))).collect();
    r.check("symbolic", hankel::dodgson_check(&letters, 2, 2).map(|v| v.is_none()));
    let cat: Vec<Rational> = (0..2 * nmax as i64).map(catalan).collect();
    r.check(
        "condensation",
        (|| Ok(hankel::hankel_transform_fast(&cat, nmax)? == hankel::hankel_transform(&cat, 0, nmax)?))(),
    );
}

fn random_jfraction(rng: &mut impl Rng, depth: usize) -> hankel::JFraction<Rational> {
    hankel::JFraction::new(
        random_nonzero_rational(rng),
        (0..=depth).map(|_| random_rational(rng)).collect(),
        (0..depth).map(|_| random_nonzero_rational(rng)).collect(),
    )
    .expect("lengths match")
}

fn jfrac(r: &mut Recorder, rng: &mut impl Rng, depth: usize) {
    for i in 0..3 {
        let jf = random_jfraction(rng, depth);
        r.check(
            format!("round trip #{i}"),
            (|| {
                let d = hankel::jfraction_contract(&jf, 2 * depth + 2)?;
                Ok(hankel::jfraction_expand(&d, depth)? == jf)
            })(),
        );
    }
    let symbolic = hankel::JFraction::new(
        MultiPoly::one(),
        (0..5).map(|h| MultiPoly::var(&format!("p{h}"))).collect(),
        (0..4).map(|h| MultiPoly::var(&format!("q{h}"))).collect(),
    )
    .expect("lengths match");
    r.check(
        "Motzkin sums",
        hankel::jfraction_contract(&symbolic, 9).map(|c| {
            (0..=8).all(|n| {
                *c.coeff(n) == comb::enum_motzkin(n).iter().fold(MultiPoly::zero(), |a, p| a + comb::motzkin_weight(p))
            })
        }),
    );
}

fn thm8(r: &mut Recorder, rng: &mut impl Rng, kmax: usize) {
    let jf = random_jfraction(rng, kmax);
    r.check(
        "principal minors",
        (|| {
            let d = hankel::jfraction_contract(&jf, 2 * kmax + 1)?;
            let mut ok = true;
            for k in 0..=kmax {
                ok &= hankel::principal_minor_product(&jf, k)? == hankel::hankel_det(d.coeffs(), 0, k + 1)?;
            }
            Ok(ok)
        })(),
    );
    r.check(
        "independent of p",
        (|| {
            let base = hankel::jfraction_contract(&jf, 2 * kmax + 1)?;
            let mut ok = true;
            for h in 0..=kmax {
                let mut alt = jf.clone();
                alt.p[h] = &alt.p[h] + Rational::from(7);
                let d = hankel::jfraction_contract(&alt, 2 * kmax + 1)?;
                ok &= hankel::hankel_det(d.coeffs(), 0, kmax + 1)? == hankel::hankel_det(base.coeffs(), 0, kmax + 1)?;
            }
            Ok(ok)
        })(),
    );
}

fn index_sets(k1: usize, max: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, max: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=max {
            cur.push(i);
            go(i + 1, max, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, max, k1, &mut Vec::new(), &mut out);
    out
}

fn lgv(r: &mut Recorder, rng: &mut impl Rng) {
    let jf = random_jfraction(rng, 3);
    let d = match hankel::jfraction_contract(&jf, 7) {
        Ok(d) => d,
        Err(e) => return r.check("contract", Err(e)),
    };
    for k1 in 1..=3 {
        let sets = index_sets(k1, 3);
        let outcome = sets.iter().flat_map(|a| sets.iter().map(move |b| (a, b))).try_fold(true, |acc, (a, b)| {
            let m = Matrix::from_fn(k1, k1, |i, j| d.coeff(a[i] + b[j]).clone());
            Ok(acc && comb::lgv_minor_oracle(&jf, a, b)? == m.det_gauss()?)
        });
        r.check(format!("{k1} paths"), outcome);
    }
}

fn counts(r: &mut Recorder, nmax: usize) {
    r.check(
        "Łukasiewicz",
        Ok((1..=nmax).all(|n| Rational::from(comb::enum_words(n, 0).len()) == catalan(n as i64 - 1))),
    );
    let motzkin = [1usize, 1, 2, 4, 9, 21, 51];
    r.check("Motzkin", Ok((0..motzkin.len()).all(|n| comb::enum_motzkin(n).len() == motzkin[n])));
}

fn bijections(r: &mut Recorder, nmax: usize) {
    r.check(
        "word tree",
        Ok((1..=nmax + 1).all(|n| {
            comb::enum_words(n, 0).iter().all(|w| comb::word_to_tree(w).map(|t| comb::tree_to_word(&t) == *w).unwrap_or(false))
        })),
    );
    r.check(
        "word parentheses",
        Ok((1..=nmax + 1).all(|n| {
            comb::enum_words(n, 0)
                .iter()
                .all(|w| comb::word_to_parens(w).and_then(|s| comb::parens_to_word(&s)).is_ok_and(|b| b == *w))
        })),
    );
    let kmax = 2;
    r.check(
        "cyclic lemma",
        (1..=nmax).flat_map(|n| (0..=kmax.min(n - 1)).map(move |k| (n, k))).try_fold(true, |acc, (n, k)| {
            let words = comb::enum_weighted_words(n, k);
            let mut images = std::collections::BTreeSet::new();
            for w in &words {
                for kp in 1..=k + 1 {
                    let (np, luk) = comb::cyclic_bijection(kp, w)?;
                    if comb::cyclic_bijection_inverse(np, &luk)? != (kp, w.clone()) {
                        return Ok(false);
                    }
                    images.insert((np, luk));
                }
            }
            let products = comb::enum_words(n, k);
            Ok(acc && images.len() == (k + 1) * words.len() && images.len() == n * products.len())
        }),
    );
    let tmax = nmax.min(6);
    r.check(
        "binary to plane",
        Ok((0..=tmax).all(|n| {
            let all = comb::enum_binary_trees(n);
            let left: std::collections::BTreeSet<_> = all.iter().map(comb::contract_left).collect();
            let right: std::collections::BTreeSet<_> = all.iter().map(comb::contract_right).collect();
            left.len() == all.len()
                && right.len() == all.len()
                && Rational::from(all.len()) == catalan(n as i64)
                && all.iter().all(|b| comb::contract_right(b).mirror() == comb::contract_left(&b.mirror()))
        })),
    );
    r.check(
        "fixed points",
        (0..=tmax).try_fold(true, |acc, n| {
            let b = comb::dihedral_orbits(n, comb::TreeSide::Binary)?;
            let p = comb::dihedral_orbits(n, comb::TreeSide::Plane)?;
            let sym_plane = Rational::binomial(n as i64, n as i64 / 2);
            let sym_binary = if n % 2 == 1 { catalan((n as i64 - 1) / 2) } else if n == 0 { Rational::one() } else { Rational::zero() };
            Ok(acc
                && Rational::from(b.fixed_points_r) == sym_plane
                && Rational::from(b.fixed_points_l) == sym_plane
                && Rational::from(p.fixed_points_r) == sym_binary
                && Rational::from(p.fixed_points_l) == sym_binary)
        }),
    );
}

fn interpolation(r: &mut Recorder, rng: &mut impl Rng, nmax: usize) {
    let a = |i: usize| MultiPoly::var(&format!("a{i}"));
    let f = TruncatedSeries::from_fn(5, |i| match i {
        0 => MultiPoly::zero(),
        1 => MultiPoly::one(),
        _ => a(i),
    });
    let x = MultiPoly::var("x");
    let c = |k: i64| MultiPoly::from(k);
    r.check(
        "C_2..C_4",
        reversion::compose_iterate_interpolate(&f, 4).map(|cs| {
            let c2 = a(2) * x.clone();
            let c3 = (a(2).pow(2) * (x.clone() - c(1)) + a(3)) * x.clone();
            let c4 = (((c(2) * x.clone() - c(3)) * a(2).pow(3) + c(5) * a(2) * a(3)) * (x.clone() - c(1)) + c(2) * a(4))
                * x.clone()
                * MultiPoly::constant(Rational::frac(1, 2));
            cs[1].to_multipoly("x") == c2 && cs[2].to_multipoly("x") == c3 && cs[3].to_multipoly("x") == c4
        }),
    );
    let g = random_diffeo(rng, nmax + 1);
    r.check(
        "iterates",
        reversion::compose_iterate_interpolate(&g, nmax).and_then(|cs| {
            let mut ok = true;
            for n in 1..=nmax {
                for m in [n, n + 1] {
                    let it = reversion::composition_iterate(&g, m)?;
                    ok &= (1..=nmax).all(|i| cs[i - 1].eval(&Rational::from(m)) == *it.coeff(i));
                }
            }
            Ok(ok)
        }),
    );
    let size = 6;
    let (f1, f2) = (random_diffeo(rng, size + 1), random_diffeo(rng, size + 1));
    r.check(
        "composition matrix",
        (|| {
            let lhs = reversion::composition_matrix(&f1.compose(&f2)?, size)?;
            let rhs = reversion::composition_matrix(&f1, size)?.mul(&reversion::composition_matrix(&f2, size)?)?;
            Ok(lhs == rhs)
        })(),
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_small_size() {
        let cfg = VerifyConfig::default();
        for name in SUITES {
            let rep = run_suite(name, &cfg).unwrap();
            assert!(rep.passed, "{}", serde_json::to_string_pretty(&rep).unwrap());
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &VerifyConfig::default()).is_err());
    }
}
