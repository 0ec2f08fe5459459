//! Sparse multivariate polynomials over `Rational`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{Error, Result};

/// Exponent vector, aligned with the owning polynomial's variable list.
pub type Monomial = Vec<u32>;

/// A polynomial in named commuting indeterminates.
///
/// Canonical form: the variable list is sorted by name and contains exactly
/// the variables that occur with a positive exponent; no zero coefficient is
/// stored. Equal polynomials therefore have identical representations and the
/// derived `PartialEq` is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Default for MultiPoly {
    fn default() -> Self {
        Self::zero()
    }
}

fn no_vars() -> Arc<[String]> {
    Arc::from(Vec::<String>::new())
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { vars: no_vars(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly { vars: no_vars(), terms }
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(Rational::one(), &[(name, 1)])
    }

    /// `coeff * Π name^exp`; repeated names multiply.
    pub fn monomial(coeff: Rational, powers: &[(&str, u32)]) -> Self {
        let mut acc: BTreeMap<String, u32> = BTreeMap::new();
        for &(name, e) in powers {
            *acc.entry(name.to_string()).or_default() += e;
        }
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(acc.values().copied().collect::<Vec<_>>(), coeff);
        }
        let vars: Vec<String> = acc.into_keys().collect();
        let mut p = MultiPoly { vars: Arc::from(vars), terms };
        p.prune();
        p
    }

    /// Builds a polynomial from `(coefficient, powers)` pairs.
    pub fn from_terms<'a, I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Vec<(&'a str, u32)>)>,
    {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (c, p)| acc.add(&Self::monomial(c, &p)))
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms as `(coefficient, exponent vector)` aligned with `variables()`.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The constant value if the polynomial involves no variable.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.vars.is_empty() {
            Some(self.terms.get(&Vec::new()).cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    /// Coefficient of the monomial given by `(name, exp)` pairs.
    pub fn coeff(&self, powers: &[(&str, u32)]) -> Rational {
        let probe = Self::monomial(Rational::one(), powers);
        let Some((mono, _)) = probe.terms.iter().next() else {
            return Rational::zero();
        };
        let mut key = vec![0u32; self.vars.len()];
        for (name, e) in probe.vars.iter().zip(mono) {
            match self.vars.iter().position(|v| v == name) {
                Some(i) => key[i] = *e,
                None => return Rational::zero(),
            }
        }
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.binary_search_by(|v| v.as_str().cmp(name)).ok()
    }

    /// Drops variables that no longer occur.
    fn prune(&mut self) {
        let n = self.vars.len();
        if n == 0 {
            return;
        }
        let mut used = vec![false; n];
        for m in self.terms.keys() {
            for (u, &e) in used.iter_mut().zip(m) {
                *u |= e > 0;
            }
        }
        if used.iter().all(|&u| u) {
            return;
        }
        let vars: Vec<String> =
            self.vars.iter().zip(&used).filter(|(_, &u)| u).map(|(v, _)| v.clone()).collect();
        let terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(m, c)| {
                let m: Monomial = m.iter().zip(&used).filter(|(_, &u)| u).map(|(&e, _)| e).collect();
                (m, c)
            })
            .collect();
        self.vars = Arc::from(vars);
        self.terms = terms;
    }

    fn remap(&self, target: &[String]) -> BTreeMap<Monomial, Rational> {
        if *self.vars == *target {
            return self.terms.clone();
        }
        let positions: Vec<usize> = self
            .vars
            .iter()
            .map(|v| target.binary_search(v).expect("target contains all variables"))
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut key = vec![0u32; target.len()];
                for (&p, &e) in positions.iter().zip(m) {
                    key[p] = e;
                }
                (key, c.clone())
            })
            .collect()
    }

    fn union_vars(&self, other: &Self) -> Arc<[String]> {
        if Arc::ptr_eq(&self.vars, &other.vars) || *self.vars == *other.vars {
            return self.vars.clone();
        }
        if other.vars.is_empty() {
            return self.vars.clone();
        }
        if self.vars.is_empty() {
            return other.vars.clone();
        }
        let mut all: Vec<String> = self.vars.iter().chain(other.vars.iter()).cloned().collect();
        all.sort();
        all.dedup();
        Arc::from(all)
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        let vars = self.union_vars(other);
        let mut terms = self.remap(&vars);
        for (m, c) in other.remap(&vars) {
            let entry = terms.entry(m);
            match entry {
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    if sign {
                        *o.get_mut() += &c;
                    } else {
                        *o.get_mut() -= &c;
                    }
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(if sign { c } else { -c });
                }
            }
        }
        let mut p = MultiPoly { vars, terms };
        p.prune();
        p
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        let vars = self.union_vars(other);
        let a = self.remap(&vars);
        let b = other.remap(&vars);
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(a.len() * b.len());
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let key: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                let prod = ca * cb;
                match acc.get_mut(&key) {
                    Some(v) => *v += &prod,
                    None => {
                        acc.insert(key, prod);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let mut p = MultiPoly { vars, terms };
        p.prune();
        p
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut base = self.clone();
        let mut e = exp;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = MultiPoly::mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = MultiPoly::mul(&base, &base);
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, failing unless the division is exact.
    ///
    /// Multivariate division by leading terms in lexicographic order; since
    /// the leading monomial of a product is the product of leading monomials,
    /// an exact division never gets stuck on an indivisible leading term.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(c) = divisor.as_constant() {
            return Ok(self.scale(&c.recip()?));
        }
        let vars = self.union_vars(divisor);
        let mut rem = self.remap(&vars);
        let d = divisor.remap(&vars);
        let (dm, dc) = d.iter().next_back().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero");
        let dc_inv = dc.recip()?;
        let mut quot: BTreeMap<Monomial, Rational> = BTreeMap::new();
        while let Some((rm, rc)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if rm.iter().zip(&dm).any(|(r, d)| r < d) {
                return Err(Error::InexactDivision);
            }
            let shift: Monomial = rm.iter().zip(&dm).map(|(r, d)| r - d).collect();
            let coeff = &rc * &dc_inv;
            for (m, c) in &d {
                let key: Monomial = m.iter().zip(&shift).map(|(x, y)| x + y).collect();
                let delta = c * &coeff;
                let remove = match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= &delta;
                        v.is_zero()
                    }
                    None => {
                        rem.insert(key.clone(), -delta);
                        false
                    }
                };
                if remove {
                    rem.remove(&key);
                }
            }
            quot.insert(shift, coeff);
        }
        let mut q = MultiPoly { vars, terms: quot };
        q.prune();
        Ok(q)
    }

    /// Evaluates at a full assignment of the occurring variables.
    pub fn eval(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational> {
        let values: Vec<&Rational> = self
            .vars
            .iter()
            .map(|v| assignment.get(v).ok_or_else(|| Error::MissingVariable(v.clone())))
            .collect::<Result<_>>()?;
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (val, &e) in values.iter().zip(m) {
                if e > 0 {
                    t = &t * &val.pow(e as i64)?;
                }
            }
            total += &t;
        }
        Ok(total)
    }

    /// Substitutes a rational value for one variable.
    pub fn substitute(&self, name: &str, value: &Rational) -> Self {
        let Some(idx) = self.var_index(name) else {
            return self.clone();
        };
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut key = m.clone();
            let e = std::mem::replace(&mut key[idx], 0);
            let v = c * &value.pow(e as i64).expect("nonnegative exponent");
            if v.is_zero() {
                continue;
            }
            let slot = terms.entry(key).or_insert_with(Rational::zero);
            *slot += &v;
        }
        terms.retain(|_, c| !c.is_zero());
        let mut p = MultiPoly { vars: self.vars.clone(), terms };
        p.prune();
        p
    }

    /// Substitutes a polynomial for one variable.
    pub fn compose_var(&self, name: &str, value: &MultiPoly) -> Self {
        let Some(deg) = self.degree_in(name) else {
            return Self::zero();
        };
        // Horner in the chosen variable.
        let mut acc = Self::zero();
        for d in (0..=deg).rev() {
            acc = acc.mul(value).add(&self.coeff_in(name, d));
        }
        acc
    }

    pub fn derivative(&self, name: &str) -> Self {
        let Some(idx) = self.var_index(name) else {
            return Self::zero();
        };
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m[idx] == 0 {
                continue;
            }
            let mut key = m.clone();
            key[idx] -= 1;
            terms.insert(key, c * &Rational::from(m[idx] as i64));
        }
        let mut p = MultiPoly { vars: self.vars.clone(), terms };
        p.prune();
        p
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, name: &str) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        Some(match self.var_index(name) {
            Some(idx) => self.terms.keys().map(|m| m[idx]).max().unwrap_or(0),
            None => 0,
        })
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    /// Coefficient of `name^d`, as a polynomial in the remaining variables.
    pub fn coeff_in(&self, name: &str, d: u32) -> Self {
        let Some(idx) = self.var_index(name) else {
            return if d == 0 { self.clone() } else { Self::zero() };
        };
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m[idx] == d)
            .map(|(m, c)| {
                let mut key = m.clone();
                key[idx] = 0;
                (key, c.clone())
            })
            .collect();
        let mut p = MultiPoly { vars: self.vars.clone(), terms };
        p.prune();
        p
    }

    /// Sum of coefficients: the value at all variables equal to one.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().sum()
    }

    fn named_terms(&self) -> impl Iterator<Item = (BTreeMap<String, u32>, &Rational)> {
        self.terms.iter().map(move |(m, c)| {
            let mono = self
                .vars
                .iter()
                .zip(m)
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| (v.clone(), e))
                .collect();
            (mono, c)
        })
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let factors: Vec<String> = self
                .vars
                .iter()
                .zip(m)
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: Rational,
    monomial: BTreeMap<String, u32>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .named_terms()
            .map(|(monomial, c)| TermRepr { coeff: c.clone(), monomial })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        let mut acc = MultiPoly::zero();
        for t in terms {
            if t.monomial.keys().any(|k| k.is_empty()) {
                return Err(D::Error::custom("empty variable name"));
            }
            let powers: Vec<(&str, u32)> = t.monomial.iter().map(|(k, &e)| (k.as_str(), e)).collect();
            acc = acc.add(&MultiPoly::monomial(t.coeff, &powers));
        }
        Ok(acc)
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(Rational::from(c))
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                MultiPoly::$method(self, rhs)
            }
        }
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                MultiPoly::$method(&self, &rhs)
            }
        }
        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                MultiPoly::$method(&self, rhs)
            }
        }
        impl $trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                MultiPoly::$method(self, &rhs)
            }
        }
    };
}

poly_binop!(Add, add);
poly_binop!(Sub, sub);
poly_binop!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> MultiPoly {
        MultiPoly::var(name)
    }

    fn c(n: i64) -> MultiPoly {
        MultiPoly::from(n)
    }

    #[test]
    fn product_matches_p2_monomials() {
        let p = (v("s0") + v("s1") * v("x")) * v("s0");
        let expected = v("s0") * v("s0") + v("s0") * v("s1") * v("x");
        assert_eq!(p, expected);
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn cancellation_is_canonical() {
        let p = v("a") * v("b") + c(3);
        assert_eq!(&p - &p, MultiPoly::zero());
        assert!((&p - &p).variables().is_empty());
        let q = (v("x") + v("y")) - v("y");
        assert_eq!(q, v("x"));
        assert_eq!(q.variables(), ["x".to_string()]);
    }

    #[test]
    fn square_of_binomial() {
        let p = c(1) + v("x");
        assert_eq!(p.pow(2), c(1) + c(2) * v("x") + v("x") * v("x"));
    }

    #[test]
    fn evaluation() {
        let p = v("s0") * v("s0") + v("s0") * v("s1") * v("x");
        let mut a = BTreeMap::new();
        a.insert("s0".to_string(), Rational::from(1));
        a.insert("s1".to_string(), Rational::from(2));
        a.insert("x".to_string(), Rational::from(3));
        assert_eq!(p.eval(&a).unwrap(), Rational::from(7));
        assert_eq!(c(5).eval(&BTreeMap::new()).unwrap(), Rational::from(5));
        a.remove("x");
        assert_eq!(p.eval(&a), Err(Error::MissingVariable("x".into())));
    }

    #[test]
    fn p3_at_ones() {
        let (s0, s1, s2, x) = (v("s0"), v("s1"), v("s2"), v("x"));
        let p3 = s0.pow(3)
            + (s0.pow(2) * s1.clone() + s0.clone() * s1.clone() * s0.clone()) * x.clone()
            + (s0.pow(2) * s2 + s0 * s1.pow(2)) * x.pow(2);
        let ones: BTreeMap<String, Rational> =
            ["s0", "s1", "s2", "x"].iter().map(|n| (n.to_string(), Rational::one())).collect();
        assert_eq!(p3.eval(&ones).unwrap(), Rational::from(5));
    }

    #[test]
    fn exact_division() {
        let a = v("a") + v("b");
        let b = v("a") - v("b") + c(2);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(v("a").div_exact(&v("b")), Err(Error::InexactDivision));
        assert_eq!((c(1) + v("x")).div_exact(&(c(1) - v("x"))), Err(Error::InexactDivision));
        assert_eq!(a.div_exact(&MultiPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn calculus_helpers() {
        let p = v("x").pow(3) * v("s1") + v("s1").pow(2) + c(4);
        assert_eq!(p.derivative("s1"), v("x").pow(3) + c(2) * v("s1"));
        assert_eq!(p.derivative("z"), MultiPoly::zero());
        assert_eq!(p.degree_in("x"), Some(3));
        assert_eq!(p.degree_in("z"), Some(0));
        assert_eq!(p.coeff_in("x", 3), v("s1"));
        assert_eq!(p.substitute("s1", &Rational::from(2)), c(2) * v("x").pow(3) + c(8));
        assert_eq!(p.compose_var("s1", &(v("y") + c(1))), v("x").pow(3) * (v("y") + c(1)) + (v("y") + c(1)).pow(2) + c(4));
        assert_eq!(p.coeff(&[("x", 3), ("s1", 1)]), Rational::one());
        assert_eq!(p.coeff(&[]), Rational::from(4));
    }

    #[test]
    fn json_format() {
        let p = MultiPoly::monomial(Rational::frac(-3, 7), &[("x", 2), ("s0", 1)]) + c(5);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"[{"coeff":"5","monomial":{}},{"coeff":"-3/7","monomial":{"s0":1,"x":2}}]"#
        );
        let back: MultiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
