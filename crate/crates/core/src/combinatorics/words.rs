use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reversion::{letter_series, DLSequence};
use crate::ring::{MultiPoly, Rational};
use crate::series::TruncatedSeries;

/// A word `s_{i_1} ... s_{i_n}`, stored as the indices `i_1, ..., i_n`.
///
/// Letter `s_i` has weight `i - 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.letters.iter().map(|&i| i as i64 - 1).sum()
    }

    /// Weights of the prefixes of length `1..=n`.
    pub fn prefix_weights(&self) -> Vec<i64> {
        self.letters
            .iter()
            .scan(0i64, |w, &i| {
                *w += i as i64 - 1;
                Some(*w)
            })
            .collect()
    }

    /// Weight `-(k+1)` with every proper prefix of weight at least `-k`.
    pub fn satisfies_prefix_condition(&self, k: usize) -> bool {
        let w = self.prefix_weights();
        let k = k as i64;
        w.last() == Some(&-(k + 1)) && w[..w.len() - 1].iter().all(|&x| x >= -k)
    }

    pub fn is_lukasiewicz(&self) -> bool {
        self.satisfies_prefix_condition(0)
    }

    /// Commuting image `Π s_{i_j}` with letters named `{prefix}{i}`.
    pub fn monomial(&self, prefix: &str) -> MultiPoly {
        let mut counts = std::collections::BTreeMap::new();
        for &i in &self.letters {
            *counts.entry(format!("{prefix}{i}")).or_insert(0u32) += 1;
        }
        let powers: Vec<(&str, u32)> = counts.iter().map(|(k, &v)| (k.as_str(), v)).collect();
        MultiPoly::monomial(Rational::one(), &powers)
    }

    /// The word starting at position `r` and wrapping around.
    pub fn rotate(&self, r: usize) -> Word {
        let n = self.len();
        Word::new((0..n).map(|j| self.letters[(r + j) % n]).collect())
    }

    pub fn concat(parts: &[Word]) -> Word {
        Word::new(parts.iter().flat_map(|w| w.letters.iter().copied()).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.letters {
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.letters)
    }
}

/// All words of length `n` and weight `-(k+1)` whose proper prefixes weigh
/// at least `-k`, in lexicographic order.
pub fn enum_words(n: usize, k: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if n == 0 || k + 1 > n {
        return out;
    }
    let total = n - k - 1;
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, k: i64, left: usize, weight: i64, cur: &mut Vec<usize>, out: &mut Vec<Word>) {
        let pos = cur.len();
        if pos == n - 1 {
            // The last letter is forced by the total.
            cur.push(left);
            out.push(Word::new(cur.clone()));
            cur.pop();
            return;
        }
        for i in 0..=left {
            let w = weight + i as i64 - 1;
            if w < -k {
                continue;
            }
            cur.push(i);
            go(n, k, left - i, w, cur, out);
            cur.pop();
        }
    }
    go(n, k as i64, total, 0, &mut cur, &mut out);
    out
}

/// All words of length `n` and weight `-(k+1)`, with no prefix condition.
pub fn enum_weighted_words(n: usize, k: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if n == 0 || k + 1 > n {
        return out;
    }
    fn go(n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Word>) {
        if cur.len() == n - 1 {
            cur.push(left);
            out.push(Word::new(cur.clone()));
            cur.pop();
            return;
        }
        for i in 0..=left {
            cur.push(i);
            go(n, left - i, cur, out);
            cur.pop();
        }
    }
    go(n, n - k - 1, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Splits a word satisfying the prefix condition for `k` into `k+1`
/// Łukasiewicz words, cutting where the prefix weight first reaches
/// `-1, -2, ...`.
pub fn factorize_luk(w: &Word) -> Result<Vec<Word>> {
    let weight = w.weight();
    if weight >= 0 {
        return Err(Error::NotFactorizable(format!("{w} has weight {weight}")));
    }
    let k = (-weight - 1) as usize;
    if !w.satisfies_prefix_condition(k) {
        return Err(Error::NotFactorizable(format!("{w} violates the prefix condition")));
    }
    let mut parts = Vec::with_capacity(k + 1);
    let mut start = 0;
    let mut target = -1;
    for (j, pw) in w.prefix_weights().into_iter().enumerate() {
        if pw == target {
            parts.push(Word::new(w.letters[start..=j].to_vec()));
            start = j + 1;
            target -= 1;
        }
    }
    debug_assert!(parts.iter().all(Word::is_lukasiewicz));
    Ok(parts)
}

/// Start offsets of the factors of a word satisfying the prefix condition.
fn factor_starts(w: &Word) -> Result<Vec<usize>> {
    let parts = factorize_luk(w)?;
    Ok(parts
        .iter()
        .scan(0, |acc, p| {
            let s = *acc;
            *acc += p.len();
            Some(s)
        })
        .collect())
}

/// 1-based index of the factor containing 0-based position `pos`.
fn factor_index(starts: &[usize], pos: usize) -> usize {
    starts.iter().take_while(|&&s| s <= pos).count()
}

/// The rotations of `w` (weight `-(k+1)`) that satisfy the prefix condition.
///
/// One is found by minimising `(k+1) h + n W_h` over `h = 1..n`, where
/// `W_h` is the weight of the first `h` letters; the others start at its
/// factor boundaries.
pub fn valid_rotations(w: &Word) -> Result<Vec<usize>> {
    let n = w.len();
    let weight = w.weight();
    if n == 0 || weight >= 0 {
        return Err(Error::NotFactorizable(format!("{w} has weight {weight}")));
    }
    let k1 = -weight;
    let pw = w.prefix_weights();
    let h = (1..=n)
        .min_by_key(|&h| k1 * h as i64 + n as i64 * pw[h - 1])
        .expect("nonempty");
    let r = h % n;
    let starts = factor_starts(&w.rotate(r))?;
    let mut rots: Vec<usize> = starts.iter().map(|s| (r + s) % n).collect();
    rots.sort_unstable();
    Ok(rots)
}

/// `(k', w) ↦ (n', luk)`: `luk` is the rotation of `w` satisfying the prefix
/// condition in which the first letter of `w` lands in factor `k'`, at
/// 1-based position `n'`.
pub fn cyclic_bijection(k_prime: usize, w: &Word) -> Result<(usize, Word)> {
    let rots = valid_rotations(w)?;
    let n = w.len();
    if k_prime == 0 || k_prime > rots.len() {
        return Err(Error::IndexOutOfRange(format!("k' = {k_prime} not in 1..={}", rots.len())));
    }
    for r in rots {
        let luk = w.rotate(r);
        let pos = (n - r) % n;
        if factor_index(&factor_starts(&luk)?, pos) == k_prime {
            return Ok((pos + 1, luk));
        }
    }
    unreachable!("the valid rotations place the first letter in every factor once")
}

/// Inverse of [`cyclic_bijection`].
pub fn cyclic_bijection_inverse(n_prime: usize, luk: &Word) -> Result<(usize, Word)> {
    let n = luk.len();
    if n_prime == 0 || n_prime > n {
        return Err(Error::IndexOutOfRange(format!("n' = {n_prime} not in 1..={n}")));
    }
    let starts = factor_starts(luk)?;
    Ok((factor_index(&starts, n_prime - 1), luk.rotate(n_prime - 1)))
}

/// Drops the final `s_0` and writes each `s_k` as `k` opening parentheses
/// followed by one closing parenthesis.
pub fn word_to_parens(w: &Word) -> Result<String> {
    if !w.is_lukasiewicz() {
        return Err(Error::NotFactorizable(format!("{w} is not a Łukasiewicz word")));
    }
    let mut out = String::new();
    for &k in &w.letters[..w.len() - 1] {
        out.extend(std::iter::repeat_n('(', k));
        out.push(')');
    }
    Ok(out)
}

/// Inverse of [`word_to_parens`]: each `)` closes a letter whose index is
/// the number of `(` read since the previous `)`.
pub fn parens_to_word(s: &str) -> Result<Word> {
    let mut letters = Vec::new();
    let mut run = 0;
    for ch in s.chars() {
        match ch {
            '(' => run += 1,
            ')' => {
                letters.push(run);
                run = 0;
            }
            _ => return Err(Error::Malformed(format!("unexpected character {ch:?}"))),
        }
    }
    if run != 0 {
        return Err(Error::Malformed("trailing opening parentheses".into()));
    }
    letters.push(0);
    let w = Word::new(letters);
    if !w.is_lukasiewicz() {
        return Err(Error::Malformed(format!("{s:?} is not balanced")));
    }
    Ok(w)
}

/// `[x^k] Q_n(x)` as the sum of the commuting images of [`enum_words`].
pub fn word_coefficient_oracle(n: usize, k: usize) -> MultiPoly {
    enum_words(n, k)
        .iter()
        .fold(MultiPoly::zero(), |acc, w| MultiPoly::add(&acc, &w.monomial("s")))
}

/// Generating series `Σ_w t^{|w|} Π s_{i_j}` over Łukasiewicz words of
/// length below `order`, optionally excluding the letter `s_1`.
pub fn lukasiewicz_series(order: usize, without_s1: bool) -> TruncatedSeries<MultiPoly> {
    TruncatedSeries::from_fn(order, |n| {
        if n == 0 {
            return MultiPoly::zero();
        }
        enum_words(n, 0)
            .iter()
            .filter(|w| !without_s1 || !w.letters().contains(&1))
            .fold(MultiPoly::zero(), |acc, w| MultiPoly::add(&acc, &w.monomial("s")))
    })
}

/// Checks `q(t) = q_{s_1=0}(t / (1 - t s_1))` modulo `t^{order}`, with `q`
/// from the truncated-product recursion over letters and `q_{s_1=0}` from
/// enumerating Łukasiewicz words without `s_1`.
pub fn reduced_word_series_check(order: usize) -> Result<bool> {
    if order < 2 {
        return Err(Error::BadRange("order must be at least 2".into()));
    }
    let n = order - 1;
    let q = DLSequence::build(&letter_series("s", n), n)?.q_series()?;
    let reduced = lukasiewicz_series(order, true);
    let s1 = MultiPoly::var("s1");
    let geom = TruncatedSeries::one(order)
        .sub(&TruncatedSeries::x(order).scale_by(&s1))
        .invert()?;
    let inner = geom.shift_up().truncate(order)?;
    let rhs = reduced.compose(&inner)?;
    let specialized = q.map(|c| c.substitute("s1", &Rational::zero()));
    Ok(q == rhs && specialized == reduced)
}
