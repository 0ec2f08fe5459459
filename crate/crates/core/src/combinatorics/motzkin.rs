use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::{MultiPoly, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Level,
    Down,
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Level => 0,
            Step::Down => -1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Level => 'L',
            Step::Down => 'D',
        }
    }
}

/// Sequence of steps from height 0 back to height 0 that never goes below 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MotzkinPath {
    steps: Vec<Step>,
}

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h = 0i64;
        for s in &steps {
            h += s.delta();
            if h < 0 {
                return Err(Error::Malformed("path goes below height 0".into()));
            }
        }
        if h != 0 {
            return Err(Error::Malformed("path does not return to height 0".into()));
        }
        Ok(MotzkinPath { steps })
    }

    /// Parses a string over `U`, `L`, `D`.
    pub fn parse(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::Up),
                'L' => Ok(Step::Level),
                'D' => Ok(Step::Down),
                _ => Err(Error::Malformed(format!("unexpected step {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_prime(&self) -> bool {
        !self.is_empty() && motzkin_prime_factorize(self).len() == 1
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

impl fmt::Debug for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MotzkinPath({self})")
    }
}

impl Serialize for MotzkinPath {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All Motzkin paths of length `n`, in lexicographic order of steps.
pub fn enum_motzkin(n: usize) -> Vec<MotzkinPath> {
    fn go(n: usize, h: usize, cur: &mut Vec<Step>, out: &mut Vec<MotzkinPath>) {
        let left = n - cur.len();
        if left == 0 {
            out.push(MotzkinPath { steps: cur.clone() });
            return;
        }
        for step in [Step::Up, Step::Level, Step::Down] {
            let nh = h as i64 + step.delta();
            if nh < 0 || nh as usize > left - 1 {
                continue;
            }
            cur.push(step);
            go(n, nh as usize, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Weight of a path starting at height `start`: a level step at height `h`
/// gives `p(h)`, a down step from `h+1` gives `q(h)`, an up step gives 1.
///
/// `None` if the path needs a weight beyond the supplied slices or dips
/// below 0.
pub fn path_weight<R: Ring>(steps: &[Step], start: usize, p: &[R], q: &[R]) -> Option<R> {
    let mut h = start as i64;
    let mut acc = R::one();
    for s in steps {
        match s {
            Step::Up => {}
            Step::Level => acc = acc.mul(p.get(h as usize)?),
            Step::Down => acc = acc.mul(q.get(usize::try_from(h - 1).ok()?)?),
        }
        h += s.delta();
        if h < 0 {
            return None;
        }
    }
    Some(acc)
}

/// The weight as a monomial in `p0, p1, ..., q0, q1, ...`.
pub fn motzkin_weight(path: &MotzkinPath) -> MultiPoly {
    let n = path.len();
    let p: Vec<MultiPoly> = (0..=n).map(|h| MultiPoly::var(&format!("p{h}"))).collect();
    let q: Vec<MultiPoly> = (0..=n).map(|h| MultiPoly::var(&format!("q{h}"))).collect();
    path_weight(path.steps(), 0, &p, &q).expect("heights bounded by the length")
}

/// Splits at every return to height 0.
pub fn motzkin_prime_factorize(path: &MotzkinPath) -> Vec<MotzkinPath> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut h = 0;
    for (i, s) in path.steps.iter().enumerate() {
        h += s.delta();
        if h == 0 {
            out.push(MotzkinPath { steps: path.steps[start..=i].to_vec() });
            start = i + 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> MultiPoly {
        MultiPoly::var(name)
    }

    #[test]
    fn counts_and_sums() {
        let counts: Vec<usize> = (0..=6).map(|n| enum_motzkin(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 21, 51]);
        let sum3 = enum_motzkin(3).iter().fold(MultiPoly::zero(), |a, p| a + motzkin_weight(p));
        assert_eq!(sum3, v("p0").pow(3) + MultiPoly::from(2) * v("p0") * v("q0") + v("p1") * v("q0"));
        assert_eq!(motzkin_weight(&enum_motzkin(0)[0]), MultiPoly::one());
    }

    #[test]
    fn length_21_example() {
        let path = MotzkinPath::parse("LUUDLULUDDDUDLLUUDUDD").unwrap();
        let factors = motzkin_prime_factorize(&path);
        assert_eq!(factors.len(), 6);
        assert!(factors.iter().all(MotzkinPath::is_prime));
        let joined: String = factors.iter().map(|f| f.to_string()).collect();
        assert_eq!(joined, path.to_string());
        let expected = v("p0").pow(3) * v("p1") * v("p2") * v("q0").pow(3) * v("q1").pow(4) * v("q2");
        assert_eq!(motzkin_weight(&path), expected);
    }

    #[test]
    fn single_level_step() {
        let path = MotzkinPath::parse("L").unwrap();
        assert_eq!(motzkin_prime_factorize(&path), vec![path.clone()]);
        assert_eq!(motzkin_weight(&path), v("p0"));
        assert!(MotzkinPath::parse("D").is_err());
        assert!(MotzkinPath::parse("UL").is_err());
    }
}
