use std::collections::HashSet;

use super::motzkin::{path_weight, Step};
use crate::error::{Error, Result};
use crate::hankel::JFraction;
use crate::ring::Ring;

/// A first-quadrant path with unit steps starting at `(start, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePath {
    pub start: i64,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut out = vec![(self.start, 0)];
        let (mut x, mut y) = (self.start, 0);
        for s in &self.steps {
            x += 1;
            y += s.delta();
            out.push((x, y));
        }
        out
    }
}

/// Paths of the given length from height 0 to height 0 staying at or above 0.
fn motzkin_step_sequences(len: usize) -> Vec<Vec<Step>> {
    super::motzkin::enum_motzkin(len).into_iter().map(|p| p.steps().to_vec()).collect()
}

/// Exchanges the tails of two paths after their first common vertex, taken
/// in the order of `a`. `None` if they share no vertex.
pub fn swap_tails(a: &LatticePath, b: &LatticePath) -> Option<(LatticePath, LatticePath)> {
    let vb = b.vertices();
    let va = a.vertices();
    let (ia, common) = va.iter().enumerate().find(|(_, v)| vb.contains(v))?;
    let ib = vb.iter().position(|v| v == common)?;
    let a2 = LatticePath { start: a.start, steps: [&a.steps[..ia], &b.steps[ib..]].concat() };
    let b2 = LatticePath { start: b.start, steps: [&b.steps[..ib], &a.steps[ia..]].concat() };
    Some((a2, b2))
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, bool)>) {
        let n = used.len();
        if cur.len() == n {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| cur[i] > cur[j]).count();
            out.push((cur.clone(), inversions % 2 == 1));
            return;
        }
        for j in 0..n {
            if !used[j] {
                used[j] = true;
                cur.push(j);
                go(cur, used, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn check_instance<R: Ring>(jf: &JFraction<R>, alpha: &[usize], beta: &[usize]) -> Result<()> {
    if alpha.len() != beta.len() || alpha.is_empty() {
        return Err(Error::DimensionMismatch);
    }
    if alpha.len() > 3 || alpha.iter().chain(beta).any(|&i| i > 4) {
        return Err(Error::InstanceTooLarge("need at most 3 paths and indices <= 4".into()));
    }
    if alpha.windows(2).any(|w| w[0] >= w[1]) || beta.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadRange("row and column indices must be strictly increasing".into()));
    }
    let longest = alpha.last().unwrap() + beta.last().unwrap();
    // Heights reach at most longest / 2: p up to that, q one below.
    let needed = longest / 2;
    if jf.p.len() <= needed || (needed > 0 && jf.q.len() < needed) {
        return Err(Error::InsufficientDepth { depth: jf.depth(), needed });
    }
    Ok(())
}

/// `d_0^{k+1} Σ_σ sign(σ) Σ w(γ_0)...w(γ_k)` over vertex-disjoint systems
/// with `γ_i` running from `(-α_i, 0)` to `(β_{σ(i)}, 0)`.
pub fn lgv_minor_oracle<R: Ring>(jf: &JFraction<R>, alpha: &[usize], beta: &[usize]) -> Result<R> {
    check_instance(jf, alpha, beta)?;
    let k1 = alpha.len();
    let mut total = R::zero();
    for (sigma, odd) in permutations(k1) {
        let candidates: Vec<Vec<(LatticePath, R)>> = (0..k1)
            .map(|i| {
                motzkin_step_sequences(alpha[i] + beta[sigma[i]])
                    .into_iter()
                    .map(|steps| {
                        let w = path_weight(&steps, 0, &jf.p, &jf.q).expect("depth checked");
                        (LatticePath { start: -(alpha[i] as i64), steps }, w)
                    })
                    .collect()
            })
            .collect();
        let mut sum = R::zero();
        let mut used = HashSet::new();
        disjoint_systems(&candidates, 0, &mut used, R::one(), &mut sum);
        total = if odd { total.sub(&sum) } else { total.add(&sum) };
    }
    Ok(total.mul(&jf.d0.pow(k1 as u32)))
}

fn disjoint_systems<R: Ring>(
    candidates: &[Vec<(LatticePath, R)>],
    i: usize,
    used: &mut HashSet<(i64, i64)>,
    acc: R,
    sum: &mut R,
) {
    if i == candidates.len() {
        *sum = sum.add(&acc);
        return;
    }
    for (path, w) in &candidates[i] {
        let vs = path.vertices();
        if vs.iter().any(|v| used.contains(v)) {
            continue;
        }
        used.extend(vs.iter().copied());
        disjoint_systems(candidates, i + 1, used, acc.mul(w), sum);
        for v in &vs {
            used.remove(v);
        }
    }
}
