use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::Serialize;

use super::words::Word;
use crate::error::{Error, Result};

/// Rooted plane tree: an ordered list of subtrees.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneTree {
    pub children: Vec<PlaneTree>,
}

/// Regular binary tree: every vertex has zero or two children.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl PlaneTree {
    pub fn leaf() -> Self {
        PlaneTree { children: Vec::new() }
    }

    pub fn vertices(&self) -> usize {
        1 + self.children.iter().map(PlaneTree::vertices).sum::<usize>()
    }

    pub fn mirror(&self) -> Self {
        PlaneTree { children: self.children.iter().rev().map(PlaneTree::mirror).collect() }
    }
}

impl fmt::Display for PlaneTree {
    /// Nested parentheses, one pair per vertex.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneTree{self}")
    }
}

impl BinaryTree {
    pub fn node(l: BinaryTree, r: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(l), Box::new(r))
    }

    pub fn internal_nodes(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.internal_nodes() + r.internal_nodes(),
        }
    }

    pub fn mirror(&self) -> Self {
        match self {
            BinaryTree::Leaf => BinaryTree::Leaf,
            BinaryTree::Node(l, r) => BinaryTree::node(r.mirror(), l.mirror()),
        }
    }
}

impl fmt::Display for BinaryTree {
    /// `.` for a leaf, `[left right]` for an internal vertex.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => write!(f, "."),
            BinaryTree::Node(l, r) => write!(f, "[{l}{r}]"),
        }
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryTree{self}")
    }
}

/// The tree whose root has `i_1` children, built from the factors of the rest.
pub fn word_to_tree(w: &Word) -> Result<PlaneTree> {
    if !w.is_lukasiewicz() {
        return Err(Error::NotFactorizable(format!("{w} is not a Łukasiewicz word")));
    }
    fn build(letters: &[usize], pos: &mut usize) -> PlaneTree {
        let k = letters[*pos];
        *pos += 1;
        PlaneTree { children: (0..k).map(|_| build(letters, pos)).collect() }
    }
    let mut pos = 0;
    Ok(build(w.letters(), &mut pos))
}

/// Child counts in preorder.
pub fn tree_to_word(t: &PlaneTree) -> Word {
    fn walk(t: &PlaneTree, out: &mut Vec<usize>) {
        out.push(t.children.len());
        for c in &t.children {
            walk(c, out);
        }
    }
    let mut out = Vec::new();
    walk(t, &mut out);
    Word::new(out)
}

/// All plane trees with `n + 1` vertices.
pub fn enum_plane_trees(n: usize) -> Vec<PlaneTree> {
    super::words::enum_words(n + 1, 0)
        .iter()
        .map(|w| word_to_tree(w).expect("enumerated words are Łukasiewicz"))
        .collect()
}

/// All regular binary trees with `n` internal vertices.
pub fn enum_binary_trees(n: usize) -> Vec<BinaryTree> {
    let mut table: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Leaf]];
    for m in 1..=n {
        let mut row = Vec::new();
        for left in 0..m {
            for l in &table[left] {
                for r in &table[m - 1 - left] {
                    row.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        table.push(row);
    }
    table.swap_remove(n)
}

/// Contracting the left edges: a maximal left chain becomes one vertex whose
/// children are the right subtrees hanging off the chain, deepest first.
pub fn contract_left(b: &BinaryTree) -> PlaneTree {
    fn chain(b: &BinaryTree, out: &mut Vec<PlaneTree>) {
        if let BinaryTree::Node(l, r) = b {
            chain(l, out);
            out.push(contract_left(r));
        }
    }
    let mut children = Vec::new();
    chain(b, &mut children);
    PlaneTree { children }
}

/// Contracting the right edges: the children are the left subtrees hanging
/// off the right chain, shallowest first.
pub fn contract_right(b: &BinaryTree) -> PlaneTree {
    let mut children = Vec::new();
    let mut cur = b;
    while let BinaryTree::Node(l, r) = cur {
        children.push(contract_right(l));
        cur = r;
    }
    PlaneTree { children }
}

pub fn contract_left_inverse(t: &PlaneTree) -> BinaryTree {
    t.children
        .iter()
        .fold(BinaryTree::Leaf, |acc, c| BinaryTree::node(acc, contract_left_inverse(c)))
}

pub fn contract_right_inverse(t: &PlaneTree) -> BinaryTree {
    t.children
        .iter()
        .rev()
        .fold(BinaryTree::Leaf, |acc, c| BinaryTree::node(contract_right_inverse(c), acc))
}

/// `(C_L(b), C_R(b))`.
pub fn tree_bijections(b: &BinaryTree) -> (PlaneTree, PlaneTree) {
    (contract_left(b), contract_right(b))
}

/// `ι_R(B) = C_R^{-1}(mirror(C_R(B)))`.
pub fn iota_r(b: &BinaryTree) -> BinaryTree {
    contract_right_inverse(&contract_right(b).mirror())
}

/// `ι_L(B) = C_L^{-1}(mirror(C_L(B)))`.
pub fn iota_l(b: &BinaryTree) -> BinaryTree {
    contract_left_inverse(&contract_left(b).mirror())
}

/// `ι̃_R(T) = C_R(mirror(C_R^{-1}(T)))`.
pub fn iota_r_plane(t: &PlaneTree) -> PlaneTree {
    contract_right(&contract_right_inverse(t).mirror())
}

/// `ι̃_L(T) = C_L(mirror(C_L^{-1}(T)))`.
pub fn iota_l_plane(t: &PlaneTree) -> PlaneTree {
    contract_left(&contract_left_inverse(t).mirror())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeSide {
    Binary,
    Plane,
}

/// Orbits under the group generated by the two involutions on one side.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub n: usize,
    pub side: &'static str,
    pub total: usize,
    /// Orbits, each listed as tree display strings.
    pub orbits: Vec<Vec<String>>,
    pub fixed_points_r: usize,
    pub fixed_points_l: usize,
}

impl OrbitReport {
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }
}

fn orbits_of<T: Clone + Ord + fmt::Display>(elems: Vec<T>, f: impl Fn(&T) -> T, g: impl Fn(&T) -> T) -> (Vec<Vec<String>>, usize, usize) {
    let index: BTreeMap<T, usize> = elems.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let mut seen = vec![false; elems.len()];
    let mut orbits = Vec::new();
    for start in 0..elems.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(i) = queue.pop_front() {
            orbit.push(i);
            for next in [f(&elems[i]), g(&elems[i])] {
                let j = index[&next];
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit.into_iter().map(|i| elems[i].to_string()).collect());
    }
    let fixed_f = elems.iter().filter(|t| f(t) == **t).count();
    let fixed_g = elems.iter().filter(|t| g(t) == **t).count();
    (orbits, fixed_f, fixed_g)
}

pub fn dihedral_orbits(n: usize, side: TreeSide) -> Result<OrbitReport> {
    if n > 10 {
        return Err(Error::InstanceTooLarge(format!("orbit enumeration needs n <= 10, got {n}")));
    }
    let (orbits, fr, fl, name) = match side {
        TreeSide::Binary => {
            let elems = enum_binary_trees(n);
            let (o, a, b) = orbits_of(elems, iota_r, iota_l);
            (o, a, b, "binary")
        }
        TreeSide::Plane => {
            let elems = enum_plane_trees(n);
            let (o, a, b) = orbits_of(elems, iota_r_plane, iota_l_plane);
            (o, a, b, "plane")
        }
    };
    Ok(OrbitReport {
        n,
        side: name,
        total: orbits.iter().map(Vec::len).sum(),
        orbits,
        fixed_points_r: fr,
        fixed_points_l: fl,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_tree_basics() {
        let t = word_to_tree(&Word::new(vec![0])).unwrap();
        assert_eq!(t, PlaneTree::leaf());
        let w = Word::new(vec![2, 0, 1, 0]);
        let t = word_to_tree(&w).unwrap();
        assert_eq!(t.children.len(), 2);
        assert_eq!(t.vertices(), 4);
        assert_eq!(tree_to_word(&t), w);
    }

    #[test]
    fn single_leaf_contractions() {
        assert_eq!(tree_bijections(&BinaryTree::Leaf), (PlaneTree::leaf(), PlaneTree::leaf()));
        let b = BinaryTree::node(BinaryTree::node(BinaryTree::Leaf, BinaryTree::Leaf), BinaryTree::Leaf);
        let (l, r) = tree_bijections(&b);
        // Left chain of length two: a root with two leaf children.
        assert_eq!(l.to_string(), "(()())");
        // Right chain: root with one child which has one child.
        assert_eq!(r.to_string(), "((()))");
    }

    #[test]
    fn inverses_and_mirror_identity() {
        for n in 0..=5 {
            for b in enum_binary_trees(n) {
                assert_eq!(contract_left_inverse(&contract_left(&b)), b);
                assert_eq!(contract_right_inverse(&contract_right(&b)), b);
                assert_eq!(contract_right(&b).mirror(), contract_left(&b.mirror()));
            }
        }
    }

    #[test]
    fn fixed_point_counts_small() {
        let r = dihedral_orbits(3, TreeSide::Binary).unwrap();
        assert_eq!(r.total, 5);
        assert_eq!(r.fixed_points_r, 3);
        let p = dihedral_orbits(3, TreeSide::Plane).unwrap();
        assert_eq!(p.fixed_points_r, 1);
        assert_eq!(dihedral_orbits(4, TreeSide::Plane).unwrap().fixed_points_l, 0);
    }
}
