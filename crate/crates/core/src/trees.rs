//! Decreasing binary trees, the unordered trees `T(π;∞)`, the bijections
//! `Ψ`, `Φ`, `Ψ'`, and Dyck paths of 231-avoiding permutations.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fs_action::{involution_f, phi_prime_set, phi_set};
use crate::patterns::avoids_231;
use crate::word::{Boundary, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinaryNode {
    pub label: i32,
    pub left: Option<Box<BinaryNode>>,
    pub right: Option<Box<BinaryNode>>,
}

/// Split `w = L m R` at its largest letter `m`; `L` and `R` become the left
/// and right subtrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DecreasingBinaryTree {
    pub root: Option<Box<BinaryNode>>,
}

fn build_binary(a: &[i32]) -> Option<Box<BinaryNode>> {
    let (m, &label) = a.iter().enumerate().max_by_key(|&(_, &x)| x)?;
    Some(Box::new(BinaryNode {
        label,
        left: build_binary(&a[..m]),
        right: build_binary(&a[m + 1..]),
    }))
}

fn in_order(node: &Option<Box<BinaryNode>>, out: &mut Vec<i32>) {
    if let Some(n) = node {
        in_order(&n.left, out);
        out.push(n.label);
        in_order(&n.right, out);
    }
}

fn flip_one_child(node: &mut Option<Box<BinaryNode>>) {
    if let Some(n) = node {
        if n.left.is_some() != n.right.is_some() {
            std::mem::swap(&mut n.left, &mut n.right);
        }
        flip_one_child(&mut n.left);
        flip_one_child(&mut n.right);
    }
}

// (letter, number of right edges from the root, is a right child)
fn walk(node: &Option<Box<BinaryNode>>, rights: usize, is_right: bool, out: &mut Vec<(i32, usize, bool)>) {
    if let Some(n) = node {
        out.push((n.label, rights, is_right));
        walk(&n.left, rights, false, out);
        walk(&n.right, rights + 1, true, out);
    }
}

impl DecreasingBinaryTree {
    pub fn new(w: &Word) -> Self {
        DecreasingBinaryTree { root: build_binary(w.letters()) }
    }

    /// In-order reading.
    pub fn word(&self) -> Word {
        let mut out = Vec::new();
        in_order(&self.root, &mut out);
        Word::from_vec_unchecked(out)
    }

    /// Moves the only child of every one-child vertex to the other side.
    pub fn flip_one_child_nodes(&mut self) {
        flip_one_child(&mut self.root);
    }

    fn vertices(&self) -> Vec<(i32, usize, bool)> {
        let mut out = Vec::new();
        walk(&self.root, 0, false, &mut out);
        out
    }

    /// Letters that are right children.
    pub fn right_children(&self) -> BTreeSet<i32> {
        self.vertices().into_iter().filter(|v| v.2).map(|v| v.0).collect()
    }

    /// Letters reached from the root through an odd number of right edges.
    pub fn odd_right_depth(&self) -> BTreeSet<i32> {
        self.vertices().into_iter().filter(|v| v.1 % 2 == 1).map(|v| v.0).collect()
    }
}

pub fn binary_tree(w: &Word) -> DecreasingBinaryTree {
    DecreasingBinaryTree::new(w)
}

pub fn word_of(t: &DecreasingBinaryTree) -> Word {
    t.word()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TreeLabel {
    Infinity,
    Zero,
    Letter(i32),
}

impl Serialize for TreeLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            TreeLabel::Infinity => s.serialize_str("inf"),
            TreeLabel::Zero => s.serialize_i32(0),
            TreeLabel::Letter(x) => s.serialize_i32(*x),
        }
    }
}

/// A rooted tree whose children are kept in the order they were built.
/// Equality via [`UnorderedTree::canonical`] ignores that order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnorderedTree {
    pub label: TreeLabel,
    pub children: Vec<UnorderedTree>,
}

impl UnorderedTree {
    pub fn leaf(label: TreeLabel) -> Self {
        UnorderedTree { label, children: Vec::new() }
    }

    /// Children sorted by label, recursively.
    pub fn canonical(&self) -> Self {
        let mut children: Vec<UnorderedTree> = self.children.iter().map(|c| c.canonical()).collect();
        children.sort_by_key(|c| c.label);
        UnorderedTree { label: self.label, children }
    }

    /// `(letter, height)` for every non-root vertex; the root has height 0.
    pub fn heights(&self) -> Vec<(i32, usize)> {
        let mut out = Vec::new();
        let mut stack = vec![(self, 0usize)];
        while let Some((node, h)) = stack.pop() {
            if let TreeLabel::Letter(x) = node.label {
                out.push((x, h));
            }
            stack.extend(node.children.iter().map(|c| (c, h + 1)));
        }
        out
    }

    /// Non-root vertices at even height.
    pub fn even_height_letters(&self) -> BTreeSet<i32> {
        self.heights().into_iter().filter(|&(_, h)| h > 0 && h % 2 == 0).map(|(x, _)| x).collect()
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(UnorderedTree::size).sum::<usize>()
    }
}

// children of a vertex whose word (below it) is `a`
fn ltr_children(a: &[i32]) -> Vec<UnorderedTree> {
    let mut children = Vec::new();
    let mut i = 0;
    while i < a.len() {
        let m = a[i];
        let mut j = i + 1;
        while j < a.len() && a[j] < m {
            j += 1;
        }
        children.push(UnorderedTree {
            label: TreeLabel::Letter(m),
            children: ltr_children(&a[i + 1..j]),
        });
        i = j;
    }
    children
}

/// `T(w;∞)`: the left-to-right maxima `m_i` of `w = m_1 w_1 ... m_k w_k` are
/// the children of the root, with `T(w_i; m_i)` hanging below `m_i`.
pub fn unordered_tree(w: &Word) -> UnorderedTree {
    UnorderedTree {
        label: TreeLabel::Infinity,
        children: ltr_children(w.letters()),
    }
}

/// Number of non-root vertices at even height in `T(w;∞)`.
pub fn veh(w: &Word) -> usize {
    unordered_tree(w).even_height_letters().len()
}

/// Letters with an odd number of right edges above them in the binary tree.
pub fn odd_set(w: &Word) -> BTreeSet<i32> {
    DecreasingBinaryTree::new(w).odd_right_depth()
}

/// Right children in the binary tree.
pub fn redge_set(w: &Word) -> BTreeSet<i32> {
    DecreasingBinaryTree::new(w).right_children()
}

/// `Ψ(π) = Π_{x ∈ Odd(π)} φ_x(π)`.
pub fn psi(w: &Word) -> Word {
    phi_set(w, odd_set(w)).expect("letters of w")
}

/// `Φ(π) = Π_{x ∈ Redge(π)} φ_x(π)`.
pub fn phi_cap(w: &Word) -> Word {
    phi_set(w, redge_set(w)).expect("letters of w")
}

/// `Ψ'(π) = Π_{x ∈ Odd(π)} φ'_x(π)`.
pub fn psi_prime(w: &Word) -> Word {
    phi_prime_set(w, odd_set(w), Boundary::Top).expect("letters of w")
}

/// `Ψ'(L n R) = Ψ'(L) n f(Ψ'(R))` with `f` the full modified involution.
pub fn psi_prime_recursive(w: &Word) -> Word {
    let a = w.letters();
    let Some((m, &n)) = a.iter().enumerate().max_by_key(|&(_, &x)| x) else {
        return Word::empty();
    };
    let left = psi_prime_recursive(&Word::from_vec_unchecked(a[..m].to_vec()));
    let right = involution_f(&psi_prime_recursive(&Word::from_vec_unchecked(a[m + 1..].to_vec())));
    let mut out = left.into_letters();
    out.push(n);
    out.extend(right.into_letters());
    Word::from_vec_unchecked(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath(Vec<Step>);

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            h += if *s == Step::Up { 1 } else { -1 };
            if h < 0 {
                return Err(Error::MalformedPath(format!("goes below the axis at step {}", i + 1)));
            }
        }
        if h != 0 {
            return Err(Error::MalformedPath(format!("ends at height {h}")));
        }
        Ok(DyckPath(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// Semilength.
    pub fn n(&self) -> usize {
        self.0.len() / 2
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(if *s == Step::Up { "u" } else { "d" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'u' | 'U' => Ok(Step::Up),
                'd' | 'D' => Ok(Step::Down),
                other => Err(Error::MalformedPath(format!("unexpected step `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

impl Serialize for DyckPath {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn preorder(children: &[UnorderedTree], out: &mut Vec<Step>) {
    let mut sorted: Vec<&UnorderedTree> = children.iter().collect();
    sorted.sort_by_key(|t| std::cmp::Reverse(t.label));
    for c in sorted {
        out.push(Step::Up);
        preorder(&c.children, out);
        out.push(Step::Down);
    }
}

/// Pre-order walk of `T(w;∞)` with children in decreasing order: `u` going
/// down an edge, `d` coming back up.
pub fn dyck_path(w: &Word) -> Result<DyckPath> {
    if !avoids_231(w) {
        return Err(Error::Not231Avoiding(w.to_string()));
    }
    let mut steps = Vec::with_capacity(2 * w.len());
    preorder(&unordered_tree(w).children, &mut steps);
    DyckPath::new(steps)
}

/// `(up-steps ending at even height, occurrences of uu)`.
pub fn kreweras_stats(p: &DyckPath) -> (usize, usize) {
    let mut h = 0usize;
    let mut even = 0;
    let mut double = 0;
    let mut prev = None;
    for &s in p.steps() {
        match s {
            Step::Up => {
                h += 1;
                if h.is_multiple_of(2) {
                    even += 1;
                }
                if prev == Some(Step::Up) {
                    double += 1;
                }
            }
            Step::Down => h -= 1,
        }
        prev = Some(s);
    }
    (even, double)
}

/// All Dyck paths of semilength `n`, lexicographic with `u < d`.
pub fn dyck_paths(n: usize) -> Vec<DyckPath> {
    fn go(up: usize, down: usize, n: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if cur.len() == 2 * n {
            out.push(DyckPath(cur.clone()));
            return;
        }
        if up < n {
            cur.push(Step::Up);
            go(up + 1, down, n, cur, out);
            cur.pop();
        }
        if down < up {
            cur.push(Step::Down);
            go(up, down + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, 0, n, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// `d_1 - 2 d_2 + 4 d_3 - ...` where `d_i` counts decreasing subsequences of
/// length `i + 1`.
pub fn veh_alternating_sum(w: &Word) -> i64 {
    let d = w.dec_subseq_counts(w.len().saturating_sub(1).max(1));
    d.iter()
        .enumerate()
        .map(|(i, &di)| (-2i64).pow(i as u32) * di as i64)
        .sum()
}
