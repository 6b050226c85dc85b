//! Planar binary trees `Y_n` and the leaf-deletion calculus.
//!
//! `Y_n` is the set of complete rooted planar binary trees with `n+1`
//! leaves; `|Y_n|` is the Catalan number `C(n)`. Leaves are implicitly
//! labeled `0..n` left to right. Deleting leaf `i` contracts its parent
//! node, and the restriction maps `R_0^{m;i,n}` and `R_i^{m;i,n}` are
//! composites of such deletions; they are realized here as deletion of a
//! set of original leaf labels, processed in decreasing label order so the
//! composite-of-`d_j` semantics and the set semantics coincide.
//!
//! The canonical order on `Y_n` is by left-subtree size ascending, then
//! recursively; the canonical text form is nested parentheses with `·` for
//! leaves, e.g. `Y_2 = { (·,(·,·)), ((·,·),·) }`.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum PlanarBinaryTree {
    Leaf,
    Node(Box<PlanarBinaryTree>, Box<PlanarBinaryTree>),
}

use PlanarBinaryTree::{Leaf, Node};

impl PlanarBinaryTree {
    pub fn node(left: PlanarBinaryTree, right: PlanarBinaryTree) -> Self {
        Node(Box::new(left), Box::new(right))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Leaf => 1,
            Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Index in `Y_n`: number of internal nodes, one less than leaves.
    pub fn weight(&self) -> usize {
        self.leaf_count() - 1
    }

    /// The comb `(·,(·,(·,…)))` whose every left subtree is a leaf.
    pub fn right_comb(n: usize) -> Self {
        (0..n).fold(Leaf, |t, _| Self::node(Leaf, t))
    }

    /// The comb `((…,·),·)` whose every right subtree is a leaf.
    pub fn left_comb(n: usize) -> Self {
        (0..n).fold(Leaf, |t, _| Self::node(t, Leaf))
    }

    /// Canonical nested-parenthesis form with `·` for leaves.
    pub fn canonical(&self) -> String {
        let mut s = String::new();
        self.write_canonical(&mut s);
        s
    }

    fn write_canonical(&self, out: &mut String) {
        match self {
            Leaf => out.push('\u{00b7}'),
            Node(l, r) => {
                out.push('(');
                l.write_canonical(out);
                out.push(',');
                r.write_canonical(out);
                out.push(')');
            }
        }
    }

    /// Parses the canonical form. `.` is accepted in place of `·`.
    pub fn parse(input: &str) -> Result<Self> {
        let mut chars = input.trim().chars().peekable();
        let tree = Self::parse_inner(&mut chars)?;
        if chars.next().is_some() {
            return Err(Error::MalformedSpec(
                "trailing characters after tree".into(),
            ));
        }
        Ok(tree)
    }

    fn parse_inner(chars: &mut core::iter::Peekable<core::str::Chars>) -> Result<Self> {
        match chars.next() {
            Some('\u{00b7}') | Some('.') => Ok(Leaf),
            Some('(') => {
                let left = Self::parse_inner(chars)?;
                if chars.next() != Some(',') {
                    return Err(Error::MalformedSpec("expected ',' in tree".into()));
                }
                let right = Self::parse_inner(chars)?;
                if chars.next() != Some(')') {
                    return Err(Error::MalformedSpec("expected ')' in tree".into()));
                }
                Ok(Self::node(left, right))
            }
            _ => Err(Error::MalformedSpec("expected '(' or leaf in tree".into())),
        }
    }
}

impl core::fmt::Display for PlanarBinaryTree {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.canonical())
    }
}

/// `C(n)` by the multiplicative formula.
pub fn catalan(n: usize) -> usize {
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c as usize
}

/// All of `Y_n` in canonical order: left-subtree size ascending, then the
/// same order recursively on both subtrees.
pub fn enumerate_trees(n: usize) -> Vec<PlanarBinaryTree> {
    fn with_leaves(l: usize) -> Vec<PlanarBinaryTree> {
        if l == 1 {
            return vec![Leaf];
        }
        let mut out = Vec::new();
        for left_leaves in 1..l {
            for left in with_leaves(left_leaves) {
                for right in with_leaves(l - left_leaves) {
                    out.push(PlanarBinaryTree::node(left.clone(), right));
                }
            }
        }
        out
    }
    with_leaves(n + 1)
}

/// Position of `t` in the canonical enumeration of its arity.
pub fn tree_index(t: &PlanarBinaryTree) -> usize {
    enumerate_trees(t.weight())
        .iter()
        .position(|u| u == t)
        .expect("every tree occurs in the enumeration of its arity")
}

/// `d_i : Y_n → Y_{n−1}`: removes leaf `i` and contracts its parent, the
/// sibling subtree taking the parent's place.
pub fn delete_leaf(t: &PlanarBinaryTree, i: usize) -> Result<PlanarBinaryTree> {
    let n = t.weight();
    if n < 2 {
        return Err(Error::TreeUnderflow);
    }
    if i > n {
        return Err(Error::LeafOutOfRange { index: i, max: n });
    }
    fn go(t: &PlanarBinaryTree, i: usize) -> PlanarBinaryTree {
        match t {
            Leaf => unreachable!("deletion never recurses into a bare leaf"),
            Node(l, r) => {
                let left_leaves = l.leaf_count();
                if i < left_leaves {
                    if **l == Leaf {
                        (**r).clone()
                    } else {
                        PlanarBinaryTree::node(go(l, i), (**r).clone())
                    }
                } else if **r == Leaf {
                    (**l).clone()
                } else {
                    PlanarBinaryTree::node((**l).clone(), go(r, i - left_leaves))
                }
            }
        }
    }
    Ok(go(t, i))
}

/// Deletes a set of original leaf labels in one structural pass. Equal to
/// iterating [`delete_leaf`] over the labels in decreasing order.
pub fn delete_leaves(t: &PlanarBinaryTree, labels: &[usize]) -> Result<PlanarBinaryTree> {
    let n = t.weight();
    if let Some(&bad) = labels.iter().find(|&&l| l > n) {
        return Err(Error::LeafOutOfRange { index: bad, max: n });
    }
    if labels.len() > n {
        return Err(Error::TreeUnderflow);
    }
    fn go(t: &PlanarBinaryTree, counter: &mut usize, labels: &[usize]) -> Option<PlanarBinaryTree> {
        match t {
            Leaf => {
                let keep = !labels.contains(counter);
                *counter += 1;
                keep.then_some(Leaf)
            }
            Node(l, r) => match (go(l, counter, labels), go(r, counter, labels)) {
                (Some(a), Some(b)) => Some(PlanarBinaryTree::node(a, b)),
                (Some(a), None) => Some(a),
                (None, Some(b)) => Some(b),
                (None, None) => None,
            },
        }
    }
    let mut counter = 0;
    Ok(go(t, &mut counter, labels).expect("at least one leaf survives"))
}

/// Which side of the restriction pair to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restriction {
    /// `R_0^{m;i,n} : Y_{m+n−1} → Y_m`, deleting leaves `{i, …, i+n−2}`.
    Outer,
    /// `R_i^{m;i,n} : Y_{m+n−1} → Y_n`, deleting `{0,…,i−2} ∪ {i+n,…,m+n−1}`.
    Inner,
}

/// The restriction maps attached to a partial composition slot: for
/// `T ∈ Y_{m+n−1}` and `1 ≤ i ≤ m`, the outer restriction lands in `Y_m`
/// and the inner one in `Y_n`.
pub fn restriction(
    t: &PlanarBinaryTree,
    m: usize,
    i: usize,
    n: usize,
    which: Restriction,
) -> Result<PlanarBinaryTree> {
    if m < 1 || n < 1 || i < 1 || i > m {
        return Err(Error::IndexOutOfRange { index: i, arity: m });
    }
    let expected = m + n - 1;
    if t.weight() != expected {
        return Err(Error::TreeArityMismatch {
            expected,
            got: t.weight(),
        });
    }
    let labels: Vec<usize> = match which {
        Restriction::Outer => (i..=i + n - 2).collect(),
        Restriction::Inner => (0..=m + n - 1)
            .filter(|&l| l + 2 <= i || l >= i + n)
            .collect(),
    };
    delete_leaves(t, &labels)
}
