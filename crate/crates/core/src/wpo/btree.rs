//! Structured binary trees with labelled leaves, and their embedding order.

use std::fmt;

/// A finite binary tree whose leaves carry labels; internal nodes have
/// exactly two ordered children and no label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree<L> {
    Leaf(L),
    Node(Box<BinaryTree<L>>, Box<BinaryTree<L>>),
}

impl<L> BinaryTree<L> {
    pub fn node(left: BinaryTree<L>, right: BinaryTree<L>) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    /// Leaf labels from left to right.
    pub fn leaves(&self) -> Vec<&L> {
        let mut out = Vec::new();
        self.visit_leaves(&mut |l| out.push(l));
        out
    }

    fn visit_leaves<'a>(&'a self, f: &mut dyn FnMut(&'a L)) {
        match self {
            BinaryTree::Leaf(l) => f(l),
            BinaryTree::Node(a, b) => {
                a.visit_leaves(f);
                b.visit_leaves(f);
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            BinaryTree::Leaf(_) => 1,
            BinaryTree::Node(a, b) => a.leaf_count() + b.leaf_count(),
        }
    }

    /// Relabels the leaves, left to right.
    pub fn map<M>(&self, f: &mut impl FnMut(&L) -> M) -> BinaryTree<M> {
        match self {
            BinaryTree::Leaf(l) => BinaryTree::Leaf(f(l)),
            BinaryTree::Node(a, b) => BinaryTree::node(a.map(f), b.map(f)),
        }
    }
}

/// `(left, right)` for nodes; leaves are printed as their label.
impl<L: fmt::Display> fmt::Display for BinaryTree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf(l) => write!(f, "{l}"),
            BinaryTree::Node(a, b) => write!(f, "({a}, {b})"),
        }
    }
}

enum Flat<'a, L> {
    Leaf(&'a L),
    Node(usize, usize),
}

/// Nodes in post-order, so children precede their parent; the root is last.
fn flatten<L>(t: &BinaryTree<L>) -> Vec<Flat<'_, L>> {
    fn go<'a, L>(t: &'a BinaryTree<L>, out: &mut Vec<Flat<'a, L>>) -> usize {
        match t {
            BinaryTree::Leaf(l) => out.push(Flat::Leaf(l)),
            BinaryTree::Node(a, b) => {
                let i = go(a, out);
                let j = go(b, out);
                out.push(Flat::Node(i, j));
            }
        }
        out.len() - 1
    }
    let mut out = Vec::new();
    go(t, &mut out);
    out
}

/// Whether `s` embeds into `t`: a leaf into a leaf with a larger label, any
/// tree into an immediate subtree of `t`, or a node into a node child-wise.
/// Memoised over pairs of subtrees.
pub fn btree_embed<L>(
    s: &BinaryTree<L>,
    t: &BinaryTree<L>,
    mut leaf_leq: impl FnMut(&L, &L) -> bool,
) -> bool {
    let (fs, ft) = (flatten(s), flatten(t));
    let mut memo: Vec<Option<bool>> = vec![None; fs.len() * ft.len()];
    fn go<L>(
        i: usize,
        j: usize,
        fs: &[Flat<'_, L>],
        ft: &[Flat<'_, L>],
        memo: &mut [Option<bool>],
        leq: &mut dyn FnMut(&L, &L) -> bool,
    ) -> bool {
        let key = i * ft.len() + j;
        if let Some(v) = memo[key] {
            return v;
        }
        let v = match (&fs[i], &ft[j]) {
            (Flat::Leaf(x), Flat::Leaf(y)) => leq(x, y),
            (Flat::Node(a, b), &Flat::Node(c, d)) => {
                go(i, c, fs, ft, memo, leq)
                    || go(i, d, fs, ft, memo, leq)
                    || (go(*a, c, fs, ft, memo, leq) && go(*b, d, fs, ft, memo, leq))
            }
            (Flat::Leaf(_), &Flat::Node(c, d)) => {
                go(i, c, fs, ft, memo, leq) || go(i, d, fs, ft, memo, leq)
            }
            (Flat::Node(..), Flat::Leaf(_)) => false,
        };
        memo[key] = Some(v);
        v
    }
    go(
        fs.len() - 1,
        ft.len() - 1,
        &fs,
        &ft,
        &mut memo,
        &mut leaf_leq,
    )
}

/// The same relation by direct recursion without memoisation.
pub fn btree_embed_naive<L>(
    s: &BinaryTree<L>,
    t: &BinaryTree<L>,
    leaf_leq: &mut impl FnMut(&L, &L) -> bool,
) -> bool {
    let into_child = match t {
        BinaryTree::Node(c, d) => {
            btree_embed_naive(s, c, leaf_leq) || btree_embed_naive(s, d, leaf_leq)
        }
        BinaryTree::Leaf(_) => false,
    };
    into_child
        || match (s, t) {
            (BinaryTree::Leaf(x), BinaryTree::Leaf(y)) => leaf_leq(x, y),
            (BinaryTree::Node(a, b), BinaryTree::Node(c, d)) => {
                btree_embed_naive(a, c, leaf_leq) && btree_embed_naive(b, d, leaf_leq)
            }
            _ => false,
        }
}
