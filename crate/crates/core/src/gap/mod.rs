//! Finite rooted trees with natural-number labels under the weak
//! gap-embedding order, the subclass T̄₂ of {0,1}-labelled trees, and its
//! order isomorphism with T(B(·)).
//!
//! An embedding of T₁ into T₂ is an injective map f that preserves the tree
//! order and infima and labels, such that for every node τ with an immediate
//! successor τ′, each node strictly between f(τ) and f(τ′) has a label at
//! least that of τ′. A structured embedding also keeps siblings in their
//! left-to-right order.

mod brute;
mod iso;

use std::fmt;

use thiserror::Error;

use crate::text::{Cursor, ParseError};

pub use brute::{brute_gap_leq, BRUTE_MAX_NODES};
pub use iso::{from_gap, in_t2bar, to_gap};

/// A finite rooted tree with ordered children and a label on every node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledTree {
    pub label: u32,
    pub children: Vec<LabeledTree>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GapError {
    #[error("tree with {nodes} nodes exceeds the brute-force limit of {BRUTE_MAX_NODES}")]
    TooLarge { nodes: usize },
    #[error("tree is not in T2-bar: {0}")]
    NotInT2Bar(String),
    #[error("term is not shaped by B(_)")]
    NotBinary,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl LabeledTree {
    pub fn leaf(label: u32) -> Self {
        LabeledTree {
            label,
            children: Vec::new(),
        }
    }

    pub fn new(label: u32, children: Vec<LabeledTree>) -> Self {
        LabeledTree { label, children }
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(LabeledTree::node_count)
            .sum::<usize>()
    }

    /// Labels in preorder.
    pub fn labels(&self) -> Vec<u32> {
        Flat::new(self).label
    }

    /// Graphviz source drawing the tree with labels as node text.
    pub fn to_dot(&self) -> String {
        let flat = Flat::new(self);
        let mut out = String::from("digraph tree {\n  node [shape=circle];\n");
        for (i, l) in flat.label.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{l}\"];\n"));
        }
        for (i, cs) in flat.children.iter().enumerate() {
            for c in cs {
                out.push_str(&format!("  n{i} -> n{c};\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Parses an s-expression `(label child …)`.
pub fn parse_labeled_tree(src: &str) -> Result<LabeledTree, ParseError> {
    fn tree(cur: &mut Cursor<'_>) -> Result<LabeledTree, ParseError> {
        cur.expect('(')?;
        let pos = cur.pos();
        let label =
            u32::try_from(cur.number()?).map_err(|_| ParseError::new(pos, "label out of range"))?;
        let mut children = Vec::new();
        while !cur.eat(')') {
            children.push(tree(cur)?);
        }
        Ok(LabeledTree { label, children })
    }
    let mut cur = Cursor::new(src);
    let t = tree(&mut cur)?;
    cur.finish()?;
    Ok(t)
}

impl fmt::Display for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.label)?;
        for c in &self.children {
            write!(f, " {c}")?;
        }
        f.write_str(")")
    }
}

/// A tree laid out in preorder: node 0 is the root and every subtree
/// occupies a contiguous range after its root.
pub(crate) struct Flat {
    pub label: Vec<u32>,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
}

impl Flat {
    pub fn new(t: &LabeledTree) -> Self {
        fn go(t: &LabeledTree, parent: Option<usize>, flat: &mut Flat) -> usize {
            let i = flat.label.len();
            flat.label.push(t.label);
            flat.parent.push(parent);
            flat.children.push(Vec::new());
            for c in &t.children {
                let j = go(c, Some(i), flat);
                flat.children[i].push(j);
            }
            i
        }
        let mut flat = Flat {
            label: Vec::new(),
            parent: Vec::new(),
            children: Vec::new(),
        };
        go(t, None, &mut flat);
        flat
    }

    pub fn len(&self) -> usize {
        self.label.len()
    }
}

/// Whether `t1` gap-embeds into `t2`; `structured` additionally demands that
/// siblings keep their left-to-right order.
///
/// Dynamic programming over pairs of nodes: `root[u][v]` says the subtree at
/// `u` embeds with `u` sent to `v`, and `below[u][v]` says it embeds somewhere
/// in the subtree at `v` with every node passed on the way down labelled at
/// least `label(u)`. A node's children must go to distinct children of its
/// image, which is exactly infimum preservation.
pub fn gap_leq(t1: &LabeledTree, t2: &LabeledTree, structured: bool) -> bool {
    let (a, b) = (Flat::new(t1), Flat::new(t2));
    let (n, m) = (a.len(), b.len());
    let mut root = vec![vec![false; m]; n];
    let mut below = vec![vec![false; m]; n];
    for u in (0..n).rev() {
        for v in (0..m).rev() {
            let fits = |x: usize, c: usize| below[x][c];
            root[u][v] = a.label[u] == b.label[v]
                && if structured {
                    ordered_match(&a.children[u], &b.children[v], fits)
                } else {
                    bipartite_match(&a.children[u], &b.children[v], fits)
                };
            below[u][v] = root[u][v]
                || (b.label[v] >= a.label[u] && b.children[v].iter().any(|&c| below[u][c]));
        }
    }
    root[0].iter().any(|&x| x)
}

/// Sends `xs` in order to an increasing selection of `ys`; greedy choice of
/// the earliest fitting target is optimal.
fn ordered_match(xs: &[usize], ys: &[usize], fits: impl Fn(usize, usize) -> bool) -> bool {
    let mut next = 0;
    for &x in xs {
        match (next..ys.len()).find(|&k| fits(x, ys[k])) {
            Some(k) => next = k + 1,
            None => return false,
        }
    }
    true
}

/// Whether every element of `xs` can be matched to a distinct fitting
/// element of `ys` (Kuhn's augmenting paths).
fn bipartite_match(xs: &[usize], ys: &[usize], fits: impl Fn(usize, usize) -> bool) -> bool {
    if xs.len() > ys.len() {
        return false;
    }
    fn augment(
        i: usize,
        xs: &[usize],
        ys: &[usize],
        fits: &dyn Fn(usize, usize) -> bool,
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for k in 0..ys.len() {
            if seen[k] || !fits(xs[i], ys[k]) {
                continue;
            }
            seen[k] = true;
            let free = match owner[k] {
                None => true,
                Some(j) => augment(j, xs, ys, fits, owner, seen),
            };
            if free {
                owner[k] = Some(i);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; ys.len()];
    (0..xs.len()).all(|i| {
        let mut seen = vec![false; ys.len()];
        augment(i, xs, ys, &fits, &mut owner, &mut seen)
    })
}

/// Every ordered tree with exactly `nodes` nodes and labels below `labels`,
/// in a deterministic order.
pub fn labeled_trees(nodes: usize, labels: u32) -> Vec<LabeledTree> {
    if nodes == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for forest in forests(nodes - 1, labels) {
        for l in 0..labels {
            out.push(LabeledTree::new(l, forest.clone()));
        }
    }
    out
}

fn forests(nodes: usize, labels: u32) -> Vec<Vec<LabeledTree>> {
    if nodes == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 1..=nodes {
        let rests = forests(nodes - k, labels);
        for first in labeled_trees(k, labels) {
            for rest in &rests {
                let mut f = vec![first.clone()];
                f.extend(rest.iter().cloned());
                out.push(f);
            }
        }
    }
    out
}
