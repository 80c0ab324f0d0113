//! T̄₂ and the isomorphism g between T(B(·)) and T̄₂.
//!
//! g(∘) is a single 0-node. For t = ∘[B], g(t) is a 0-root whose only child
//! is the root of B, with every internal node of B labelled 1 and every leaf
//! tᵢ of B replaced by g(tᵢ).

use crate::tree::TreeTerm;
use crate::wpo::{BinaryTree, WElement};

use super::{GapError, LabeledTree};

/// Whether `t` lies in T̄₂: the root is labelled 0, every 0-node has at most
/// one child, every 1-node exactly two, and no other labels occur.
pub fn in_t2bar(t: &LabeledTree) -> bool {
    t.label == 0 && t2bar_violation(t).is_none()
}

fn t2bar_violation(t: &LabeledTree) -> Option<String> {
    let ok = match t.label {
        0 => t.children.len() <= 1,
        1 => t.children.len() == 2,
        _ => false,
    };
    if !ok {
        return Some(format!(
            "node labelled {} has {} children",
            t.label,
            t.children.len()
        ));
    }
    t.children.iter().find_map(t2bar_violation)
}

/// The map g from T(B(·)) to T̄₂.
pub fn to_gap(t: &TreeTerm) -> Result<LabeledTree, GapError> {
    match t {
        TreeTerm::Circ => Ok(LabeledTree::leaf(0)),
        TreeTerm::Apply(body) => match &**body {
            WElement::Tree(b) => Ok(LabeledTree::new(0, vec![binary(b)?])),
            _ => Err(GapError::NotBinary),
        },
    }
}

fn binary(b: &BinaryTree<WElement<TreeTerm>>) -> Result<LabeledTree, GapError> {
    match b {
        BinaryTree::Leaf(WElement::Hole(t)) => to_gap(t),
        BinaryTree::Leaf(_) => Err(GapError::NotBinary),
        BinaryTree::Node(l, r) => Ok(LabeledTree::new(1, vec![binary(l)?, binary(r)?])),
    }
}

/// The inverse of [`to_gap`] on T̄₂.
pub fn from_gap(t: &LabeledTree) -> Result<TreeTerm, GapError> {
    if t.label != 0 {
        return Err(GapError::NotInT2Bar("the root is not labelled 0".into()));
    }
    if let Some(why) = t2bar_violation(t) {
        return Err(GapError::NotInT2Bar(why));
    }
    Ok(zero_node(t))
}

/// Reads a 0-node of a tree already known to lie in T̄₂.
fn zero_node(t: &LabeledTree) -> TreeTerm {
    match t.children.first() {
        None => TreeTerm::Circ,
        Some(b) => TreeTerm::apply(WElement::tree(unbinary(b))),
    }
}

fn unbinary(t: &LabeledTree) -> BinaryTree<WElement<TreeTerm>> {
    if t.label == 1 {
        BinaryTree::node(unbinary(&t.children[0]), unbinary(&t.children[1]))
    } else {
        BinaryTree::Leaf(WElement::Hole(zero_node(t)))
    }
}
