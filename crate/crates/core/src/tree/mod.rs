//! Terms built from a single symbol ∘ and a constructor expression W, and the
//! least reflexive, transitive order on them generated by three clauses:
//!
//! 1. ∘ ≤ t for every t;
//! 2. s ≤ ∘[w(t₁, …, tₙ)] whenever s ≤ tⱼ for some j;
//! 3. ∘[w] ≤ ∘[w'] whenever w ≤ w' in W(T(W)).
//!
//! [`t_leq`] decides the order by structural recursion; [`closure_oracle`]
//! computes the least relation on a finite universe by iteration, and the two
//! are tested against each other.

mod enumerate;
mod xstarstar;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::text::{Cursor, ParseError};
use crate::wpo::{parse_element, w_leq_unchecked, BinaryTree, ShapeError, WElement, WExpr};

pub use enumerate::{closure_oracle, enumerate, enumerate_by_size, left_set_bounded, Relation};
pub use xstarstar::xstarstar_membership_cases;

/// A term of T(W): either ∘ or ∘ applied to an element of W(T(W)).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeTerm {
    Circ,
    Apply(Arc<WElement<TreeTerm>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("the term o has no components")]
    NoComponents,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl TreeTerm {
    pub fn apply(body: WElement<TreeTerm>) -> Self {
        TreeTerm::Apply(Arc::new(body))
    }

    pub fn is_circ(&self) -> bool {
        matches!(self, TreeTerm::Circ)
    }

    /// Number of ∘ symbols plus the structural nodes of every body.
    pub fn size(&self) -> usize {
        match self {
            TreeTerm::Circ => 1,
            TreeTerm::Apply(body) => 1 + body.size(&|t: &TreeTerm| t.size()),
        }
    }

    /// The immediate subterms, left to right.
    pub fn children(&self) -> Vec<&TreeTerm> {
        match self {
            TreeTerm::Circ => Vec::new(),
            TreeTerm::Apply(body) => body.holes(),
        }
    }

    /// Graphviz source for the term: each ∘ is a node labelled `o`, and the
    /// constructors of its body appear as intermediate nodes.
    pub fn to_dot(&self) -> String {
        let mut dot = Dot {
            out: String::from("digraph term {\n"),
            next: 0,
        };
        dot.term(self);
        dot.out.push_str("}\n");
        dot.out
    }

    /// Checks that every body in the term is shaped by `w`.
    pub fn check_shape(&self, w: &WExpr) -> Result<(), ShapeError> {
        if let TreeTerm::Apply(body) = self {
            body.check_shape(w)?;
            for c in body.holes() {
                c.check_shape(w)?;
            }
        }
        Ok(())
    }
}

struct Dot {
    out: String,
    next: usize,
}

impl Dot {
    fn node(&mut self, label: &str) -> usize {
        let id = self.next;
        self.next += 1;
        self.out
            .push_str(&format!("  n{id} [label=\"{label}\"];\n"));
        id
    }

    fn edge(&mut self, from: usize, to: usize) {
        self.out.push_str(&format!("  n{from} -> n{to};\n"));
    }

    fn term(&mut self, t: &TreeTerm) -> usize {
        let id = self.node("o");
        if let TreeTerm::Apply(body) = t {
            let b = self.element(body);
            self.edge(id, b);
        }
        id
    }

    fn element(&mut self, e: &WElement<TreeTerm>) -> usize {
        match e {
            WElement::Hole(t) => self.term(t),
            WElement::Const(k) => self.node(&format!("#{k}")),
            WElement::Inl(x) | WElement::Inr(x) => {
                let id = self.node(if matches!(e, WElement::Inl(_)) {
                    "inl"
                } else {
                    "inr"
                });
                let c = self.element(x);
                self.edge(id, c);
                id
            }
            WElement::Pair(a, b) => {
                let id = self.node("pair");
                for x in [a, b] {
                    let c = self.element(x);
                    self.edge(id, c);
                }
                id
            }
            WElement::List(xs) => {
                let id = self.node("list");
                for x in xs {
                    let c = self.element(x);
                    self.edge(id, c);
                }
                id
            }
            WElement::Tree(bt) => self.binary(bt),
        }
    }

    fn binary(&mut self, bt: &BinaryTree<WElement<TreeTerm>>) -> usize {
        match bt {
            BinaryTree::Leaf(x) => self.element(x),
            BinaryTree::Node(l, r) => {
                let id = self.node("node");
                for x in [l, r] {
                    let c = self.binary(x);
                    self.edge(id, c);
                }
                id
            }
        }
    }
}

/// The body w(t₁, …, tₙ) of ∘[w(t₁, …, tₙ)].
pub fn components(t: &TreeTerm) -> Result<&WElement<TreeTerm>, TreeError> {
    match t {
        TreeTerm::Circ => Err(TreeError::NoComponents),
        TreeTerm::Apply(body) => Ok(body),
    }
}

/// Decides s ≤ t in T(W).
pub fn t_leq(s: &TreeTerm, t: &TreeTerm, w: &WExpr) -> Result<bool, TreeError> {
    s.check_shape(w)?;
    t.check_shape(w)?;
    Ok(t_leq_unchecked(s, t, w))
}

/// [`t_leq`] for terms already known to be shaped by `w`.
pub fn t_leq_unchecked(s: &TreeTerm, t: &TreeTerm, w: &WExpr) -> bool {
    // Subterms do not move during a query, so their addresses identify them.
    let mut memo = HashMap::new();
    leq_memo(s, t, w, &mut memo)
}

fn leq_memo(
    s: &TreeTerm,
    t: &TreeTerm,
    w: &WExpr,
    memo: &mut HashMap<(usize, usize), bool>,
) -> bool {
    let (bs, bt) = match (s, t) {
        (TreeTerm::Circ, _) => return true,
        (_, TreeTerm::Circ) => return false,
        (TreeTerm::Apply(bs), TreeTerm::Apply(bt)) => (bs, bt),
    };
    let key = (s as *const TreeTerm as usize, t as *const TreeTerm as usize);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let v = bt.holes().into_iter().any(|c| leq_memo(s, c, w, memo))
        || w_leq_unchecked(w, bs, bt, &mut |x, y| leq_memo(x, y, w, memo));
    memo.insert(key, v);
    v
}

/// Parses `o` or `o[E]`, where `E` is an element of W whose holes hold terms.
pub fn parse_tree_term(src: &str, w: &WExpr) -> Result<TreeTerm, TreeError> {
    let mut cur = Cursor::new(src);
    let t = term(&mut cur, w)?;
    cur.finish()?;
    Ok(t)
}

fn term(cur: &mut Cursor<'_>, w: &WExpr) -> Result<TreeTerm, ParseError> {
    if !(cur.eat_keyword("o") || cur.eat('∘')) {
        return Err(cur.error("expected `o`"));
    }
    if !cur.eat('[') {
        return Ok(TreeTerm::Circ);
    }
    let body = parse_element(cur, w, &mut |c: &mut Cursor<'_>| term(c, w))?;
    cur.expect(']')?;
    Ok(TreeTerm::apply(body))
}

impl fmt::Display for TreeTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeTerm::Circ => f.write_str("o"),
            TreeTerm::Apply(body) => write!(f, "o[{body}]"),
        }
    }
}
