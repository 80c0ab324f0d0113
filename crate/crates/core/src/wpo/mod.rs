//! Order constructors built from a placeholder: finite posets, disjoint sums,
//! products, finite sequences under Higman's embedding, and structured binary
//! trees.
//!
//! A [`WExpr`] is a constructor expression with holes; applied to a carrier
//! order X it yields the order W(X) whose elements are [`WElement`]s holding
//! carrier values in their holes.

mod btree;
mod enumerate;
mod higman;
mod parse;
mod poset;

use std::fmt;

use thiserror::Error;

pub use btree::{btree_embed, btree_embed_naive, BinaryTree};
pub use enumerate::elements_of_size;
pub use higman::{higman_leq, higman_leq_exhaustive};
pub use parse::{parse_element, parse_wexpr};
pub use poset::{FinitePoset, PosetError};

/// A constructor expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WExpr {
    /// The placeholder `·`.
    Hole,
    Const(FinitePoset),
    Sum(Box<WExpr>, Box<WExpr>),
    Prod(Box<WExpr>, Box<WExpr>),
    Star(Box<WExpr>),
    BTree(Box<WExpr>),
}

impl WExpr {
    pub fn sum(a: WExpr, b: WExpr) -> Self {
        WExpr::Sum(Box::new(a), Box::new(b))
    }

    pub fn prod(a: WExpr, b: WExpr) -> Self {
        WExpr::Prod(Box::new(a), Box::new(b))
    }

    pub fn star(a: WExpr) -> Self {
        WExpr::Star(Box::new(a))
    }

    pub fn btree(a: WExpr) -> Self {
        WExpr::BTree(Box::new(a))
    }

    fn precedence(&self) -> u8 {
        match self {
            WExpr::Sum(..) => 0,
            WExpr::Prod(..) => 1,
            WExpr::Star(_) => 2,
            WExpr::Hole | WExpr::Const(_) | WExpr::BTree(_) => 3,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            self.fmt_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            WExpr::Hole => f.write_str("_"),
            WExpr::Const(p) => write!(f, "{p}"),
            WExpr::Sum(a, b) => {
                a.fmt_at(f, 0)?;
                f.write_str("+")?;
                b.fmt_at(f, 1)
            }
            WExpr::Prod(a, b) => {
                a.fmt_at(f, 1)?;
                f.write_str("x")?;
                b.fmt_at(f, 2)
            }
            WExpr::Star(a) => {
                a.fmt_at(f, 2)?;
                f.write_str("*")
            }
            WExpr::BTree(a) => {
                f.write_str("B(")?;
                a.fmt_at(f, 0)?;
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for WExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

/// An element of W(X) for a carrier X.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WElement<X> {
    /// A carrier value in a hole.
    Hole(X),
    /// An element of a constant poset.
    Const(usize),
    Inl(Box<WElement<X>>),
    Inr(Box<WElement<X>>),
    Pair(Box<WElement<X>>, Box<WElement<X>>),
    List(Vec<WElement<X>>),
    Tree(Box<BinaryTree<WElement<X>>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("element does not match the shape {expected}")]
pub struct ShapeError {
    pub expected: String,
}

impl<X> WElement<X> {
    pub fn pair(a: WElement<X>, b: WElement<X>) -> Self {
        WElement::Pair(Box::new(a), Box::new(b))
    }

    pub fn tree(t: BinaryTree<WElement<X>>) -> Self {
        WElement::Tree(Box::new(t))
    }

    pub fn inl(a: WElement<X>) -> Self {
        WElement::Inl(Box::new(a))
    }

    pub fn inr(a: WElement<X>) -> Self {
        WElement::Inr(Box::new(a))
    }

    /// Checks that the element is shaped by `w`.
    pub fn check_shape(&self, w: &WExpr) -> Result<(), ShapeError> {
        let ok = match (w, self) {
            (WExpr::Hole, WElement::Hole(_)) => true,
            (WExpr::Const(p), WElement::Const(k)) => *k < p.size(),
            (WExpr::Sum(a, _), WElement::Inl(e)) => return e.check_shape(a),
            (WExpr::Sum(_, b), WElement::Inr(e)) => return e.check_shape(b),
            (WExpr::Prod(a, b), WElement::Pair(x, y)) => {
                x.check_shape(a)?;
                return y.check_shape(b);
            }
            (WExpr::Star(a), WElement::List(xs)) => {
                return xs.iter().try_for_each(|x| x.check_shape(a));
            }
            (WExpr::BTree(a), WElement::Tree(t)) => {
                return t.leaves().into_iter().try_for_each(|x| x.check_shape(a));
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(ShapeError {
                expected: w.to_string(),
            })
        }
    }

    /// Carrier values in holes, depth-first from left to right.
    pub fn holes(&self) -> Vec<&X> {
        let mut out = Vec::new();
        self.visit_holes(&mut |x| out.push(x));
        out
    }

    fn visit_holes<'a>(&'a self, f: &mut dyn FnMut(&'a X)) {
        match self {
            WElement::Hole(x) => f(x),
            WElement::Const(_) => {}
            WElement::Inl(e) | WElement::Inr(e) => e.visit_holes(f),
            WElement::Pair(a, b) => {
                a.visit_holes(f);
                b.visit_holes(f);
            }
            WElement::List(xs) => xs.iter().for_each(|x| x.visit_holes(f)),
            WElement::Tree(t) => t.leaves().into_iter().for_each(|x| x.visit_holes(f)),
        }
    }

    /// Replaces every hole value, left to right.
    pub fn map_holes<Y>(&self, f: &mut impl FnMut(&X) -> Y) -> WElement<Y> {
        match self {
            WElement::Hole(x) => WElement::Hole(f(x)),
            WElement::Const(k) => WElement::Const(*k),
            WElement::Inl(e) => WElement::inl(e.map_holes(f)),
            WElement::Inr(e) => WElement::inr(e.map_holes(f)),
            WElement::Pair(a, b) => WElement::pair(a.map_holes(f), b.map_holes(f)),
            WElement::List(xs) => WElement::List(xs.iter().map(|x| x.map_holes(f)).collect()),
            WElement::Tree(t) => WElement::tree(t.map(&mut |x| x.map_holes(f))),
        }
    }

    /// The naked term w(·,…,·) together with the hole contents (x₁,…,xₙ).
    pub fn naked_term(&self) -> (WElement<()>, Vec<&X>) {
        (self.map_holes(&mut |_| ()), self.holes())
    }

    /// Node count, with each hole weighted by `hole_size`: constants count
    /// 1, injections, pairs, lists and internal tree nodes add 1, and a
    /// tree leaf adds nothing beyond its content.
    pub fn size(&self, hole_size: &dyn Fn(&X) -> usize) -> usize {
        match self {
            WElement::Hole(x) => hole_size(x),
            WElement::Const(_) => 1,
            WElement::Inl(e) | WElement::Inr(e) => 1 + e.size(hole_size),
            WElement::Pair(a, b) => 1 + a.size(hole_size) + b.size(hole_size),
            WElement::List(xs) => 1 + xs.iter().map(|x| x.size(hole_size)).sum::<usize>(),
            WElement::Tree(t) => tree_size(t, hole_size),
        }
    }
}

fn tree_size<X>(t: &BinaryTree<WElement<X>>, hole_size: &dyn Fn(&X) -> usize) -> usize {
    match t {
        BinaryTree::Leaf(e) => e.size(hole_size),
        BinaryTree::Node(a, b) => 1 + tree_size(a, hole_size) + tree_size(b, hole_size),
    }
}

impl WElement<()> {
    /// Substitutes `xs` into the holes of a naked term, left to right.
    /// Returns `None` unless the number of values matches the holes.
    pub fn fill<X>(&self, xs: impl IntoIterator<Item = X>) -> Option<WElement<X>> {
        let mut it = xs.into_iter();
        let filled = self.map_holes(&mut |_| it.next());
        if it.next().is_some() {
            return None;
        }
        into_holes(filled)
    }
}

fn into_holes<X>(e: WElement<Option<X>>) -> Option<WElement<X>> {
    Some(match e {
        WElement::Hole(x) => WElement::Hole(x?),
        WElement::Const(k) => WElement::Const(k),
        WElement::Inl(e) => WElement::inl(into_holes(*e)?),
        WElement::Inr(e) => WElement::inr(into_holes(*e)?),
        WElement::Pair(a, b) => WElement::pair(into_holes(*a)?, into_holes(*b)?),
        WElement::List(xs) => {
            WElement::List(xs.into_iter().map(into_holes).collect::<Option<_>>()?)
        }
        WElement::Tree(t) => WElement::tree(into_tree(*t)?),
    })
}

fn into_tree<X>(t: BinaryTree<WElement<Option<X>>>) -> Option<BinaryTree<WElement<X>>> {
    Some(match t {
        BinaryTree::Leaf(e) => BinaryTree::Leaf(into_holes(e)?),
        BinaryTree::Node(a, b) => BinaryTree::node(into_tree(*a)?, into_tree(*b)?),
    })
}

/// Decides a ≤ b in W(X), with `base_leq` ordering the carrier.
pub fn w_leq<X>(
    w: &WExpr,
    a: &WElement<X>,
    b: &WElement<X>,
    mut base_leq: impl FnMut(&X, &X) -> bool,
) -> Result<bool, ShapeError> {
    a.check_shape(w)?;
    b.check_shape(w)?;
    Ok(w_leq_unchecked(w, a, b, &mut base_leq))
}

/// [`w_leq`] for elements already known to be shaped by `w`.
pub fn w_leq_unchecked<X>(
    w: &WExpr,
    a: &WElement<X>,
    b: &WElement<X>,
    base: &mut dyn FnMut(&X, &X) -> bool,
) -> bool {
    match (w, a, b) {
        (WExpr::Hole, WElement::Hole(x), WElement::Hole(y)) => base(x, y),
        (WExpr::Const(p), WElement::Const(i), WElement::Const(j)) => p.leq(*i, *j),
        (WExpr::Sum(l, _), WElement::Inl(x), WElement::Inl(y)) => w_leq_unchecked(l, x, y, base),
        (WExpr::Sum(_, r), WElement::Inr(x), WElement::Inr(y)) => w_leq_unchecked(r, x, y, base),
        (WExpr::Sum(..), _, _) => false,
        (WExpr::Prod(l, r), WElement::Pair(x1, x2), WElement::Pair(y1, y2)) => {
            w_leq_unchecked(l, x1, y1, base) && w_leq_unchecked(r, x2, y2, base)
        }
        (WExpr::Star(inner), WElement::List(xs), WElement::List(ys)) => {
            higman_leq(xs, ys, |x, y| w_leq_unchecked(inner, x, y, base))
        }
        (WExpr::BTree(inner), WElement::Tree(s), WElement::Tree(t)) => {
            btree_embed(s, t, |x, y| w_leq_unchecked(inner, x, y, base))
        }
        _ => panic!("element does not match the shape {w}"),
    }
}

impl<X: fmt::Display> fmt::Display for WElement<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WElement::Hole(x) => write!(f, "{x}"),
            WElement::Const(k) => write!(f, "#{k}"),
            WElement::Inl(e) => write!(f, "inl {e}"),
            WElement::Inr(e) => write!(f, "inr {e}"),
            WElement::Pair(a, b) => write!(f, "({a}, {b})"),
            WElement::List(xs) => {
                f.write_str("[")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("]")
            }
            WElement::Tree(t) => fmt_tree(f, t),
        }
    }
}

/// Nodes as `(left, right)`; a leaf whose content starts with `(` is
/// written `leaf …` so that it cannot be read as a node.
fn fmt_tree<X: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    t: &BinaryTree<WElement<X>>,
) -> fmt::Result {
    match t {
        BinaryTree::Leaf(e) => {
            let s = e.to_string();
            if s.starts_with('(') {
                write!(f, "leaf {s}")
            } else {
                f.write_str(&s)
            }
        }
        BinaryTree::Node(a, b) => {
            f.write_str("(")?;
            fmt_tree(f, a)?;
            f.write_str(", ")?;
            fmt_tree(f, b)?;
            f.write_str(")")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hole(x: u8) -> WElement<u8> {
        WElement::Hole(x)
    }

    #[test]
    fn sum_compares_same_side_only() {
        let w = WExpr::sum(WExpr::Hole, WExpr::Hole);
        let leq = |a: &u8, b: &u8| a <= b;
        assert_eq!(
            w_leq(&w, &WElement::inl(hole(0)), &WElement::inr(hole(9)), leq),
            Ok(false)
        );
        assert_eq!(
            w_leq(&w, &WElement::inl(hole(0)), &WElement::inl(hole(9)), leq),
            Ok(true)
        );
    }

    #[test]
    fn nested_star_over_antichain() {
        let w = WExpr::star(WExpr::star(WExpr::Const(FinitePoset::antichain(2))));
        let a = WElement::<u8>::List(vec![
            WElement::List(vec![WElement::Const(0)]),
            WElement::List(vec![WElement::Const(1)]),
        ]);
        let b = WElement::List(vec![
            WElement::List(vec![WElement::Const(1)]),
            WElement::List(vec![WElement::Const(0)]),
        ]);
        assert_eq!(w_leq(&w, &a, &b, |_, _| false), Ok(false));
        assert_eq!(w_leq(&w, &a, &a, |_, _| false), Ok(true));
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let w = WExpr::prod(WExpr::Hole, WExpr::Hole);
        assert!(w_leq(&w, &hole(1), &hole(1), |a, b| a == b).is_err());
    }

    #[test]
    fn naked_terms() {
        let e = WElement::pair(hole(7), WElement::Const(1));
        let (shape, xs) = e.naked_term();
        assert_eq!(
            shape,
            WElement::pair(WElement::Hole(()), WElement::Const(1))
        );
        assert_eq!(xs, vec![&7]);
        let l = WElement::List(vec![hole(1), hole(2)]);
        let (shape, xs) = l.naked_term();
        assert_eq!(xs, vec![&1, &2]);
        assert_eq!(shape.fill([1u8, 2]), Some(l));
        assert_eq!(shape.fill([1u8]), None);
    }

    #[test]
    fn display() {
        let w = WExpr::sum(
            WExpr::prod(WExpr::Hole, WExpr::Hole),
            WExpr::Const(FinitePoset::antichain(2)),
        );
        assert_eq!(w.to_string(), "_x_+P{2;}");
        assert_eq!(WExpr::star(WExpr::star(WExpr::Hole)).to_string(), "_**");
        assert_eq!(
            WExpr::star(WExpr::sum(WExpr::Hole, WExpr::Hole)).to_string(),
            "(_+_)*"
        );
        let t = WElement::tree(BinaryTree::node(
            BinaryTree::Leaf(hole(1)),
            BinaryTree::Leaf(WElement::pair(hole(2), hole(3))),
        ));
        assert_eq!(t.to_string(), "(1, leaf (2, 3))");
    }
}
