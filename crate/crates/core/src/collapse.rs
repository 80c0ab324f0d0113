//! The map g from countable ordinal terms into T(B(·)), and the binary-tree
//! map f on arguments of ϑ that it is built from.
//!
//! g(0) = ∘. A sum ω^α₁ + … + ω^αₙ goes to ∘[D₁] with the right comb
//! Dᵢ = (g(αᵢ), Dᵢ₊₁) ending in Dₙ = (g(αₙ), ∘). A collapse ϑβ goes to
//! ∘[f(β)].
//!
//! f(0) is the single leaf ∘. For β = Ω^β₁·γ₁ + … + Ω^βₙ·γₙ (a countable β
//! is read as Ω⁰·β), f(β) = C₁ with Cᵢ = ((f(βᵢ), g(γᵢ)), Cᵢ₊₁) and
//! Cₙ₊₁ = ∘.

use thiserror::Error;

use crate::ordinal::{is_collapsing_normal, validate, Ordinal, Part, System, Violation};
use crate::tree::TreeTerm;
use crate::wpo::{BinaryTree, WElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CollapseError {
    #[error("{0} is not countable")]
    Uncountable(String),
    #[error("v({0}) is not in collapsing normal form: k({0}) is not below v({0})")]
    NotNormal(String),
    #[error("not a term of the full system: {0}")]
    Invalid(#[from] Violation),
}

/// A binary tree with tree-term leaves, the body of a term of T(B(·)).
pub type Comb = BinaryTree<WElement<TreeTerm>>;

/// g(a) for a countable term of the full system whose every collapse ϑβ
/// satisfies k(β) < ϑβ.
///
/// The comparison order already places ϑβ above k(β) for every valid term,
/// so the normal-form check is a guard against inconsistent input rather
/// than a restriction met in practice.
pub fn ord_to_tree(a: &Ordinal) -> Result<TreeTerm, CollapseError> {
    validate(a, System::Full)?;
    if !a.is_countable() {
        return Err(CollapseError::Uncountable(a.to_string()));
    }
    g(a)
}

/// f(b) for a term of the full system whose every collapse is normal.
pub fn cnf_tree(b: &Ordinal) -> Result<Comb, CollapseError> {
    validate(b, System::Full)?;
    f(b)
}

fn leaf(t: TreeTerm) -> Comb {
    BinaryTree::Leaf(WElement::Hole(t))
}

fn g(a: &Ordinal) -> Result<TreeTerm, CollapseError> {
    match a {
        Ordinal::Zero => Ok(TreeTerm::Circ),
        Ordinal::Theta(b) => {
            if !is_collapsing_normal(b) {
                return Err(CollapseError::NotNormal(b.to_string()));
            }
            Ok(TreeTerm::apply(WElement::tree(f(b)?)))
        }
        Ordinal::Sum(parts) => {
            let mut comb = leaf(TreeTerm::Circ);
            for p in parts.iter().rev() {
                let exp = match p {
                    Part::OmegaPow(e) => e,
                    Part::Theta(_) => unreachable!("validated as a full-system term"),
                };
                comb = BinaryTree::node(leaf(g(exp)?), comb);
            }
            Ok(TreeTerm::apply(WElement::tree(comb)))
        }
        Ordinal::Cnf(_) => Err(CollapseError::Uncountable(a.to_string())),
    }
}

fn f(b: &Ordinal) -> Result<Comb, CollapseError> {
    let monomials: Vec<(&Ordinal, &Ordinal)> = match b {
        Ordinal::Zero => return Ok(leaf(TreeTerm::Circ)),
        Ordinal::Cnf(ms) => ms.iter().map(|m| (&m.exp, &m.coeff)).collect(),
        countable => vec![(&Ordinal::Zero, countable)],
    };
    let mut comb = leaf(TreeTerm::Circ);
    for (exp, coeff) in monomials.into_iter().rev() {
        let pair = BinaryTree::node(f(exp)?, leaf(g(coeff)?));
        comb = BinaryTree::node(pair, comb);
    }
    Ok(comb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::{parse_valid, universe, EnumBounds};
    use crate::tree::parse_tree_term;
    use crate::wpo::parse_wexpr;

    fn term(src: &str) -> TreeTerm {
        parse_tree_term(src, &parse_wexpr("B(_)").unwrap()).unwrap()
    }

    fn ord(src: &str) -> Ordinal {
        parse_valid(src, System::Full).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(ord_to_tree(&Ordinal::Zero).unwrap(), TreeTerm::Circ);
        assert_eq!(ord_to_tree(&Ordinal::one()).unwrap(), term("o[o]"));
        assert_eq!(cnf_tree(&Ordinal::Zero).unwrap(), leaf(TreeTerm::Circ));
    }

    #[test]
    fn omega_plus_one() {
        let a = ord("w^1 + w^0");
        assert_eq!(ord_to_tree(&a).unwrap(), term("o[(o[o], (o, o))]"));
    }

    #[test]
    fn countable_argument() {
        let b = ord("v(0)");
        let expected = BinaryTree::node(
            BinaryTree::node(leaf(TreeTerm::Circ), leaf(term("o[o]"))),
            leaf(TreeTerm::Circ),
        );
        assert_eq!(cnf_tree(&b).unwrap(), expected);
    }

    #[test]
    fn big_omega_argument() {
        let one = BinaryTree::node(
            BinaryTree::node(leaf(TreeTerm::Circ), leaf(term("o[o]"))),
            leaf(TreeTerm::Circ),
        );
        let expected = BinaryTree::node(
            BinaryTree::node(one, leaf(term("o[o]"))),
            leaf(TreeTerm::Circ),
        );
        assert_eq!(cnf_tree(&Ordinal::big_omega()).unwrap(), expected);
    }

    #[test]
    fn uncountable_input_is_rejected() {
        assert!(matches!(
            ord_to_tree(&Ordinal::big_omega()),
            Err(CollapseError::Uncountable(_))
        ));
    }

    #[test]
    fn every_small_collapse_is_normal() {
        let bounds = EnumBounds::new(3).monomials(1).countable_only(true);
        for a in universe(System::Full, bounds) {
            assert!(ord_to_tree(&a).is_ok(), "{a}");
        }
    }
}
