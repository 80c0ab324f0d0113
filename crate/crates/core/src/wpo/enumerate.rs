//! Exhaustive generation of elements by size.

use super::{BinaryTree, WElement, WExpr};

/// Every element of W(X) of exactly size `n` (see [`WElement::size`]), given
/// every carrier value of each size through `carrier`. Carrier values must
/// have size at least 1.
pub fn elements_of_size<X: Clone>(
    w: &WExpr,
    n: usize,
    carrier: &dyn Fn(usize) -> Vec<X>,
) -> Vec<WElement<X>> {
    if n == 0 {
        return Vec::new();
    }
    match w {
        WExpr::Hole => carrier(n).into_iter().map(WElement::Hole).collect(),
        WExpr::Const(p) if n == 1 => (0..p.size()).map(WElement::Const).collect(),
        WExpr::Const(_) => Vec::new(),
        WExpr::Sum(a, b) => {
            let mut out: Vec<_> = elements_of_size(a, n - 1, carrier)
                .into_iter()
                .map(WElement::inl)
                .collect();
            out.extend(
                elements_of_size(b, n - 1, carrier)
                    .into_iter()
                    .map(WElement::inr),
            );
            out
        }
        WExpr::Prod(a, b) => {
            let mut out = Vec::new();
            for k in 1..n.saturating_sub(1) {
                let rights = elements_of_size(b, n - 1 - k, carrier);
                for x in elements_of_size(a, k, carrier) {
                    for y in &rights {
                        out.push(WElement::pair(x.clone(), y.clone()));
                    }
                }
            }
            out
        }
        WExpr::Star(a) => lists(a, n - 1, carrier)
            .into_iter()
            .map(WElement::List)
            .collect(),
        WExpr::BTree(a) => trees(a, n, carrier)
            .into_iter()
            .map(WElement::tree)
            .collect(),
    }
}

/// Sequences whose item sizes add up to `total`.
fn lists<X: Clone>(
    item: &WExpr,
    total: usize,
    carrier: &dyn Fn(usize) -> Vec<X>,
) -> Vec<Vec<WElement<X>>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 1..=total {
        let tails = lists(item, total - k, carrier);
        for head in elements_of_size(item, k, carrier) {
            for tail in &tails {
                let mut v = Vec::with_capacity(tail.len() + 1);
                v.push(head.clone());
                v.extend(tail.iter().cloned());
                out.push(v);
            }
        }
    }
    out
}

fn trees<X: Clone>(
    leaf: &WExpr,
    n: usize,
    carrier: &dyn Fn(usize) -> Vec<X>,
) -> Vec<BinaryTree<WElement<X>>> {
    let mut out: Vec<_> = elements_of_size(leaf, n, carrier)
        .into_iter()
        .map(BinaryTree::Leaf)
        .collect();
    for k in 1..n.saturating_sub(1) {
        let rights = trees(leaf, n - 1 - k, carrier);
        for l in trees(leaf, k, carrier) {
            for r in &rights {
                out.push(BinaryTree::node(l.clone(), r.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wpo::FinitePoset;

    fn unit_carrier(n: usize) -> Vec<()> {
        if n == 1 {
            vec![()]
        } else {
            vec![]
        }
    }

    #[test]
    fn sizes_are_exact() {
        let ws = [
            WExpr::btree(WExpr::Hole),
            WExpr::star(WExpr::Hole),
            WExpr::star(WExpr::star(WExpr::Hole)),
            WExpr::sum(
                WExpr::prod(WExpr::Hole, WExpr::Hole),
                WExpr::Const(FinitePoset::antichain(2)),
            ),
        ];
        for w in &ws {
            for n in 0..7 {
                for e in elements_of_size(w, n, &unit_carrier) {
                    assert_eq!(e.size(&|_| 1), n);
                    assert!(e.check_shape(w).is_ok());
                }
            }
        }
    }

    #[test]
    fn binary_tree_counts_are_catalan_like() {
        // Trees with k leaves have size 2k - 1; there are Catalan(k-1) of them.
        let w = WExpr::btree(WExpr::Hole);
        let counts: Vec<usize> = (1..=7)
            .map(|n| elements_of_size(&w, n, &unit_carrier).len())
            .collect();
        assert_eq!(counts, vec![1, 0, 1, 0, 2, 0, 5]);
    }
}
