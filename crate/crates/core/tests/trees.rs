//! Properties of the term orders, gap trees and the lifting of
//! quasi-embeddings through constructor expressions.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thetatree::gap::{from_gap, gap_leq, in_t2bar, to_gap};
use thetatree::tree::{enumerate, enumerate_by_size, t_leq, t_leq_unchecked, TreeTerm};
use thetatree::verify::random_labeled_tree;
use thetatree::wpo::{elements_of_size, parse_wexpr, w_leq, WExpr};

fn universe(w: &str, size: usize) -> (WExpr, Vec<TreeTerm>) {
    let w = parse_wexpr(w).unwrap();
    let u = enumerate(&w, size);
    (w, u)
}

#[test]
fn layer_counts_are_stable() {
    let counts = |w: &str, n: usize| -> Vec<usize> {
        enumerate_by_size(&parse_wexpr(w).unwrap(), n)
            .iter()
            .map(Vec::len)
            .collect()
    };
    assert_eq!(counts("B(_)", 8), vec![0, 1, 1, 1, 2, 4, 9, 21, 51]);
    assert_eq!(counts("_*", 5), vec![0, 1, 1, 1, 2, 4]);
    assert_eq!(counts("_**", 6), vec![0, 1, 1, 1, 2, 5, 13]);
    assert_eq!(counts("_x_+P{2;}", 5), vec![0, 1, 0, 2, 0, 1]);
}

#[test]
fn term_orders_are_partial_orders() {
    for src in ["B(_)", "_*", "_**", "_x_+P{2;}"] {
        let (w, u) = universe(src, 6);
        let leq: Vec<Vec<bool>> = u
            .iter()
            .map(|s| u.iter().map(|t| t_leq_unchecked(s, t, &w)).collect())
            .collect();
        for i in 0..u.len() {
            assert!(leq[i][i]);
            for j in 0..u.len() {
                if i != j {
                    assert!(!(leq[i][j] && leq[j][i]), "{} and {}", u[i], u[j]);
                }
                for k in 0..u.len() {
                    if leq[i][j] && leq[j][k] {
                        assert!(leq[i][k], "{} {} {}", u[i], u[j], u[k]);
                    }
                }
            }
        }
    }
}

#[test]
fn children_lie_below_their_parent() {
    let (w, u) = universe("B(_)", 8);
    for t in &u {
        for c in t.children() {
            assert!(t_leq(c, t, &w).unwrap(), "{c} below {t}");
        }
    }
}

proptest! {
    #[test]
    fn gap_order_is_reflexive_and_transitive(seed: u64, structured: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let [a, b, c] = [0; 3].map(|_| random_labeled_tree(&mut rng, 6, 2));
        prop_assert!(gap_leq(&a, &a, structured));
        if gap_leq(&a, &b, structured) && gap_leq(&b, &c, structured) {
            prop_assert!(gap_leq(&a, &c, structured));
        }
        // Dropping the left-to-right requirement only adds embeddings.
        prop_assert!(!gap_leq(&a, &b, true) || gap_leq(&a, &b, false));
    }

    #[test]
    fn isomorphism_on_larger_terms(i in 0usize..1000, j in 0usize..1000) {
        let w = parse_wexpr("B(_)").unwrap();
        let u = enumerate(&w, 10);
        let (s, t) = (&u[i % u.len()], &u[j % u.len()]);
        let (gs, gt) = (to_gap(s).unwrap(), to_gap(t).unwrap());
        prop_assert!(in_t2bar(&gs));
        prop_assert_eq!(&from_gap(&gs).unwrap(), s);
        prop_assert_eq!(t_leq_unchecked(s, t, &w), gap_leq(&gs, &gt, true));
    }

    /// A quasi-embedding of the carrier lifts to one of W(X): here the
    /// identity from a chain on four points into the discrete order on the
    /// same points reflects the order, so discrete comparisons in W imply
    /// chain comparisons.
    #[test]
    fn lifting_of_quasi_embeddings(w_idx in 0usize..5, i in 0usize..400, j in 0usize..400, n in 1usize..7) {
        let sources = ["B(_)", "_*", "_**", "_x_+P{2;}", "(_+_)*"];
        let w = parse_wexpr(sources[w_idx]).unwrap();
        let carrier = |k: usize| if k == 1 { (0u8..4).collect() } else { Vec::new() };
        let elems = elements_of_size(&w, n, &carrier);
        prop_assume!(!elems.is_empty());
        let (a, b) = (&elems[i % elems.len()], &elems[j % elems.len()]);
        let discrete = w_leq(&w, a, b, |x, y| x == y).unwrap();
        let chain = w_leq(&w, a, b, |x, y| x <= y).unwrap();
        prop_assert!(!discrete || chain);
    }
}
