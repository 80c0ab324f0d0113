//! Suites over sequences, tree terms and gap trees.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::gap::{brute_gap_leq, from_gap, gap_leq, in_t2bar, labeled_trees, to_gap, LabeledTree};
use crate::tree::{
    closure_oracle, enumerate, t_leq_unchecked, xstarstar_membership_cases, TreeTerm,
};
use crate::wpo::{higman_leq, higman_leq_exhaustive, FinitePoset, WExpr};

use super::gen::random_labeled_tree;
use super::{failure, shrink, Params, Tally};

/// Every sequence over `0..n` of length at most `len`.
fn sequences(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|s: &Vec<usize>| {
                (0..n).map(move |x| {
                    let mut t = s.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn seq_str(s: &[usize]) -> String {
    format!("{s:?}")
}

/// Greedy and exhaustive Higman embedding agree on all short sequences over
/// every poset with at most three elements.
pub(super) fn higman_oracle(p: &Params, tally: &mut Tally) {
    for n in 0..=3 {
        let seqs = sequences(n, p.size);
        for poset in FinitePoset::all_of_size(n) {
            for xs in &seqs {
                for ys in &seqs {
                    let fast = higman_leq(xs, ys, |a, b| poset.leq(*a, *b));
                    let slow = higman_leq_exhaustive(xs, ys, |a, b| poset.leq(*a, *b));
                    tally.check(fast == slow, || {
                        failure(&[&poset, &seq_str(xs), &seq_str(ys)], slow, fast)
                    });
                }
            }
        }
    }
}

/// The constructor expressions whose term orders are compared with the
/// fixpoint oracle, with the size bound for each.
fn fixpoint_cases(size: usize) -> Vec<(WExpr, usize)> {
    let hole = || WExpr::Hole;
    vec![
        (WExpr::btree(hole()), size + 1),
        (WExpr::star(hole()), size),
        (WExpr::star(WExpr::star(hole())), size),
        (
            WExpr::sum(
                WExpr::prod(hole(), hole()),
                WExpr::Const(FinitePoset::antichain(2)),
            ),
            size,
        ),
    ]
}

/// The recursive decision procedure for the term order agrees with the
/// least fixpoint of its defining clauses on downward-closed universes.
pub(super) fn tleq_fixpoint(p: &Params, tally: &mut Tally) {
    for (w, bound) in fixpoint_cases(p.size) {
        let u = enumerate(&w, bound);
        let rel = closure_oracle(&u, &w);
        for (i, s) in u.iter().enumerate() {
            for (j, t) in u.iter().enumerate() {
                let fast = t_leq_unchecked(s, t, &w);
                let least = rel.contains(i, j);
                tally.check(fast == least, || failure(&[&w, s, t], least, fast));
            }
        }
    }
}

fn tree_children(t: &LabeledTree) -> Vec<LabeledTree> {
    let mut cs = t.children.clone();
    cs.sort_by_key(|c| std::cmp::Reverse(c.node_count()));
    cs
}

fn gap_pair(a: &LabeledTree, b: &LabeledTree, structured: bool, tally: &mut Tally) {
    let fast = gap_leq(a, b, structured);
    let slow = brute_gap_leq(a, b, structured);
    tally.check(slow == Ok(fast), || {
        let xs = shrink(
            vec![a.clone(), b.clone()],
            |xs| {
                brute_gap_leq(&xs[0], &xs[1], structured) != Ok(gap_leq(&xs[0], &xs[1], structured))
            },
            tree_children,
        );
        let mode = if structured {
            "structured"
        } else {
            "unstructured"
        };
        failure(&[&mode, &xs[0], &xs[1]], format!("{slow:?}"), fast)
    });
}

/// The dynamic-programming gap order agrees with brute force: on all pairs
/// of T̄₂ trees up to `size` nodes, on all pairs of {0,1}-labelled trees up
/// to five nodes in both modes, and on seeded random pairs of
/// {0,1}-labelled trees up to `size` nodes in both modes.
pub(super) fn gap_oracle(p: &Params, tally: &mut Tally) {
    let t2: Vec<LabeledTree> = (1..=p.size)
        .flat_map(|n| labeled_trees(n, 2))
        .filter(in_t2bar)
        .collect();
    for a in &t2 {
        for b in &t2 {
            gap_pair(a, b, true, tally);
        }
    }
    let small: Vec<LabeledTree> = (1..=p.size.min(5))
        .flat_map(|n| labeled_trees(n, 2))
        .collect();
    for a in &small {
        for b in &small {
            gap_pair(a, b, true, tally);
            gap_pair(a, b, false, tally);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    for _ in 0..p.samples {
        let a = random_labeled_tree(&mut rng, p.size, 2);
        let b = random_labeled_tree(&mut rng, p.size, 2);
        gap_pair(&a, &b, true, tally);
        gap_pair(&a, &b, false, tally);
    }
}

/// g is an order isomorphism from T(B(·)) onto T̄₂ with inverse from_gap.
pub(super) fn iso(p: &Params, tally: &mut Tally) {
    let w = WExpr::btree(WExpr::Hole);
    let u = enumerate(&w, p.size);
    let images: Vec<LabeledTree> = u
        .iter()
        .map(|t| to_gap(t).expect("shaped by B(_)"))
        .collect();
    for (t, g) in u.iter().zip(&images) {
        let back = from_gap(g);
        tally.check(in_t2bar(g) && back.as_ref() == Ok(t), || {
            failure(&[t, g], t, format!("{back:?}"))
        });
    }
    for (s, gs) in u.iter().zip(&images) {
        for (t, gt) in u.iter().zip(&images) {
            let want = t_leq_unchecked(s, t, &w);
            let got = gap_leq(gs, gt, true);
            tally.check(want == got, || failure(&[s, t], want, got));
        }
    }
}

/// The case analysis for left sets of T(X**) agrees with the term order.
pub(super) fn xstarstar_cases(p: &Params, tally: &mut Tally) {
    let w = WExpr::star(WExpr::star(WExpr::Hole));
    let u = enumerate(&w, p.size);
    let children = |t: &TreeTerm| t.children().into_iter().cloned().collect::<Vec<_>>();
    let disagree = |t: &TreeTerm, s: &TreeTerm| {
        xstarstar_membership_cases(t, s) != Ok(!t_leq_unchecked(t, s, &w))
    };
    for t in &u {
        for s in &u {
            let want = !t_leq_unchecked(t, s, &w);
            let got = xstarstar_membership_cases(t, s);
            tally.check(got == Ok(want), || {
                let xs = shrink(
                    vec![t.clone(), s.clone()],
                    |xs| disagree(&xs[0], &xs[1]),
                    children,
                );
                failure(&[&xs[0], &xs[1]], want, format!("{got:?}"))
            });
        }
    }
}
