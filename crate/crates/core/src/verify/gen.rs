//! Seeded random generation of full-system terms and labelled trees.

use std::cmp::Ordering;

use rand::Rng;

use crate::gap::LabeledTree;
use crate::ordinal::{compare, compare_parts, validate, Monomial, Ordinal, Part, System};

/// Attempts at building a valid sum or normal form before falling back to a
/// collapse, which is always valid.
const RETRIES: usize = 8;

/// A random valid full-system term of complexity at most `max_complexity`;
/// countable when `countable` is set. Children draw their own complexity
/// bound uniformly below the parent's, which keeps terms small on average.
pub fn random_term<R: Rng>(rng: &mut R, max_complexity: u32, countable: bool) -> Ordinal {
    if max_complexity == 0 {
        return Ordinal::Zero;
    }
    let child = |rng: &mut R, countable: bool| {
        let g = rng.gen_range(0..max_complexity);
        random_term(rng, g, countable)
    };
    for _ in 0..RETRIES {
        let candidate = match rng.gen_range(0..10) {
            0 => return Ordinal::Zero,
            1..=3 => return Ordinal::theta(child(rng, false)),
            r if r < 8 || countable => {
                let n = rng.gen_range(2..=3);
                let mut parts: Vec<Part> =
                    (0..n).map(|_| Part::OmegaPow(child(rng, false))).collect();
                parts.sort_by(|p, q| compare_parts(q, p));
                Ordinal::Sum(parts)
            }
            _ => {
                let n = rng.gen_range(1..=2);
                let mut ms: Vec<Monomial> = (0..n)
                    .map(|_| Monomial::new(child(rng, false), child(rng, true)))
                    .collect();
                ms.sort_by(|a, b| compare(&b.exp, &a.exp));
                ms.dedup_by(|a, b| compare(&a.exp, &b.exp) == Ordering::Equal);
                Ordinal::Cnf(ms)
            }
        };
        if validate(&candidate, System::Full).is_ok() && (!countable || candidate.is_countable()) {
            return candidate;
        }
    }
    Ordinal::theta(child(rng, false))
}

/// A random ordered tree with between 1 and `max_nodes` nodes and labels
/// below `labels`.
pub fn random_labeled_tree<R: Rng>(rng: &mut R, max_nodes: usize, labels: u32) -> LabeledTree {
    let n = rng.gen_range(1..=max_nodes);
    // Attach each new node below a uniformly chosen earlier node, as its
    // last child; preorder positions are then rebuilt recursively.
    let mut parent = vec![usize::MAX];
    for i in 1..n {
        parent.push(rng.gen_range(0..i));
    }
    let label: Vec<u32> = (0..n).map(|_| rng.gen_range(0..labels)).collect();
    fn build(i: usize, parent: &[usize], label: &[u32]) -> LabeledTree {
        let children = (0..parent.len())
            .filter(|&j| parent[j] == i)
            .map(|j| build(j, parent, label))
            .collect();
        LabeledTree::new(label[i], children)
    }
    build(0, &parent, &label)
}
