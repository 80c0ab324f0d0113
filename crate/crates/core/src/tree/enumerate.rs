//! Bounded universes of terms, the least-fixpoint oracle and left sets.

use std::collections::HashMap;

use crate::wpo::{elements_of_size, w_leq_unchecked, WExpr};

use super::{t_leq_unchecked, TreeTerm};

/// All terms of T(W) grouped by size: entry `n` holds the terms of size `n`
/// (entry 0 is empty), for sizes up to `size_bound`.
pub fn enumerate_by_size(w: &WExpr, size_bound: usize) -> Vec<Vec<TreeTerm>> {
    let mut layers: Vec<Vec<TreeTerm>> = vec![Vec::new()];
    for n in 1..=size_bound {
        let layer = if n == 1 {
            vec![TreeTerm::Circ]
        } else {
            let earlier = |k: usize| layers.get(k).cloned().unwrap_or_default();
            elements_of_size(w, n - 1, &earlier)
                .into_iter()
                .map(TreeTerm::apply)
                .collect()
        };
        layers.push(layer);
    }
    layers
}

/// All terms of T(W) with at most `size_bound` nodes, smallest first, in a
/// deterministic order without duplicates.
pub fn enumerate(w: &WExpr, size_bound: usize) -> Vec<TreeTerm> {
    enumerate_by_size(w, size_bound)
        .into_iter()
        .flatten()
        .collect()
}

/// A binary relation on an indexed universe, stored as bit rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl Relation {
    fn empty(n: usize) -> Self {
        Relation {
            n,
            rows: vec![vec![0; n.div_ceil(64)]; n],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / 64] >> (j % 64) & 1 == 1
    }

    /// Adds a pair, reporting whether it was new.
    fn insert(&mut self, i: usize, j: usize) -> bool {
        let new = !self.contains(i, j);
        self.rows[i][j / 64] |= 1 << (j % 64);
        new
    }

    /// Warshall's transitive closure, reporting whether anything was added.
    fn close_transitively(&mut self) -> bool {
        let before: usize = self.pair_count();
        for k in 0..self.n {
            let row_k = self.rows[k].clone();
            for i in 0..self.n {
                if self.contains(i, k) {
                    for (a, b) in self.rows[i].iter_mut().zip(&row_k) {
                        *a |= b;
                    }
                }
            }
        }
        self.pair_count() != before
    }

    pub fn pair_count(&self) -> usize {
        self.rows
            .iter()
            .flatten()
            .map(|w| w.count_ones() as usize)
            .sum()
    }
}

/// The least reflexive, transitive relation on `universe` closed under the
/// three defining clauses, found by iterating to a fixpoint. The universe
/// must contain the children of each of its terms, all shaped by `w`.
///
/// # Panics
///
/// If a child of some term is missing from the universe.
pub fn closure_oracle(universe: &[TreeTerm], w: &WExpr) -> Relation {
    let n = universe.len();
    let index: HashMap<&TreeTerm, usize> =
        universe.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let children: Vec<Vec<usize>> = universe
        .iter()
        .map(|t| {
            t.children()
                .into_iter()
                .map(|c| *index.get(c).expect("universe is not closed under children"))
                .collect()
        })
        .collect();

    let mut rel = Relation::empty(n);
    for (i, s) in universe.iter().enumerate() {
        rel.insert(i, i);
        if s.is_circ() {
            for j in 0..n {
                rel.insert(i, j);
            }
        }
    }
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                if rel.contains(i, j) {
                    continue;
                }
                let via_child = children[j].iter().any(|&c| rel.contains(i, c));
                let via_body = match (&universe[i], &universe[j]) {
                    (TreeTerm::Apply(a), TreeTerm::Apply(b)) if !via_child => {
                        w_leq_unchecked(w, a, b, &mut |x, y| rel.contains(index[x], index[y]))
                    }
                    _ => false,
                };
                if via_child || via_body {
                    changed |= rel.insert(i, j);
                }
            }
        }
        changed |= rel.close_transitively();
        if !changed {
            return rel;
        }
    }
}

/// The terms of size at most `size_bound` lying in the left set of `t`, that
/// is, those `s` with t ≰ s.
pub fn left_set_bounded(t: &TreeTerm, w: &WExpr, size_bound: usize) -> Vec<TreeTerm> {
    enumerate(w, size_bound)
        .into_iter()
        .filter(|s| !t_leq_unchecked(t, s, w))
        .collect()
}
