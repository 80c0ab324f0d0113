//! The gap-embedding order by exhaustive search over injective maps.

use super::{Flat, GapError, LabeledTree};

/// Largest tree, in nodes, that [`brute_gap_leq`] accepts.
pub const BRUTE_MAX_NODES: usize = 9;

/// Ancestry and meets of a flattened tree.
struct Order {
    flat: Flat,
    /// `anc[a][b]`: a is b or an ancestor of b.
    anc: Vec<Vec<bool>>,
}

impl Order {
    #[allow(clippy::needless_range_loop)]
    fn new(t: &LabeledTree) -> Self {
        let flat = Flat::new(t);
        let n = flat.len();
        let mut anc = vec![vec![false; n]; n];
        for b in 0..n {
            let mut a = Some(b);
            while let Some(x) = a {
                anc[x][b] = true;
                a = flat.parent[x];
            }
        }
        Order { flat, anc }
    }

    fn meet(&self, a: usize, b: usize) -> usize {
        let mut x = a;
        while !self.anc[x][b] {
            x = self.flat.parent[x].expect("the root is above every node");
        }
        x
    }

    /// Whether `a` lies left of `b`: neither is above the other, and at
    /// their meet the branch towards `a` comes first.
    fn left_of(&self, a: usize, b: usize) -> bool {
        if self.anc[a][b] || self.anc[b][a] {
            return false;
        }
        let m = self.meet(a, b);
        let branch = |x: usize| {
            self.flat.children[m]
                .iter()
                .position(|&c| self.anc[c][x])
                .expect("x lies below a child of its meet")
        };
        branch(a) < branch(b)
    }
}

/// [`gap_leq`](super::gap_leq) decided by trying every injective,
/// label-preserving map from the nodes of `t1` to those of `t2` and checking
/// order and infimum preservation, the gap condition and, when `structured`,
/// the left-to-right order, each straight from its definition.
pub fn brute_gap_leq(
    t1: &LabeledTree,
    t2: &LabeledTree,
    structured: bool,
) -> Result<bool, GapError> {
    for t in [t1, t2] {
        let nodes = t.node_count();
        if nodes > BRUTE_MAX_NODES {
            return Err(GapError::TooLarge { nodes });
        }
    }
    let (a, b) = (Order::new(t1), Order::new(t2));
    let mut f = Vec::with_capacity(a.flat.len());
    let mut used = vec![false; b.flat.len()];
    Ok(search(&a, &b, structured, &mut f, &mut used))
}

fn search(a: &Order, b: &Order, structured: bool, f: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let u = f.len();
    if u == a.flat.len() {
        return is_embedding(a, b, structured, f);
    }
    for v in 0..b.flat.len() {
        if used[v] || a.flat.label[u] != b.flat.label[v] {
            continue;
        }
        used[v] = true;
        f.push(v);
        let found = search(a, b, structured, f, used);
        f.pop();
        used[v] = false;
        if found {
            return true;
        }
    }
    false
}

fn is_embedding(a: &Order, b: &Order, structured: bool, f: &[usize]) -> bool {
    let n = a.flat.len();
    for x in 0..n {
        for y in 0..n {
            if a.anc[x][y] && !b.anc[f[x]][f[y]] {
                return false;
            }
            if f[a.meet(x, y)] != b.meet(f[x], f[y]) {
                return false;
            }
            if structured && a.left_of(x, y) && !b.left_of(f[x], f[y]) {
                return false;
            }
        }
    }
    for tau in 0..n {
        for &succ in &a.flat.children[tau] {
            let (lo, hi) = (f[tau], f[succ]);
            let gap_ok = (0..b.flat.len())
                .filter(|&m| m != lo && m != hi && b.anc[lo][m] && b.anc[m][hi])
                .all(|m| b.flat.label[m] >= a.flat.label[succ]);
            if !gap_ok {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gap::{gap_leq, parse_labeled_tree};

    #[test]
    fn trivial_cases() {
        let zero = parse_labeled_tree("(0)").unwrap();
        let one = parse_labeled_tree("(1)").unwrap();
        assert_eq!(brute_gap_leq(&zero, &zero, true), Ok(true));
        let zeros = parse_labeled_tree("(0 (0) (0 (0)))").unwrap();
        assert_eq!(brute_gap_leq(&one, &zeros, false), Ok(false));
    }

    #[test]
    fn size_guard() {
        let mut big = LabeledTree::leaf(0);
        for _ in 0..BRUTE_MAX_NODES {
            big = LabeledTree::new(0, vec![big]);
        }
        assert!(matches!(
            brute_gap_leq(&big, &big, true),
            Err(GapError::TooLarge { .. })
        ));
    }

    #[test]
    fn agrees_with_dynamic_programming_on_small_trees() {
        let trees: Vec<_> = (1..=4)
            .flat_map(|n| crate::gap::labeled_trees(n, 2))
            .collect();
        for s in &trees {
            for t in &trees {
                for structured in [true, false] {
                    assert_eq!(
                        brute_gap_leq(s, t, structured).unwrap(),
                        gap_leq(s, t, structured),
                        "{s} into {t}, structured = {structured}"
                    );
                }
            }
        }
    }
}
