//! Exhaustive generation of bounded term universes.
//!
//! Complexity alone does not bound a universe: every natural number has
//! complexity at most 2. The enumerator therefore also caps the number of
//! summands in a countable sum and the number of monomials in a base-Ω
//! normal form. In the restricted system the Ω-exponents range over the
//! naturals up to the summand cap.

use std::cmp::Ordering;

use super::coeff::complexity;
use super::compare::{compare, compare_parts};
use super::{Monomial, Ordinal, Part, System};

/// Limits for [`enumerate_terms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBounds {
    pub max_complexity: u32,
    /// Largest number of summands in a countable sum (and largest natural
    /// exponent in the restricted system).
    pub max_summands: usize,
    /// Largest number of monomials in a base-Ω normal form.
    pub max_monomials: usize,
    /// Yield only countable terms (uncountable ones are still built internally).
    pub countable_only: bool,
}

impl EnumBounds {
    /// Complexity bound `g` with at most two summands and two monomials.
    pub fn new(max_complexity: u32) -> Self {
        EnumBounds {
            max_complexity,
            max_summands: 2,
            max_monomials: 2,
            countable_only: false,
        }
    }

    pub fn summands(mut self, n: usize) -> Self {
        self.max_summands = n;
        self
    }

    pub fn monomials(mut self, n: usize) -> Self {
        self.max_monomials = n;
        self
    }

    pub fn countable_only(mut self, yes: bool) -> Self {
        self.countable_only = yes;
        self
    }
}

/// Lazy sequence of terms, level by level in increasing complexity and in
/// increasing order within a level. Each valid term within the bounds
/// appears exactly once.
#[derive(Debug, Clone)]
pub struct Terms {
    sys: System,
    bounds: EnumBounds,
    /// Every term of complexity below `next_level`.
    seen: Vec<Ordinal>,
    level: Vec<Ordinal>,
    pos: usize,
    next_level: u32,
}

pub fn enumerate_terms(sys: System, bounds: EnumBounds) -> Terms {
    Terms {
        sys,
        bounds,
        seen: Vec::new(),
        level: Vec::new(),
        pos: 0,
        next_level: 0,
    }
}

/// All terms within the bounds, sorted ascending.
pub fn universe(sys: System, bounds: EnumBounds) -> Vec<Ordinal> {
    let mut all: Vec<Ordinal> = enumerate_terms(sys, bounds).collect();
    all.sort_by(compare);
    all
}

impl Iterator for Terms {
    type Item = Ordinal;

    fn next(&mut self) -> Option<Ordinal> {
        loop {
            while self.pos < self.level.len() {
                let t = &self.level[self.pos];
                self.pos += 1;
                if !self.bounds.countable_only || t.is_countable() {
                    return Some(t.clone());
                }
            }
            if self.next_level > self.bounds.max_complexity {
                return None;
            }
            let done = std::mem::take(&mut self.level);
            self.seen.extend(done);
            self.level = build_level(self.sys, &self.bounds, &self.seen, self.next_level);
            self.pos = 0;
            self.next_level += 1;
        }
    }
}

fn build_level(sys: System, bounds: &EnumBounds, prev: &[Ordinal], k: u32) -> Vec<Ordinal> {
    if k == 0 {
        return vec![Ordinal::Zero];
    }
    let mut out = Vec::new();
    let mut keep = |t: Ordinal| {
        if complexity(&t, sys) == k {
            out.push(t);
        }
    };

    for b in prev {
        keep(Ordinal::theta(b.clone()));
    }

    let mut pool: Vec<Part> = match sys {
        System::Full => prev
            .iter()
            .filter(|t| t.is_countable())
            .map(|t| Part::OmegaPow(t.clone()))
            .collect(),
        System::Restricted => prev
            .iter()
            .filter_map(|t| match t {
                Ordinal::Theta(b) => Some(Part::Theta((**b).clone())),
                _ => None,
            })
            .collect(),
    };
    pool.sort_by(|p, q| compare_parts(q, p));
    for len in 2..=bounds.max_summands {
        for idx in multisets(pool.len(), len) {
            keep(Ordinal::Sum(idx.iter().map(|&i| pool[i].clone()).collect()));
        }
    }

    let mut exps: Vec<Ordinal> = match sys {
        System::Full => prev.to_vec(),
        System::Restricted => (0..=bounds.max_summands as u64)
            .map(|n| Ordinal::natural(n, sys))
            .collect(),
    };
    exps.sort_by(|a, b| compare(b, a));
    let coeffs: Vec<&Ordinal> = prev
        .iter()
        .filter(|t| t.is_countable() && !t.is_zero())
        .collect();
    for len in 1..=bounds.max_monomials {
        for exp_idx in subsets(exps.len(), len) {
            if len == 1 && exps[exp_idx[0]].is_zero() {
                continue;
            }
            for coeff_idx in tuples(coeffs.len(), len) {
                let ms = exp_idx
                    .iter()
                    .zip(&coeff_idx)
                    .map(|(&e, &c)| Monomial::new(exps[e].clone(), coeffs[c].clone()))
                    .collect();
                keep(Ordinal::Cnf(ms));
            }
        }
    }

    out.sort_by(compare);
    debug_assert!(out
        .windows(2)
        .all(|w| compare(&w[0], &w[1]) == Ordering::Less));
    out
}

/// Non-decreasing index sequences of length `len` over `0..n`.
fn multisets(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(n: usize, len: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in from..n {
            cur.push(i);
            go(n, len, i, cur, out);
            cur.pop();
        }
    }
    go(n, len, 0, &mut cur, &mut out);
    out
}

/// Strictly increasing index sequences of length `len` over `0..n`.
fn subsets(n: usize, len: usize) -> Vec<Vec<usize>> {
    multisets(n.saturating_sub(len - 1), len)
        .into_iter()
        .map(|v| v.into_iter().enumerate().map(|(j, i)| i + j).collect())
        .collect()
}

/// All index sequences of length `len` over `0..n`.
fn tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..n).map(move |i| {
                    let mut w = v.clone();
                    w.push(i);
                    w
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::validate;

    #[test]
    fn level_zero() {
        let all: Vec<_> = enumerate_terms(System::Full, EnumBounds::new(0)).collect();
        assert_eq!(all, vec![Ordinal::Zero]);
    }

    #[test]
    fn level_one_countable() {
        let all: Vec<_> =
            enumerate_terms(System::Full, EnumBounds::new(1).countable_only(true)).collect();
        assert!(all.contains(&Ordinal::one()));
        assert!(all.iter().all(|t| complexity(t, System::Full) <= 1));
    }

    #[test]
    fn index_helpers() {
        assert_eq!(multisets(2, 2), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(tuples(2, 2).len(), 4);
    }

    #[test]
    fn generated_terms_are_valid_and_distinct() {
        for sys in [System::Full, System::Restricted] {
            let all = universe(sys, EnumBounds::new(3).monomials(1));
            for t in &all {
                assert_eq!(validate(t, sys), Ok(()), "{t}");
            }
            assert!(all
                .windows(2)
                .all(|w| compare(&w[0], &w[1]) == Ordering::Less));
        }
    }
}
