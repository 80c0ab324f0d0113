//! Explicit finite partial orders.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("relation matrix has {got} entries, expected {expected}")]
    BadMatrix { expected: usize, got: usize },
    #[error("element {0} out of range")]
    OutOfRange(usize),
    #[error("not reflexive at {0}")]
    NotReflexive(usize),
    #[error("not antisymmetric: {0} and {1} are mutually related")]
    NotAntisymmetric(usize, usize),
    #[error("not transitive: {0} ≤ {1} ≤ {2} but not {0} ≤ {2}")]
    NotTransitive(usize, usize, usize),
}

/// A partial order on `0..size`, stored as a row-major `size × size` matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    size: usize,
    leq: Vec<bool>,
}

impl FinitePoset {
    /// Checks reflexivity, antisymmetry and transitivity of `leq`.
    pub fn new(size: usize, leq: Vec<bool>) -> Result<Self, PosetError> {
        if leq.len() != size * size {
            return Err(PosetError::BadMatrix {
                expected: size * size,
                got: leq.len(),
            });
        }
        let p = FinitePoset { size, leq };
        for i in 0..size {
            if !p.leq(i, i) {
                return Err(PosetError::NotReflexive(i));
            }
            for j in 0..size {
                if i != j && p.leq(i, j) && p.leq(j, i) {
                    return Err(PosetError::NotAntisymmetric(i, j));
                }
                for k in 0..size {
                    if p.leq(i, j) && p.leq(j, k) && !p.leq(i, k) {
                        return Err(PosetError::NotTransitive(i, j, k));
                    }
                }
            }
        }
        Ok(p)
    }

    /// The reflexive-transitive closure of the pairs `a < b`.
    pub fn from_covers(size: usize, pairs: &[(usize, usize)]) -> Result<Self, PosetError> {
        let mut leq = vec![false; size * size];
        for i in 0..size {
            leq[i * size + i] = true;
        }
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= size {
                    return Err(PosetError::OutOfRange(x));
                }
            }
            leq[a * size + b] = true;
        }
        for k in 0..size {
            for i in 0..size {
                if leq[i * size + k] {
                    for j in 0..size {
                        if leq[k * size + j] {
                            leq[i * size + j] = true;
                        }
                    }
                }
            }
        }
        FinitePoset::new(size, leq)
    }

    /// `n` pairwise incomparable elements.
    pub fn antichain(n: usize) -> Self {
        FinitePoset::from_covers(n, &[]).expect("discrete order is a poset")
    }

    /// 0 < 1 < … < n-1.
    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        FinitePoset::from_covers(n, &pairs).expect("a chain is a poset")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    /// Pairs a < b with nothing strictly between them.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size;
        let lt = |a: usize, b: usize| a != b && self.leq(a, b);
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Every partial order on `0..n` (labelled, so isomorphic copies repeat).
    pub fn all_of_size(n: usize) -> Vec<FinitePoset> {
        let off: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << off.len()) {
            let mut leq = vec![false; n * n];
            for i in 0..n {
                leq[i * n + i] = true;
            }
            for (bit, &(i, j)) in off.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    leq[i * n + j] = true;
                }
            }
            if let Ok(p) = FinitePoset::new(n, leq) {
                out.push(p);
            }
        }
        out
    }
}

/// `P{n;a<b,…}` listing the covering pairs.
impl fmt::Display for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{{{};", self.size)?;
        for (i, (a, b)) in self.covers().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}<{b}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn posets_up_to_three() {
        let counts: Vec<usize> = (0..=3).map(|n| FinitePoset::all_of_size(n).len()).collect();
        // Labelled posets: 1, 1, 3, 19.
        assert_eq!(counts, vec![1, 1, 3, 19]);
    }

    #[test]
    fn closure_and_covers() {
        let p = FinitePoset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(p, FinitePoset::chain(3));
        assert_eq!(p.to_string(), "P{3;0<1,1<2}");
    }

    #[test]
    fn cycles_are_rejected() {
        assert_eq!(
            FinitePoset::from_covers(2, &[(0, 1), (1, 0)]),
            Err(PosetError::NotAntisymmetric(0, 1))
        );
        assert!(FinitePoset::new(2, vec![true, true, false, false]).is_err());
    }
}
