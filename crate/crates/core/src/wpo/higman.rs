//! Higman's subsequence embedding on finite sequences.

/// Whether `xs` embeds into `ys`: some i₁ < … < iₙ has xⱼ ≤ y_{iⱼ}.
///
/// Matching each xⱼ to the leftmost admissible position is optimal, since it
/// leaves the longest possible suffix of `ys` for the remaining elements.
pub fn higman_leq<T>(xs: &[T], ys: &[T], mut leq: impl FnMut(&T, &T) -> bool) -> bool {
    let mut rest = ys.iter();
    xs.iter().all(|x| rest.any(|y| leq(x, y)))
}

/// The same relation by trying every strictly increasing index map.
pub fn higman_leq_exhaustive<T>(xs: &[T], ys: &[T], mut leq: impl FnMut(&T, &T) -> bool) -> bool {
    fn go<T>(xs: &[T], ys: &[T], from: usize, leq: &mut dyn FnMut(&T, &T) -> bool) -> bool {
        let Some((x, rest)) = xs.split_first() else {
            return true;
        };
        (from..ys.len()).any(|i| leq(x, &ys[i]) && go(rest, ys, i + 1, leq))
    }
    go(xs, ys, 0, &mut leq)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let eq = |a: &char, b: &char| a == b;
        assert!(higman_leq(&[], &['a'], eq));
        assert!(higman_leq(&['a', 'b'], &['a', 'c', 'b'], eq));
        assert!(!higman_leq(&['b', 'a'], &['a', 'b'], eq));
        assert!(!higman_leq_exhaustive(&['b', 'a'], &['a', 'b'], eq));
        assert!(higman_leq(&[1, 2], &[3, 1, 5], |a: &i32, b: &i32| a <= b));
    }
}
