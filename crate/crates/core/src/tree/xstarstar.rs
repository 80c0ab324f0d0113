//! Membership in a left set of T(X**), spelled out as a case analysis.
//!
//! For t = ∘[(T¹, …, Tᵏ)] and s = ∘[(S¹, …, Sˡ)] with sequences Tⁱ, Sʲ of
//! terms, s lies in L(t) exactly when every term inside s does and, for some
//! q ≤ k, there are indices l₁ < … < l_{q-1} such that Tᵖ embeds into S^{lₚ},
//! Tᵖ fails to embed into every Sⁱ strictly between l_{p-1} and lₚ, and T^q
//! fails to embed into every Sⁱ after l_{q-1}. Failure of Tⁱ to embed into Sʲ
//! has the same shape one level down, with membership in L(tᵢ) in place of
//! non-embedding. The evaluation below searches all index choices and uses
//! only itself for the recursive memberships, so it is independent of
//! [`t_leq`](super::t_leq).

use crate::wpo::{WElement, WExpr};

use super::{TreeError, TreeTerm};

/// Whether `s` lies in the left set of `t` in T(X**), decided by the case
/// analysis. Agrees with `!t_leq(t, s)`.
pub fn xstarstar_membership_cases(t: &TreeTerm, s: &TreeTerm) -> Result<bool, TreeError> {
    let w = WExpr::star(WExpr::star(WExpr::Hole));
    t.check_shape(&w)?;
    s.check_shape(&w)?;
    Ok(member(t, s))
}

/// s ∈ L(t).
fn member(t: &TreeTerm, s: &TreeTerm) -> bool {
    let (bt, bs) = match (t, s) {
        (TreeTerm::Circ, _) => return false,
        (_, TreeTerm::Circ) => return true,
        (TreeTerm::Apply(bt), TreeTerm::Apply(bs)) => (bt, bs),
    };
    let (ts, ss) = (sequences(bt), sequences(bs));
    let inside = ss.iter().flatten().all(|x| member(t, x));
    inside
        && segmented(
            ts.len(),
            ss.len(),
            &|p, i| not_embedded(&ts[p], &ss[i]),
            &|p, i| !not_embedded(&ts[p], &ss[i]),
        )
}

/// (t₁, …, tₙ) ≰* (s₁, …, sₘ) by the inner case analysis.
fn not_embedded(ts: &[&TreeTerm], ss: &[&TreeTerm]) -> bool {
    segmented(ts.len(), ss.len(), &|p, r| member(ts[p], ss[r]), &|p, r| {
        !member(ts[p], ss[r])
    })
}

/// Whether, for some case q in 1..=`n_pat`, indices l₁ < … < l_{q-1} below
/// `n_tgt` exist with `hit(p, lₚ)` for p < q-1 (0-based), `miss(p, i)` for
/// every i strictly between l_{p-1} and lₚ, and `miss(q-1, i)` for every i
/// after l_{q-1}.
fn segmented(
    n_pat: usize,
    n_tgt: usize,
    miss: &dyn Fn(usize, usize) -> bool,
    hit: &dyn Fn(usize, usize) -> bool,
) -> bool {
    fn from(
        p: usize,
        start: usize,
        n_pat: usize,
        n_tgt: usize,
        miss: &dyn Fn(usize, usize) -> bool,
        hit: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        let stop_here = (start..n_tgt).all(|i| miss(p, i));
        stop_here
            || (p + 1 < n_pat
                && (start..n_tgt).any(|l| {
                    (start..l).all(|i| miss(p, i))
                        && hit(p, l)
                        && from(p + 1, l + 1, n_pat, n_tgt, miss, hit)
                }))
    }
    n_pat > 0 && from(0, 0, n_pat, n_tgt, miss, hit)
}

fn sequences(body: &WElement<TreeTerm>) -> Vec<Vec<&TreeTerm>> {
    let WElement::List(outer) = body else {
        unreachable!("shape already checked")
    };
    outer
        .iter()
        .map(|inner| {
            let WElement::List(xs) = inner else {
                unreachable!("shape already checked")
            };
            xs.iter()
                .map(|x| match x {
                    WElement::Hole(t) => t,
                    _ => unreachable!("shape already checked"),
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{enumerate, parse_tree_term, t_leq_unchecked};

    fn w() -> WExpr {
        WExpr::star(WExpr::star(WExpr::Hole))
    }

    #[test]
    fn examples() {
        let w = w();
        let t = parse_tree_term("o[[[o]]]", &w).unwrap();
        let empty_inner = parse_tree_term("o[[[], []]]", &w).unwrap();
        assert!(xstarstar_membership_cases(&t, &empty_inner).unwrap());
        let holder = TreeTerm::apply(WElement::List(vec![WElement::List(vec![WElement::Hole(
            t.clone(),
        )])]));
        assert!(!xstarstar_membership_cases(&t, &holder).unwrap());
    }

    #[test]
    fn agrees_with_t_leq_on_small_terms() {
        let w = w();
        let terms = enumerate(&w, 5);
        for t in &terms {
            for s in &terms {
                assert_eq!(member(t, s), !t_leq_unchecked(t, s, &w), "t = {t}, s = {s}");
            }
        }
    }
}
