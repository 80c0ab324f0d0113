//! Suites over ordinal terms and the collapsing map.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::collapse::{cnf_tree, ord_to_tree};
use crate::ordinal::{
    coefficient_set, complexity, decode, encode, max_coefficient, natural_product, natural_sum,
    omega_power, try_compare, universe, EnumBounds, Ordinal, OrdinalError, System,
};
use crate::tree::{t_leq_unchecked, TreeTerm};
use crate::wpo::WExpr;

use super::gen::random_term;
use super::{failure, shrink, Params, Tally};

/// The universes behind the exhaustive ordinal suites. Complexity alone
/// bounds nothing (sums and normal forms may be arbitrarily long), so the
/// number of summands and monomials is capped as well.
fn universes(g: u32, monomials: usize) -> [(System, Vec<Ordinal>); 2] {
    [
        (
            System::Full,
            universe(
                System::Full,
                EnumBounds::new(g).summands(2).monomials(monomials),
            ),
        ),
        (
            System::Restricted,
            universe(
                System::Restricted,
                EnumBounds::new(g).summands(3).monomials(monomials),
            ),
        ),
    ]
}

fn ord_str(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}

fn cmp_str(r: Result<Ordering, OrdinalError>) -> String {
    match r {
        Ok(o) => ord_str(o).to_string(),
        Err(e) => e.to_string(),
    }
}

/// Trichotomy, antisymmetry and transitivity. Each universe comes sorted;
/// requiring uᵢ < uⱼ and uⱼ > uᵢ for every i < j (and uᵢ = uᵢ) pins the
/// comparison down to the strict linear order of the list, which implies
/// transitivity on every triple without enumerating them.
pub(super) fn order_axioms(p: &Params, tally: &mut Tally) {
    for (sys, u) in universes(p.size as u32, 2) {
        for (i, a) in u.iter().enumerate() {
            let same = try_compare(a, a);
            tally.check(same == Ok(Ordering::Equal), || {
                failure(&[&sys, a, a], "EQ", cmp_str(same.clone()))
            });
            for b in &u[i + 1..] {
                let (ab, ba) = (try_compare(a, b), try_compare(b, a));
                let ok = ab == Ok(Ordering::Less) && ba == Ok(Ordering::Greater);
                tally.check(ok, || {
                    failure(
                        &[&sys, a, b],
                        "LT then GT",
                        format!("{} then {}", cmp_str(ab.clone()), cmp_str(ba.clone())),
                    )
                });
            }
        }
    }
}

fn lt(a: &Ordinal, b: &Ordinal) -> Result<bool, OrdinalError> {
    Ok(try_compare(a, b)? == Ordering::Less)
}

/// ϑα < ϑβ iff (α < β and k(α) < ϑβ) or (β < α and ϑα ≤ k(β)); and
/// k(β) < ϑβ.
fn theta_pair(a: &Ordinal, b: &Ordinal) -> Result<(bool, bool), OrdinalError> {
    let (ta, tb) = (Ordinal::theta(a.clone()), Ordinal::theta(b.clone()));
    let (ka, kb) = (max_coefficient(a), max_coefficient(b));
    let lhs = lt(&ta, &tb)?;
    let rhs = (lt(a, b)? && lt(&ka, &tb)?) || (lt(b, a)? && !lt(&kb, &ta)?);
    Ok((lhs, rhs))
}

/// The comparison criterion for ϑ on every pair of ϑ-terms in the
/// universes, extended to every pair of arguments from the single-monomial
/// universe of the same complexity; and dominance of ϑβ over k(β) for every
/// argument.
pub(super) fn theta_criterion(p: &Params, tally: &mut Tally) {
    let g = p.size as u32;
    for ((sys, u), (_, wide)) in universes(g, 2).into_iter().zip(universes(g, 1)) {
        let mut args: Vec<&Ordinal> = u
            .iter()
            .filter_map(|t| match t {
                Ordinal::Theta(b) => Some(&**b),
                _ => None,
            })
            .chain(&wide)
            .collect();
        args.sort_by(|a, b| crate::ordinal::compare(a, b));
        args.dedup();
        for a in &args {
            for b in &args {
                let r = theta_pair(a, b);
                tally.check(matches!(r, Ok((l, r)) if l == r), || {
                    failure(&[&sys, a, b], "criterion holds", format!("{r:?}"))
                });
            }
        }
        for b in &u {
            let ok = lt(&max_coefficient(b), &Ordinal::theta(b.clone()));
            tally.check(ok == Ok(true), || {
                failure(&[&sys, b], "k(b) < v(b)", format!("{ok:?}"))
            });
        }
    }
}

/// The five claims of the coefficient lemma for one pair; an error when some
/// quantity leaves the notation system.
fn coeff_claims(a: &Ordinal, b: &Ordinal) -> Result<Vec<(&'static str, bool)>, OrdinalError> {
    let sys = System::Full;
    let (ka, kb) = (max_coefficient(a), max_coefficient(b));
    let sum = natural_sum(a, b, sys)?;
    let prod = natural_product(a, b, sys)?;
    let (ks, kp) = (max_coefficient(&sum), max_coefficient(&prod));
    let ka_kb = natural_sum(&ka, &kb, sys)?;
    let ka_kb_w = natural_product(&natural_product(&ka, &kb, sys)?, &Ordinal::omega(), sys)?;
    let k_pow = max_coefficient(&omega_power(a, sys)?);
    let pow_k = omega_power(&ka, sys)?;
    let le = |x: &Ordinal, y: &Ordinal| try_compare(x, y).map(|o| o != Ordering::Greater);
    Ok(vec![
        ("k(a+b) <= k(a)+k(b)", le(&ks, &ka_kb)?),
        (
            "k(a*b) <= max(k(a)+k(b), k(a)*k(b)*w)",
            le(&kp, &ka_kb)? || le(&kp, &ka_kb_w)?,
        ),
        ("k(w^a) <= w^k(a)", le(&k_pow, &pow_k)?),
        ("k(a), k(b) <= k(a+b)", le(&ka, &ks)? && le(&kb, &ks)?),
        ("k(a) <= k(a*b) for b > 0", b.is_zero() || le(&ka, &kp)?),
    ])
}

fn first_broken(a: &Ordinal, b: &Ordinal) -> Option<&'static str> {
    coeff_claims(a, b)
        .ok()?
        .into_iter()
        .find(|(_, ok)| !ok)
        .map(|(name, _)| name)
}

fn ord_children(t: &Ordinal) -> Vec<Ordinal> {
    let mut cs: Vec<Ordinal> = t.children().into_iter().cloned().collect();
    cs.sort_by_key(|c| std::cmp::Reverse(c.size()));
    cs
}

/// The coefficient lemma on seeded random pairs of full-system terms; pairs
/// whose sums, products or powers leave the system are skipped and do not
/// count towards the sample target.
pub(super) fn coeff_lemmas(p: &Params, tally: &mut Tally) {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let g = p.size as u32;
    let mut representable = 0;
    let mut attempts = 0;
    while representable < p.samples && attempts < 20 * p.samples.max(1) {
        attempts += 1;
        let a = random_term(&mut rng, g, false);
        let b = random_term(&mut rng, g, false);
        let Ok(claims) = coeff_claims(&a, &b) else {
            continue;
        };
        representable += 1;
        for (name, ok) in claims {
            tally.check(ok, || {
                let xs = shrink(
                    vec![a.clone(), b.clone()],
                    |xs| first_broken(&xs[0], &xs[1]) == Some(name),
                    ord_children,
                );
                failure(&[&xs[0], &xs[1]], name, "violated")
            });
        }
    }
    tally.check(representable >= p.samples, || {
        failure(
            &[],
            format!("{} representable pairs", p.samples),
            format!("{representable} after {attempts} attempts"),
        )
    });
}

/// The complexity of k(ξ) is at most that of ξ, and every coefficient is a
/// term of the same system.
pub(super) fn g_monotone(p: &Params, tally: &mut Tally) {
    for (sys, u) in universes(p.size as u32, 1) {
        for x in &u {
            let k = max_coefficient(x);
            let (gk, gx) = (complexity(&k, sys), complexity(x, sys));
            tally.check(gk <= gx, || {
                failure(
                    &[&sys, x],
                    format!("G(k) <= {gx}"),
                    format!("G({k}) = {gk}"),
                )
            });
            for c in coefficient_set(x) {
                let v = crate::ordinal::validate(&c, sys);
                tally.check(v.is_ok(), || {
                    failure(
                        &[&sys, x, &c],
                        "coefficient in the system",
                        format!("{v:?}"),
                    )
                });
            }
        }
    }
}

/// Codes of coefficients and of immediate subterms never exceed the code of
/// the term, and decoding inverts encoding.
pub(super) fn encode_monotone(p: &Params, tally: &mut Tally) {
    for (sys, u) in universes(p.size as u32, 1) {
        for x in &u {
            let code = encode(x);
            let back = decode(&code);
            tally.check(back.as_ref() == Ok(x), || {
                failure(&[&sys, x], x, format!("{back:?}"))
            });
            let mut smaller: Vec<Ordinal> = coefficient_set(x);
            smaller.extend(x.children().into_iter().cloned());
            for c in smaller {
                let cc = encode(&c);
                tally.check(cc <= code, || {
                    failure(&[&sys, x, &c], format!("code <= {code}"), cc)
                });
            }
        }
    }
}

/// Leaf labels of a binary tree, as a set.
fn leaf_labels(t: &crate::collapse::Comb) -> BTreeSet<TreeTerm> {
    t.leaves()
        .into_iter()
        .map(|l| match l {
            crate::wpo::WElement::Hole(x) => x.clone(),
            _ => unreachable!("collapse trees hold terms in their leaves"),
        })
        .collect()
}

/// Every argument of a collapse occurring in `a`.
fn collapse_args(a: &Ordinal, out: &mut Vec<Ordinal>) {
    if let Ordinal::Theta(b) = a {
        out.push((**b).clone());
    }
    for c in a.children() {
        collapse_args(c, out);
    }
}

/// The leaf labels of f(β) are exactly g(K(β) ∪ {0}).
fn check_labels(a: &Ordinal, tally: &mut Tally) {
    let mut args = Vec::new();
    collapse_args(a, &mut args);
    for b in args {
        let got = cnf_tree(&b).map(|t| leaf_labels(&t));
        let mut ks = coefficient_set(&b);
        ks.push(Ordinal::Zero);
        let want: Result<BTreeSet<TreeTerm>, _> = ks.iter().map(ord_to_tree).collect();
        tally.check(got.is_ok() && got == want, || {
            failure(&[&b], "labels g(K(b) + {0})", format!("{got:?}"))
        });
    }
}

fn reflects(a: &Ordinal, b: &Ordinal, w: &WExpr) -> Result<bool, String> {
    let ga = ord_to_tree(a).map_err(|e| e.to_string())?;
    let gb = ord_to_tree(b).map_err(|e| e.to_string())?;
    if !t_leq_unchecked(&ga, &gb, w) {
        return Ok(true);
    }
    try_compare(a, b)
        .map(|o| o != Ordering::Greater)
        .map_err(|e| e.to_string())
}

/// g(a) ≤ g(a′) implies a ≤ a′, exhaustively on small countable terms and
/// on seeded random pairs of larger ones, together with the leaf labels of
/// every f(β) built along the way.
pub(super) fn quasi_embedding(p: &Params, tally: &mut Tally) {
    let w = WExpr::btree(WExpr::Hole);
    let bounds = EnumBounds::new(p.size as u32).countable_only(true);
    let small = universe(System::Full, bounds);
    let check_pair = |a: &Ordinal, b: &Ordinal, tally: &mut Tally| {
        let r = reflects(a, b, &w);
        tally.check(r == Ok(true), || {
            let xs = shrink(
                vec![a.clone(), b.clone()],
                |xs| reflects(&xs[0], &xs[1], &w) != Ok(true),
                |t| {
                    ord_children(t)
                        .into_iter()
                        .filter(Ordinal::is_countable)
                        .collect()
                },
            );
            failure(
                &[&xs[0], &xs[1]],
                "g(a) <= g(b) implies a <= b",
                format!("{r:?}"),
            )
        });
    };
    for a in &small {
        check_labels(a, tally);
        for b in &small {
            check_pair(a, b, tally);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    for _ in 0..p.samples {
        let a = random_term(&mut rng, 6, true);
        let b = random_term(&mut rng, 6, true);
        check_labels(&a, tally);
        check_pair(&a, &b, tally);
    }
}
