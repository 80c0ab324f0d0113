//! Coefficient sets K(α), their maximum k(α), and the complexity measures.

use std::cmp::Ordering;

use super::compare::{compare, max_coef_ref};
use super::{Ordinal, Part, System};

/// K(a): the countable coefficients occurring hereditarily in the base-Ω
/// normal form of `a`, sorted ascending without repetitions.
///
/// K(0) = {0}, a nonzero countable term is its own sole coefficient, and
/// K(Ω^e₁·c₁ + … + Ω^eₙ·cₙ) = {c₁,…,cₙ} ∪ K(e₁) ∪ … ∪ K(eₙ).
pub fn coefficient_set(a: &Ordinal) -> Vec<Ordinal> {
    let mut out = Vec::new();
    collect(a, &mut out);
    out.sort_by(compare);
    out.dedup();
    out
}

fn collect(a: &Ordinal, out: &mut Vec<Ordinal>) {
    match a {
        Ordinal::Cnf(ms) => {
            for m in ms {
                out.push(m.coeff.clone());
                collect(&m.exp, out);
            }
        }
        other => out.push(other.clone()),
    }
}

/// k(a) = max K(a).
pub fn max_coefficient(a: &Ordinal) -> Ordinal {
    max_coef_ref(a)
        .expect("ordinal comparison ran out of fuel")
        .clone()
}

/// The complexity G (full system) or G' (restricted system) of a term.
///
/// In the restricted system the Ω-exponents are natural numbers and do not
/// contribute; a summand ϑb counts as the term ϑb.
pub fn complexity(a: &Ordinal, sys: System) -> u32 {
    match a {
        Ordinal::Zero => 0,
        Ordinal::Theta(b) => complexity(b, sys) + 1,
        Ordinal::Sum(parts) => {
            parts
                .iter()
                .map(|p| match p {
                    Part::Theta(b) => complexity(b, sys) + 1,
                    Part::OmegaPow(d) => complexity(d, sys),
                })
                .max()
                .unwrap_or(0)
                + 1
        }
        Ordinal::Cnf(ms) => {
            ms.iter()
                .map(|m| match sys {
                    System::Full => complexity(&m.exp, sys).max(complexity(&m.coeff, sys)),
                    System::Restricted => complexity(&m.coeff, sys),
                })
                .max()
                .unwrap_or(0)
                + 1
        }
    }
}

/// Whether ϑb is in collapsing normal form, that is k(b) < ϑb.
pub fn is_collapsing_normal(b: &Ordinal) -> bool {
    compare(&max_coefficient(b), &Ordinal::theta(b.clone())) == Ordering::Less
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::Monomial;

    #[test]
    fn coefficient_sets() {
        assert_eq!(coefficient_set(&Ordinal::Zero), vec![Ordinal::Zero]);
        assert_eq!(coefficient_set(&Ordinal::one()), vec![Ordinal::one()]);
        let omega = Ordinal::omega();
        let big_omega_omega = Ordinal::Cnf(vec![Monomial::new(omega.clone(), Ordinal::one())]);
        assert_eq!(
            coefficient_set(&big_omega_omega),
            vec![Ordinal::one(), omega.clone()]
        );
        assert_eq!(max_coefficient(&big_omega_omega), omega);
        assert_eq!(max_coefficient(&Ordinal::Zero), Ordinal::Zero);
    }

    #[test]
    fn complexities() {
        assert_eq!(complexity(&Ordinal::Zero, System::Full), 0);
        assert_eq!(complexity(&Ordinal::one(), System::Full), 1);
        assert_eq!(complexity(&Ordinal::big_omega(), System::Full), 2);
        assert_eq!(complexity(&Ordinal::big_omega(), System::Restricted), 2);
        assert_eq!(
            complexity(&Ordinal::natural(5, System::Full), System::Full),
            1
        );
        assert_eq!(
            complexity(&Ordinal::natural(5, System::Restricted), System::Restricted),
            2
        );
    }
}
