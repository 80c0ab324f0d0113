//! Membership of a term tree in one of the two notation systems.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use super::compare::{compare, compare_parts};
use super::{Ordinal, Part, System};

/// The first violated formation rule, innermost first.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} (at {})", fmt_path(.path))]
pub struct Violation {
    /// Child indices from the root, following [`Ordinal::children`].
    pub path: Vec<usize>,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    SumTooShort,
    SumWrongSummandSort,
    SumIncreasing,
    SumNotAboveFirstExponent,
    CnfEmpty,
    CnfExponentsNotDecreasing,
    CnfZeroCoefficient,
    CnfUncountableCoefficient,
    CnfDegenerate,
    ExponentNotNatural,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::SumTooShort => "a sum needs at least two summands",
            ViolationKind::SumWrongSummandSort => "summand sort not allowed in this system",
            ViolationKind::SumIncreasing => "summands must be non-increasing",
            ViolationKind::SumNotAboveFirstExponent => {
                "a sum of ω-powers must exceed its first exponent"
            }
            ViolationKind::CnfEmpty => "a base-Ω normal form needs a monomial",
            ViolationKind::CnfExponentsNotDecreasing => "Ω-exponents must strictly decrease",
            ViolationKind::CnfZeroCoefficient => "Ω-coefficients must be nonzero",
            ViolationKind::CnfUncountableCoefficient => "Ω-coefficients must be countable",
            ViolationKind::CnfDegenerate => "Ω^0·c must be written as c",
            ViolationKind::ExponentNotNatural => "Ω-exponents must be natural numbers here",
        })
    }
}

fn fmt_path(path: &[usize]) -> String {
    if path.is_empty() {
        "root".to_string()
    } else {
        path.iter().map(|i| format!("/{i}")).collect()
    }
}

/// Checks every formation rule of `sys`, children before parents.
pub fn validate(t: &Ordinal, sys: System) -> Result<(), Violation> {
    let mut path = Vec::new();
    walk(t, sys, &mut path)
}

fn walk(t: &Ordinal, sys: System, path: &mut Vec<usize>) -> Result<(), Violation> {
    for (i, child) in t.children().into_iter().enumerate() {
        path.push(i);
        walk(child, sys, path)?;
        path.pop();
    }
    check_node(t, sys).map_err(|kind| Violation {
        path: path.clone(),
        kind,
    })
}

fn check_node(t: &Ordinal, sys: System) -> Result<(), ViolationKind> {
    match t {
        Ordinal::Zero | Ordinal::Theta(_) => Ok(()),
        Ordinal::Sum(parts) => {
            if parts.len() < 2 {
                return Err(ViolationKind::SumTooShort);
            }
            let sort_ok = |p: &Part| match sys {
                System::Full => matches!(p, Part::OmegaPow(_)),
                System::Restricted => matches!(p, Part::Theta(_)),
            };
            if !parts.iter().all(sort_ok) {
                return Err(ViolationKind::SumWrongSummandSort);
            }
            if parts
                .windows(2)
                .any(|w| compare_parts(&w[0], &w[1]) == Ordering::Less)
            {
                return Err(ViolationKind::SumIncreasing);
            }
            if sys == System::Full && compare(t, parts[0].inner()) != Ordering::Greater {
                return Err(ViolationKind::SumNotAboveFirstExponent);
            }
            Ok(())
        }
        Ordinal::Cnf(ms) => {
            if ms.is_empty() {
                return Err(ViolationKind::CnfEmpty);
            }
            if ms.len() == 1 && ms[0].exp.is_zero() {
                return Err(ViolationKind::CnfDegenerate);
            }
            if ms
                .windows(2)
                .any(|w| compare(&w[0].exp, &w[1].exp) != Ordering::Greater)
            {
                return Err(ViolationKind::CnfExponentsNotDecreasing);
            }
            for m in ms {
                if m.coeff.is_zero() {
                    return Err(ViolationKind::CnfZeroCoefficient);
                }
                if !m.coeff.is_countable() {
                    return Err(ViolationKind::CnfUncountableCoefficient);
                }
                if sys == System::Restricted && m.exp.as_natural().is_none() {
                    return Err(ViolationKind::ExponentNotNatural);
                }
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::Monomial;

    #[test]
    fn single_summand_sum_is_rejected() {
        let t = Ordinal::Sum(vec![Part::OmegaPow(Ordinal::Zero)]);
        assert_eq!(
            validate(&t, System::Full).unwrap_err().kind,
            ViolationKind::SumTooShort
        );
    }

    #[test]
    fn restricted_exponents_are_natural() {
        let coeff = Ordinal::theta(Ordinal::big_omega());
        let ok = Ordinal::Cnf(vec![Monomial::new(Ordinal::one(), coeff.clone())]);
        assert_eq!(validate(&ok, System::Restricted), Ok(()));
        let bad = Ordinal::Cnf(vec![Monomial::new(Ordinal::omega(), coeff)]);
        assert_eq!(
            validate(&bad, System::Restricted).unwrap_err().kind,
            ViolationKind::ExponentNotNatural
        );
        assert_eq!(validate(&bad, System::Full), Ok(()));
    }

    #[test]
    fn violation_points_at_innermost_node() {
        let inner = Ordinal::Sum(vec![
            Part::unit(System::Full),
            Part::OmegaPow(Ordinal::one()),
        ]);
        let t = Ordinal::theta(Ordinal::theta(inner));
        let v = validate(&t, System::Full).unwrap_err();
        assert_eq!(v.kind, ViolationKind::SumIncreasing);
        assert_eq!(v.path, vec![0, 0]);
        assert_eq!(v.to_string(), "summands must be non-increasing (at /0/0)");
    }

    #[test]
    fn summand_sorts_per_system() {
        let two_full = Ordinal::natural(2, System::Full);
        let two_restricted = Ordinal::natural(2, System::Restricted);
        assert_eq!(validate(&two_full, System::Full), Ok(()));
        assert_eq!(validate(&two_restricted, System::Restricted), Ok(()));
        assert_eq!(
            validate(&two_full, System::Restricted).unwrap_err().kind,
            ViolationKind::SumWrongSummandSort
        );
    }
}
