//! Syntactic ordinals below ϑ(ε_{Ω+1}).
//!
//! Two notation systems share one term language:
//!
//! - [`System::Full`] builds countable sums out of ω-powers `ω^δ` and allows
//!   arbitrary exponents in base-Ω normal forms;
//! - [`System::Restricted`] has no ω-exponentiation: countable sums are sums
//!   of ϑ-terms and Ω-exponents are natural numbers.
//!
//! Terms are kept in normal form, so two valid terms of the same system denote
//! the same ordinal exactly when they are structurally equal.

mod arith;
mod code;
mod coeff;
mod compare;
mod enumerate;
mod parse;
mod validate;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use arith::{exponent_of_principal, natural_product, natural_sum, omega_power, omega_tower};
pub use code::{decode, encode};
pub use coeff::{coefficient_set, complexity, is_collapsing_normal, max_coefficient};
pub use compare::{compare, compare_parts, try_compare};
pub use enumerate::{enumerate_terms, universe, EnumBounds, Terms};
pub use parse::{parse, parse_valid};
pub use validate::{validate, Violation, ViolationKind};

use crate::text::ParseError;

/// Which of the two notation systems a term is read in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum System {
    Full,
    Restricted,
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            System::Full => "full",
            System::Restricted => "restricted",
        })
    }
}

/// An ordinal term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Ordinal {
    Zero,
    /// ϑ(arg).
    Theta(Box<Ordinal>),
    /// A countable sum of at least two principal parts, non-increasing.
    Sum(Vec<Part>),
    /// Ω^e₁·c₁ + … + Ω^eₙ·cₙ with e₁ > … > eₙ and countable nonzero cᵢ.
    Cnf(Vec<Monomial>),
}

/// A summand of a countable sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Part {
    /// ϑ(arg) as a summand; the only summand form of the restricted system.
    Theta(Ordinal),
    /// ω^exp; the only summand form of the full system. Never a term on its own.
    OmegaPow(Ordinal),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exp: Ordinal,
    pub coeff: Ordinal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("comparison ran out of fuel (internal error)")]
    FuelExhausted,
    #[error("result is not representable in the {system} system: {term}")]
    NotRepresentable { system: System, term: String },
    #[error("{0} is not the code of a valid term")]
    NotACode(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid term: {0}")]
    Invalid(#[from] Violation),
}

impl Ordinal {
    pub fn zero() -> Ordinal {
        Ordinal::Zero
    }

    /// ϑ0 = 1.
    pub fn one() -> Ordinal {
        Ordinal::theta(Ordinal::Zero)
    }

    /// ϑ1 = ω.
    pub fn omega() -> Ordinal {
        Ordinal::theta(Ordinal::one())
    }

    /// Ω = Ω¹·1.
    pub fn big_omega() -> Ordinal {
        Ordinal::Cnf(vec![Monomial::new(Ordinal::one(), Ordinal::one())])
    }

    pub fn theta(arg: Ordinal) -> Ordinal {
        Ordinal::Theta(Box::new(arg))
    }

    /// The natural number `n` in the summand form of `sys`.
    pub fn natural(n: u64, sys: System) -> Ordinal {
        match n {
            0 => Ordinal::Zero,
            1 => Ordinal::one(),
            _ => Ordinal::Sum((0..n).map(|_| Part::unit(sys)).collect()),
        }
    }

    /// Ω^exp · coeff, collapsing Ω⁰·c to c.
    pub fn monomial(exp: Ordinal, coeff: Ordinal) -> Ordinal {
        if exp.is_zero() {
            coeff
        } else {
            Ordinal::Cnf(vec![Monomial::new(exp, coeff)])
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Ordinal::Zero)
    }

    /// Number of syntax nodes.
    pub fn size(&self) -> usize {
        match self {
            Ordinal::Zero => 1,
            Ordinal::Theta(a) => 1 + a.size(),
            Ordinal::Sum(parts) => 1 + parts.iter().map(|p| 1 + p.inner().size()).sum::<usize>(),
            Ordinal::Cnf(ms) => {
                1 + ms
                    .iter()
                    .map(|m| 1 + m.exp.size() + m.coeff.size())
                    .sum::<usize>()
            }
        }
    }

    /// True for every term below Ω.
    pub fn is_countable(&self) -> bool {
        match self {
            Ordinal::Zero | Ordinal::Theta(_) | Ordinal::Sum(_) => true,
            Ordinal::Cnf(ms) => ms.len() == 1 && ms[0].exp.is_zero(),
        }
    }

    /// Membership in P, the ω-powers (0 is not one).
    pub fn is_additively_closed(&self) -> bool {
        match self {
            Ordinal::Theta(_) => true,
            Ordinal::Cnf(ms) => ms.len() == 1 && ms[0].coeff.is_additively_closed(),
            Ordinal::Zero | Ordinal::Sum(_) => false,
        }
    }

    /// ϑ of an uncountable argument: exactly the epsilon numbers among terms.
    pub fn is_epsilon(&self) -> bool {
        matches!(self, Ordinal::Theta(a) if !a.is_countable())
    }

    /// Shape ε + n with ε an epsilon number and n ≥ 0 (ε itself included).
    pub fn has_epsilon_shape(&self) -> bool {
        match self {
            Ordinal::Theta(_) => self.is_epsilon(),
            Ordinal::Sum(parts) => {
                parts.first().is_some_and(Part::is_epsilon) && parts[1..].iter().all(Part::is_unit)
            }
            _ => false,
        }
    }

    /// The value of a finite term.
    pub fn as_natural(&self) -> Option<u64> {
        match self {
            Ordinal::Zero => Some(0),
            Ordinal::Theta(a) if a.is_zero() => Some(1),
            Ordinal::Sum(parts) if parts.iter().all(Part::is_unit) => Some(parts.len() as u64),
            _ => None,
        }
    }

    /// Immediate subterms, left to right.
    pub fn children(&self) -> Vec<&Ordinal> {
        match self {
            Ordinal::Zero => vec![],
            Ordinal::Theta(a) => vec![a],
            Ordinal::Sum(parts) => parts.iter().map(Part::inner).collect(),
            Ordinal::Cnf(ms) => ms.iter().flat_map(|m| [&m.exp, &m.coeff]).collect(),
        }
    }
}

impl Part {
    /// The summand 1 of `sys`.
    pub fn unit(sys: System) -> Part {
        match sys {
            System::Full => Part::OmegaPow(Ordinal::Zero),
            System::Restricted => Part::Theta(Ordinal::Zero),
        }
    }

    pub fn inner(&self) -> &Ordinal {
        match self {
            Part::Theta(a) | Part::OmegaPow(a) => a,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.inner().is_zero()
    }

    /// Whether the summand denotes an epsilon number.
    pub fn is_epsilon(&self) -> bool {
        match self {
            Part::Theta(a) => !a.is_countable(),
            // ω^δ = δ exactly for epsilon δ
            Part::OmegaPow(d) => d.is_epsilon(),
        }
    }
}

impl Monomial {
    pub fn new(exp: Ordinal, coeff: Ordinal) -> Self {
        Monomial { exp, coeff }
    }
}

fn write_atom(f: &mut fmt::Formatter<'_>, t: &Ordinal) -> fmt::Result {
    match t {
        Ordinal::Sum(_) | Ordinal::Cnf(_) => write!(f, "({t})"),
        _ => write!(f, "{t}"),
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Part::Theta(a) => write!(f, "v({a})"),
            Part::OmegaPow(d) => {
                f.write_str("w^")?;
                write_atom(f, d)
            }
        }
    }
}

/// Canonical, un-sugared form of the term grammar.
impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ordinal::Zero => f.write_str("0"),
            Ordinal::Theta(a) => write!(f, "v({a})"),
            Ordinal::Sum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Ordinal::Cnf(ms) => {
                for (i, m) in ms.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    f.write_str("O^")?;
                    write_atom(f, &m.exp)?;
                    f.write_str("*")?;
                    write_atom(f, &m.coeff)?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicates() {
        assert!(Ordinal::theta(Ordinal::big_omega()).is_countable());
        assert!(!Ordinal::Zero.is_additively_closed());
        assert!(Ordinal::big_omega().is_additively_closed());
        let omega_two = Ordinal::Cnf(vec![Monomial::new(
            Ordinal::one(),
            Ordinal::natural(2, System::Full),
        )]);
        assert!(!omega_two.is_additively_closed());
        assert!(Ordinal::theta(Ordinal::big_omega()).is_epsilon());
        assert!(!Ordinal::omega().is_epsilon());
    }

    #[test]
    fn epsilon_shape() {
        let eps = Ordinal::theta(Ordinal::big_omega());
        assert!(eps.has_epsilon_shape());
        let eps_plus_two = Ordinal::Sum(vec![
            Part::OmegaPow(eps.clone()),
            Part::unit(System::Full),
            Part::unit(System::Full),
        ]);
        assert!(eps_plus_two.has_epsilon_shape());
        let eps_plus_omega = Ordinal::Sum(vec![
            Part::OmegaPow(eps.clone()),
            Part::OmegaPow(Ordinal::one()),
        ]);
        assert!(!eps_plus_omega.has_epsilon_shape());
        assert!(!Ordinal::one().has_epsilon_shape());
    }

    #[test]
    fn display_is_unsugared() {
        assert_eq!(Ordinal::big_omega().to_string(), "O^v(0)*v(0)");
        assert_eq!(Ordinal::natural(2, System::Full).to_string(), "w^0 + w^0");
        assert_eq!(
            Ordinal::natural(2, System::Restricted).to_string(),
            "v(0) + v(0)"
        );
        let t = Ordinal::Sum(vec![
            Part::OmegaPow(Ordinal::natural(2, System::Full)),
            Part::unit(System::Full),
        ]);
        assert_eq!(t.to_string(), "w^(w^0 + w^0) + w^0");
    }
}
