//! Natural (Hessenberg) sum and product, ω- and Ω-exponentiation.
//!
//! Every result is checked against the target system and reported as
//! [`OrdinalError::NotRepresentable`] when it falls outside it.

use std::cmp::Ordering;

use super::compare::{compare, compare_parts};
use super::validate::validate;
use super::{Monomial, Ordinal, OrdinalError, Part, System};

fn checked(t: Ordinal, sys: System) -> Result<Ordinal, OrdinalError> {
    match validate(&t, sys) {
        Ok(()) => Ok(t),
        Err(_) => Err(OrdinalError::NotRepresentable {
            system: sys,
            term: t.to_string(),
        }),
    }
}

/// The exponent δ with ω^δ equal to the summand `p`.
///
/// For ϑb this is ϑb itself when b is uncountable (an epsilon number),
/// b + 1 when b has the shape ε + n, and b otherwise.
pub fn exponent_of_principal(p: &Part, sys: System) -> Ordinal {
    match p {
        Part::OmegaPow(d) => d.clone(),
        Part::Theta(b) => log_theta(b, sys),
    }
}

fn log_theta(b: &Ordinal, sys: System) -> Ordinal {
    if !b.is_countable() {
        Ordinal::theta(b.clone())
    } else if b.has_epsilon_shape() {
        let mut parts = to_parts(b, sys);
        parts.push(Part::unit(sys));
        Ordinal::Sum(parts)
    } else {
        b.clone()
    }
}

/// The term ω^d for countable `d`, always a ϑ-term.
fn omega_pow_principal(d: &Ordinal, sys: System) -> Ordinal {
    if d.is_epsilon() {
        return d.clone();
    }
    if d.has_epsilon_shape() {
        // d = ε + n with n ≥ 1, and ω^(ε+n) = ϑ(ε + (n-1)).
        let Ordinal::Sum(parts) = d else {
            unreachable!("epsilon-shaped non-epsilon is a sum")
        };
        return Ordinal::theta(from_sorted_parts(parts[..parts.len() - 1].to_vec(), sys));
    }
    Ordinal::theta(d.clone())
}

/// Rewrites a summand into the summand sort of `sys`.
fn to_sys_part(p: Part, sys: System) -> Part {
    match (sys, p) {
        (System::Full, Part::Theta(b)) => Part::OmegaPow(log_theta(&b, sys)),
        (System::Restricted, Part::OmegaPow(d)) => match omega_pow_principal(&d, sys) {
            Ordinal::Theta(b) => Part::Theta(*b),
            _ => unreachable!("ω-powers are ϑ-terms"),
        },
        (_, p) => p,
    }
}

/// The summands of a countable term, highest first, in the sort of `sys`.
fn to_parts(t: &Ordinal, sys: System) -> Vec<Part> {
    match t {
        Ordinal::Zero => vec![],
        Ordinal::Theta(b) => vec![to_sys_part(Part::Theta((**b).clone()), sys)],
        Ordinal::Sum(parts) => parts.iter().cloned().map(|p| to_sys_part(p, sys)).collect(),
        Ordinal::Cnf(_) => unreachable!("summands of an uncountable term"),
    }
}

/// Builds the countable term with the given non-increasing summands.
fn from_sorted_parts(mut parts: Vec<Part>, sys: System) -> Ordinal {
    match parts.len() {
        0 => Ordinal::Zero,
        1 => match parts.pop().expect("one part") {
            Part::Theta(b) => Ordinal::theta(b),
            Part::OmegaPow(d) => omega_pow_principal(&d, sys),
        },
        _ => Ordinal::Sum(parts.into_iter().map(|p| to_sys_part(p, sys)).collect()),
    }
}

fn from_parts(mut parts: Vec<Part>, sys: System) -> Ordinal {
    parts.sort_by(|p, q| compare_parts(q, p));
    from_sorted_parts(parts, sys)
}

/// The base-Ω monomials of a term; a countable term c is Ω⁰·c.
fn to_monomials(t: &Ordinal) -> Vec<Monomial> {
    match t {
        Ordinal::Zero => vec![],
        Ordinal::Cnf(ms) => ms.clone(),
        c => vec![Monomial::new(Ordinal::Zero, c.clone())],
    }
}

fn from_monomials(mut ms: Vec<Monomial>) -> Ordinal {
    match ms.len() {
        0 => Ordinal::Zero,
        1 if ms[0].exp.is_zero() => ms.pop().expect("one monomial").coeff,
        _ => Ordinal::Cnf(ms),
    }
}

fn raw_sum(a: &Ordinal, b: &Ordinal, sys: System) -> Result<Ordinal, OrdinalError> {
    if a.is_countable() && b.is_countable() {
        let mut parts = to_parts(a, sys);
        parts.extend(to_parts(b, sys));
        return Ok(from_parts(parts, sys));
    }
    let (xs, ys) = (to_monomials(a), to_monomials(b));
    let mut out = Vec::with_capacity(xs.len() + ys.len());
    let (mut i, mut j) = (0, 0);
    while i < xs.len() || j < ys.len() {
        let ord = match (xs.get(i), ys.get(j)) {
            (Some(x), Some(y)) => compare(&x.exp, &y.exp),
            (Some(_), None) => Ordering::Greater,
            _ => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                out.push(xs[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(ys[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let coeff = raw_sum(&xs[i].coeff, &ys[j].coeff, sys)?;
                out.push(Monomial::new(xs[i].exp.clone(), coeff));
                i += 1;
                j += 1;
            }
        }
    }
    Ok(from_monomials(out))
}

/// a ⊕ b.
pub fn natural_sum(a: &Ordinal, b: &Ordinal, sys: System) -> Result<Ordinal, OrdinalError> {
    checked(raw_sum(a, b, sys)?, sys)
}

fn raw_product(a: &Ordinal, b: &Ordinal, sys: System) -> Result<Ordinal, OrdinalError> {
    if a.is_zero() || b.is_zero() {
        return Ok(Ordinal::Zero);
    }
    if a.is_countable() && b.is_countable() {
        let (ps, qs) = (to_parts(a, sys), to_parts(b, sys));
        let mut parts = Vec::with_capacity(ps.len() * qs.len());
        for p in &ps {
            let lp = exponent_of_principal(p, sys);
            for q in &qs {
                let exp = raw_sum(&lp, &exponent_of_principal(q, sys), sys)?;
                parts.push(Part::OmegaPow(exp));
            }
        }
        return Ok(from_parts(parts, sys));
    }
    let mut acc = Ordinal::Zero;
    for x in to_monomials(a) {
        for y in to_monomials(b) {
            let exp = raw_sum(&x.exp, &y.exp, sys)?;
            let coeff = raw_product(&x.coeff, &y.coeff, sys)?;
            let term = from_monomials(vec![Monomial::new(exp, coeff)]);
            acc = raw_sum(&acc, &term, sys)?;
        }
    }
    Ok(acc)
}

/// a ⊗ b.
pub fn natural_product(a: &Ordinal, b: &Ordinal, sys: System) -> Result<Ordinal, OrdinalError> {
    checked(raw_product(a, b, sys)?, sys)
}

/// 1 + e, which is e for infinite e and n + 1 for finite e = n.
fn pred_if_finite(e: &Ordinal, sys: System) -> Ordinal {
    match e.as_natural() {
        Some(n) => Ordinal::natural(n - 1, sys),
        None => e.clone(),
    }
}

/// ω^a.
///
/// For uncountable a = Σ Ω^eᵢ·cᵢ + c₀ this uses ω^(Ω^e·c) = Ω^(Ω^e'·c) with
/// 1 + e' = e, so ω^a = Ω^(Σ Ω^eᵢ'·cᵢ) · ω^c₀.
pub fn omega_power(a: &Ordinal, sys: System) -> Result<Ordinal, OrdinalError> {
    if a.is_countable() {
        return checked(omega_pow_principal(a, sys), sys);
    }
    let mut inner = Vec::new();
    let mut tail = Ordinal::Zero;
    for m in to_monomials(a) {
        if m.exp.is_zero() {
            tail = m.coeff;
        } else {
            inner.push(Monomial::new(pred_if_finite(&m.exp, sys), m.coeff));
        }
    }
    let exp = from_monomials(inner);
    let coeff = omega_pow_principal(&tail, sys);
    checked(Ordinal::Cnf(vec![Monomial::new(exp, coeff)]), sys)
}

/// Ω_n[a]: Ω_0[a] = a and Ω_{n+1}[a] = Ω^(Ω_n[a]).
pub fn omega_tower(n: u32, a: &Ordinal, sys: System) -> Result<Ordinal, OrdinalError> {
    let mut t = a.clone();
    for _ in 0..n {
        t = if t.is_zero() {
            Ordinal::one()
        } else {
            Ordinal::Cnf(vec![Monomial::new(t, Ordinal::one())])
        };
    }
    checked(t, sys)
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: System = System::Full;

    #[test]
    fn omega_plus_two() {
        let omega = Ordinal::omega();
        let two = Ordinal::natural(2, F);
        let got = natural_sum(&omega, &two, F).unwrap();
        assert_eq!(
            got,
            Ordinal::Sum(vec![
                Part::OmegaPow(Ordinal::one()),
                Part::unit(F),
                Part::unit(F)
            ])
        );
        assert_eq!(natural_sum(&two, &omega, F).unwrap(), got);
    }

    #[test]
    fn big_omega_times_two() {
        let two = Ordinal::natural(2, F);
        let got = natural_product(&Ordinal::big_omega(), &two, F).unwrap();
        assert_eq!(got, Ordinal::Cnf(vec![Monomial::new(Ordinal::one(), two)]));
    }

    #[test]
    fn restricted_sum_uses_theta_parts() {
        let r = System::Restricted;
        let got = natural_sum(&Ordinal::omega(), &Ordinal::one(), r).unwrap();
        assert_eq!(
            got,
            Ordinal::Sum(vec![
                Part::Theta(Ordinal::one()),
                Part::Theta(Ordinal::Zero)
            ])
        );
    }

    #[test]
    fn exponents_of_principals() {
        assert_eq!(
            exponent_of_principal(&Part::Theta(Ordinal::Zero), F),
            Ordinal::Zero
        );
        assert_eq!(
            exponent_of_principal(&Part::Theta(Ordinal::one()), F),
            Ordinal::one()
        );
        let big = Ordinal::big_omega();
        assert_eq!(
            exponent_of_principal(&Part::Theta(big.clone()), F),
            Ordinal::theta(big)
        );
    }

    #[test]
    fn omega_times_omega() {
        let omega = Ordinal::omega();
        let got = natural_product(&omega, &omega, F).unwrap();
        assert_eq!(got, Ordinal::theta(Ordinal::natural(2, F)));
    }

    #[test]
    fn towers() {
        let one = Ordinal::one();
        assert_eq!(omega_tower(0, &one, F).unwrap(), one);
        assert_eq!(omega_tower(1, &one, F).unwrap(), Ordinal::big_omega());
        assert_eq!(
            omega_tower(2, &one, F).unwrap(),
            Ordinal::Cnf(vec![Monomial::new(Ordinal::big_omega(), one.clone())])
        );
        assert!(matches!(
            omega_tower(2, &one, System::Restricted),
            Err(OrdinalError::NotRepresentable { .. })
        ));
    }

    #[test]
    fn omega_to_the_big_omega() {
        // ω^Ω = Ω, ω^(Ω+1) = Ω·ω, ω^(Ω·2) = Ω².
        let big = Ordinal::big_omega();
        assert_eq!(omega_power(&big, F).unwrap(), big);
        let big_plus_one = natural_sum(&big, &Ordinal::one(), F).unwrap();
        assert_eq!(
            omega_power(&big_plus_one, F).unwrap(),
            Ordinal::Cnf(vec![Monomial::new(Ordinal::one(), Ordinal::omega())])
        );
        let big_two = natural_sum(&big, &big, F).unwrap();
        assert_eq!(
            omega_power(&big_two, F).unwrap(),
            Ordinal::Cnf(vec![Monomial::new(Ordinal::natural(2, F), Ordinal::one())])
        );
    }
}
