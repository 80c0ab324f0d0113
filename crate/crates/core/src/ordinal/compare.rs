//! The order on terms.
//!
//! Base-Ω normal forms are compared lexicographically. Countable terms are
//! compared as non-increasing sums of additive principal parts, and two
//! ϑ-terms are compared with the collapsing criterion
//!
//! ```text
//! ϑa < ϑb  ⇔  (a < b ∧ k(a) < ϑb) ∨ (b < a ∧ ϑa ≤ k(b)).
//! ```
//!
//! A summand `ω^d` is compared with a ϑ-term by writing the latter as a power
//! of ω: ϑb is an epsilon number when b is uncountable, and otherwise
//! ϑb = ω^Λ(b) where Λ(b) = b + 1 if b has the shape ε + n and Λ(b) = b else.

use std::cell::OnceCell;
use std::cmp::Ordering;

use super::{Monomial, Ordinal, OrdinalError, Part};

static ZERO: Ordinal = Ordinal::Zero;

type CmpResult = Result<Ordering, OrdinalError>;

/// How a term is looked at during comparison: as itself, or as the virtual
/// term ϑ(arg) for an argument that is not wrapped in a `Theta` node.
#[derive(Clone, Copy)]
enum View<'a> {
    Term(&'a Ordinal),
    Theta(&'a Ordinal),
}

impl<'a> View<'a> {
    fn of(t: &'a Ordinal) -> View<'a> {
        match t {
            Ordinal::Theta(a) => View::Theta(a),
            other => View::Term(other),
        }
    }
}

/// An additive principal summand.
#[derive(Clone, Copy)]
enum Principal<'a> {
    Theta(&'a Ordinal),
    Pow(&'a Ordinal),
}

impl<'a> Principal<'a> {
    fn of(p: &'a Part) -> Principal<'a> {
        match p {
            Part::Theta(a) => Principal::Theta(a),
            Part::OmegaPow(d) => Principal::Pow(d),
        }
    }
}

/// The summands of a countable view, highest first, optionally followed by
/// one extra unit summand. Built without allocating.
#[derive(Clone, Copy)]
struct Principals<'a> {
    single: Option<Principal<'a>>,
    parts: &'a [Part],
    extra_unit: bool,
}

impl<'a> Principals<'a> {
    fn of(v: View<'a>) -> Principals<'a> {
        let (single, parts) = match v {
            View::Theta(a) => (Some(Principal::Theta(a)), &[][..]),
            View::Term(Ordinal::Theta(a)) => (Some(Principal::Theta(a)), &[][..]),
            View::Term(Ordinal::Zero) => (None, &[][..]),
            View::Term(Ordinal::Sum(parts)) => (None, &parts[..]),
            View::Term(Ordinal::Cnf(_)) => unreachable!("summands of an uncountable term"),
        };
        Principals {
            single,
            parts,
            extra_unit: false,
        }
    }

    fn plus_one(self) -> Principals<'a> {
        Principals {
            extra_unit: true,
            ..self
        }
    }

    fn len(&self) -> usize {
        usize::from(self.single.is_some()) + self.parts.len() + usize::from(self.extra_unit)
    }

    fn get(&self, i: usize) -> Principal<'a> {
        let base = usize::from(self.single.is_some()) + self.parts.len();
        if i >= base {
            Principal::Pow(&ZERO)
        } else if let Some(p) = self.single {
            p
        } else {
            Principal::of(&self.parts[i])
        }
    }
}

fn is_countable(v: View<'_>) -> bool {
    match v {
        View::Theta(_) => true,
        View::Term(t) => t.is_countable(),
    }
}

/// Smallest possible depth bound, reached by two single-node terms.
const MIN_FUEL: usize = 8;

/// The depth bound of one top-level query, computed only when needed.
struct Budget<'a> {
    bound: &'a dyn Fn() -> usize,
    limit: OnceCell<usize>,
}

impl<'a> Budget<'a> {
    fn new(bound: &'a dyn Fn() -> usize) -> Self {
        Budget {
            bound,
            limit: OnceCell::new(),
        }
    }

    fn start(&self) -> Fuel<'_> {
        Fuel {
            depth: 0,
            budget: self,
        }
    }
}

/// Recursion fuel: the depth reached so far against the query's budget.
///
/// Computing term sizes costs about as much as a typical comparison, so the
/// bound is evaluated only once the depth passes [`MIN_FUEL`].
#[derive(Clone, Copy)]
struct Fuel<'a> {
    depth: usize,
    budget: &'a Budget<'a>,
}

impl<'a> Fuel<'a> {
    fn step(self) -> Result<Fuel<'a>, OrdinalError> {
        let depth = self.depth + 1;
        if depth > MIN_FUEL && depth > *self.budget.limit.get_or_init(self.budget.bound) {
            return Err(OrdinalError::FuelExhausted);
        }
        Ok(Fuel { depth, ..self })
    }
}

/// Compares two terms of a common system.
///
/// # Panics
///
/// Panics if the recursion runs out of fuel, which would indicate a bug.
pub fn compare(a: &Ordinal, b: &Ordinal) -> Ordering {
    try_compare(a, b).expect("ordinal comparison ran out of fuel")
}

/// Compares two terms, reporting fuel exhaustion instead of panicking.
pub fn try_compare(a: &Ordinal, b: &Ordinal) -> CmpResult {
    let bound = || 4 * (a.size() + b.size());
    let budget = Budget::new(&bound);
    cmp_view(View::of(a), View::of(b), budget.start())
}

/// Compares two summands as ordinals; `ω^0` and `ϑ0` are equal.
pub fn compare_parts(p: &Part, q: &Part) -> Ordering {
    let bound = || 4 * (p.inner().size() + q.inner().size() + 2);
    let budget = Budget::new(&bound);
    cmp_principal(Principal::of(p), Principal::of(q), budget.start())
        .expect("ordinal comparison ran out of fuel")
}

/// Maximum coefficient k(t), returned as a subterm of `t`.
pub(super) fn max_coef_ref(t: &Ordinal) -> Result<&Ordinal, OrdinalError> {
    let bound = || 8 * t.size();
    let budget = Budget::new(&bound);
    max_coef(t, budget.start())
}

fn max_coef<'t>(t: &'t Ordinal, fuel: Fuel<'_>) -> Result<&'t Ordinal, OrdinalError> {
    let Ordinal::Cnf(ms) = t else {
        return Ok(t);
    };
    let fuel = fuel.step()?;
    let mut best: &Ordinal = &ZERO;
    for m in ms {
        for cand in [&m.coeff, max_coef(&m.exp, fuel)?] {
            if cmp_view(View::of(cand), View::of(best), fuel)? == Ordering::Greater {
                best = cand;
            }
        }
    }
    Ok(best)
}

fn cmp_view(x: View<'_>, y: View<'_>, fuel: Fuel<'_>) -> CmpResult {
    let fuel = fuel.step()?;
    match (x, y) {
        (View::Term(Ordinal::Cnf(xs)), View::Term(Ordinal::Cnf(ys))) => cmp_cnf(xs, ys, fuel),
        (View::Term(Ordinal::Cnf(_)), _) if is_countable(y) => Ok(Ordering::Greater),
        (_, View::Term(Ordinal::Cnf(_))) if is_countable(x) => Ok(Ordering::Less),
        (View::Theta(a), View::Theta(b)) => cmp_theta(a, b, fuel),
        _ => cmp_lists(Principals::of(x), Principals::of(y), fuel),
    }
}

fn cmp_cnf(xs: &[Monomial], ys: &[Monomial], fuel: Fuel<'_>) -> CmpResult {
    for (m, n) in xs.iter().zip(ys) {
        let c = cmp_view(View::of(&m.exp), View::of(&n.exp), fuel)?;
        if c != Ordering::Equal {
            return Ok(c);
        }
        let c = cmp_view(View::of(&m.coeff), View::of(&n.coeff), fuel)?;
        if c != Ordering::Equal {
            return Ok(c);
        }
    }
    Ok(xs.len().cmp(&ys.len()))
}

fn cmp_lists(xs: Principals<'_>, ys: Principals<'_>, fuel: Fuel<'_>) -> CmpResult {
    let (n, m) = (xs.len(), ys.len());
    for i in 0..n.min(m) {
        let c = cmp_principal(xs.get(i), ys.get(i), fuel)?;
        if c != Ordering::Equal {
            return Ok(c);
        }
    }
    Ok(n.cmp(&m))
}

fn cmp_principal(p: Principal<'_>, q: Principal<'_>, fuel: Fuel<'_>) -> CmpResult {
    let fuel = fuel.step()?;
    match (p, q) {
        (Principal::Theta(a), Principal::Theta(b)) => cmp_theta(a, b, fuel),
        (Principal::Pow(d), Principal::Pow(e)) => cmp_view(View::of(d), View::of(e), fuel),
        (Principal::Theta(a), Principal::Pow(d)) => theta_vs_pow(a, d, fuel),
        (Principal::Pow(d), Principal::Theta(a)) => Ok(theta_vs_pow(a, d, fuel)?.reverse()),
    }
}

/// Compares ϑa with ω^d.
fn theta_vs_pow(a: &Ordinal, d: &Ordinal, fuel: Fuel<'_>) -> CmpResult {
    if !d.is_countable() {
        return Ok(Ordering::Less);
    }
    if !a.is_countable() {
        // ϑa is an epsilon number, so ω^d < ϑa ⇔ d < ϑa and ω^d = ϑa ⇔ d = ϑa.
        return cmp_view(View::Theta(a), View::of(d), fuel);
    }
    if a.has_epsilon_shape() {
        let lhs = Principals::of(View::of(a)).plus_one();
        return cmp_lists(lhs, Principals::of(View::of(d)), fuel);
    }
    cmp_view(View::of(a), View::of(d), fuel)
}

fn cmp_theta(a: &Ordinal, b: &Ordinal, fuel: Fuel<'_>) -> CmpResult {
    let fuel = fuel.step()?;
    match cmp_view(View::of(a), View::of(b), fuel)? {
        Ordering::Equal => Ok(Ordering::Equal),
        Ordering::Less => {
            let ka = max_coef(a, fuel)?;
            if cmp_view(View::of(ka), View::Theta(b), fuel)? == Ordering::Less {
                Ok(Ordering::Less)
            } else {
                Ok(Ordering::Greater)
            }
        }
        Ordering::Greater => {
            let kb = max_coef(b, fuel)?;
            if cmp_view(View::Theta(a), View::of(kb), fuel)? != Ordering::Greater {
                Ok(Ordering::Less)
            } else {
                Ok(Ordering::Greater)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::System;

    fn th(a: Ordinal) -> Ordinal {
        Ordinal::theta(a)
    }

    fn principal_cmp(p: Principal<'_>, q: Principal<'_>) -> Ordering {
        let bound = || 100;
        let budget = Budget::new(&bound);
        cmp_principal(p, q, budget.start()).unwrap()
    }

    #[test]
    fn small_fixtures() {
        let one = Ordinal::one();
        assert_eq!(compare(&Ordinal::Zero, &one), Ordering::Less);
        assert_eq!(compare(&one, &th(one.clone())), Ordering::Less);
        let unit = Part::unit(System::Full);
        assert_eq!(
            compare_parts(&unit, &Part::Theta(Ordinal::Zero)),
            Ordering::Equal
        );
    }

    #[test]
    fn epsilon_successor_below_next_epsilon() {
        let omega_big = Ordinal::big_omega();
        let eps0 = th(omega_big.clone());
        let eps0_plus_one =
            Ordinal::Sum(vec![Part::OmegaPow(eps0.clone()), Part::unit(System::Full)]);
        let omega_plus_one = Ordinal::Cnf(vec![
            Monomial::new(Ordinal::one(), Ordinal::one()),
            Monomial::new(Ordinal::Zero, Ordinal::one()),
        ]);
        let eps1 = th(omega_plus_one);
        assert_eq!(compare(&eps0_plus_one, &eps1), Ordering::Less);
        assert_eq!(compare(&eps0, &eps0_plus_one), Ordering::Less);
    }

    #[test]
    fn theta_of_countable_is_omega_power() {
        // ϑ1 = ω = ω^ϑ0, and ϑ2 = ω^2.
        let one = Ordinal::one();
        let omega = th(one.clone());
        assert_eq!(
            principal_cmp(Principal::Theta(&one), Principal::Pow(&one)),
            Ordering::Equal
        );
        let two = Ordinal::natural(2, System::Full);
        assert_eq!(
            principal_cmp(Principal::Theta(&two), Principal::Pow(&two)),
            Ordering::Equal
        );
        // ϑ(ε0) = ω^(ε0+1)
        let eps0 = th(Ordinal::big_omega());
        let eps0_plus_one =
            Ordinal::Sum(vec![Part::OmegaPow(eps0.clone()), Part::unit(System::Full)]);
        assert_eq!(
            principal_cmp(Principal::Theta(&eps0), Principal::Pow(&eps0_plus_one)),
            Ordering::Equal
        );
        assert_eq!(compare(&omega, &th(one)), Ordering::Equal);
    }

    #[test]
    fn cnf_is_lexicographic() {
        let big = Ordinal::big_omega();
        let big_two = Ordinal::Cnf(vec![Monomial::new(
            Ordinal::one(),
            Ordinal::natural(2, System::Full),
        )]);
        let big_sq = Ordinal::Cnf(vec![Monomial::new(
            Ordinal::natural(2, System::Full),
            Ordinal::one(),
        )]);
        assert_eq!(compare(&big, &big_two), Ordering::Less);
        assert_eq!(compare(&big_two, &big_sq), Ordering::Less);
        assert_eq!(compare(&th(big_sq.clone()), &big), Ordering::Less);
    }

    #[test]
    fn fuel_exhaustion_is_reported() {
        let tower = |mut t: Ordinal| {
            for _ in 0..12 {
                t = th(t);
            }
            t
        };
        let a = tower(Ordinal::Zero);
        let b = tower(Ordinal::big_omega());
        let bound = || 9;
        let budget = Budget::new(&bound);
        assert_eq!(
            cmp_view(View::of(&a), View::of(&b), budget.start()),
            Err(OrdinalError::FuelExhausted)
        );
        assert!(try_compare(&a, &b).is_ok());
    }
}
