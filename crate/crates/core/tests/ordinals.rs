//! Ordinal terms against an independent Cantor-normal-form oracle below ε₀,
//! plus round-trip and arithmetic properties on random terms.

use std::cmp::Ordering;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thetatree::ordinal::{
    compare, decode, encode, natural_product, natural_sum, parse, universe, validate, EnumBounds,
    Ordinal, Part, System,
};
use thetatree::verify::random_term;

/// An ordinal below ε₀ as its Cantor normal form: the non-increasing list of
/// exponents e₁ ≥ e₂ ≥ … of ω^e₁ + ω^e₂ + ….
#[derive(Debug, Clone, PartialEq, Eq)]
struct Cnf(Vec<Cnf>);

impl Ord for Cnf {
    fn cmp(&self, other: &Self) -> Ordering {
        // Lexicographic on exponents; a proper prefix is smaller.
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for Cnf {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Reads an Ω-free term of the full system. Below ε₀ the collapse of a
/// countable argument is plain exponentiation, ϑb = ω^b.
fn oracle(t: &Ordinal) -> Option<Cnf> {
    match t {
        Ordinal::Zero => Some(Cnf(vec![])),
        Ordinal::Theta(b) => Some(Cnf(vec![oracle(b)?])),
        Ordinal::Sum(parts) => parts
            .iter()
            .map(|p| match p {
                Part::OmegaPow(e) => oracle(e),
                Part::Theta(_) => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Cnf),
        Ordinal::Cnf(_) => None,
    }
}

#[test]
fn comparison_matches_cantor_normal_forms_below_epsilon_zero() {
    let terms: Vec<(Ordinal, Cnf)> = universe(
        System::Full,
        EnumBounds::new(4).monomials(1).countable_only(true),
    )
    .into_iter()
    .filter_map(|t| oracle(&t).map(|c| (t, c)))
    .collect();
    assert!(
        terms.len() > 100,
        "only {} terms below epsilon zero",
        terms.len()
    );
    for (a, ca) in &terms {
        for (b, cb) in &terms {
            assert_eq!(compare(a, b), ca.cmp(cb), "{a} vs {b}");
        }
    }
}

#[test]
fn small_fixtures() {
    let v = |s: &str| parse(s, System::Full).unwrap();
    assert_eq!(compare(&v("v(0)"), &v("v(v(0))")), Ordering::Less);
    assert_eq!(
        compare(&Ordinal::omega(), &Ordinal::big_omega()),
        Ordering::Less
    );
    // Every collapse of an uncountable argument exceeds every ω-power of a
    // smaller countable exponent.
    assert_eq!(compare(&v("v(O)"), &v("v(v(v(0)))")), Ordering::Greater);
    assert_eq!(encode(&Ordinal::Zero), 0u32.into());
}

fn term(seed: u64, g: u32) -> Ordinal {
    random_term(&mut ChaCha8Rng::seed_from_u64(seed), g, false)
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(seed: u64) {
        let t = term(seed, 5);
        prop_assert_eq!(parse(&t.to_string(), System::Full).unwrap(), t);
    }

    #[test]
    fn decode_inverts_encode(seed: u64) {
        let t = term(seed, 5);
        prop_assert_eq!(decode(&encode(&t)).unwrap(), t);
    }

    #[test]
    fn comparison_is_antisymmetric(a: u64, b: u64) {
        let (x, y) = (term(a, 4), term(b, 4));
        prop_assert_eq!(compare(&x, &y), compare(&y, &x).reverse());
        prop_assert_eq!(compare(&x, &y) == Ordering::Equal, x == y);
    }

    #[test]
    fn natural_sum_is_commutative_and_monotone(a: u64, b: u64) {
        let (x, y) = (term(a, 4), term(b, 4));
        if let Ok(s) = natural_sum(&x, &y, System::Full) {
            prop_assert!(validate(&s, System::Full).is_ok());
            prop_assert_eq!(natural_sum(&y, &x, System::Full).unwrap(), s.clone());
            prop_assert_ne!(compare(&x, &s), Ordering::Greater);
            prop_assert_ne!(compare(&y, &s), Ordering::Greater);
        }
    }

    #[test]
    fn natural_product_is_commutative(a: u64, b: u64) {
        let (x, y) = (term(a, 3), term(b, 3));
        if let Ok(p) = natural_product(&x, &y, System::Full) {
            prop_assert!(validate(&p, System::Full).is_ok());
            prop_assert_eq!(natural_product(&y, &x, System::Full).unwrap(), p);
        }
    }
}
