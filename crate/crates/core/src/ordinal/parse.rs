//! Reading terms.
//!
//! ```text
//! term    := summand ('+' summand)*
//! summand := 'w' '^' atom           ω-power, only inside a sum
//!          | 'O' '^' atom '*' atom  Ω-monomial: exponent, coefficient
//!          | atom
//! atom    := '0' | 'v' '(' term ')' | 'O' | digits | '(' term ')'
//! ```
//!
//! `O` alone is Ω, `1` is ϑ0, and a numeral n ≥ 2 is the n-fold sum of the
//! unit summand of the chosen system. The parser builds the term literally;
//! [`parse_valid`] additionally checks the formation rules.

use crate::text::{Cursor, ParseError};

use super::validate::validate;
use super::{Monomial, Ordinal, OrdinalError, Part, System};

/// One `+`-separated piece, after flattening parenthesised sums.
enum Item {
    Part(Part),
    Monomial(Monomial),
}

/// Parses a term without checking the formation rules.
pub fn parse(src: &str, sys: System) -> Result<Ordinal, ParseError> {
    let mut cur = Cursor::new(src);
    let t = term(&mut cur, sys)?;
    cur.finish()?;
    Ok(t)
}

/// Parses a term and checks that it is valid in `sys`.
pub fn parse_valid(src: &str, sys: System) -> Result<Ordinal, OrdinalError> {
    let t = parse(src, sys)?;
    validate(&t, sys)?;
    Ok(t)
}

fn term(cur: &mut Cursor<'_>, sys: System) -> Result<Ordinal, ParseError> {
    let start = cur.pos();
    let mut items = Vec::new();
    summand(cur, sys, &mut items)?;
    while cur.eat('+') {
        summand(cur, sys, &mut items)?;
    }
    assemble(items).map_err(|msg| ParseError::new(start, msg))
}

fn summand(cur: &mut Cursor<'_>, sys: System, items: &mut Vec<Item>) -> Result<(), ParseError> {
    if cur.eat('w') {
        cur.expect('^')?;
        items.push(Item::Part(Part::OmegaPow(atom(cur, sys)?)));
        return Ok(());
    }
    let save = cur.clone();
    if cur.eat('O') {
        if cur.eat('^') {
            let exp = atom(cur, sys)?;
            cur.expect('*')?;
            let coeff = atom(cur, sys)?;
            items.push(Item::Monomial(Monomial::new(exp, coeff)));
            return Ok(());
        }
        *cur = save;
    }
    if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        let save = cur.clone();
        let n = cur.number()?;
        if n >= 2 {
            items.extend((0..n).map(|_| Item::Part(Part::unit(sys))));
            return Ok(());
        }
        *cur = save;
    }
    flatten(atom(cur, sys)?, items);
    Ok(())
}

fn flatten(t: Ordinal, items: &mut Vec<Item>) {
    match t {
        Ordinal::Zero => {}
        Ordinal::Theta(b) => items.push(Item::Part(Part::Theta(*b))),
        Ordinal::Sum(parts) => items.extend(parts.into_iter().map(Item::Part)),
        Ordinal::Cnf(ms) => items.extend(ms.into_iter().map(Item::Monomial)),
    }
}

fn atom(cur: &mut Cursor<'_>, sys: System) -> Result<Ordinal, ParseError> {
    match cur.peek() {
        Some('(') => {
            cur.bump();
            let t = term(cur, sys)?;
            cur.expect(')')?;
            Ok(t)
        }
        Some('v') => {
            cur.bump();
            cur.expect('(')?;
            let t = term(cur, sys)?;
            cur.expect(')')?;
            Ok(Ordinal::theta(t))
        }
        Some('O') => {
            cur.bump();
            Ok(Ordinal::big_omega())
        }
        Some(c) if c.is_ascii_digit() => Ok(Ordinal::natural(cur.number()?, sys)),
        Some(c) => Err(cur.error(format!("unexpected `{c}`"))),
        None => Err(cur.error("unexpected end of input")),
    }
}

/// Builds a term from its summands: Ω-monomials first, then a countable tail.
fn assemble(items: Vec<Item>) -> Result<Ordinal, String> {
    let mut monomials = Vec::new();
    let mut parts = Vec::new();
    for item in items {
        match item {
            Item::Monomial(m) => {
                if !parts.is_empty() {
                    return Err("countable summands must follow the Ω-monomials".into());
                }
                monomials.push(m);
            }
            Item::Part(p) => parts.push(p),
        }
    }
    let tail = match parts.len() {
        0 => Ordinal::Zero,
        1 => match parts.pop().expect("one part") {
            Part::Theta(b) => Ordinal::theta(b),
            Part::OmegaPow(_) => return Err("an ω-power `w^…` may only appear in a sum".into()),
        },
        _ => Ordinal::Sum(parts),
    };
    if monomials.is_empty() {
        return Ok(tail);
    }
    if !tail.is_zero() {
        monomials.push(Monomial::new(Ordinal::Zero, tail));
    }
    Ok(Ordinal::Cnf(monomials))
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: System = System::Full;

    #[test]
    fn sugar() {
        assert_eq!(parse("0", F).unwrap(), Ordinal::Zero);
        assert_eq!(parse("1", F).unwrap(), Ordinal::one());
        assert_eq!(parse("O", F).unwrap(), Ordinal::big_omega());
        assert_eq!(parse("3", F).unwrap(), Ordinal::natural(3, F));
        assert_eq!(
            parse("3", System::Restricted).unwrap(),
            Ordinal::natural(3, System::Restricted)
        );
        assert_eq!(parse("v(v(0))", F).unwrap(), Ordinal::omega());
    }

    #[test]
    fn sums_and_monomials() {
        let t = parse("w^v(0) + 2", F).unwrap();
        assert_eq!(
            t,
            Ordinal::Sum(vec![
                Part::OmegaPow(Ordinal::one()),
                Part::unit(F),
                Part::unit(F)
            ])
        );
        let t = parse("O^1*2 + v(O)", F).unwrap();
        assert_eq!(
            t,
            Ordinal::Cnf(vec![
                Monomial::new(Ordinal::one(), Ordinal::natural(2, F)),
                Monomial::new(Ordinal::Zero, Ordinal::theta(Ordinal::big_omega())),
            ])
        );
    }

    #[test]
    fn bare_omega_power_is_rejected() {
        let err = parse("w^v(0)", F).unwrap_err();
        assert!(err.msg.contains("only appear in a sum"), "{err}");
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse("v(0", F).unwrap_err();
        assert_eq!(err.pos, 3);
        assert!(parse("v(0) )", F).is_err());
        assert!(parse("1 + O^1*1", F).is_err());
    }

    #[test]
    fn printed_form_parses_back() {
        for src in [
            "O^(O^v(0)*v(0))*(w^v(0) + w^0) + O^0*v(O^v(0)*v(0))",
            "w^(w^0 + w^0) + w^0",
        ] {
            let t = parse(src, F).unwrap();
            assert_eq!(t.to_string(), src);
        }
    }
}
