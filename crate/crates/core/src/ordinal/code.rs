//! Gödel numbering of terms.
//!
//! The code of a term is at least the code of each of its subterms, so in
//! particular every coefficient ξ ∈ K(t) satisfies code(ξ) ≤ code(t).
//!
//! | term            | code          |
//! |-----------------|---------------|
//! | `0`             | 0             |
//! | `ϑ(a)`          | 4·code(a) + 1 |
//! | sum of parts    | 4·L + 2       |
//! | base-Ω form     | 4·L + 3       |
//!
//! Lists use L([]) = 0 and L(x :: r) = 1 + π(x, L(r)) with the Cantor pairing
//! π; a summand ω^d codes as 2·code(d), a summand ϑb as 2·code(b) + 1, and a
//! monomial Ω^e·c as π(code(e), code(c)).

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::validate::validate;
use super::{Monomial, Ordinal, OrdinalError, Part, System};

fn pair(x: &BigUint, y: &BigUint) -> BigUint {
    let s: BigUint = x + y;
    ((&s * (&s + 1u32)) >> 1) + y
}

fn unpair(z: &BigUint) -> (BigUint, BigUint) {
    let w: BigUint = ((z * 8u32 + 1u32).sqrt() - 1u32) >> 1;
    let t: BigUint = (&w * (&w + 1u32)) >> 1;
    let y = z - t;
    let x = w - &y;
    (x, y)
}

fn encode_list<T>(items: &[T], item: impl Fn(&T) -> BigUint) -> BigUint {
    items
        .iter()
        .rev()
        .fold(BigUint::zero(), |rest, x| pair(&item(x), &rest) + 1u32)
}

fn encode_part(p: &Part) -> BigUint {
    match p {
        Part::OmegaPow(d) => encode(d) * 2u32,
        Part::Theta(b) => encode(b) * 2u32 + 1u32,
    }
}

/// The code of a term.
pub fn encode(t: &Ordinal) -> BigUint {
    match t {
        Ordinal::Zero => BigUint::zero(),
        Ordinal::Theta(a) => encode(a) * 4u32 + 1u32,
        Ordinal::Sum(parts) => encode_list(parts, encode_part) * 4u32 + 2u32,
        Ordinal::Cnf(ms) => {
            encode_list(ms, |m| pair(&encode(&m.exp), &encode(&m.coeff))) * 4u32 + 3u32
        }
    }
}

fn decode_list<T>(
    mut n: BigUint,
    item: impl Fn(&BigUint) -> Result<T, OrdinalError>,
) -> Result<Vec<T>, OrdinalError> {
    let mut out = Vec::new();
    while !n.is_zero() {
        let (x, rest) = unpair(&(n - 1u32));
        out.push(item(&x)?);
        n = rest;
    }
    Ok(out)
}

fn decode_raw(n: &BigUint) -> Result<Ordinal, OrdinalError> {
    if n.is_zero() {
        return Ok(Ordinal::Zero);
    }
    let tag = (n % 4u32).to_u32().expect("residue fits");
    let body: BigUint = n >> 2;
    match tag {
        1 => Ok(Ordinal::theta(decode_raw(&body)?)),
        2 => decode_list(body, |x| {
            let inner = decode_raw(&(x >> 1))?;
            Ok(if (x % 2u32).is_one() {
                Part::Theta(inner)
            } else {
                Part::OmegaPow(inner)
            })
        })
        .map(Ordinal::Sum),
        3 => decode_list(body, |x| {
            let (e, c) = unpair(x);
            Ok(Monomial::new(decode_raw(&e)?, decode_raw(&c)?))
        })
        .map(Ordinal::Cnf),
        _ => Err(OrdinalError::NotACode(n.to_string())),
    }
}

/// The term with code `n`; rejects numbers that code no valid term of
/// either system.
pub fn decode(n: &BigUint) -> Result<Ordinal, OrdinalError> {
    let t = decode_raw(n)?;
    if validate(&t, System::Full).is_ok() || validate(&t, System::Restricted).is_ok() {
        Ok(t)
    } else {
        Err(OrdinalError::NotACode(n.to_string()))
    }
}
