//! Text forms of constructor expressions and their elements.
//!
//! ```text
//! wexpr := prod ('+' prod)*
//! prod  := post ('x' post)*
//! post  := atom '*'*
//! atom  := '_' | 'P{' n ';' [a '<' b (',' a '<' b)*] '}' | 'B(' wexpr ')' | '(' wexpr ')'
//! ```
//!
//! Elements are read against their expression: a hole holds a carrier value
//! (optionally in angle brackets), a constant is `#k`, a sum element is
//! `inl e` or `inr e`, a pair `(a, b)`, a sequence `[a, b, …]`, and a binary
//! tree is either a node `(l, r)` (the comma is optional), `leaf e`, or a
//! bare leaf `e`.

use crate::text::{Cursor, ParseError};

use super::{BinaryTree, FinitePoset, WElement, WExpr};

/// Parses a whole constructor expression.
pub fn parse_wexpr(src: &str) -> Result<WExpr, ParseError> {
    let mut cur = Cursor::new(src);
    let w = sum(&mut cur)?;
    cur.finish()?;
    Ok(w)
}

fn sum(cur: &mut Cursor<'_>) -> Result<WExpr, ParseError> {
    let mut w = prod(cur)?;
    while cur.eat('+') {
        w = WExpr::sum(w, prod(cur)?);
    }
    Ok(w)
}

fn prod(cur: &mut Cursor<'_>) -> Result<WExpr, ParseError> {
    let mut w = post(cur)?;
    while cur.eat('x') || cur.eat('×') {
        w = WExpr::prod(w, post(cur)?);
    }
    Ok(w)
}

fn post(cur: &mut Cursor<'_>) -> Result<WExpr, ParseError> {
    let mut w = atom(cur)?;
    while cur.eat('*') {
        w = WExpr::star(w);
    }
    Ok(w)
}

fn atom(cur: &mut Cursor<'_>) -> Result<WExpr, ParseError> {
    if cur.eat('_') || cur.eat('·') {
        return Ok(WExpr::Hole);
    }
    if cur.eat('(') {
        let w = sum(cur)?;
        cur.expect(')')?;
        return Ok(w);
    }
    if cur.eat('B') {
        cur.expect('(')?;
        let w = sum(cur)?;
        cur.expect(')')?;
        return Ok(WExpr::btree(w));
    }
    if cur.eat('P') {
        return poset(cur).map(WExpr::Const);
    }
    Err(cur.error("expected `_`, `P{…}`, `B(…)` or `(`"))
}

fn poset(cur: &mut Cursor<'_>) -> Result<FinitePoset, ParseError> {
    let start = cur.pos();
    cur.expect('{')?;
    let n = cur.number()? as usize;
    cur.expect(';')?;
    let mut pairs = Vec::new();
    if !cur.eat('}') {
        loop {
            let a = cur.number()? as usize;
            cur.expect('<')?;
            let b = cur.number()? as usize;
            pairs.push((a, b));
            if cur.eat('}') {
                break;
            }
            cur.expect(',')?;
        }
    }
    FinitePoset::from_covers(n, &pairs).map_err(|e| ParseError::new(start, e.to_string()))
}

/// Parses an element shaped by `w`, reading hole values with `carrier`.
pub fn parse_element<X>(
    cur: &mut Cursor<'_>,
    w: &WExpr,
    carrier: &mut dyn FnMut(&mut Cursor<'_>) -> Result<X, ParseError>,
) -> Result<WElement<X>, ParseError> {
    match w {
        WExpr::Hole => {
            if cur.eat('<') {
                let x = carrier(cur)?;
                cur.expect('>')?;
                Ok(WElement::Hole(x))
            } else {
                carrier(cur).map(WElement::Hole)
            }
        }
        WExpr::Const(p) => {
            cur.eat('#');
            let pos = cur.pos();
            let k = cur.number()? as usize;
            if k >= p.size() {
                return Err(ParseError::new(pos, format!("constant #{k} outside {p}")));
            }
            Ok(WElement::Const(k))
        }
        WExpr::Sum(a, b) => {
            if cur.eat_keyword("inl") {
                Ok(WElement::inl(parse_element(cur, a, carrier)?))
            } else if cur.eat_keyword("inr") {
                Ok(WElement::inr(parse_element(cur, b, carrier)?))
            } else {
                Err(cur.error("expected `inl` or `inr`"))
            }
        }
        WExpr::Prod(a, b) => {
            cur.expect('(')?;
            let x = parse_element(cur, a, carrier)?;
            cur.expect(',')?;
            let y = parse_element(cur, b, carrier)?;
            cur.expect(')')?;
            Ok(WElement::pair(x, y))
        }
        WExpr::Star(a) => {
            cur.expect('[')?;
            let mut xs = Vec::new();
            if !cur.eat(']') {
                loop {
                    xs.push(parse_element(cur, a, carrier)?);
                    if cur.eat(']') {
                        break;
                    }
                    cur.expect(',')?;
                }
            }
            Ok(WElement::List(xs))
        }
        WExpr::BTree(a) => tree(cur, a, carrier).map(WElement::tree),
    }
}

fn tree<X>(
    cur: &mut Cursor<'_>,
    leaf: &WExpr,
    carrier: &mut dyn FnMut(&mut Cursor<'_>) -> Result<X, ParseError>,
) -> Result<BinaryTree<WElement<X>>, ParseError> {
    if cur.eat('(') {
        let l = tree(cur, leaf, carrier)?;
        cur.eat(',');
        let r = tree(cur, leaf, carrier)?;
        cur.expect(')')?;
        return Ok(BinaryTree::node(l, r));
    }
    cur.eat_keyword("leaf");
    parse_element(cur, leaf, carrier).map(BinaryTree::Leaf)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(cur: &mut Cursor<'_>) -> Result<u64, ParseError> {
        cur.number()
    }

    fn elem(src: &str, w: &WExpr) -> WElement<u64> {
        let mut cur = Cursor::new(src);
        let e = parse_element(&mut cur, w, &mut num).unwrap();
        cur.finish().unwrap();
        e
    }

    #[test]
    fn expressions_round_trip() {
        for src in [
            "_",
            "B(_)",
            "_*",
            "_**",
            "_x_+P{2;}",
            "(_+_)*",
            "B(_xP{3;0<1,0<2})",
        ] {
            let w = parse_wexpr(src).unwrap();
            assert_eq!(w.to_string(), src);
        }
        assert_eq!(parse_wexpr("(·×·)+P{2;}").unwrap().to_string(), "_x_+P{2;}");
    }

    #[test]
    fn poset_literals_are_checked() {
        assert!(parse_wexpr("P{2;0<1,1<0}").is_err());
        assert!(parse_wexpr("P{2;0<5}").is_err());
    }

    #[test]
    fn elements() {
        let w = parse_wexpr("B(_)").unwrap();
        let e = elem("(1 (2, 3))", &w);
        assert_eq!(e.to_string(), "(1, (2, 3))");
        assert_eq!(elem("leaf <4>", &w).to_string(), "4");
        let w = parse_wexpr("B(_x_)").unwrap();
        let e = elem("(leaf (1, 2), leaf (3, 4))", &w);
        assert_eq!(e.to_string(), "(leaf (1, 2), leaf (3, 4))");
        let w = parse_wexpr("_x_+P{2;}").unwrap();
        assert_eq!(elem("inr #1", &w), WElement::inr(WElement::Const(1)));
        assert_eq!(elem("inl (1, 2)", &w).to_string(), "inl (1, 2)");
        let w = parse_wexpr("_**").unwrap();
        assert_eq!(elem("[[], [1, 2]]", &w).to_string(), "[[], [1, 2]]");
    }
}
