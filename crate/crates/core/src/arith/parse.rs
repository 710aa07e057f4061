//! Polynomial text grammar:
//!
//! ```text
//! expr   := ["+"|"-"] term (("+"|"-") term)*
//! term   := factor ("*" factor)*
//! factor := "-" factor | atom ("^" integer)?
//! atom   := integer | identifier | "(" expr ")"
//! ```
//! Whitespace is insignificant; integer literals may be arbitrarily large and are
//! reduced modulo the characteristic.

use std::sync::Arc;

use super::poly::{Poly, PolyRing};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].to_string()), start));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn here(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            Tok::Minus => {
                self.bump();
                self.term()?.neg()
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.try_add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = acc.try_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let at = self.here();
            match self.bump() {
                Tok::Int(s) => {
                    let e: u64 = s.parse().map_err(|_| Error::Syntax {
                        pos: at,
                        msg: format!("exponent `{s}` too large"),
                    })?;
                    base.pow(e)
                }
                _ => Err(Error::Syntax {
                    pos: at,
                    msg: "expected a non-negative integer exponent".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        let at = self.here();
        match self.bump() {
            Tok::Int(s) => {
                let p = self.ring.characteristic() as u64;
                let v = s.bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                Ok(self.ring.constant(v as i64))
            }
            Tok::Ident(name) => match self.ring.var_index(&name) {
                Some(i) => Ok(self.ring.var(i)),
                None => Err(Error::UnknownVariable { name, pos: at }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.syntax("expected `)`");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => Err(Error::Syntax {
                pos: at,
                msg: "unexpected end of input".into(),
            }),
            t => Err(Error::Syntax {
                pos: at,
                msg: format!("unexpected token {t:?}"),
            }),
        }
    }
}

/// Parses `text` into a normalized polynomial of `ring`.
pub fn parse_poly(text: &str, ring: &Arc<PolyRing>) -> Result<Poly> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, ring };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return p.syntax("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Arc<PolyRing> {
        PolyRing::new(7, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn fermat_cubic() {
        let r = f7();
        let f = parse_poly("x^3+y^3+z^3", &r).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.terms().iter().all(|t| t.1 == 1));
        assert_eq!(f.degree(), Some(3));
    }

    #[test]
    fn coefficients_reduce() {
        let r = f7();
        assert_eq!(parse_poly("7*x+y", &r).unwrap(), parse_poly("y", &r).unwrap());
        assert_eq!(parse_poly("123456789012345678901234567892*x", &r).unwrap().terms()[0].1,
                   (123456789012345678901234567892u128 % 7) as u32);
    }

    #[test]
    fn freshmans_dream_in_parser() {
        let r = f7();
        let lhs = parse_poly("(3*x-y)^7", &r).unwrap();
        assert_eq!(lhs, parse_poly("3*x^7 - y^7", &r).unwrap());
        assert_eq!(lhs.to_string(), "3*x^7 - y^7");
    }

    #[test]
    fn unary_and_whitespace() {
        let r = f7();
        let a = parse_poly(" - x ^ 2 + -(y) * 2 ", &r).unwrap();
        assert_eq!(a, parse_poly("6*x^2+5*y", &r).unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        let r = f7();
        assert_eq!(
            parse_poly("x + w", &r),
            Err(Error::UnknownVariable { name: "w".into(), pos: 4 })
        );
        match parse_poly("x + * y", &r) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_poly("(x+y", &r), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_poly("x^y", &r), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("x $ y", &r), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("x y", &r), Err(Error::Syntax { pos: 2, .. })));
    }
}
