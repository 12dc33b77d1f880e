//! Recursive-descent parser for the expression grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := atom ['^' int]
//! atom   := 'J' int | name '(' args ')' | 'pw' | 'q' | 'z8' | 'i' | int | '(' expr ')'
//! ```
//!
//! Function atoms: `j g jprod galt poch` take `(c, a, m)`, `pochf` takes
//! `(c, a, m, n)`, `phi psi eta eta0 andrews` take one integer, `N0 N` take
//! `(a, M, ℓ, r)`, `R0 R0t R1` take one constant, and the operators `sub(e, k)`,
//! `dis(e, ℓ, r)`, `shift(e, d)`, `neg(e)` take an expression first.
//! Constant arguments are arbitrary literal expressions such as `-1`, `z8^3`
//! or `1/2 - i`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::ast::{Atom, Expr};
use crate::error::{Error, Result};
use crate::num::CycRat;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    text: String,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let ch = chars[i];
        let (start_line, start_col) = (line, col);
        if ch == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if ch.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let begin = i;
        let tok = if ch.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[begin..i].iter().collect();
            Tok::Int(text.parse().expect("digits parse"))
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[begin..i].iter().collect())
        } else if "+-*/^(),".contains(ch) {
            i += 1;
            Tok::Sym(ch)
        } else {
            return Err(Error::Parse {
                line,
                col,
                token: ch.to_string(),
                message: "unexpected character".into(),
            });
        };
        col += i - begin;
        out.push(Token {
            text: chars[begin..i].iter().collect(),
            tok,
            line: start_line,
            col: start_col,
        });
    }
    out.push(Token {
        tok: Tok::End,
        text: "<end of input>".into(),
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(tok: &Token, message: impl Into<String>) -> Error {
        Error::Parse {
            line: tok.line,
            col: tok.col,
            token: tok.text.clone(),
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Self::error_at(self.peek(), format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.factor()
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            let k = if self.eat('(') {
                let k = self.signed_int()?;
                self.expect(')')?;
                k
            } else {
                self.signed_int()?
            };
            Ok(Expr::Pow(Box::new(base), k))
        } else {
            Ok(base)
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let tok = self.next();
        match &tok.tok {
            Tok::Int(n) => {
                let v = n
                    .to_i64()
                    .ok_or_else(|| Self::error_at(&tok, "integer out of range"))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(Self::error_at(&tok, "expected an integer")),
        }
    }

    fn constant(&mut self) -> Result<CycRat> {
        let start = self.peek().clone();
        let e = self.expr()?;
        e.as_constant()
            .ok_or_else(|| Self::error_at(&start, "expected a constant (literals, z8, i)"))
    }

    fn comma(&mut self) -> Result<()> {
        self.expect(',')
    }

    fn int_args<const N: usize>(&mut self) -> Result<[i64; N]> {
        let mut out = [0i64; N];
        for (k, slot) in out.iter_mut().enumerate() {
            if k > 0 {
                self.comma()?;
            }
            *slot = self.signed_int()?;
        }
        Ok(out)
    }

    fn cam(&mut self) -> Result<(CycRat, i64, i64)> {
        let c = self.constant()?;
        self.comma()?;
        let [a, m] = self.int_args::<2>()?;
        Ok((c, a, m))
    }

    fn positive(tok: &Token, v: i64, what: &str) -> Result<()> {
        if v < 1 {
            Err(Self::error_at(tok, format!("{what} must be >= 1, got {v}")))
        } else {
            Ok(())
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let tok = self.next();
        match &tok.tok {
            Tok::Int(n) => Ok(Expr::Int(n.clone())),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => self.named(&tok, name),
            _ => Err(Self::error_at(&tok, "expected an atom")),
        }
    }

    fn named(&mut self, tok: &Token, name: &str) -> Result<Expr> {
        match name {
            "q" => return Ok(Expr::Q),
            "z8" => return Ok(Expr::Z8),
            "i" => return Ok(Expr::I),
            "pw" => return Ok(Expr::Atom(Atom::POmega)),
            "J" => {
                let m = self.signed_int()?;
                Self::positive(tok, m, "J index")?;
                return Ok(Expr::J(m));
            }
            _ => {}
        }
        if let Some(digits) = name.strip_prefix('J') {
            if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                let m: i64 = digits
                    .parse()
                    .map_err(|_| Self::error_at(tok, "J index out of range"))?;
                Self::positive(tok, m, "J index")?;
                return Ok(Expr::J(m));
            }
        }
        if self.peek().tok != Tok::Sym('(') {
            return Err(Self::error_at(tok, format!("unknown identifier `{name}`")));
        }
        self.next();
        let e = match name {
            "j" | "jprod" | "g" | "galt" | "poch" => {
                let (c, a, m) = self.cam()?;
                Self::positive(tok, m, "base exponent")?;
                Expr::Atom(match name {
                    "j" => Atom::Jac { c, a, m },
                    "jprod" => Atom::JacProd { c, a, m },
                    "g" => Atom::G { c, a, m },
                    "galt" => Atom::GAlt { c, a, m },
                    _ => Atom::Poch { c, a, m },
                })
            }
            "pochf" => {
                let (c, a, m) = self.cam()?;
                self.comma()?;
                let n = self.signed_int()?;
                Self::positive(tok, m, "base exponent")?;
                if n < 0 {
                    return Err(Self::error_at(tok, "pochf length must be >= 0"));
                }
                Expr::Atom(Atom::PochFin { c, a, m, n })
            }
            "phi" | "psi" => {
                let [k] = self.int_args::<1>()?;
                Self::positive(tok, k, "argument")?;
                Expr::Atom(if name == "phi" {
                    Atom::Phi(k)
                } else {
                    Atom::Psi(k)
                })
            }
            "eta" | "eta0" | "andrews" => {
                let [k] = self.int_args::<1>()?;
                if k < 0 {
                    return Err(Self::error_at(tok, "moment order must be >= 0"));
                }
                let k = k as u32;
                Expr::Atom(match name {
                    "eta" => Atom::Eta(k),
                    "eta0" => Atom::Eta0(k),
                    _ => Atom::Andrews(k),
                })
            }
            "N0" | "N" => {
                let [a, modulus, ell, r] = self.int_args::<4>()?;
                Self::positive(tok, modulus, "modulus")?;
                Self::positive(tok, ell, "progression step")?;
                if !(0..ell).contains(&r) {
                    return Err(Self::error_at(tok, "residue must satisfy 0 <= r < step"));
                }
                Expr::Atom(if name == "N0" {
                    Atom::OddClass { a, modulus, ell, r }
                } else {
                    Atom::RankClass { a, modulus, ell, r }
                })
            }
            "R0" | "R0t" | "R1" => {
                let c = self.constant()?;
                Expr::Atom(match name {
                    "R0" => Atom::R0(c),
                    "R0t" => Atom::R0Table(c),
                    _ => Atom::R1Table(c),
                })
            }
            "sub" | "shift" => {
                let e = self.expr()?;
                self.comma()?;
                let k = self.signed_int()?;
                if name == "sub" {
                    Self::positive(tok, k, "substitution power")?;
                    Expr::Subst(Box::new(e), k)
                } else {
                    Expr::Shift(Box::new(e), k)
                }
            }
            "dis" => {
                let e = self.expr()?;
                self.comma()?;
                let [ell, r] = self.int_args::<2>()?;
                Self::positive(tok, ell, "dissection modulus")?;
                if !(0..ell).contains(&r) {
                    return Err(Self::error_at(tok, "residue must satisfy 0 <= r < modulus"));
                }
                Expr::Dissect(Box::new(e), ell, r)
            }
            "neg" => Expr::NegQ(Box::new(self.expr()?)),
            _ => return Err(Self::error_at(tok, format!("unknown function `{name}`"))),
        };
        self.expect(')')?;
        Ok(e)
    }
}

/// Parses an expression; errors carry the line, column and offending token.
pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    let tail = p.peek();
    if tail.tok != Tok::End {
        return Err(Parser::error_at(tail, "unexpected trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_quotients_and_atoms() {
        let e = parse("J2^4 / (J1^2 * J4)").unwrap();
        assert_eq!(e.to_string(), "J2^4/(J1^2*J4)");
        let g = parse("-q*g(-1, 2, 4)").unwrap();
        assert!(matches!(g, Expr::Mul(..)));
        let c = parse("g(1/2 - z8^3, 0, 8)").unwrap();
        match c {
            Expr::Atom(Atom::G { c, a: 0, m: 8 }) => {
                assert_eq!(c, CycRat::from_frac(1, 2) - CycRat::zeta8_pow(3))
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(parse("J 3").unwrap(), Expr::J(3));
        assert_eq!(parse("q^(-2)").unwrap(), Expr::Pow(Box::new(Expr::Q), -2));
    }

    #[test]
    fn errors_carry_location() {
        match parse("J2 +\n  foo(3)") {
            Err(Error::Parse {
                line, col, token, ..
            }) => {
                assert_eq!((line, col, token.as_str()), (2, 3, "foo"));
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse("J2 * ) ") {
            Err(Error::Parse {
                line: 1,
                col: 6,
                token,
                ..
            }) => assert_eq!(token, ")"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("g(q, 1, 2)"), Err(Error::Parse { .. })));
        assert!(matches!(parse("dis(J1, 2, 2)"), Err(Error::Parse { .. })));
        assert!(matches!(parse("J1 J2"), Err(Error::Parse { .. })));
    }

    #[test]
    fn display_round_trips() {
        for src in [
            "-q*g(-1, 2, 4) + J2^8*J8^2/(J1^4*J4^5)",
            "1/2*q^(-1)*J4^6*J8/(J2^4*J16^2) - (J1 - 2)^3",
            "dis(sub(N0(1, 8, 1, 0), 2), 4, 1) + shift(neg(pw), -3)",
            "R0(z8^3) - R0t(-i) + R1(i)*eta(4) - andrews(2)*eta0(2)",
            "pochf(-1, 0, 1, 3)*poch(z8, 1, 2) + jprod(1, 1, 3) - galt(i, 0, 8)",
        ] {
            let e = parse(src).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e, "{src}");
        }
    }
}
