//! Small recursive-descent parser for arithmetic expressions, shared by
//! field-element and polynomial input.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

#[derive(Clone, Debug)]
pub(crate) enum Ast {
    Int(BigInt),
    Ident(String),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let bytes: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '/' => {
                toks.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = bytes[start..i].iter().collect();
                toks.push(Tok::Int(s.parse().expect("digits")));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                toks.push(Tok::Ident(bytes[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.next();
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.next();
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.factor()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Star => {
                    self.next();
                    lhs = Ast::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    self.next();
                    lhs = Ast::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Ast> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            return Ok(Ast::Neg(Box::new(self.factor()?)));
        }
        let mut base = self.primary()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.next();
            match self.next() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n
                        .to_string()
                        .parse()
                        .map_err(|_| Error::Parse("exponent too large".to_string()))?;
                    base = Ast::Pow(Box::new(base), e);
                }
                _ => return Err(Error::Parse("expected integer exponent after ^".to_string())),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Ast> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(Ast::Int(n)),
            Some(Tok::Ident(s)) => Ok(Ast::Ident(s)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Parse("missing closing parenthesis".to_string())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub(crate) fn parse_expr(text: &str) -> Result<Ast> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".to_string()));
    }
    let mut p = Parser { toks, pos: 0 };
    let ast = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in `{text}`")));
    }
    Ok(ast)
}

fn eval_in_field(field: &Field, ast: &Ast) -> Result<Elem> {
    Ok(match ast {
        Ast::Int(n) => field.int_big(n),
        Ast::Ident(name) => field.param(name)?,
        Ast::Neg(a) => eval_in_field(field, a)?.neg(),
        Ast::Add(a, b) => eval_in_field(field, a)?.add(&eval_in_field(field, b)?),
        Ast::Sub(a, b) => eval_in_field(field, a)?.sub(&eval_in_field(field, b)?),
        Ast::Mul(a, b) => eval_in_field(field, a)?.mul(&eval_in_field(field, b)?),
        Ast::Div(a, b) => eval_in_field(field, a)?.checked_div(&eval_in_field(field, b)?)?,
        Ast::Pow(a, e) => eval_in_field(field, a)?.pow(*e as i64)?,
    })
}

/// Parses a field element: `p/q` fractions, `k mod p` residues, or general
/// polynomial-fraction expressions for function fields.
pub(crate) fn parse_field_elem(field: &Field, text: &str) -> Result<Elem> {
    let text = text.trim();
    if let Some((lhs, rhs)) = text.split_once(" mod ") {
        let p: u64 = rhs
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad modulus in `{text}`")))?;
        if p != field.characteristic() {
            return Err(Error::Parse(format!(
                "modulus {p} does not match field {}",
                field.spec()
            )));
        }
        let k: i64 = lhs
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad residue in `{text}`")))?;
        return Ok(field.int(k));
    }
    eval_in_field(field, &parse_expr(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_residues() {
        let q = Field::rationals();
        assert_eq!(q.parse_elem("12/1").unwrap(), q.int(12));
        assert_eq!(q.parse_elem("-3/6").unwrap(), q.ratio(-1, 2));
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.parse_elem("3 mod 7").unwrap(), f7.int(3));
        assert_eq!(f7.parse_elem("10").unwrap(), f7.int(3));
        assert!(f7.parse_elem("3 mod 5").is_err());
    }

    #[test]
    fn parses_function_field_expressions() {
        let f = Field::parse("Q(x,y)").unwrap();
        let e = f.parse_elem("(x^2 - y^2)/(x - y)").unwrap();
        let x = f.param("x").unwrap();
        let y = f.param("y").unwrap();
        assert_eq!(e, x.add(&y));
    }
}
