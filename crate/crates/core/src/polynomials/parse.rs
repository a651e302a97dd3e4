//! Recursive-descent parser for the polynomial text format.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | power
//! power  := atom ('^' INT)?
//! atom   := INT | IDENT | '(' expr ')'
//! ```
//!
//! `rho` and `lambda` are reserved identifiers; every other identifier must
//! be one of the declared variables. Division is only by nonzero scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::MultiPoly;
use crate::error::{Error, Result};
use crate::scalars::{Eis, LambdaPoly};

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

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().expect("in bounds");
                return Err(Error::Syntax {
                    offset: start,
                    message: format!("unexpected character {ch:?}"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax { offset: self.offset(), message: message.into() }
    }

    fn unexpected(&self) -> Error {
        match self.toks.get(self.pos) {
            None => self.error("unexpected end of input"),
            Some((_, t)) => self.error(format!("unexpected {}", describe(t))),
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    let d = self.factor()?;
                    let c = d.constant_coefficient();
                    if !d.is_constant() || !c.is_constant() {
                        return Err(Error::Syntax {
                            offset: at,
                            message: "division by a non-constant expression".into(),
                        });
                    }
                    let inv = c.coeff(0).inv().map_err(|_| Error::Syntax {
                        offset: at,
                        message: "division by zero".into(),
                    })?;
                    acc = acc.scale_eis(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-&self.factor()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                let e = n.to_u32().filter(|e| *e <= 4096).ok_or_else(|| self.error("exponent too large"))?;
                self.pos += 1;
                Ok(base.pow(e))
            }
            _ => Err(self.error("expected a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let (off, tok) = match self.toks.get(self.pos) {
            Some(t) => t.clone(),
            None => return Err(self.unexpected()),
        };
        match tok {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(MultiPoly::from_eis(self.vars, Eis::rational(BigRational::from_integer(n))))
            }
            Tok::Ident(name) => {
                self.pos += 1;
                match name.as_str() {
                    "rho" => Ok(MultiPoly::from_eis(self.vars, Eis::rho())),
                    "lambda" => Ok(MultiPoly::lambda(self.vars)),
                    _ => match self.vars.iter().position(|v| *v == name) {
                        Some(i) => Ok(MultiPoly::var(self.vars, i)),
                        None => Err(Error::UnknownVariable { name, offset: off }),
                    },
                }
            }
            Tok::LParen => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.unexpected()),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number {n}"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
    }
}

/// Parses `text` as a polynomial in `variables`.
pub fn parse_poly(text: &str, variables: &[impl AsRef<str>]) -> Result<MultiPoly> {
    let vars: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
    for v in &vars {
        if v == "rho" || v == "lambda" {
            return Err(Error::InvalidArgument(format!("`{v}` is reserved")));
        }
    }
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len(), vars: &vars };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(out)
}

/// Parses a univariate lambda-polynomial such as `lambda^2 - 1`.
pub fn parse_lambda_poly(text: &str) -> Result<LambdaPoly> {
    let p = parse_poly(text, &[] as &[&str])?;
    Ok(p.constant_coefficient())
}

/// Parses `a:b:c` into three scalars.
pub fn parse_point(text: &str) -> Result<Vec<Eis>> {
    let parts: Vec<&str> = text.split(':').collect();
    let mut out = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for part in parts {
        let v = Eis::parse(part).map_err(|e| match e {
            Error::Syntax { offset: o, message } => Error::Syntax { offset: offset + o, message },
            other => other,
        })?;
        out.push(v);
        offset += part.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    const X: [&str; 3] = ["x0", "x1", "x2"];

    #[test]
    fn fermat_cubic() {
        let p = parse_poly("x0^3 + x1^3 + x2^3", &X).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert!(p.is_homogeneous());
        assert_eq!(p.render(), "x0^3 + x1^3 + x2^3");
    }

    #[test]
    fn quadratic_coordinate() {
        let p = parse_poly("3*x0^2 - 3*lambda*x1*x2", &X).unwrap();
        assert_eq!(p.coefficient(&[2, 0, 0]), LambdaPoly::from_ints(&[3]));
        assert_eq!(p.coefficient(&[0, 1, 1]), LambdaPoly::from_ints(&[0, -3]));
        assert_eq!(p.render(), "3*x0^2 - 3*lambda*x1*x2");
    }

    #[test]
    fn double_plus_is_rejected_at_offset_5() {
        match parse_poly("x0 + + x1", &X) {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_variable() {
        assert_eq!(
            parse_poly("x0 + y", &X),
            Err(Error::UnknownVariable { name: "y".into(), offset: 5 })
        );
    }

    #[test]
    fn rational_and_rho_constants() {
        let p = parse_poly("(1/2 + rho)*x0 - 2/3", &X).unwrap();
        assert_eq!(p.coefficient(&[1, 0, 0]).coeff(0), Eis::new(BigRational::new(1.into(), 2.into()), BigRational::one()));
        let q = parse_poly(&p.render(), &X).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn division_by_zero_is_syntax_error() {
        assert!(matches!(parse_poly("x0/0", &X), Err(Error::Syntax { offset: 3, .. })));
        assert!(matches!(parse_poly("x0/x1", &X), Err(Error::Syntax { .. })));
    }

    #[test]
    fn points() {
        let p = parse_point("1:-rho:0").unwrap();
        assert_eq!(p, vec![Eis::int(1), -Eis::rho(), Eis::zero()]);
        assert!(parse_point("1:x:0").is_err());
    }

    #[test]
    fn scalar_forms_round_trip() {
        for s in ["0", "-3", "1/2", "rho", "-rho", "2 + 3*rho", "-1 - rho", "-1/2*rho", "5/7 - 2/9*rho"] {
            let v = Eis::parse(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
    }
}
