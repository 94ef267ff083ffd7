//! Polynomial and rational-expression parser.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary | unary)*      juxtaposition multiplies
//! unary   := ('+' | '-') unary | power
//! power   := primary ('^' '-'? integer)?
//! primary := integer | name | Name '(' (name | '1') ')' | '(' expr ')'
//! ```
//!
//! `G(u)` reads as the variable `G` and `G(1)` as `G1`, which is how catalytic
//! equations refer to a function and its specialization.

use num_bigint::BigInt;
use num_traits::One;

use super::mpoly::MPoly;
use super::rat::Rat;
use crate::error::ParseError;

/// A parsed expression as an unreduced fraction of polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyFrac {
    pub num: MPoly,
    pub den: MPoly,
}

impl PolyFrac {
    fn poly(p: MPoly) -> PolyFrac {
        PolyFrac {
            num: p,
            den: MPoly::one(),
        }
    }

    fn add(self, o: PolyFrac) -> PolyFrac {
        if self.den == o.den {
            return PolyFrac {
                num: &self.num + &o.num,
                den: self.den,
            };
        }
        PolyFrac {
            num: &(&self.num * &o.den) + &(&o.num * &self.den),
            den: &self.den * &o.den,
        }
    }

    fn neg(self) -> PolyFrac {
        PolyFrac {
            num: -self.num,
            den: self.den,
        }
    }

    fn mul(self, o: PolyFrac) -> PolyFrac {
        PolyFrac {
            num: &self.num * &o.num,
            den: &self.den * &o.den,
        }
        .simplify()
    }

    fn recip(self) -> Option<PolyFrac> {
        if self.num.is_zero() {
            None
        } else {
            Some(
                PolyFrac {
                    num: self.den,
                    den: self.num,
                }
                .simplify(),
            )
        }
    }

    /// Folds monomial or constant denominators into the numerator.
    fn simplify(self) -> PolyFrac {
        if let Some(q) = self.num.div_exact(&self.den) {
            return PolyFrac::poly(q);
        }
        self
    }

    /// The value as a polynomial, if the denominator divides out.
    pub fn into_poly(self) -> Option<MPoly> {
        let s = self.simplify();
        if s.den == MPoly::one() {
            Some(s.num)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer {
    toks: Vec<(Tok, usize, bool)>,
}

fn lex(src: &str) -> Result<Lexer, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    let mut spaced = true;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            spaced = true;
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            toks.push((Tok::Int(s.parse().unwrap()), col, spaced));
            spaced = false;
            continue;
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Name(chars[start..i].iter().collect()), col, spaced));
            spaced = false;
            continue;
        } else {
            match c {
                '+' => Tok::Plus,
                '-' | '\u{2212}' => Tok::Minus,
                '*' | '\u{b7}' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => return Err(ParseError::new(1, col, format!("unexpected character '{c}'"))),
            }
        };
        toks.push((tok, col, spaced));
        spaced = false;
        i += 1;
    }
    Ok(Lexer { toks })
}

struct Parser {
    toks: Vec<(Tok, usize, bool)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end_col)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(1, self.col(), msg)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<PolyFrac, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.add(self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PolyFrac, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let col = self.col();
                    let d = self.unary()?;
                    let r = d
                        .recip()
                        .ok_or_else(|| ParseError::new(1, col, "division by zero"))?;
                    acc = acc.mul(r);
                }
                Some(Tok::Int(_)) | Some(Tok::Name(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<PolyFrac, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<PolyFrac, ParseError> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let col = self.col();
        let e: u32 = match self.bump() {
            Some(Tok::Int(n)) => n
                .try_into()
                .map_err(|_| ParseError::new(1, col, "exponent too large"))?,
            _ => return Err(ParseError::new(1, col, "expected an integer exponent")),
        };
        let mut acc = PolyFrac::poly(MPoly::one());
        for _ in 0..e {
            acc = acc.mul(base.clone());
        }
        if negative {
            acc = acc
                .recip()
                .ok_or_else(|| ParseError::new(1, col, "negative power of zero"))?;
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<PolyFrac, ParseError> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(PolyFrac::poly(MPoly::constant(Rat::from_integer(n)))),
            Some(Tok::Name(name)) => {
                if let Some(v) = self.call_suffix(&name) {
                    return Ok(PolyFrac::poly(MPoly::var(&v)));
                }
                Ok(PolyFrac::poly(MPoly::var(&name)))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ParseError::new(1, self.prev_col(), "expected ')'")),
                }
            }
            Some(_) => Err(ParseError::new(1, col, "expected a number, a name or '('")),
            None => Err(ParseError::new(1, col, "unexpected end of input")),
        }
    }

    fn prev_col(&self) -> usize {
        self.toks
            .get(self.pos.saturating_sub(1))
            .map(|t| t.1)
            .unwrap_or(self.end_col)
    }

    /// `Name(u)` -> `Name`, `Name(1)` -> `Name1`, for capitalized names written without a space.
    fn call_suffix(&mut self, name: &str) -> Option<String> {
        if !name.starts_with(|c: char| c.is_uppercase()) {
            return None;
        }
        let glued = self.toks.get(self.pos).is_some_and(|t| !t.2);
        if !glued || self.peek() != Some(&Tok::LParen) || self.peek_at(2) != Some(&Tok::RParen) {
            return None;
        }
        let out = match self.peek_at(1) {
            Some(Tok::Name(_)) => name.to_string(),
            Some(Tok::Int(n)) if n.is_one() => format!("{name}1"),
            _ => return None,
        };
        self.pos += 3;
        Some(out)
    }
}

/// Parses an expression into an unreduced fraction of polynomials.
pub fn parse_frac(src: &str) -> Result<PolyFrac, ParseError> {
    let lexer = lex(src)?;
    let mut p = Parser {
        toks: lexer.toks,
        pos: 0,
        end_col: src.chars().count() + 1,
    };
    if p.peek().is_none() {
        return Err(ParseError::new(1, 1, "empty expression"));
    }
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("unexpected token"));
    }
    Ok(v)
}

/// Parses a (Laurent) polynomial; division is allowed only by divisors that cancel.
pub fn parse_poly(src: &str) -> Result<MPoly, ParseError> {
    let f = parse_frac(src)?;
    if f.num.is_zero() {
        return Ok(MPoly::zero());
    }
    f.into_poly()
        .ok_or_else(|| ParseError::new(1, 1, "expression is not a polynomial"))
}

/// Parses a rational constant written as an expression, such as `-3/4`.
pub fn parse_constant(src: &str) -> Result<Rat, ParseError> {
    let p = parse_poly(src)?;
    p.as_constant()
        .ok_or_else(|| ParseError::new(1, 1, "expected a rational constant"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, ratio};

    #[test]
    fn precedence_and_powers() {
        let p = parse_poly("1 - (3+x)*t + (1+3*x)*t^2").unwrap();
        assert_eq!(p.to_string(), "1 - 3*t - t*x + t^2 + 3*t^2*x");
        assert_eq!(parse_poly("-t^2").unwrap(), -MPoly::var("t").pow(2));
        assert_eq!(parse_poly("2^3").unwrap(), MPoly::int(8));
    }

    #[test]
    fn juxtaposition_and_rationals() {
        assert_eq!(
            parse_poly("t(1-t)^3").unwrap(),
            parse_poly("t*(1-t)*(1-t)*(1-t)").unwrap()
        );
        assert_eq!(parse_constant("-3/4").unwrap(), ratio(-3, 4));
        assert_eq!(parse_poly("(2*t^2 + 2*t)/(1 + t)").unwrap(), parse_poly("2t").unwrap());
    }

    #[test]
    fn laurent_and_calls() {
        assert_eq!(parse_poly("s^-1").unwrap(), MPoly::var_pow("s", -1));
        assert_eq!(parse_poly("1/s").unwrap(), MPoly::var_pow("s", -1));
        let e = parse_poly("G(u) - G(1)").unwrap();
        assert_eq!(e, &MPoly::var("G") - &MPoly::var("G1"));
        let f = parse_frac("1/(1 - x - y)").unwrap();
        assert_eq!(f.num, MPoly::one());
        assert_eq!(f.den.constant_term(), rat(1));
    }

    #[test]
    fn errors_carry_columns() {
        let e = parse_poly("1 + * t").unwrap_err();
        assert_eq!(e.column, 5);
        let e = parse_poly("t ^ x").unwrap_err();
        assert_eq!(e.column, 5);
        let e = parse_poly("(1 + t").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(parse_poly("1/(1-t)").is_err());
        let e = parse_poly("t $ 2").unwrap_err();
        assert_eq!(e.column, 3);
    }
}
