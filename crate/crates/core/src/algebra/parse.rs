//! Parser for field literals such as `1/2 + 1/2*r5`, `tau`, `-3*sigma`, `(1+r5)/4`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::FieldScalar;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<FieldScalar> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<FieldScalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc * self.unary()?;
            } else if self.eat('/') {
                let rhs = self.unary()?;
                acc = acc.checked_div(&rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<FieldScalar> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<FieldScalar> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => self.ident(),
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<FieldScalar> {
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_digit() || c == '.'))
            .unwrap_or(rest.len());
        let text = &rest[..len];
        self.pos += len;
        let (int, frac) = match text.split_once('.') {
            Some((i, f)) => (i, f),
            None => (text, ""),
        };
        if (int.is_empty() && frac.is_empty()) || frac.contains('.') {
            return Err(self.err("malformed number"));
        }
        let digits = format!("{int}{frac}");
        let n: BigInt = digits.parse().map_err(|_| self.err("malformed number"))?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        Ok(FieldScalar::from_rational(BigRational::new(n, d)))
    }

    fn ident(&mut self) -> Result<FieldScalar> {
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(rest.len());
        let word = &rest[..len];
        let value = match word {
            "r2" => FieldScalar::sqrt2(),
            "r5" => FieldScalar::sqrt5(),
            "r10" => FieldScalar::sqrt10(),
            "tau" => FieldScalar::tau(),
            "sigma" => FieldScalar::sigma(),
            _ => return Err(self.err(&format!("unknown symbol {word:?}"))),
        };
        self.pos += len;
        Ok(value)
    }
}

pub(crate) fn parse_field(src: &str) -> Result<FieldScalar> {
    let mut p = Parser { src, pos: 0 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}
