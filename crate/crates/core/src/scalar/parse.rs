//! Recursive-descent parser for scalar expressions.
//!
//! Grammar: `expr := term (('+'|'-') term)*`,
//! `term := unary (('*'|'/')? unary)*` (juxtaposition multiplies),
//! `unary := '-' unary | power`, `power := atom ('^' ['-'] int | '^' '(' ['-'] int ')')?`,
//! `atom := int | 'a' | 'q' | 'p' | '(' expr ')'`.

use num_bigint::BigInt;
use thiserror::Error;

use super::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseScalarError {
    #[error("unexpected character {0:?} at offset {1}")]
    Unexpected(char, usize),
    #[error("unexpected end of input")]
    Eof,
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent out of range")]
    Exponent,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn unexpected(&mut self) -> ParseScalarError {
        match self.peek() {
            Some(c) => ParseScalarError::Unexpected(c as char, self.pos),
            None => ParseScalarError::Eof,
        }
    }

    fn expr(&mut self) -> Result<Scalar, ParseScalarError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ParseScalarError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.bump();
                    let d = self.unary()?;
                    acc = acc
                        .checked_div(&d)
                        .map_err(|_| ParseScalarError::DivisionByZero)?;
                }
                Some(c) if c.is_ascii_digit() || matches!(c, b'a' | b'q' | b'p' | b'(') => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, ParseScalarError> {
        if self.peek() == Some(b'-') {
            self.bump();
            return Ok(-&self.unary()?);
        }
        if self.peek() == Some(b'+') {
            self.bump();
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar, ParseScalarError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.bump();
        let paren = self.peek() == Some(b'(');
        if paren {
            self.bump();
        }
        let neg = self.peek() == Some(b'-');
        if neg {
            self.bump();
        }
        let e: i32 = self
            .integer()?
            .try_into()
            .map_err(|_| ParseScalarError::Exponent)?;
        if paren {
            if self.peek() != Some(b')') {
                return Err(self.unexpected());
            }
            self.bump();
        }
        base.pow(if neg { -e } else { e })
            .map_err(|_| ParseScalarError::DivisionByZero)
    }

    fn integer(&mut self) -> Result<BigInt, ParseScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected());
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<Scalar, ParseScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.unexpected());
                }
                self.bump();
                Ok(e)
            }
            Some(b'a') => {
                self.bump();
                Ok(Scalar::a())
            }
            Some(b'q') => {
                self.bump();
                Ok(Scalar::q())
            }
            Some(b'p') => {
                self.bump();
                Ok(Scalar::p())
            }
            Some(c) if c.is_ascii_digit() => Ok(Scalar::int(self.integer()?)),
            _ => Err(self.unexpected()),
        }
    }
}

pub(super) fn parse_scalar(s: &str) -> Result<Scalar, ParseScalarError> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.unexpected());
    }
    Ok(v)
}
