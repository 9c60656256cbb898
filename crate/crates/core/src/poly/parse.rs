//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr   := ('+' | '-')? term (('+' | '-') term)*
//! term   := factor (('*' | '/')? factor)*
//! factor := atom ('^' integer)?
//! atom   := number | variable | '(' expr ')'
//! ```
//! A divisor must be a nonzero constant. Numbers are integers or finite
//! decimals; `3/2` parses as a division of constants.

use num_traits::Zero;

use super::mpoly::{variable_names, MPoly};
use super::rational::{parse_rational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str, offset: usize) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let pos = offset + i;
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
            }
            b'+' | b'-' | b'*' | b'/' | b'^' | b'(' | b')' => {
                out.push((
                    pos,
                    match b {
                        b'+' => Token::Plus,
                        b'-' => Token::Minus,
                        b'*' => Token::Star,
                        b'/' => Token::Slash,
                        b'^' => Token::Caret,
                        b'(' => Token::LParen,
                        _ => Token::RParen,
                    },
                ));
                i += 1;
            }
            b'0'..=b'9' | b'.' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                let lexeme = &text[start..i];
                let value = parse_rational(lexeme).ok_or_else(|| Error::Syntax {
                    position: pos,
                    message: format!("malformed number `{lexeme}`"),
                })?;
                out.push((pos, Token::Number(value)));
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &text[start..i];
                // `xyz` is read as the implicit product `x*y*z`.
                if word.bytes().all(|c| matches!(c, b'x' | b'y' | b'z')) {
                    for (k, c) in word.chars().enumerate() {
                        out.push((offset + start + k, Token::Ident(c.to_string())));
                    }
                } else {
                    out.push((pos, Token::Ident(word.to_string())));
                }
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(Error::Syntax {
                    position: pos,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    index: usize,
    end: usize,
    nvars: usize,
    names: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.index).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.index).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.position(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.index += 1;
                -self.term()?
            }
            Some(Token::Plus) => {
                self.index += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.index += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.index += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.index += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Token::Slash) => {
                    self.index += 1;
                    let at = self.position();
                    let divisor = self.factor()?;
                    let c = divisor.constant_term();
                    if divisor.num_terms() > 1 || (divisor.num_terms() == 1 && c.is_zero()) {
                        return Err(Error::Syntax {
                            position: at,
                            message: "divisor must be a constant".into(),
                        });
                    }
                    if c.is_zero() {
                        return Err(Error::Syntax {
                            position: at,
                            message: "division by zero".into(),
                        });
                    }
                    acc = acc.scale(&c.recip());
                }
                Some(Token::Number(_)) | Some(Token::Ident(_)) | Some(Token::LParen) => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.index += 1;
            match self.peek().cloned() {
                Some(Token::Number(n)) if n.is_integer() && n >= Rational::zero() => {
                    self.index += 1;
                    let e: u32 = n.to_integer().try_into().map_err(|_| Error::Syntax {
                        position: self.position(),
                        message: "exponent too large".into(),
                    })?;
                    return Ok(base.pow(e));
                }
                _ => return self.error("expected a non-negative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MPoly> {
        match self.peek().cloned() {
            Some(Token::Number(n)) => {
                self.index += 1;
                Ok(MPoly::constant(self.nvars, n))
            }
            Some(Token::Ident(name)) => {
                match self.names.iter().position(|v| *v == name) {
                    Some(i) => {
                        self.index += 1;
                        Ok(MPoly::var(self.nvars, i))
                    }
                    None => Err(Error::NonRational(name)),
                }
            }
            Some(Token::LParen) => {
                self.index += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return self.error("expected `)`");
                }
                self.index += 1;
                Ok(inner)
            }
            Some(_) => self.error("expected a number, variable or `(`"),
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses a polynomial in `(x, y, z)` when `nvars == 3` or `(y, z)` when `nvars == 2`.
pub fn parse_poly(text: &str, nvars: usize) -> Result<MPoly> {
    parse_poly_at(text, nvars, 0)
}

/// As [`parse_poly`], reporting error positions relative to `offset`.
pub fn parse_poly_at(text: &str, nvars: usize, offset: usize) -> Result<MPoly> {
    if nvars != 2 && nvars != 3 {
        return Err(Error::Usage(format!("unsupported variable count {nvars}")));
    }
    let tokens = tokenize(text, offset)?;
    let mut parser = Parser {
        tokens,
        index: 0,
        end: offset + text.len(),
        nvars,
        names: variable_names(nvars),
    };
    if parser.peek().is_none() {
        return parser.error("empty polynomial");
    }
    let p = parser.expr()?;
    if parser.peek().is_some() {
        return parser.error("unexpected trailing input");
    }
    Ok(p)
}
