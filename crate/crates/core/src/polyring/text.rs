//! Polynomial text format.
//!
//! ```text
//! poly    := ['+' | '-'] term (('+' | '-') term)*
//! term    := factor ('*' factor)*        a number may also directly precede a variable
//! factor  := integer ['/' integer] | ident ['^' integer]
//! ```
//!
//! Whitespace is insignificant and exponents are nonnegative decimal integers.
//! Printing lists terms in descending monomial order with signs fused into
//! the coefficients and unit coefficients suppressed.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{ExponentVector, MonomialOrdering, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at column {column}")]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(n) => write!(f, "{n}"),
            Token::Ident(s) => write!(f, "{s}"),
            Token::Plus => f.write_str("+"),
            Token::Minus => f.write_str("-"),
            Token::Star => f.write_str("*"),
            Token::Slash => f.write_str("/"),
            Token::Caret => f.write_str("^"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((col, Token::Int(digits.parse().expect("decimal digits"))));
                continue;
            }
            a if a.is_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((col, Token::Ident(chars[start..i].iter().collect())));
                continue;
            }
            other => {
                return Err(ParseError { column: col, message: format!("unexpected character {other:?}") })
            }
        };
        out.push((col, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, S> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end_column: usize,
    vars: &'a [S],
}

impl<S: AsRef<str>> Parser<'_, S> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_column, |(c, _)| *c)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { column: self.column(), message: message.into() })
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn polynomial(&mut self) -> Result<Polynomial, ParseError> {
        let nvars = self.vars.len();
        let mut poly = Polynomial::zero(nvars);
        if self.peek().is_none() {
            return self.error("empty polynomial");
        }
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    true
                }
                Some(t) if !first => return self.error(format!("expected '+' or '-', found '{t}'")),
                _ => false,
            };
            first = false;
            let (exp, mut coeff) = self.term()?;
            if negative {
                coeff = -coeff;
            }
            poly.add_term(exp, coeff);
            if self.peek().is_none() {
                return Ok(poly);
            }
        }
    }

    fn term(&mut self) -> Result<(ExponentVector, Rational), ParseError> {
        let mut exps = vec![0u32; self.vars.len()];
        let mut coeff = Rational::one();
        let mut last_was_number = self.factor(&mut exps, &mut coeff)?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    last_was_number = self.factor(&mut exps, &mut coeff)?;
                }
                Some(Token::Ident(_)) if last_was_number => {
                    last_was_number = self.factor(&mut exps, &mut coeff)?;
                }
                _ => return Ok((ExponentVector::new(exps), coeff)),
            }
        }
    }

    /// Parses one factor into the running term; returns whether it was numeric.
    fn factor(&mut self, exps: &mut [u32], coeff: &mut Rational) -> Result<bool, ParseError> {
        match self.next() {
            Some(Token::Int(num)) => {
                let mut value = Rational::from_integer(num);
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Int(den)) if !den.is_zero() => {
                            value /= Rational::from_integer(den);
                        }
                        Some(Token::Int(_)) => {
                            self.pos -= 1;
                            return self.error("zero denominator");
                        }
                        _ => {
                            self.pos -= 1;
                            return self.error("expected integer denominator");
                        }
                    }
                }
                *coeff *= value;
                Ok(true)
            }
            Some(Token::Ident(name)) => {
                let Some(var) = self.vars.iter().position(|v| v.as_ref() == name) else {
                    self.pos -= 1;
                    return self.error(format!("unknown variable {name:?}"));
                };
                let mut power = 1u32;
                if self.peek() == Some(&Token::Caret) {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Int(n)) => match u32::try_from(&n) {
                            Ok(k) => power = k,
                            Err(_) => {
                                self.pos -= 1;
                                return self.error("exponent too large");
                            }
                        },
                        _ => {
                            self.pos -= 1;
                            return self.error("expected nonnegative integer exponent");
                        }
                    }
                }
                exps[var] += power;
                Ok(false)
            }
            Some(t) => {
                self.pos -= 1;
                self.error(format!("expected number or variable, found '{t}'"))
            }
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses `text` as a polynomial over the named variables.
pub fn parse_polynomial<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<Polynomial, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0, end_column: text.chars().count() + 1, vars };
    parser.polynomial()
}

/// Parses an integer or `p/q` rational, with optional leading sign.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let tokens = tokenize(text)?;
    let end = text.chars().count() + 1;
    let col = |i: usize| tokens.get(i).map_or(end, |(c, _)| *c);
    let mut i = 0;
    let negative = match tokens.first().map(|(_, t)| t) {
        Some(Token::Minus) => {
            i += 1;
            true
        }
        Some(Token::Plus) => {
            i += 1;
            false
        }
        _ => false,
    };
    let bad = |i: usize| ParseError { column: col(i), message: "expected rational number".into() };
    let Some((_, Token::Int(num))) = tokens.get(i) else {
        return Err(bad(i));
    };
    let mut value = Rational::from_integer(num.clone());
    i += 1;
    if let Some((_, Token::Slash)) = tokens.get(i) {
        i += 1;
        match tokens.get(i) {
            Some((_, Token::Int(den))) if !den.is_zero() => value /= Rational::from_integer(den.clone()),
            _ => return Err(bad(i)),
        }
        i += 1;
    }
    if i != tokens.len() {
        return Err(bad(i));
    }
    Ok(if negative { -value } else { value })
}

fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl Polynomial {
    /// Canonical text: terms descending under `ord`.
    pub fn to_text<S: AsRef<str>>(&self, ord: &MonomialOrdering, vars: &[S]) -> String {
        let mut terms: Vec<_> = self.terms().collect();
        if terms.is_empty() {
            return "0".to_string();
        }
        terms.sort_by(|a, b| ord.compare(b.0, a.0));
        let mut out = String::new();
        for (i, (exp, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (i == 0, negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            let magnitude = c.abs();
            if exp.is_constant() {
                out.push_str(&format_rational(&magnitude));
            } else if magnitude.is_one() {
                out.push_str(&exp.to_text(vars));
            } else {
                out.push_str(&format_rational(&magnitude));
                out.push('*');
                out.push_str(&exp.to_text(vars));
            }
        }
        out
    }
}
