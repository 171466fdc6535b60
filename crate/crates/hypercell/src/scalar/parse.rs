//! Parser for exact scalar literals such as `1/3`, `(11+4*sqrt5)/41`,
//! or `3-2*sqrt2`. Grammar: integers, `sqrt2`/`sqrt5`/`sqrt10`, `+`, `-`,
//! `*`, `/`, parentheses. The unicode variants `−` and `·` are accepted.

use num_bigint::BigInt;

use super::field::{FieldElem, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Sqrt2,
    Sqrt5,
    Sqrt10,
    Plus,
    Minus,
    Star,
    Slash,
    Open,
    Close,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' | '\u{2212}' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' | '\u{00b7}' | '\u{22c5}' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '/' => {
                tokens.push(Token::Slash);
                i += 1;
            }
            '(' => {
                tokens.push(Token::Open);
                i += 1;
            }
            ')' => {
                tokens.push(Token::Close);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let value = digits
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad integer {digits:?}")))?;
                tokens.push(Token::Int(value));
            }
            's' => {
                let rest: String = chars[i..].iter().collect();
                if rest.starts_with("sqrt10") {
                    tokens.push(Token::Sqrt10);
                    i += 6;
                } else if rest.starts_with("sqrt2") {
                    tokens.push(Token::Sqrt2);
                    i += 5;
                } else if rest.starts_with("sqrt5") {
                    tokens.push(Token::Sqrt5);
                    i += 5;
                } else {
                    return Err(Error::Parse(format!("unexpected input at {rest:?}")));
                }
            }
            _ => return Err(Error::Parse(format!("unexpected character {c:?}"))),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<FieldElem> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FieldElem> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Some(Token::Slash) => {
                    self.bump();
                    acc = acc.div(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<FieldElem> {
        match self.bump() {
            Some(Token::Minus) => Ok(self.factor()?.neg()),
            Some(Token::Int(n)) => Ok(FieldElem::from_rational(Rational::from_integer(n))),
            Some(Token::Sqrt2) => Ok(FieldElem::sqrt2()),
            Some(Token::Sqrt5) => Ok(FieldElem::sqrt5()),
            Some(Token::Sqrt10) => Ok(FieldElem::sqrt10()),
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err(Error::Parse("missing closing parenthesis".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses an exact literal into a field element.
pub fn parse_field_elem(input: &str) -> Result<FieldElem> {
    let mut parser = Parser { tokens: tokenize(input)?, pos: 0 };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!("trailing input in {input:?}")));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::super::field::rat;
    use super::*;

    #[test]
    fn parses_fractions_and_surds() {
        assert_eq!(parse_field_elem("1/3").unwrap(), FieldElem::from_ratio(1, 3));
        assert_eq!(
            parse_field_elem("(11+4*sqrt5)/41").unwrap(),
            FieldElem::from_int(11)
                .add(&FieldElem::sqrt5().scale(&rat(4, 1)))
                .scale(&rat(1, 41))
        );
        assert_eq!(
            parse_field_elem("3-2*sqrt2").unwrap(),
            FieldElem::from_int(3).sub(&FieldElem::sqrt2().scale(&rat(2, 1)))
        );
        assert_eq!(
            parse_field_elem("-sqrt10/2").unwrap(),
            FieldElem::sqrt10().scale(&rat(-1, 2))
        );
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_field_elem("sqrt3").is_err());
        assert!(parse_field_elem("1+").is_err());
        assert!(parse_field_elem("(1").is_err());
        assert!(parse_field_elem("1/0").is_err());
    }
}
