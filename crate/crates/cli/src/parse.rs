//! Parser for the trace-polynomial expression grammar:
//!
//! ```text
//! polynomial := ["-"] term { ("+" | "-") term }
//! term       := [coeff] factor { factor }
//! factor     := "Tr" "(" word ")" | var
//! word       := var { var }
//! var        := "x" integer
//! coeff      := integer ["/" positive-integer]
//! ```
//!
//! Juxtaposition is multiplication, `Tr`-factors commute, whitespace is
//! insignificant. Parsed polynomials are canonicalized, so
//! `parse ∘ render = id` on canonical forms.

use std::collections::BTreeSet;
use std::fmt;

use tracepoly_core::freetrace::{canonicalize, FreeTraceError, TracePolynomial};
use tracepoly_core::rat::{rat_int, Rat};

/// A syntax or validation error, with the byte offset it was detected at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Plus,
    Minus,
    Slash,
    LParen,
    RParen,
    Tr,
    Var(usize),
    Int(String),
}

struct Lexer<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, position: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            position,
            message: message.into(),
        }
    }

    fn tokens(mut self) -> Result<Vec<(usize, Token)>, ParseError> {
        let mut out = Vec::new();
        while self.pos < self.text.len() {
            let start = self.pos;
            let c = self.text[self.pos];
            match c {
                b' ' | b'\t' | b'\n' | b'\r' => {
                    self.pos += 1;
                }
                b'+' => {
                    out.push((start, Token::Plus));
                    self.pos += 1;
                }
                b'-' => {
                    out.push((start, Token::Minus));
                    self.pos += 1;
                }
                b'/' => {
                    out.push((start, Token::Slash));
                    self.pos += 1;
                }
                b'(' => {
                    out.push((start, Token::LParen));
                    self.pos += 1;
                }
                b')' => {
                    out.push((start, Token::RParen));
                    self.pos += 1;
                }
                b'T' => {
                    if self.text[self.pos..].starts_with(b"Tr") {
                        out.push((start, Token::Tr));
                        self.pos += 2;
                    } else {
                        return Err(self.error(start, "expected `Tr`"));
                    }
                }
                b'x' => {
                    self.pos += 1;
                    let digits = self.take_digits();
                    if digits.is_empty() {
                        return Err(self.error(start, "`x` must be followed by a variable index"));
                    }
                    let index: usize = digits
                        .parse()
                        .map_err(|_| self.error(start, "variable index out of range"))?;
                    if index == 0 {
                        return Err(self.error(start, "variable indices start at 1"));
                    }
                    out.push((start, Token::Var(index)));
                }
                b'0'..=b'9' => {
                    let digits = self.take_digits();
                    out.push((start, Token::Int(digits)));
                }
                other => {
                    return Err(self.error(
                        start,
                        format!("unexpected character `{}`", char::from(other)),
                    ));
                }
            }
        }
        Ok(out)
    }

    fn take_digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.text[start..self.pos]).into_owned()
    }
}

/// A term before canonicalization: word, trace factors, coefficient.
type RawTerm = (Vec<usize>, Vec<Vec<usize>>, Rat);

struct Parser {
    tokens: Vec<(usize, Token)>,
    index: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.index).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.index).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.index).map(|(_, t)| t.clone());
        self.index += 1;
        t
    }

    fn expect(&mut self, token: Token, what: &str) -> Result<(), ParseError> {
        let position = self.position();
        if self.peek() == Some(&token) {
            self.index += 1;
            Ok(())
        } else {
            Err(ParseError {
                position,
                message: format!("expected {what}"),
            })
        }
    }

    fn parse_coeff(&mut self) -> Result<Option<Rat>, ParseError> {
        let digits = match self.peek() {
            Some(Token::Int(d)) => d.clone(),
            _ => return Ok(None),
        };
        let position = self.position();
        self.index += 1;
        let numer: i64 = digits.parse().map_err(|_| ParseError {
            position,
            message: String::from("coefficient out of range"),
        })?;
        if self.peek() == Some(&Token::Slash) {
            self.index += 1;
            let den_pos = self.position();
            match self.bump() {
                Some(Token::Int(d)) => {
                    let denom: i64 = d.parse().map_err(|_| ParseError {
                        position: den_pos,
                        message: String::from("denominator out of range"),
                    })?;
                    if denom == 0 {
                        return Err(ParseError {
                            position: den_pos,
                            message: String::from("zero denominator"),
                        });
                    }
                    Ok(Some(Rat::new(numer.into(), denom.into())))
                }
                _ => Err(ParseError {
                    position: den_pos,
                    message: String::from("expected denominator after `/`"),
                }),
            }
        } else {
            Ok(Some(rat_int(numer)))
        }
    }

    /// One term: optional coefficient, then at least one factor.
    fn parse_term(&mut self) -> Result<RawTerm, ParseError> {
        let coeff = self.parse_coeff()?.unwrap_or_else(|| rat_int(1));
        let mut word = Vec::new();
        let mut factors = Vec::new();
        let mut any = false;
        loop {
            match self.peek() {
                Some(Token::Var(v)) => {
                    word.push(*v);
                    self.index += 1;
                    any = true;
                }
                Some(Token::Tr) => {
                    let tr_pos = self.position();
                    self.index += 1;
                    self.expect(Token::LParen, "`(` after `Tr`")?;
                    let mut inner = Vec::new();
                    while let Some(Token::Var(v)) = self.peek() {
                        inner.push(*v);
                        self.index += 1;
                    }
                    if inner.is_empty() {
                        return Err(ParseError {
                            position: tr_pos,
                            message: String::from("empty trace"),
                        });
                    }
                    self.expect(Token::RParen, "`)` closing `Tr(`")?;
                    factors.push(inner);
                    any = true;
                }
                _ => break,
            }
        }
        if !any {
            return Err(ParseError {
                position: self.position(),
                message: String::from("expected a variable or `Tr(`"),
            });
        }
        Ok((word, factors, coeff))
    }
}

/// Parses a multilinear trace polynomial; the variable set is the union of
/// the variables appearing, and every term must use exactly that set.
pub fn parse_polynomial(text: &str) -> Result<TracePolynomial, ParseError> {
    let end = text.len();
    let tokens = Lexer::new(text).tokens()?;
    if tokens.is_empty() {
        return Err(ParseError {
            position: 0,
            message: String::from("empty input"),
        });
    }
    let mut parser = Parser {
        tokens,
        index: 0,
        end,
    };

    let mut terms: Vec<(usize, RawTerm)> = Vec::new();
    let mut sign = rat_int(1);
    if parser.peek() == Some(&Token::Minus) {
        parser.index += 1;
        sign = rat_int(-1);
    }
    loop {
        let term_pos = parser.position();
        let (word, factors, coeff) = parser.parse_term()?;
        terms.push((term_pos, (word, factors, &coeff * &sign)));
        match parser.peek() {
            Some(Token::Plus) => {
                sign = rat_int(1);
                parser.index += 1;
            }
            Some(Token::Minus) => {
                sign = rat_int(-1);
                parser.index += 1;
            }
            None => break,
            Some(_) => {
                return Err(ParseError {
                    position: parser.position(),
                    message: String::from("expected `+`, `-` or end of input"),
                });
            }
        }
    }

    let mut vars: BTreeSet<usize> = BTreeSet::new();
    let mut canonical = Vec::with_capacity(terms.len());
    for (pos, (word, factors, coeff)) in terms {
        let monomial = canonicalize(word, factors).map_err(|e| match e {
            FreeTraceError::RepeatedVariable(v) => ParseError {
                position: pos,
                message: format!("not multilinear: x{v} repeats within a term"),
            },
            other => ParseError {
                position: pos,
                message: other.to_string(),
            },
        })?;
        vars.extend(monomial.variables());
        canonical.push((pos, monomial, coeff));
    }
    for (pos, monomial, _) in &canonical {
        if monomial.variables() != vars {
            return Err(ParseError {
                position: *pos,
                message: String::from("not multilinear: terms use different variable sets"),
            });
        }
    }
    TracePolynomial::from_terms(vars, canonical.into_iter().map(|(_, m, c)| (m, c))).map_err(|e| {
        ParseError {
            position: 0,
            message: e.to_string(),
        }
    })
}
