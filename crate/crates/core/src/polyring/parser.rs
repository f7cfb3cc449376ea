//! Text grammar for polynomials.
//!
//! Terms are joined by `+`/`-`, factors within a term by `*`. A factor is
//! an integer or `p/q` rational, or a variable `x[i][j]`, `y[i][j]`,
//! `u[i][j]`, `ubar[i][j]` with an optional `^e` exponent. `a<i>` and
//! `b<i>` are accepted as aliases for `y[1][i]` and `y[2][i]`. Whitespace
//! is insignificant.

use num_bigint::BigInt;
use num_traits::One;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::variable::{VarKind, Variable};
use super::ParseError;
use crate::numutil::Rat;

struct Lexer<'a> {
    input: &'a [u8],
    pos: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LBracket,
    RBracket,
    Number(BigInt),
    Ident(String),
    End,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer {
            input: input.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next_token(&mut self) -> Result<(usize, Token), ParseError> {
        self.skip_ws();
        let at = self.pos;
        if self.pos >= self.input.len() {
            return Ok((at, Token::End));
        }
        let c = self.input[self.pos];
        let simple = match c {
            b'+' => Some(Token::Plus),
            b'-' => Some(Token::Minus),
            b'*' => Some(Token::Star),
            b'^' => Some(Token::Caret),
            b'/' => Some(Token::Slash),
            b'[' => Some(Token::LBracket),
            b']' => Some(Token::RBracket),
            _ => None,
        };
        if let Some(tok) = simple {
            self.pos += 1;
            return Ok((at, tok));
        }
        if c.is_ascii_digit() {
            let start = self.pos;
            while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let text = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
            let value = text
                .parse::<BigInt>()
                .map_err(|_| ParseError::at(at, "invalid integer"))?;
            return Ok((at, Token::Number(value)));
        }
        if c.is_ascii_alphabetic() {
            let start = self.pos;
            while self.pos < self.input.len() && self.input[self.pos].is_ascii_alphabetic() {
                self.pos += 1;
            }
            let text = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
            return Ok((at, Token::Ident(text.to_string())));
        }
        Err(ParseError::at(
            at,
            format!("unexpected character '{}'", c as char),
        ))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    lookahead: (usize, Token),
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Result<Self, ParseError> {
        let mut lexer = Lexer::new(input);
        let lookahead = lexer.next_token()?;
        Ok(Parser { lexer, lookahead })
    }

    fn peek(&self) -> &Token {
        &self.lookahead.1
    }

    fn advance(&mut self) -> Result<(usize, Token), ParseError> {
        let current = std::mem::replace(&mut self.lookahead, (0, Token::End));
        self.lookahead = self.lexer.next_token()?;
        Ok(current)
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), ParseError> {
        let (at, got) = self.advance()?;
        if got == want {
            Ok(())
        } else {
            Err(ParseError::at(at, format!("expected {what}")))
        }
    }

    fn parse_polynomial(&mut self) -> Result<Polynomial, ParseError> {
        let mut negative = false;
        match self.peek() {
            Token::Plus => {
                self.advance()?;
            }
            Token::Minus => {
                self.advance()?;
                negative = true;
            }
            _ => {}
        }
        let mut result = self.parse_term(negative)?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.advance()?;
                    result += self.parse_term(false)?;
                }
                Token::Minus => {
                    self.advance()?;
                    result += self.parse_term(true)?;
                }
                Token::End => return Ok(result),
                _ => {
                    let at = self.lookahead.0;
                    return Err(ParseError::at(at, "expected '+', '-', or end of input"));
                }
            }
        }
    }

    fn parse_term(&mut self, negative: bool) -> Result<Polynomial, ParseError> {
        let mut coeff = if negative { -Rat::one() } else { Rat::one() };
        let mut monomial = Monomial::one();
        loop {
            self.parse_factor(&mut coeff, &mut monomial)?;
            if self.peek() == &Token::Star {
                self.advance()?;
            } else {
                return Ok(Polynomial::term(coeff, monomial));
            }
        }
    }

    fn parse_factor(&mut self, coeff: &mut Rat, monomial: &mut Monomial) -> Result<(), ParseError> {
        let (at, tok) = self.advance()?;
        match tok {
            Token::Number(numer) => {
                if self.peek() == &Token::Slash {
                    self.advance()?;
                    let (dat, dtok) = self.advance()?;
                    let denom = match dtok {
                        Token::Number(d) => d,
                        _ => return Err(ParseError::at(dat, "expected denominator")),
                    };
                    if denom == BigInt::from(0) {
                        return Err(ParseError::at(dat, "zero denominator"));
                    }
                    *coeff *= Rat::new(numer, denom);
                } else {
                    *coeff *= Rat::from_integer(numer);
                }
                Ok(())
            }
            Token::Ident(name) => {
                let var = self.parse_variable(at, &name)?;
                let exp = self.parse_exponent()?;
                *monomial = monomial.mul(&Monomial::from_pairs([(var, exp)]));
                Ok(())
            }
            _ => Err(ParseError::at(at, "expected a number or variable")),
        }
    }

    fn parse_variable(&mut self, at: usize, name: &str) -> Result<Variable, ParseError> {
        match name {
            "x" | "y" | "u" | "ubar" => {
                let kind = match name {
                    "x" => VarKind::X,
                    "y" => VarKind::Y,
                    "u" => VarKind::U,
                    _ => VarKind::UBar,
                };
                let row = self.parse_index()?;
                let col = self.parse_index()?;
                Ok(Variable::new(kind, row, col))
            }
            "a" | "b" => {
                let (cat, ctok) = self.advance()?;
                let col = match ctok {
                    Token::Number(n) => index_value(cat, &n)?,
                    _ => return Err(ParseError::at(cat, "expected column index")),
                };
                let row = if name == "a" { 1 } else { 2 };
                Ok(Variable::y(row, col))
            }
            _ => Err(ParseError::at(at, format!("unknown variable '{name}'"))),
        }
    }

    fn parse_index(&mut self) -> Result<u16, ParseError> {
        self.expect(Token::LBracket, "'['")?;
        let (at, tok) = self.advance()?;
        let value = match tok {
            Token::Number(n) => index_value(at, &n)?,
            _ => return Err(ParseError::at(at, "expected index")),
        };
        self.expect(Token::RBracket, "']'")?;
        Ok(value)
    }

    fn parse_exponent(&mut self) -> Result<u32, ParseError> {
        if self.peek() != &Token::Caret {
            return Ok(1);
        }
        self.advance()?;
        let (at, tok) = self.advance()?;
        match tok {
            Token::Number(n) => {
                u32::try_from(&n).map_err(|_| ParseError::at(at, "exponent out of range"))
            }
            _ => Err(ParseError::at(at, "expected exponent")),
        }
    }
}

fn index_value(at: usize, n: &BigInt) -> Result<u16, ParseError> {
    match u16::try_from(n) {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err(ParseError::at(at, "index must be a positive integer")),
    }
}

/// Parses the polynomial grammar; inverse of `Display` on every value.
pub fn parse_polynomial(input: &str) -> Result<Polynomial, ParseError> {
    let mut parser = Parser::new(input)?;
    parser.parse_polynomial()
}
