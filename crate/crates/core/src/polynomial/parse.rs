//! Recursive-descent parser for the polynomial text format.
//!
//! ```text
//! expr   := term (('+'|'-') term)* ;
//! term   := factor ('*' factor)* ;
//! factor := coeff | var ('^' nat)? | '(' expr ')' ('^' nat)? | '-' factor ;
//! coeff  := nat ('/' nat)? ;
//! ```
//!
//! Whitespace is ignored. Implicit multiplication is rejected.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: expected {expected}, found {found}")]
    Syntax {
        position: usize,
        expected: String,
        found: String,
    },
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Nat(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Nat(n) => alloc::format!("number `{}`", n),
            Tok::Ident(s) => alloc::format!("identifier `{}`", s),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            chars.next();
            out.push((pos, tok));
        } else if c.is_ascii_digit() {
            let mut n = BigInt::zero();
            while let Some(&(_, d)) = chars.peek() {
                match d.to_digit(10) {
                    Some(v) => {
                        n = n * 10u32 + v;
                        chars.next();
                    }
                    None => break,
                }
            }
            out.push((pos, Tok::Nat(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    s.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            out.push((pos, Tok::Ident(s)));
        } else {
            return Err(ParseError::Syntax {
                position: pos,
                expected: "a number, variable, operator or parenthesis".into(),
                found: alloc::format!("`{}`", c),
            });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a, S> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    vars: &'a [S],
}

impl<S: AsRef<str>> Parser<'_, S> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn position(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError::Syntax {
            position: self.position(),
            expected: expected.to_string(),
            found: self.peek().describe(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        if *self.peek() != Tok::Caret {
            return Ok(1);
        }
        self.bump();
        match self.peek().clone() {
            Tok::Nat(n) => {
                let e = n
                    .to_u32()
                    .ok_or_else(|| self.error("an exponent below 2^32"))?;
                self.bump();
                Ok(e)
            }
            _ => Err(self.error("a natural-number exponent")),
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.vars.len();
        let start = self.position();
        match self.peek().clone() {
            Tok::Nat(num) => {
                self.bump();
                let mut value = Rational::from_integer(num);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.peek().clone() {
                        Tok::Nat(den) if !den.is_zero() => {
                            self.bump();
                            value /= Rational::from_integer(den);
                        }
                        Tok::Nat(_) => return Err(self.error("a nonzero denominator")),
                        _ => return Err(self.error("a denominator")),
                    }
                }
                Ok(Polynomial::constant(n, value))
            }
            Tok::Ident(name) => {
                self.bump();
                let index = self.vars.iter().position(|v| v.as_ref() == name).ok_or(
                    ParseError::UnknownVariable {
                        name,
                        position: start,
                    },
                )?;
                let e = self.exponent()?;
                Ok(Polynomial::variable(n, index).pow(e))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                self.bump();
                let e = self.exponent()?;
                Ok(inner.pow(e))
            }
            Tok::Minus => {
                self.bump();
                Ok(-self.factor()?)
            }
            _ => Err(self.error("a number, variable, `(` or `-`")),
        }
    }
}

/// Parses `text` as a polynomial in `variables` (in declaration order).
pub fn parse_polynomial<S: AsRef<str>>(
    text: &str,
    variables: &[S],
) -> Result<Polynomial, ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        vars: variables,
    };
    let poly = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(parser.error("an operator or end of input"));
    }
    Ok(poly)
}

/// Parses a rational constant such as `3`, `-1/3` or `(2/4)`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let p = parse_polynomial::<&str>(text, &[])?;
    Ok(p.constant_term())
}

/// Identifiers of `text` in order of first appearance. Lexing errors are
/// ignored here; [`parse_polynomial`] reports them.
pub fn infer_variables(text: &str) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    let toks = match lex(text) {
        Ok(t) => t,
        Err(_) => return names,
    };
    for (_, t) in toks {
        if let Tok::Ident(s) = t {
            if !names.contains(&s) {
                names.push(s);
            }
        }
    }
    names
}
