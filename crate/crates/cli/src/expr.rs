//! Surface syntax for elements and semigroup words.
//!
//! ```text
//! expr    := term ('*' term)*
//! term    := primary ('^-1')*
//! primary := literal | '(' expr ')'
//! literal := '<' iso '|' set '>'
//! iso     := ('+'|'-') 'x' ('+'|'-') digits
//! set     := '{' [int (',' int)*] '}'
//! ```
//!
//! `*` is the semigroup product with the left factor applied first, and
//! `^-1` binds tighter than `*`. Whitespace between tokens is ignored and the
//! Unicode minus sign U+2212 is read as `-`.

use std::fmt;

use idinf::{FinSet, Isometry, PartialIsometry, Sign};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Literal(PartialIsometry),
    Mul(Box<Expr>, Box<Expr>),
    Inv(Box<Expr>),
}

impl Expr {
    pub fn eval(&self) -> idinf::Result<PartialIsometry> {
        match self {
            Expr::Literal(p) => Ok(p.clone()),
            Expr::Mul(a, b) => a.eval()?.mul(&b.eval()?),
            Expr::Inv(a) => a.eval()?.inverse(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        let chars = text.chars().map(|c| if c == '\u{2212}' { '-' } else { c }).collect();
        Parser { chars, pos: 0 }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (mut line, mut column) = (1, 1);
        for &c in &self.chars[..self.pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        ParseError { line, column, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(match self.peek() {
                Some(found) => self.error(format!("expected '{c}', found '{found}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            })
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
        }
    }

    fn sign(&mut self) -> Result<Sign, ParseError> {
        if self.eat('+') {
            Ok(Sign::Pos)
        } else if self.eat('-') {
            Ok(Sign::Neg)
        } else {
            Err(self.error("expected '+' or '-'"))
        }
    }

    fn digits(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| {
            self.pos = start;
            self.error("integer out of range")
        })
    }

    fn signed(&mut self, sign: Sign) -> Result<i64, ParseError> {
        let start = self.pos;
        let magnitude = self.digits()?;
        let value = match sign {
            Sign::Pos => i64::try_from(magnitude).ok(),
            Sign::Neg => 0i64.checked_sub_unsigned(magnitude),
        };
        value.ok_or_else(|| {
            self.pos = start;
            self.error("integer out of range")
        })
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                Sign::Neg
            }
            Some('+') => {
                self.pos += 1;
                Sign::Pos
            }
            _ => Sign::Pos,
        };
        self.signed(sign)
    }

    fn isometry(&mut self) -> Result<Isometry, ParseError> {
        let sign = self.sign()?;
        self.expect('x')?;
        let shift_sign = self.sign()?;
        let shift = self.signed(shift_sign)?;
        Ok(Isometry::new(sign, shift))
    }

    fn set(&mut self) -> Result<FinSet, ParseError> {
        self.expect('{')?;
        let mut items = Vec::new();
        if !self.eat('}') {
            loop {
                items.push(self.integer()?);
                if self.eat('}') {
                    break;
                }
                self.expect(',')?;
            }
        }
        Ok(items.into())
    }

    fn literal(&mut self) -> Result<PartialIsometry, ParseError> {
        self.expect('<')?;
        let gamma = self.isometry()?;
        self.expect('|')?;
        let excl = self.set()?;
        self.expect('>')?;
        Ok(PartialIsometry::new(gamma, excl))
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some('<') => Ok(Expr::Literal(self.literal()?)),
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(c) => Err(self.error(format!("expected '<' or '(', found '{c}'"))),
            None => Err(self.error("expected '<' or '(', found end of input")),
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut t = self.primary()?;
        while self.eat('^') {
            self.expect('-')?;
            self.expect('1')?;
            t = Expr::Inv(Box::new(t));
        }
        Ok(t)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.term()?;
        while self.eat('*') {
            let rhs = self.term()?;
            e = Expr::Mul(Box::new(e), Box::new(rhs));
        }
        Ok(e)
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_element(text: &str) -> Result<PartialIsometry, ParseError> {
    let mut p = Parser::new(text);
    let lit = p.literal()?;
    p.finish()?;
    Ok(lit)
}

/// An isometry on its own, e.g. `-x+2`.
pub fn parse_isometry(text: &str) -> Result<Isometry, ParseError> {
    let mut p = Parser::new(text);
    let g = p.isometry()?;
    p.finish()?;
    Ok(g)
}

/// A set on its own, e.g. `{0,3}`.
pub fn parse_set(text: &str) -> Result<FinSet, ParseError> {
    let mut p = Parser::new(text);
    let s = p.set()?;
    p.finish()?;
    Ok(s)
}
