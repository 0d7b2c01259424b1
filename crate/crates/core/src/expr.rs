//! Surface syntax for Lie expressions.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := '0' | ['-'] rational '*' factor | factor
//! factor   := ident | '(' expr ',' expr ')' | '-' factor
//! rational := integer ['/' positive-integer]
//! ```
//!
//! Whitespace is insignificant. Identifiers are runs of ASCII letters, digits
//! and `_` not starting with a digit, and must name alphabet letters. The
//! literal `0` and a leading `-` before a coefficient are accepted so that
//! every printed polynomial parses back.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::bracket;
use crate::poly::{Coeff, LiePolynomial};
use crate::words::{Alphabet, Letter};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieExpr {
    Ident(Letter),
    Bracket(Box<LieExpr>, Box<LieExpr>),
    /// An empty sum is zero.
    Sum(Vec<LieExpr>),
    Scale(Coeff, Box<LieExpr>),
    Neg(Box<LieExpr>),
}

impl LieExpr {
    /// Evaluates the expression, expanding every bracket into the
    /// Lyndon–Shirshov basis bottom-up.
    pub fn lower(&self) -> LiePolynomial {
        match self {
            LieExpr::Ident(l) => LiePolynomial::letter(*l),
            LieExpr::Bracket(a, b) => bracket(&a.lower(), &b.lower()),
            LieExpr::Sum(items) => items
                .iter()
                .fold(LiePolynomial::zero(), |acc, e| acc + &e.lower()),
            LieExpr::Scale(c, e) => e.lower().scale(c),
            LieExpr::Neg(e) => -e.lower(),
        }
    }

    /// [`LieExpr::lower`] with a cap on intermediate polynomial size.
    pub fn lower_bounded(&self, max_terms: usize) -> Result<LiePolynomial> {
        let p = match self {
            LieExpr::Ident(l) => LiePolynomial::letter(*l),
            LieExpr::Bracket(a, b) => {
                let (pa, pb) = (a.lower_bounded(max_terms)?, b.lower_bounded(max_terms)?);
                if pa.len().saturating_mul(pb.len()) > max_terms.saturating_mul(max_terms) {
                    return Err(Error::TooManyTerms(max_terms));
                }
                bracket(&pa, &pb)
            }
            LieExpr::Sum(items) => {
                let mut acc = LiePolynomial::zero();
                for e in items {
                    acc = acc + &e.lower_bounded(max_terms)?;
                }
                acc
            }
            LieExpr::Scale(c, e) => e.lower_bounded(max_terms)?.scale(c),
            LieExpr::Neg(e) => -e.lower_bounded(max_terms)?,
        };
        if p.len() > max_terms {
            return Err(Error::TooManyTerms(max_terms));
        }
        Ok(p)
    }
}

pub fn parse_expression(text: &str, alphabet: &Alphabet) -> Result<LieExpr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, depth: 0, alphabet };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses and lowers in one step.
pub fn parse_polynomial(text: &str, alphabet: &Alphabet) -> Result<LiePolynomial> {
    Ok(parse_expression(text, alphabet)?.lower())
}

const MAX_DEPTH: usize = 256;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax { offset: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn peek_after(&mut self, c: u8) -> Option<u8> {
        debug_assert_eq!(self.peek(), Some(c));
        let mut i = self.pos + 1;
        while i < self.src.len() && self.src[i].is_ascii_whitespace() {
            i += 1;
        }
        self.src.get(i).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<LieExpr> {
        let first = self.term()?;
        let mut items = vec![first];
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    items.push(self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    items.push(LieExpr::Neg(Box::new(self.term()?)));
                }
                _ => break,
            }
        }
        Ok(if items.len() == 1 { items.pop().expect("one item") } else { LieExpr::Sum(items) })
    }

    fn term(&mut self) -> Result<LieExpr> {
        match self.peek() {
            Some(b'-') if self.peek_after(b'-').is_some_and(|c| c.is_ascii_digit()) => {
                self.pos += 1;
                Ok(LieExpr::Neg(Box::new(self.scaled()?)))
            }
            Some(c) if c.is_ascii_digit() => self.scaled(),
            _ => self.factor(),
        }
    }

    fn scaled(&mut self) -> Result<LieExpr> {
        let c = self.rational()?;
        if self.peek() != Some(b'*') && c.is_zero() {
            return Ok(LieExpr::Sum(Vec::new()));
        }
        self.expect(b'*')?;
        Ok(LieExpr::Scale(c, Box::new(self.factor()?)))
    }

    fn factor(&mut self) -> Result<LieExpr> {
        if self.depth >= MAX_DEPTH {
            return Err(self.error("nesting too deep"));
        }
        self.depth += 1;
        let f = self.factor_inner();
        self.depth -= 1;
        f
    }

    fn factor_inner(&mut self) -> Result<LieExpr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b')')?;
                Ok(LieExpr::Bracket(Box::new(a), Box::new(b)))
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(LieExpr::Neg(Box::new(self.factor()?)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                self.alphabet
                    .letter(name)
                    .map(LieExpr::Ident)
                    .ok_or_else(|| Error::UnknownLetter(name.to_string()))
            }
            Some(_) => Err(self.error("expected identifier, `(` or `-`")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digits"))
    }

    fn rational(&mut self) -> Result<Coeff> {
        let num = self.integer()?;
        if self.peek() != Some(b'/') {
            return Ok(Coeff::from_integer(num));
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        let den = self.integer()?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator(at));
        }
        Ok(Coeff::new(num, den))
    }
}
