//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Juxtaposition (`2x`, `x y`) is rejected.

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::monomial::{Monomial, TermOrder, MAX_EXPONENT};
use crate::poly::Polynomial;
use crate::ring::RingSpec;

/// Parse `text` into a canonical polynomial of `ring` (degrevlex order).
pub fn parse_polynomial(text: &str, ring: &RingSpec) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let out = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected input after expression"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a RingSpec,
}

impl Parser<'_> {
    fn field(&self) -> Fp {
        self.ring.field()
    }

    fn constant(&self, c: u32) -> Polynomial {
        Polynomial::constant(self.field(), self.ring.nvars(), TermOrder::DegRevLex, c)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = acc.try_mul(&self.unary()?)?;
        }
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_alphanumeric() || c == b'_' || c == b'(' => {
                Err(self.error("implicit multiplication is not allowed; use `*`"))
            }
            _ => Ok(acc),
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        if self.peek() == Some(b'-') {
            return Err(Error::NegativeExponent { pos: self.pos });
        }
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected a nonnegative integer exponent"));
        }
        let e = digits
            .parse::<u64>()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT as u64)
            .ok_or(Error::ExponentOverflow)? as u32;
        pow(&base, e)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let Some(c) = self.peek() else {
            return Err(self.error("unexpected end of input"));
        };
        if c == b'(' {
            self.pos += 1;
            let inner = self.expr()?;
            if !self.eat(b')') {
                return Err(self.error("expected `)`"));
            }
            return Ok(inner);
        }
        if c.is_ascii_digit() {
            let digits = self.digits();
            let p = self.field().characteristic() as u64;
            let v = digits
                .bytes()
                .fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
            return Ok(self.constant(v as u32));
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let start = self.pos;
            while self
                .peek()
                .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
            {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let idx = self
                .ring
                .var_index(name)
                .ok_or_else(|| Error::UnknownIdentifier {
                    name: name.to_string(),
                    pos: start,
                })?;
            return Ok(Polynomial::var(self.ring, idx));
        }
        Err(self.error(&format!("unexpected character `{}`", c as char)))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }
}

fn pow(base: &Polynomial, e: u32) -> Result<Polynomial> {
    if base.is_monomial() {
        let (c, m) = &base.terms()[0];
        let exps: Vec<u64> = m.exponents().iter().map(|&x| x as u64 * e as u64).collect();
        if exps.iter().any(|&x| x > MAX_EXPONENT as u64) {
            return Err(Error::ExponentOverflow);
        }
        let exps: Vec<u32> = exps.into_iter().map(|x| x as u32).collect();
        let c = base.field().pow(*c, e as u64);
        return Ok(Polynomial::term(
            base.field(),
            base.order(),
            c,
            Monomial::from_exponents(&exps)?,
        ));
    }
    let mut acc = Polynomial::constant(base.field(), base.nvars(), base.order(), 1);
    let mut sq = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.try_mul(&sq)?;
        }
        e >>= 1;
        if e > 0 {
            sq = sq.try_mul(&sq)?;
        }
    }
    Ok(acc)
}
