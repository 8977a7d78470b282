//! Recursive-descent parser for cycle expressions:
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ['^' nat]
//! atom     := rational | gen | '(' expr ')'
//! gen      := 'h_' nat | 'o_' nat | ('t'|'tau') '_{' nat ',' nat '}'
//! rational := int ['/' nat]
//! ```
//!
//! Expressions are evaluated in the ring as they are parsed, so the result
//! is already in normal form.

use chowtaut_core::{CycleClass, Generator, TautRing, Q};
use num::{BigInt, Zero};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("index {index} at {pos} is out of range for m = {m}")]
    IndexOutOfRange { pos: usize, index: usize, m: usize },
    #[error("at {pos}: {source}")]
    Ring { pos: usize, source: chowtaut_core::Error },
}

impl ParseError {
    pub fn pos(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. } | ParseError::IndexOutOfRange { pos, .. } | ParseError::Ring { pos, .. } => *pos,
        }
    }
}

pub fn parse_expr(text: &str, ring: &TautRing) -> Result<CycleClass, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a TautRing,
}

impl Parser<'_> {
    fn syntax(&self, msg: &str) -> ParseError {
        ParseError::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn ring_err(&self, pos: usize) -> impl Fn(chowtaut_core::Error) -> ParseError {
        move |e| match e {
            chowtaut_core::Error::IndexOutOfRange { index, m } => ParseError::IndexOutOfRange { pos, index, m },
            source => ParseError::Ring { pos, source },
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax(&format!("expected '{}'", c as char)))
        }
    }

    fn expect_str(&mut self, s: &str) -> Result<(), ParseError> {
        if self.src[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            Ok(())
        } else {
            Err(self.syntax(&format!("expected {s:?}")))
        }
    }

    fn digits(&mut self) -> Result<&str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected a number"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn nat(&mut self) -> Result<usize, ParseError> {
        let pos = self.pos;
        self.digits()?.parse().map_err(|_| ParseError::Syntax { pos, msg: "number too large".into() })
    }

    fn expr(&mut self) -> Result<CycleClass, ParseError> {
        let mut acc = self.term()?;
        loop {
            let negate = if self.eat(b'+') {
                false
            } else if self.eat(b'-') {
                true
            } else {
                return Ok(acc);
            };
            let mut t = self.term()?;
            if negate {
                t = -&t;
            }
            acc = &acc + &t;
        }
    }

    fn term(&mut self) -> Result<CycleClass, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let pos = self.pos;
            let f = self.factor()?;
            acc = self.ring.multiply(&acc, &f).map_err(self.ring_err(pos))?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<CycleClass, ParseError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let pos = self.pos;
            let n = self.nat()?;
            let n = u32::try_from(n).map_err(|_| ParseError::Syntax { pos, msg: "exponent too large".into() })?;
            return self.ring.pow(&base, n).map_err(self.ring_err(pos));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<CycleClass, ParseError> {
        let pos = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'-' | b'0'..=b'9') => self.rational(),
            Some(b'h' | b'o' | b't') => self.generator(),
            Some(_) => Err(self.syntax("expected a number, generator or '('")),
            None => Err(ParseError::Syntax { pos, msg: "unexpected end of input".into() }),
        }
    }

    fn rational(&mut self) -> Result<CycleClass, ParseError> {
        let negative = self.eat(b'-');
        let num: BigInt = self.digits()?.parse().expect("digits parse");
        let mut q = Q::from_integer(if negative { -num } else { num });
        if self.eat(b'/') {
            let pos = self.pos;
            let den: BigInt = self.digits()?.parse().expect("digits parse");
            if den.is_zero() {
                return Err(ParseError::Syntax { pos, msg: "zero denominator".into() });
            }
            q /= Q::from_integer(den);
        }
        Ok(self.ring.constant(q))
    }

    fn generator(&mut self) -> Result<CycleClass, ParseError> {
        let pos = self.pos;
        let g = match self.src[self.pos] {
            b'h' | b'o' => {
                let is_h = self.src[self.pos] == b'h';
                self.pos += 1;
                self.expect_str("_")?;
                let i = self.nat()?;
                if is_h {
                    Generator::H(i)
                } else {
                    Generator::O(i)
                }
            }
            _ => {
                self.pos += 1;
                if self.src[self.pos..].starts_with(b"au") {
                    self.pos += 2;
                }
                self.expect_str("_{")?;
                let i = self.nat()?;
                self.expect(b',')?;
                let j = self.nat()?;
                self.expect(b'}')?;
                Generator::Tau(i, j)
            }
        };
        self.ring.generator(g).map_err(self.ring_err(pos))
    }
}
