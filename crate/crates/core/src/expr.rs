//! A small recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' integer]
//! atom   := number | letter | '(' expr ')' | '[' expr ',' expr ']'
//! number := integer ['/' integer]
//! ```
//!
//! Juxtaposition multiplies, so `aab`, `a^2b` and `a*a*b` denote the same
//! element. `[x, y]` is the commutator `xy - yx`.

use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::sparse::{commutator, Combination, Monomial, Rational};

/// A basis whose single-letter generators can be named in expressions.
pub trait Alphabet: Monomial {
    fn generator(c: char) -> Option<Self>;
}

pub fn parse<K: Alphabet>(input: &str) -> Result<Combination<K>> {
    let chars: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser {
        chars,
        pos: 0,
        _basis: std::marker::PhantomData::<K>,
    };
    if p.chars.is_empty() {
        return Err(Error::Parse("empty expression".to_string()));
    }
    let out = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<K> {
    chars: Vec<char>,
    pos: usize,
    _basis: std::marker::PhantomData<K>,
}

impl<K: Alphabet> Parser<K> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, msg: &str) -> Error {
        let rest: String = self.chars[self.pos.min(self.chars.len())..]
            .iter()
            .collect();
        Error::Parse(format!("{msg} at offset {} (near `{rest}`)", self.pos))
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<Combination<K>> {
        let mut negate = false;
        match self.peek() {
            Some('-') => {
                negate = true;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            if op == '+' {
                acc += &t;
            } else {
                acc -= &t;
            }
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        match self.peek() {
            Some(c) => c.is_ascii_digit() || c == '(' || c == '[' || K::generator(c).is_some(),
            None => false,
        }
    }

    fn term(&mut self) -> Result<Combination<K>> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some('*') {
                self.pos += 1;
                let f = self.factor()?;
                acc = &acc * &f;
            } else if self.starts_factor() {
                let f = self.factor()?;
                acc = &acc * &f;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Combination<K>> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.error("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Combination<K>> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some('[') => {
                self.pos += 1;
                let left = self.expr()?;
                self.expect(',')?;
                let right = self.expr()?;
                self.expect(']')?;
                Ok(commutator(&left, &right))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let value = if self.peek() == Some('/') {
                    self.pos += 1;
                    let den = self.integer()?;
                    if den == BigInt::from(0) {
                        return Err(self.error("zero denominator"));
                    }
                    Rational::new(num, den)
                } else {
                    Rational::from_integer(num)
                };
                Ok(Combination::constant(value))
            }
            Some(c) => match K::generator(c) {
                Some(g) => {
                    self.pos += 1;
                    Ok(Combination::basis(g))
                }
                None => Err(self.error(&format!("unexpected character `{c}`"))),
            },
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        BigInt::from_str(&digits).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Renders `c*body` terms joined with ` + ` / ` - `. `body` returns `None`
/// for the identity, which is rendered as the bare coefficient.
pub(crate) fn render_terms<'a, K: 'a>(
    terms: impl Iterator<Item = (&'a K, &'a Rational)>,
    omit_unit: bool,
    mut body: impl FnMut(&K) -> Option<String>,
) -> String {
    use num_traits::{One, Signed};
    let mut out = String::new();
    for (i, (k, c)) in terms.enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match body(k) {
            None => out.push_str(&mag.to_string()),
            Some(b) if omit_unit && mag.is_one() => out.push_str(&b),
            Some(b) => {
                out.push_str(&mag.to_string());
                out.push('*');
                out.push_str(&b);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
