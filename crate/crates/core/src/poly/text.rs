//! Text grammar for polynomials, the same one [`Polynomial`]'s `Display`
//! produces:
//!
//! ```text
//! poly   := ["-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := integer ["/" integer] | "x" index ["^" exponent]
//! ```
//!
//! Whitespace is allowed between tokens. Variables are one-based.

use super::{Exponent, Monomial, PolyError, PolyRing, Polynomial};
use crate::field::Field;

impl<F: Field> PolyRing<F> {
    pub fn parse(&self, text: &str) -> Result<Polynomial<F>, PolyError> {
        Parser { ring: self, src: text.as_bytes(), pos: 0 }.poly()
    }
}

struct Parser<'a, F: Field> {
    ring: &'a PolyRing<F>,
    src: &'a [u8],
    pos: usize,
}

impl<F: Field> Parser<'_, F> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse { pos: self.pos, msg: msg.into() })
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

    fn digits(&mut self) -> Result<&str, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn poly(&mut self) -> Result<Polynomial<F>, PolyError> {
        let f = &self.ring.field;
        let mut terms = Vec::new();
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        } else if self.peek().is_none() {
            return self.err("empty input");
        }
        loop {
            let (c, m) = self.term()?;
            terms.push((if negate { f.neg(&c) } else { c }, m));
            match self.peek() {
                None => break,
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(ch) => return self.err(format!("unexpected `{}`", ch as char)),
            }
            self.pos += 1;
        }
        Ok(self.ring.from_terms(terms))
    }

    fn term(&mut self) -> Result<(F::Elem, Monomial), PolyError> {
        let f = &self.ring.field;
        let mut coeff = f.one();
        let mut exps = vec![0 as Exponent; self.ring.nvars];
        loop {
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    if self.peek() == Some(b'_') {
                        self.pos += 1;
                    }
                    let index: usize = self.digits()?.parse().or_else(|_| self.err("bad index"))?;
                    if index == 0 || index > self.ring.nvars {
                        return Err(PolyError::VariableOutOfRange { index, nvars: self.ring.nvars });
                    }
                    let mut e: Exponent = 1;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        e = self.digits()?.parse().or_else(|_| self.err("exponent too large"))?;
                    }
                    exps[index - 1] =
                        exps[index - 1].checked_add(e).map_or_else(|| self.err("exponent too large"), Ok)?;
                }
                Some(ch) if ch.is_ascii_digit() => {
                    let mut lit = self.digits()?.to_string();
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        lit.push('/');
                        lit.push_str(self.digits()?);
                    }
                    let c = match f.parse_elem(&lit) {
                        Some(c) => c,
                        None => return self.err(format!("bad coefficient `{lit}`")),
                    };
                    coeff = f.mul(&coeff, &c);
                }
                _ => return self.err("expected a coefficient or variable"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((coeff, Monomial::new(&exps)));
            }
        }
    }
}
