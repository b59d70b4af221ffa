//! Textual form of [`LaurentPoly`] and [`RatFunc`] in the symbol `q^{1/2}`.
//!
//! Grammar (whitespace between tokens is ignored):
//!
//! ```text
//! ratfunc  := laurent | "(" laurent ")" "/" "(" laurent ")"
//! laurent  := "0" | ["+"|"-"] term { ("+"|"-") term }
//! term     := integer [ "*" monomial ] | monomial
//! monomial := "q" [ "^{" exponent "}" ]          -- bare "q" means q^1
//! exponent := integer [ "/2" ]                   -- half-integers, e.g. 3/2
//! integer  := ["-"] digit { digit }
//! ```
//!
//! Rendering sorts terms by decreasing exponent and writes unit coefficients
//! bare, e.g. `q^{1/2} - q^{-1/2}` or `(q - 2 + q^{-1})/(q^{2} - 1)`.
//! `parse_laurent`/`parse_ratfunc` invert `render_laurent`/`render_ratfunc`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use super::QringError;

/// Render one exponent of `t` as a power of `q`. `t^e = q^{e/2}`.
fn render_qpow(e: i64) -> String {
    debug_assert_ne!(e, 0);
    if e == 2 {
        "q".to_string()
    } else if e % 2 == 0 {
        format!("q^{{{}}}", e / 2)
    } else {
        format!("q^{{{}/2}}", e)
    }
}

pub fn render_laurent(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (&e, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let mag = c.magnitude();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if e == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&render_qpow(e));
        } else {
            out.push_str(&format!("{}*{}", mag, render_qpow(e)));
        }
    }
    out
}

pub fn render_ratfunc(r: &RatFunc) -> String {
    if r.den().is_one() {
        render_laurent(r.num())
    } else {
        format!("({})/({})", render_laurent(r.num()), render_laurent(r.den()))
    }
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner {
            src: src.as_bytes(),
            pos: 0,
        }
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

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect(&mut self, c: u8) -> Result<(), QringError> {
        match self.bump() {
            Some(got) if got == c => Ok(()),
            got => Err(QringError::Parse(format!(
                "expected '{}' at byte {}, found {:?}",
                c as char,
                self.pos,
                got.map(|b| b as char)
            ))),
        }
    }

    fn integer(&mut self) -> Result<BigInt, QringError> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(QringError::Parse(format!(
                "expected an integer at byte {start}"
            )));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse()
            .map_err(|e| QringError::Parse(format!("bad integer {text:?}: {e}")))
    }

    /// `q`, `q^{k}` or `q^{k/2}`; returns the exponent of `t`.
    fn monomial(&mut self) -> Result<i64, QringError> {
        self.expect(b'q')?;
        if self.peek() != Some(b'^') {
            return Ok(2);
        }
        self.bump();
        self.expect(b'{')?;
        let k = self.integer()?;
        let k: i64 = i64::try_from(&k)
            .map_err(|_| QringError::Parse(format!("exponent {k} out of range")))?;
        let halves = if self.peek() == Some(b'/') {
            self.bump();
            self.expect(b'2')?;
            k
        } else {
            k.checked_mul(2)
                .ok_or_else(|| QringError::Parse(format!("exponent {k} out of range")))?
        };
        self.expect(b'}')?;
        Ok(halves)
    }

    fn term(&mut self) -> Result<(i64, BigInt), QringError> {
        match self.peek() {
            Some(b'q') => Ok((self.monomial()?, BigInt::one())),
            _ => {
                let c = self.integer()?;
                if self.peek() == Some(b'*') {
                    self.bump();
                    Ok((self.monomial()?, c))
                } else {
                    Ok((0, c))
                }
            }
        }
    }

    fn laurent(&mut self) -> Result<LaurentPoly, QringError> {
        let mut p = LaurentPoly::zero();
        let mut sign = match self.peek() {
            Some(b'+') => {
                self.bump();
                BigInt::from(1)
            }
            Some(b'-') => {
                self.bump();
                BigInt::from(-1)
            }
            _ => BigInt::from(1),
        };
        loop {
            let (e, c) = self.term()?;
            p = &p + &LaurentPoly::term(c * &sign, e);
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    sign = BigInt::from(1);
                }
                Some(b'-') => {
                    self.bump();
                    sign = BigInt::from(-1);
                }
                _ => break,
            }
        }
        Ok(p)
    }

    fn end(&mut self) -> Result<(), QringError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(QringError::Parse(format!(
                "trailing input at byte {}: '{}'",
                self.pos, c as char
            ))),
        }
    }
}

pub fn parse_laurent(src: &str) -> Result<LaurentPoly, QringError> {
    let mut s = Scanner::new(src);
    let p = s.laurent()?;
    s.end()?;
    Ok(p)
}

pub fn parse_ratfunc(src: &str) -> Result<RatFunc, QringError> {
    let mut s = Scanner::new(src);
    if s.peek() == Some(b'(') {
        s.bump();
        let num = s.laurent()?;
        s.expect(b')')?;
        s.expect(b'/')?;
        s.expect(b'(')?;
        let den = s.laurent()?;
        s.expect(b')')?;
        s.end()?;
        RatFunc::new(num, den)
    } else {
        let p = s.laurent()?;
        s.end()?;
        Ok(RatFunc::from_laurent(p))
    }
}
