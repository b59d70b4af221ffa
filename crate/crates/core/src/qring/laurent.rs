//! Laurent polynomials in `t = q^{1/2}` with arbitrary-precision integer
//! coefficients.
//!
//! Exponents are stored in units of half-powers of `q`, so the map key `3`
//! means `q^{3/2}`. The zero polynomial is the empty map and no stored
//! coefficient is ever zero.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::t_pow(0)
    }

    /// The monomial `t^e`.
    pub fn t_pow(e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(e, BigInt::one());
        LaurentPoly { coeffs }
    }

    /// The monomial `c * t^e`.
    pub fn term(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::term(c, 0)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// True when the polynomial has a single term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    /// Multiply by `t^shift`.
    pub fn mul_t_pow(&self, shift: i64) -> Self {
        if shift == 0 {
            return self.clone();
        }
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Positive gcd of all integer coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.coeffs.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content and normalize min exponent to 0; returns
    /// `(primitive polynomial, content, t-shift removed)`.
    pub fn primitive_parts(&self) -> (LaurentPoly, BigInt, i64) {
        if self.is_zero() {
            return (Self::zero(), BigInt::zero(), 0);
        }
        let shift = self.min_exp().unwrap();
        let content = self.content();
        let coeffs = self
            .coeffs
            .iter()
            .map(|(e, c)| (e - shift, c / &content))
            .collect();
        (LaurentPoly { coeffs }, content, shift)
    }

    /// Exact division; `None` when `self` is not a multiple of `d`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let shift = self.min_exp().unwrap() - d.min_exp().unwrap();
        let mut rem = self.mul_t_pow(-self.min_exp().unwrap());
        let dd = d.mul_t_pow(-d.min_exp().unwrap());
        let d_deg = dd.max_exp().unwrap();
        let d_lead = dd.leading_coeff().unwrap().clone();
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let r_deg = rem.max_exp().unwrap();
            if r_deg < d_deg {
                return None;
            }
            let (q, r) = rem.leading_coeff().unwrap().div_rem(&d_lead);
            if !r.is_zero() {
                return None;
            }
            let mono = LaurentPoly::term(q, r_deg - d_deg);
            rem = &rem - &(&mono * &dd);
            quot = &quot + &mono;
            if let Some(e) = rem.max_exp() {
                if e >= r_deg {
                    return None;
                }
            }
        }
        Some(quot.mul_t_pow(shift))
    }

    /// Substitute `t -> t^{-1}` (bar involution); handy in tests.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        // Iterate the smaller factor outside.
        let (small, large) = if self.num_terms() <= rhs.num_terms() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (ea, ca) in &small.coeffs {
            for (eb, cb) in &large.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::qring::text::render_laurent(self))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::qring::text::render_laurent(self))
    }
}

impl num_traits::Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl num_traits::One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

/// Primitive gcd of the polynomial parts of `a` and `b` (t-shifts stripped),
/// computed by content extraction followed by a pseudo-remainder sequence.
/// The result is primitive with positive leading coefficient.
pub fn laurent_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normalize_sign(b.primitive_parts().0);
    }
    if b.is_zero() {
        return normalize_sign(a.primitive_parts().0);
    }
    let (mut r0, _, _) = a.primitive_parts();
    let (mut r1, _, _) = b.primitive_parts();
    // Monomial fast path: a monomial with nonzero constant term is a unit
    // times t^0, so the gcd of the polynomial parts is 1.
    if r0.is_monomial() || r1.is_monomial() {
        return LaurentPoly::one();
    }
    if r0.max_exp().unwrap() < r1.max_exp().unwrap() {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_zero() {
        let r = pseudo_rem(&r0, &r1);
        r0 = r1;
        r1 = r.primitive_parts().0;
    }
    normalize_sign(r0)
}

fn normalize_sign(p: LaurentPoly) -> LaurentPoly {
    match p.leading_coeff() {
        Some(c) if c.is_negative() => -&p,
        _ => p,
    }
}

/// Pseudo-remainder of `a` by `b` (both with min exponent 0, `deg a >= deg b`),
/// up to a scalar. Any scalar multiple works for the gcd, since the caller
/// takes primitive parts.
fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let db = b.max_exp().unwrap();
    let lb = b.leading_coeff().unwrap().clone();
    let mut r = a.clone();
    while let Some(dr) = r.max_exp() {
        if dr < db {
            break;
        }
        let lr = r.leading_coeff().unwrap().clone();
        // r <- lb*r - lr*t^{dr-db}*b
        r = &r.scale(&lb) - &b.mul_t_pow(dr - db).scale(&lr);
        debug_assert!(r.max_exp().is_none_or(|e| e < dr));
    }
    r
}
