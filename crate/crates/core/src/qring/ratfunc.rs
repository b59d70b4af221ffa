//! Rational functions in `t = q^{1/2}` over the integers, kept in a canonical
//! form so that equality of values is structural equality:
//!
//! * numerator and denominator share no polynomial factor over the rationals,
//! * their integer contents are coprime,
//! * the denominator is a genuine polynomial (minimal exponent 0) with
//!   positive leading coefficient.
//!
//! All `t`-power shifts live in the numerator, which may be a Laurent
//! polynomial.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::laurent::{laurent_gcd, LaurentPoly};
use super::QringError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn t_pow(e: i64) -> Self {
        RatFunc {
            num: LaurentPoly::t_pow(e),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        RatFunc {
            num: LaurentPoly::from_int(c),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// Canonical `num/den`.
    ///
    /// # Errors
    /// [`QringError::DivisionByZero`] when `den` is the zero polynomial.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QringError> {
        if den.is_zero() {
            return Err(QringError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    /// 1 / `den`.
    pub fn inv_of(den: LaurentPoly) -> Result<Self, QringError> {
        Self::new(LaurentPoly::one(), den)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let (mut np, ncont, nshift) = num.primitive_parts();
        let (mut dp, dcont, dshift) = den.primitive_parts();
        if !np.is_monomial() && !dp.is_monomial() {
            let g = laurent_gcd(&np, &dp);
            if !g.is_one() {
                np = np.div_exact(&g).expect("gcd divides numerator");
                dp = dp.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let c = ncont.gcd(&dcont);
        let ncont = ncont / &c;
        let dcont = dcont / &c;
        let mut num = np.scale(&ncont).mul_t_pow(nshift - dshift);
        let mut den = dp.scale(&dcont);
        if den.leading_coeff().is_some_and(|c| c.is_negative()) {
            num = -&num;
            den = -&den;
        }
        debug_assert_eq!(den.min_exp(), Some(0));
        RatFunc { num, den }
    }

    pub fn inverse(&self) -> Result<Self, QringError> {
        if self.is_zero() {
            return Err(QringError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    /// Multiply by the monomial `t^e` without re-canonicalizing.
    pub fn mul_t_pow(&self, e: i64) -> Self {
        RatFunc {
            num: self.num.mul_t_pow(e),
            den: self.den.clone(),
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::canonical(&self.num + &rhs.num, self.den.clone());
        }
        // lcm-style addition keeps the reduction gcd small: any common factor
        // of the new numerator and the denominator divides gcd(d1, d2).
        let g = laurent_gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            // Coprime denominators: only contents can still cancel.
            return RatFunc::canonical_coprime(num, den);
        }
        let d1g = self.den.div_exact(&g).expect("gcd divides");
        let d2g = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d2g) + &(&rhs.num * &d1g);
        let den = &self.den * &d2g;
        RatFunc::canonical(num, den)
    }
}

impl RatFunc {
    /// Canonicalization fast path when the polynomial parts of `num` and
    /// `den` are already known to be coprime.
    fn canonical_coprime(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (np, ncont, nshift) = num.primitive_parts();
        let (dp, dcont, dshift) = den.primitive_parts();
        let c = ncont.gcd(&dcont);
        let mut num = np.scale(&(ncont / &c)).mul_t_pow(nshift - dshift);
        let mut den = dp.scale(&(dcont / &c));
        if den.leading_coeff().is_some_and(|c| c.is_negative()) {
            num = -&num;
            den = -&den;
        }
        RatFunc { num, den }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // Cross-cancel before multiplying so the final reduction is cheap.
        let a = RatFunc::canonical(self.num.clone(), rhs.den.clone());
        let b = RatFunc::canonical(rhs.num.clone(), self.den.clone());
        RatFunc::canonical_coprime(&a.num * &b.num, &a.den * &b.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inverse().expect("division by the zero function")
    }
}

impl RatFunc {
    /// Checked division.
    ///
    /// # Errors
    /// [`QringError::DivisionByZero`] when `rhs` is zero.
    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, QringError> {
        Ok(self * &rhs.inverse()?)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl num_traits::Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl num_traits::One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::qring::text::render_ratfunc(self))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::qring::text::render_ratfunc(self))
    }
}

/// Cross-multiplication equality `a.num * b.den == b.num * a.den`; used by
/// tests to confirm that structural equality captures equality of values.
pub fn cross_eq(a: &RatFunc, b: &RatFunc) -> bool {
    &a.num * &b.den == &b.num * &a.den
}
