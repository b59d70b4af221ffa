//! Exact coefficient arithmetic: Laurent polynomials and rational functions
//! in `t = q^{1/2}` over arbitrary-precision integers.

mod laurent;
mod ratfunc;
pub mod text;

pub use laurent::{laurent_gcd, LaurentPoly};
pub use ratfunc::{cross_eq, RatFunc};
pub use text::{parse_laurent, parse_ratfunc, render_laurent, render_ratfunc};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QringError {
    #[error("division by the zero function")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

/// `prod_{i=1..j} (q^{i/2} - q^{-i/2})`, the q-Pochhammer-style denominator of
/// the dilogarithm series; the empty product for `j = 0` is 1.
pub fn qpochhammer_denominator(j: u32) -> LaurentPoly {
    let mut p = LaurentPoly::one();
    for i in 1..=i64::from(j) {
        let factor = LaurentPoly::from_terms([(i, 1), (-i, -1)]);
        p = &p * &factor;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn t() -> LaurentPoly {
        LaurentPoly::t_pow(1)
    }

    fn t_inv() -> LaurentPoly {
        LaurentPoly::t_pow(-1)
    }

    #[test]
    fn monomial_exponent_cancellation() {
        assert_eq!(&t() * &t_inv(), LaurentPoly::one());
    }

    #[test]
    fn difference_of_squares() {
        let a = &t() - &t_inv();
        let b = &t() + &t_inv();
        assert_eq!(&a * &b, LaurentPoly::from_terms([(2, 1), (-2, -1)]));
    }

    #[test]
    fn additive_inverse_gives_empty_map() {
        let a = &t() - &t_inv();
        let b = &t_inv() - &t();
        let sum = &a + &b;
        assert!(sum.is_zero());
        assert_eq!(sum.num_terms(), 0);
    }

    #[test]
    fn ratfunc_inverse_cancels() {
        let d = &t() - &t_inv();
        let inv = RatFunc::inv_of(d.clone()).unwrap();
        let prod = &inv * &RatFunc::from_laurent(d);
        assert!(prod.is_one());
    }

    #[test]
    fn ratfunc_addition_of_like_fractions() {
        let d = &t() - &t_inv();
        let inv = RatFunc::inv_of(d.clone()).unwrap();
        let two_over = &inv + &inv;
        assert_eq!(two_over, RatFunc::new(LaurentPoly::from_int(2), d).unwrap());
    }

    #[test]
    fn ratfunc_division_reduces_powers() {
        let d = &t() - &t_inv();
        let d2 = &d * &d;
        let a = RatFunc::inv_of(d2).unwrap();
        let b = RatFunc::inv_of(d.clone()).unwrap();
        assert_eq!(a.checked_div(&b).unwrap(), RatFunc::inv_of(d).unwrap());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let one = RatFunc::one();
        assert_eq!(
            one.checked_div(&RatFunc::zero()),
            Err(QringError::DivisionByZero)
        );
        assert_eq!(
            RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()),
            Err(QringError::DivisionByZero)
        );
    }

    #[test]
    fn qpochhammer_small_values() {
        assert_eq!(qpochhammer_denominator(0), LaurentPoly::one());
        assert_eq!(
            qpochhammer_denominator(1),
            LaurentPoly::from_terms([(1, 1), (-1, -1)])
        );
        // (t - t^-1)(t^2 - t^-2) = t^3 - t - t^-1 + t^-3
        assert_eq!(
            qpochhammer_denominator(2),
            LaurentPoly::from_terms([(3, 1), (1, -1), (-1, -1), (-3, 1)])
        );
    }

    #[test]
    fn qpochhammer_divisibility_chain() {
        for j in 1..=12 {
            let big = qpochhammer_denominator(j);
            let small = qpochhammer_denominator(j - 1);
            let q = big.div_exact(&small).expect("consecutive products divide");
            let factor = LaurentPoly::from_terms([(i64::from(j), 1), (-i64::from(j), -1)]);
            assert_eq!(q, factor);
        }
    }

    #[test]
    fn canonical_form_layout() {
        // (2t^2 - 2) / (4t) canonicalizes to (q - 1)/(2*q^{1/2}).
        let num = LaurentPoly::from_terms([(2, 2), (0, -2)]);
        let den = LaurentPoly::term(4, 1);
        let r = RatFunc::new(num, den).unwrap();
        assert_eq!(r.den().min_exp(), Some(0));
        assert_eq!(r.num(), &LaurentPoly::from_terms([(1, 1), (-1, -1)]));
        assert_eq!(r.den(), &LaurentPoly::from_int(2));
    }

    #[test]
    fn render_golden_strings() {
        let d = &t() - &t_inv();
        assert_eq!(render_laurent(&d), "q^{1/2} - q^{-1/2}");
        assert_eq!(render_laurent(&LaurentPoly::zero()), "0");
        assert_eq!(
            render_laurent(&LaurentPoly::from_terms([(2, 3), (0, -2), (-4, 1)])),
            "3*q - 2 + q^{-2}"
        );
        // 1/(t - t^-1) canonicalizes to t/(q - 1): the denominator is a
        // genuine polynomial and the t-shift lives upstairs.
        let r = RatFunc::inv_of(d).unwrap();
        assert_eq!(render_ratfunc(&r), "(q^{1/2})/(q - 1)");
        assert_eq!(parse_ratfunc("(q^{1/2})/(q - 1)").unwrap(), r);
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i64..=6, -9i64..=9), 0..5)
            .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, c))))
    }

    fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
        (arb_laurent(), arb_laurent()).prop_map(|(n, d)| {
            let d = if d.is_zero() { LaurentPoly::one() } else { d };
            RatFunc::new(n, d).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn laurent_ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn ratfunc_field_axioms(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn canonical_equality_matches_cross_multiplication(
            n1 in arb_laurent(), d1 in arb_laurent(),
            scale_num in -5i64..=5, scale_exp in -4i64..=4,
        ) {
            prop_assume!(!d1.is_zero());
            prop_assume!(scale_num != 0);
            let a = RatFunc::new(n1.clone(), d1.clone()).unwrap();
            // The same value written with scaled numerator and denominator.
            let s = LaurentPoly::term(BigInt::from(scale_num), scale_exp);
            let b = RatFunc::new(&n1 * &s, &d1 * &s).unwrap();
            prop_assert!(cross_eq(&a, &b));
            prop_assert_eq!(a, b);
        }

        #[test]
        fn render_parse_round_trip(r in arb_ratfunc()) {
            let text = render_ratfunc(&r);
            let back = parse_ratfunc(&text).unwrap();
            prop_assert_eq!(back, r);
        }
    }
}
