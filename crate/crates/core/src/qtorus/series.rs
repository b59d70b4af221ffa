//! Degree-truncated noncommutative series on the exponent lattice.

use std::collections::BTreeMap;

use crate::qring::{LaurentPoly, RatFunc};

use super::expvec::{pairing_halves, ExpVec};
use super::QtorusError;

/// A series truncated at total degree `trunc`: a finite map from exponent
/// vectors of degree `<= trunc` to nonzero rational-function coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusSeries {
    n: u32,
    trunc: u32,
    terms: BTreeMap<ExpVec, RatFunc>,
}

impl TorusSeries {
    pub fn zero(n: u32, trunc: u32) -> Self {
        TorusSeries {
            n,
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(n: u32, trunc: u32) -> Self {
        let mut s = Self::zero(n, trunc);
        s.insert(ExpVec::zero(n), RatFunc::one());
        s
    }

    pub fn monomial(n: u32, trunc: u32, key: ExpVec, coeff: RatFunc) -> Self {
        let mut s = Self::zero(n, trunc);
        s.insert(key, coeff);
        s
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn coeff(&self, key: &ExpVec) -> RatFunc {
        self.terms.get(key).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &RatFunc)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn insert(&mut self, key: ExpVec, coeff: RatFunc) {
        debug_assert_eq!(key.dim(), self.n);
        if key.degree() > u64::from(self.trunc) || coeff.is_zero() {
            return;
        }
        self.terms.insert(key, coeff);
    }

    fn accumulate(&mut self, key: ExpVec, coeff: RatFunc) {
        if key.degree() > u64::from(self.trunc) || coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn compatible(&self, other: &TorusSeries) -> Result<(), QtorusError> {
        if self.n != other.n || self.trunc != other.trunc {
            return Err(QtorusError::DimensionMismatch(format!(
                "series on N^{} at degree {} combined with series on N^{} at degree {}",
                self.n, self.trunc, other.n, other.trunc
            )));
        }
        Ok(())
    }

    /// # Errors
    /// [`QtorusError::DimensionMismatch`] when `n` or the truncation differ.
    pub fn add(&self, other: &TorusSeries) -> Result<TorusSeries, QtorusError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.accumulate(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RatFunc) -> TorusSeries {
        if c.is_zero() {
            return TorusSeries::zero(self.n, self.trunc);
        }
        TorusSeries {
            n: self.n,
            trunc: self.trunc,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }
}

/// Noncommutative product: each pair of terms contributes
/// `c_a c_b t^{2<a,b>}` at `a + b`; pairs above the truncation are dropped.
/// The smaller term map runs on the outside.
///
/// # Errors
/// [`QtorusError::DimensionMismatch`] when `n` or the truncation differ.
pub fn series_mul(a: &TorusSeries, b: &TorusSeries) -> Result<TorusSeries, QtorusError> {
    a.compatible(b)?;
    let mut out = TorusSeries::zero(a.n, a.trunc);
    let a_small = a.terms.len() <= b.terms.len();
    if a_small {
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                mul_into(&mut out, ka, ca, kb, cb);
            }
        }
    } else {
        for (kb, cb) in &b.terms {
            for (ka, ca) in &a.terms {
                mul_into(&mut out, ka, ca, kb, cb);
            }
        }
    }
    Ok(out)
}

fn mul_into(out: &mut TorusSeries, ka: &ExpVec, ca: &RatFunc, kb: &ExpVec, cb: &RatFunc) {
    let key = ka.add(kb);
    if key.degree() > u64::from(out.trunc) {
        return;
    }
    let coeff = (ca * cb).mul_t_pow(pairing_halves(ka, kb));
    out.accumulate(key, coeff);
}

/// The dilogarithm series of the monomial `x_a`,
///
/// ```text
/// E(x_a) = sum_{j >= 0} (q^{1/2} x_a)^j / ((q - 1)(q^2 - 1)...(q^j - 1)),
/// ```
///
/// truncated at total degree `trunc`. Because `<a, a> = 0`, the power
/// `x_a^j` is exactly `x_{ja}`, so the coefficient of `x_{ja}` is
/// `t^j / prod_{i=1..j} (t^{2i} - 1)`, equivalently
/// `t^{-j(j-1)/2} / prod_{i=1..j} (q^{i/2} - q^{-i/2})`.
///
/// The quadratic power of `t` is forced: the product-reordering identities
/// hold for this normalization and fail for every constant-`t`-power variant
/// (see the convention-scan tests).
///
/// # Errors
/// [`QtorusError::ZeroVector`] when `a = 0`.
pub fn qdilog(a: &ExpVec, trunc: u32) -> Result<TorusSeries, QtorusError> {
    qdilog_twisted(a, trunc, 0)
}

/// [`qdilog`] with every `j`-th coefficient multiplied by `t^{extra * j}`,
/// i.e. the series of `q^{extra/2} x_a`. Used to scan middle-argument
/// normalizations of the pentagon identity.
///
/// # Errors
/// [`QtorusError::ZeroVector`] when `a = 0`.
pub fn qdilog_twisted(
    a: &ExpVec,
    trunc: u32,
    extra_t_per_power: i64,
) -> Result<TorusSeries, QtorusError> {
    if a.is_zero() {
        return Err(QtorusError::ZeroVector);
    }
    let n = a.dim();
    let mut out = TorusSeries::zero(n, trunc);
    let deg = a.degree();
    let mut den = LaurentPoly::one();
    let mut j: u64 = 0;
    while j * deg <= u64::from(trunc) {
        if j > 0 {
            // multiply in (q^j - 1) = t^{2j} - 1
            let factor = LaurentPoly::from_terms([(2 * j as i64, 1), (0, -1)]);
            den = &den * &factor;
        }
        let num = LaurentPoly::t_pow(j as i64 + extra_t_per_power * j as i64);
        let coeff = RatFunc::new(num, den.clone()).expect("denominator is nonzero");
        out.insert(a.scale(j as u32), coeff);
        j += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::{parse_ratfunc, qpochhammer_denominator};
    use proptest::prelude::*;

    fn e(i: u32, n: u32) -> ExpVec {
        ExpVec::unit(i, n)
    }

    fn mono(n: u32, d: u32, key: ExpVec) -> TorusSeries {
        TorusSeries::monomial(n, d, key, RatFunc::one())
    }

    #[test]
    fn product_of_unit_vectors_picks_up_t() {
        let x1 = mono(2, 2, e(1, 2));
        let x2 = mono(2, 2, e(2, 2));
        let p = series_mul(&x1, &x2).unwrap();
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.coeff(&ExpVec::new(vec![1, 1])), RatFunc::t_pow(1));
    }

    #[test]
    fn q_commutation() {
        // x_{e1} x_{e2} = t^2 x_{e2} x_{e1}
        let x1 = mono(2, 2, e(1, 2));
        let x2 = mono(2, 2, e(2, 2));
        let ab = series_mul(&x1, &x2).unwrap();
        let ba = series_mul(&x2, &x1).unwrap();
        assert_eq!(ab, ba.scale(&RatFunc::t_pow(2)));
    }

    #[test]
    fn unit_is_neutral() {
        let a = qdilog(&e(1, 2), 4).unwrap();
        let one = TorusSeries::unit(2, 4);
        assert_eq!(series_mul(&one, &a).unwrap(), a);
        assert_eq!(series_mul(&a, &one).unwrap(), a);
    }

    #[test]
    fn dilog_constant_term_is_one() {
        for n in 1..=3 {
            let s = qdilog(&e(1, n), 3).unwrap();
            assert!(s.coeff(&ExpVec::zero(n)).is_one());
        }
    }

    #[test]
    fn dilog_coefficients_explicit() {
        let s = qdilog(&e(1, 1), 3).unwrap();
        assert_eq!(
            s.coeff(&ExpVec::new(vec![1])),
            parse_ratfunc("(q^{1/2})/(q - 1)").unwrap()
        );
        // c_2 = t^2 / ((q-1)(q^2-1)) = t^{-1} / ((t - t^-1)(t^2 - t^-2)).
        let c2 = s.coeff(&ExpVec::new(vec![2]));
        assert_eq!(c2, parse_ratfunc("(q)/(q^{3} - q^{2} - q + 1)").unwrap());
        let via_pochhammer = RatFunc::new(
            LaurentPoly::t_pow(-1),
            qpochhammer_denominator(2),
        )
        .unwrap();
        assert_eq!(c2, via_pochhammer);
    }

    #[test]
    fn dilog_quadratic_twist_against_pochhammer() {
        // c_j = t^{-j(j-1)/2} / qpochhammer_denominator(j) for all j.
        let s = qdilog(&e(1, 1), 8).unwrap();
        for j in 0..=8i64 {
            let expected = RatFunc::new(
                LaurentPoly::t_pow(-j * (j - 1) / 2),
                qpochhammer_denominator(j as u32),
            )
            .unwrap();
            assert_eq!(s.coeff(&ExpVec::new(vec![j as u32])), expected, "j={j}");
        }
    }

    #[test]
    fn dilog_of_high_degree_vector_is_unit() {
        let a = ExpVec::new(vec![3, 2]);
        let s = qdilog(&a, 4).unwrap();
        assert_eq!(s, TorusSeries::unit(2, 4));
    }

    #[test]
    fn dilog_of_zero_vector_is_rejected() {
        assert!(matches!(
            qdilog(&ExpVec::zero(2), 4),
            Err(QtorusError::ZeroVector)
        ));
    }

    #[test]
    fn grading_is_respected() {
        let a = qdilog(&e(1, 2), 3).unwrap();
        let b = qdilog(&e(2, 2), 3).unwrap();
        let p = series_mul(&a, &b).unwrap();
        for (k, _) in p.terms() {
            assert!(k.degree() <= 3);
        }
    }

    fn arb_coeff() -> impl Strategy<Value = RatFunc> {
        (-4i64..=4, -3i64..=3, 0u32..=2).prop_map(|(c, e, j)| {
            if c == 0 {
                RatFunc::one()
            } else {
                RatFunc::new(
                    LaurentPoly::term(c, e),
                    qpochhammer_denominator(j),
                )
                .unwrap()
            }
        })
    }

    fn arb_series(n: u32, trunc: u32) -> impl Strategy<Value = TorusSeries> {
        let key = proptest::collection::vec(0u32..=2, n as usize);
        proptest::collection::vec((key, arb_coeff()), 0..4).prop_map(move |terms| {
            let mut s = TorusSeries::zero(n, trunc);
            for (k, c) in terms {
                s.accumulate(ExpVec::new(k), c);
            }
            s
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn multiplication_is_associative(
            a in arb_series(3, 4),
            b in arb_series(3, 4),
            c in arb_series(3, 4),
        ) {
            let left = series_mul(&series_mul(&a, &b).unwrap(), &c).unwrap();
            let right = series_mul(&a, &series_mul(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn product_keys_are_sums_of_contributing_keys(
            a in arb_series(2, 4),
            b in arb_series(2, 4),
        ) {
            let p = series_mul(&a, &b).unwrap();
            for (k, _) in p.terms() {
                prop_assert!(k.degree() <= 4);
                let decomposable = a.terms().any(|(ka, _)| {
                    b.terms().any(|(kb, _)| &ka.add(kb) == k)
                });
                prop_assert!(decomposable);
            }
        }
    }
}
