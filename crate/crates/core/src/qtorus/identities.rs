//! The pentagon and product-reordering identities, checked exactly.

use std::time::Instant;

use crate::curves::CurveClass;
use crate::qring::render_ratfunc;
use crate::quiver::{dimension_vector, AdmissibleOrder, Interval};
use crate::report::{Discrepancy, Report};

use super::expvec::ExpVec;
use super::series::{qdilog, qdilog_twisted, series_mul, TorusSeries};
use super::QtorusError;

/// Power of `t` carried by each `x_{(1,1)}`-power of the pentagon's middle
/// factor. Resolved by the recorded scan over `c` in `{-1/2, 0, 1/2, 1}`:
/// only `c = 0` works, i.e. the middle argument is `x_{(1,1)}` on the nose.
pub const PENTAGON_MIDDLE_C_HALVES: i64 = 0;

/// Extra power of `t` carried by the monomial image of each positive curve
/// class under [`skein_to_torus`]. Resolved by requiring the mapped product
/// to reproduce the reordering identity's left-hand side; no extra power is
/// needed.
pub const SKEIN_EXTRA_T_HALVES: i64 = 0;

/// First coefficient mismatch between two series, in degree-then-lex order.
fn first_discrepancy(lhs: &TorusSeries, rhs: &TorusSeries) -> Option<Discrepancy> {
    let mut keys: Vec<&ExpVec> = lhs.terms().map(|(k, _)| k).collect();
    keys.extend(rhs.terms().map(|(k, _)| k));
    keys.sort();
    keys.dedup();
    for k in keys {
        let l = lhs.coeff(k);
        let r = rhs.coeff(k);
        if l != r {
            return Some(Discrepancy::Exponent {
                exponent: k.entries().iter().map(|&v| i64::from(v)).collect(),
                lhs: render_ratfunc(&l),
                rhs: render_ratfunc(&r),
            });
        }
    }
    None
}

fn series_report(identity: &str, lhs: &TorusSeries, rhs: &TorusSeries, started: Instant) -> Report {
    let report = match first_discrepancy(lhs, rhs) {
        None => Report::pass(identity),
        Some(d) => Report::fail(identity, d),
    };
    report.with_runtime(started.elapsed().as_millis() as u64)
}

/// Check the pentagon relation at truncation `trunc` for a given middle
/// normalization `c` (in halves): with `E` the dilogarithm series,
///
/// ```text
/// E(x_1) E(x_2)  ?=  E(x_2) * M_c * E(x_1),
/// M_c = sum_j t^{c*j} * c_j * x_{(1,1)}^j.
/// ```
///
/// A mismatch is reported, not an error.
pub fn verify_pentagon(trunc: u32, middle_c_halves: i64) -> Report {
    let started = Instant::now();
    let n = 2;
    let e1 = ExpVec::unit(1, n);
    let e2 = ExpVec::unit(2, n);
    let d1 = qdilog(&e1, trunc).expect("unit vector is nonzero");
    let d2 = qdilog(&e2, trunc).expect("unit vector is nonzero");
    let lhs = series_mul(&d1, &d2).expect("same shape");
    let middle = qdilog_twisted(&ExpVec::new(vec![1, 1]), trunc, middle_c_halves)
        .expect("(1,1) is nonzero");
    let rhs = series_mul(&series_mul(&d2, &middle).expect("same shape"), &d1).expect("same shape");
    series_report("pentagon", &lhs, &rhs, started)
        .with_param("n", 2)
        .with_param("degree", i64::from(trunc))
        .with_param("middle_c_halves", middle_c_halves)
}

/// Product comparison underlying the reordering identity, without any
/// admissibility requirement on `seq` (used for negative controls):
///
/// ```text
/// E(x_{e_1}) ... E(x_{e_n})  ?=  E(x_{d_N}) ... E(x_{d_1})
/// ```
///
/// where `d_k` is the dimension vector of `seq[k-1]`.
pub fn reineke_product_check(n: u32, seq: &[Interval], trunc: u32) -> Report {
    let started = Instant::now();
    let mut lhs = TorusSeries::unit(n, trunc);
    for i in 1..=n {
        let d = qdilog(&ExpVec::unit(i, n), trunc).expect("unit vector");
        lhs = series_mul(&lhs, &d).expect("same shape");
    }
    let mut rhs = TorusSeries::unit(n, trunc);
    for iv in seq.iter().rev() {
        let d = qdilog(&dimension_vector(iv, n), trunc).expect("dimension vector is nonzero");
        rhs = series_mul(&rhs, &d).expect("same shape");
    }
    series_report("reineke", &lhs, &rhs, started)
        .with_param("n", i64::from(n))
        .with_param("degree", i64::from(trunc))
}

/// The reordering identity for an admissible order.
///
/// # Errors
/// [`QtorusError::NotAdmissible`] when the order's quiver size disagrees with
/// its intervals (cannot happen for a genuinely constructed
/// [`AdmissibleOrder`], which validates on construction).
pub fn verify_reineke(order: &AdmissibleOrder, trunc: u32) -> Result<Report, QtorusError> {
    if crate::quiver::is_admissible_order(order.n(), order.intervals())
        .map_err(|e| QtorusError::NotAdmissible(e.to_string()))?
        == false
    {
        return Err(QtorusError::NotAdmissible(format!(
            "order on {} intervals violates a cover relation",
            order.intervals().len()
        )));
    }
    Ok(reineke_product_check(order.n(), order.intervals(), trunc))
}

/// Monomial image of a word of positive curve classes in the quantum torus:
/// `L_{[i,j]}` maps to `x_d` with `d` the dimension vector of the reflected
/// interval `[n-j+1, n-i+1]`, and the word multiplies in reversed order.
///
/// # Errors
/// [`QtorusError::NegativeClass`] when the word contains a negative class.
pub fn skein_to_torus(
    word: &[CurveClass],
    n: u32,
    trunc: u32,
) -> Result<TorusSeries, QtorusError> {
    let mut out = TorusSeries::unit(n, trunc);
    for c in word.iter().rev() {
        if c.is_negative() {
            return Err(QtorusError::NegativeClass(c.to_string()));
        }
        let d = dimension_vector(&c.interval().reflect(n), n);
        let coeff = crate::qring::RatFunc::t_pow(SKEIN_EXTRA_T_HALVES);
        let mono = TorusSeries::monomial(n, trunc, d, coeff);
        out = series_mul(&out, &mono)?;
    }
    Ok(out)
}
