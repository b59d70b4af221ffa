//! Lattice exponents and the quiver's antisymmetric form.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::quiver::QuiverSpec;

use super::QtorusError;

/// A point of `N^n`, the exponent of a quantum-torus monomial.
///
/// Ordered by total degree first, then lexicographically, so that "first
/// discrepancy" in reports means lowest degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExpVec(Vec<u32>);

impl ExpVec {
    pub fn new(entries: Vec<u32>) -> Self {
        ExpVec(entries)
    }

    pub fn zero(n: u32) -> Self {
        ExpVec(vec![0; n as usize])
    }

    /// The standard basis vector `e_i`, `1 <= i <= n`.
    pub fn unit(i: u32, n: u32) -> Self {
        assert!(1 <= i && i <= n);
        let mut v = vec![0; n as usize];
        v[(i - 1) as usize] = 1;
        ExpVec(v)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&v| u64::from(v)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    pub fn add(&self, other: &ExpVec) -> ExpVec {
        debug_assert_eq!(self.dim(), other.dim());
        ExpVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn scale(&self, k: u32) -> ExpVec {
        ExpVec(self.0.iter().map(|v| v * k).collect())
    }
}

impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A half-integer, stored as its numerator over 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    halves: i64,
}

impl HalfInt {
    pub fn from_halves(halves: i64) -> Self {
        HalfInt { halves }
    }

    pub fn halves(&self) -> i64 {
        self.halves
    }
}

impl std::fmt::Display for HalfInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.halves % 2 == 0 {
            write!(f, "{}", self.halves / 2)
        } else {
            write!(f, "{}/2", self.halves)
        }
    }
}

/// `2<a, b>` for the unidirectional quiver form `<e_i, e_{i+1}> = 1/2`,
/// extended bilinearly. Working in halves keeps everything integral:
/// a product `x_a x_b` picks up `t^{pairing_halves(a,b)}`.
pub(crate) fn pairing_halves(a: &ExpVec, b: &ExpVec) -> i64 {
    let (a, b) = (a.entries(), b.entries());
    debug_assert_eq!(a.len(), b.len());
    let mut total = 0i64;
    for i in 0..a.len().saturating_sub(1) {
        total += i64::from(a[i]) * i64::from(b[i + 1]) - i64::from(a[i + 1]) * i64::from(b[i]);
    }
    total
}

/// The antisymmetric form `<a, b>` of the quiver, as a half-integer.
///
/// # Errors
/// [`QtorusError::DimensionMismatch`] when the vectors do not live on the
/// quiver's lattice.
pub fn qform(spec: &QuiverSpec, a: &ExpVec, b: &ExpVec) -> Result<HalfInt, QtorusError> {
    if a.dim() != spec.n || b.dim() != spec.n {
        return Err(QtorusError::DimensionMismatch(format!(
            "form on N^{} applied to vectors of dimension {} and {}",
            spec.n,
            a.dim(),
            b.dim()
        )));
    }
    Ok(HalfInt::from_halves(pairing_halves(a, b)))
}
