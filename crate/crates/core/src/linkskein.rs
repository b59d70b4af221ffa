//! Homology-level shadow of the face-operator calculus: the quantum torus on
//! `H_1` of the genus-`n` surface with a formal framing grading `a`, face
//! operators as finite term lists, and a truncated check of the conjugation
//! identity `A' E(x_E) = E(x_E) A`.
//!
//! The intersection form and the face-loop classes are *inputs*: they are
//! pinned by figures only for `n = 2`, so they ship as a JSON configuration
//! (see `data/linkskein-n2.json`) together with a recorded witness under
//! which the bigon check passes. Acceptance of this module is conditional on
//! that witness and quarantined from the core criteria.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qring::{render_ratfunc, LaurentPoly, RatFunc};
use crate::report::{Discrepancy, Report};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkskeinError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("face operator must contain exactly one unknot term, found {0}")]
    MissingUnknotTerm(usize),
    #[error("the conjugating class must be nonzero")]
    ZeroClass,
    #[error("bad configuration: {0}")]
    BadConfig(String),
}

/// A class in `H_1(Sigma_n)`, coordinates in the basis
/// `L_1, ..., L_n, M_1, ..., M_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SurfaceClass(pub Vec<i64>);

impl SurfaceClass {
    pub fn zero(n: u32) -> Self {
        SurfaceClass(vec![0; 2 * n as usize])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    pub fn add(&self, other: &SurfaceClass) -> SurfaceClass {
        SurfaceClass(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> SurfaceClass {
        SurfaceClass(self.0.iter().map(|v| v * k).collect())
    }
}

/// The antisymmetric intersection form on the `2n` basis classes. Only the
/// consecutive `L`-pairings are forced (they must match the curve module's
/// recorded convention); the rest is configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingConfig {
    n: u32,
    matrix: Vec<Vec<i64>>,
}

impl PairingConfig {
    /// # Errors
    /// [`LinkskeinError::BadConfig`] when the matrix is not `2n x 2n`
    /// antisymmetric or its `L`-chain entries contradict
    /// [`crate::curves::HOMOLOGY_PAIRING_SIGN`].
    pub fn new(n: u32, matrix: Vec<Vec<i64>>) -> Result<Self, LinkskeinError> {
        let d = 2 * n as usize;
        if matrix.len() != d || matrix.iter().any(|row| row.len() != d) {
            return Err(LinkskeinError::BadConfig(format!(
                "pairing matrix must be {d}x{d}"
            )));
        }
        for i in 0..d {
            for j in 0..d {
                if matrix[i][j] != -matrix[j][i] {
                    return Err(LinkskeinError::BadConfig(format!(
                        "pairing is not antisymmetric at ({i},{j})"
                    )));
                }
            }
        }
        for i in 0..n as usize - 1 {
            if matrix[i][i + 1] != crate::curves::HOMOLOGY_PAIRING_SIGN {
                return Err(LinkskeinError::BadConfig(format!(
                    "L_{} ^ L_{} must equal the recorded chain pairing {}",
                    i + 1,
                    i + 2,
                    crate::curves::HOMOLOGY_PAIRING_SIGN
                )));
            }
        }
        Ok(PairingConfig { n, matrix })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn pair(&self, x: &SurfaceClass, y: &SurfaceClass) -> Result<i64, LinkskeinError> {
        let d = 2 * self.n as usize;
        if x.0.len() != d || y.0.len() != d {
            return Err(LinkskeinError::DimensionMismatch(format!(
                "classes of dimension {} and {} under a {d}-dimensional pairing",
                x.0.len(),
                y.0.len()
            )));
        }
        let mut acc = 0;
        for i in 0..d {
            if x.0[i] == 0 {
                continue;
            }
            for j in 0..d {
                acc += x.0[i] * self.matrix[i][j] * y.0[j];
            }
        }
        Ok(acc)
    }
}

/// A basis element `a^k x_c` with a rational-function coefficient.
pub type SurfaceTerm = (i64, SurfaceClass, RatFunc);

/// Product of two terms: classes add, `a`-powers add, and the coefficient
/// picks up `t` to the pairing of the classes.
///
/// # Errors
/// [`LinkskeinError::DimensionMismatch`] when the classes live on different
/// surfaces.
pub fn surface_mul(
    x: &SurfaceTerm,
    y: &SurfaceTerm,
    cfg: &PairingConfig,
) -> Result<SurfaceTerm, LinkskeinError> {
    let twist = cfg.pair(&x.1, &y.1)?;
    Ok((
        x.0 + y.0,
        x.1.add(&y.1),
        (&x.2 * &y.2).mul_t_pow(twist),
    ))
}

/// One face-operator term. The unknot term (zero class) is `a^{a_pow} [O]`;
/// every other term is `(-a)^{a_pow} [class]`, so its scalar is
/// `(-1)^{a_pow}` with `a`-grading `a_pow`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceTerm {
    pub a_pow: i64,
    pub class: SurfaceClass,
}

/// The face-and-vertex operator: a finite sum of classes with framing
/// powers, containing exactly one unknot term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceOperator {
    terms: Vec<FaceTerm>,
}

/// # Errors
/// [`LinkskeinError::MissingUnknotTerm`] unless exactly one term has the
/// zero class.
pub fn face_operator(terms: Vec<FaceTerm>) -> Result<FaceOperator, LinkskeinError> {
    let unknots = terms.iter().filter(|t| t.class.is_zero()).count();
    if unknots != 1 {
        return Err(LinkskeinError::MissingUnknotTerm(unknots));
    }
    Ok(FaceOperator { terms })
}

impl FaceOperator {
    pub fn terms(&self) -> &[FaceTerm] {
        &self.terms
    }
}

type Elem = BTreeMap<(i64, SurfaceClass), RatFunc>;

fn accumulate(elem: &mut Elem, key: (i64, SurfaceClass), coeff: RatFunc) {
    if coeff.is_zero() {
        return;
    }
    match elem.entry(key) {
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

fn operator_elem(op: &FaceOperator) -> Elem {
    let mut elem = Elem::new();
    for t in &op.terms {
        let sign = if t.class.is_zero() || t.a_pow.rem_euclid(2) == 0 {
            RatFunc::one()
        } else {
            &RatFunc::zero() - &RatFunc::one()
        };
        accumulate(&mut elem, (t.a_pow, t.class.clone()), sign);
    }
    elem
}

/// `E(x_e)` truncated at `trunc` powers of `e`, with the same coefficient
/// family as the quantum-torus dilogarithm.
fn dilog_elem(e: &SurfaceClass, trunc: u32) -> Elem {
    let mut elem = Elem::new();
    let mut den = LaurentPoly::one();
    for j in 0..=i64::from(trunc) {
        if j > 0 {
            den = &den * &LaurentPoly::from_terms([(2 * j, 1), (0, -1)]);
        }
        let coeff = RatFunc::new(LaurentPoly::t_pow(j), den.clone()).expect("nonzero");
        accumulate(&mut elem, (0, e.scale(j)), coeff);
    }
    elem
}

fn elem_mul(a: &Elem, b: &Elem, cfg: &PairingConfig) -> Result<Elem, LinkskeinError> {
    let mut out = Elem::new();
    for ((pa, ca), fa) in a {
        for ((pb, cb), fb) in b {
            let term = surface_mul(
                &(*pa, ca.clone(), fa.clone()),
                &(*pb, cb.clone(), fb.clone()),
                cfg,
            )?;
            accumulate(&mut out, (term.0, term.1), term.2);
        }
    }
    Ok(out)
}

/// Check `after * E(x_e) = E(x_e) * before` in the surface quantum torus,
/// truncated at `trunc` powers of `e`.
///
/// # Errors
/// [`LinkskeinError::ZeroClass`] when `e = 0`; dimension mismatches
/// propagate.
pub fn verify_conjugation(
    before: &FaceOperator,
    after: &FaceOperator,
    e: &SurfaceClass,
    trunc: u32,
    cfg: &PairingConfig,
) -> Result<Report, LinkskeinError> {
    if e.is_zero() {
        return Err(LinkskeinError::ZeroClass);
    }
    let started = std::time::Instant::now();
    let dilog = dilog_elem(e, trunc);
    let lhs = elem_mul(&operator_elem(after), &dilog, cfg)?;
    let rhs = elem_mul(&dilog, &operator_elem(before), cfg)?;
    let mut keys: Vec<&(i64, SurfaceClass)> = lhs.keys().chain(rhs.keys()).collect();
    keys.sort();
    keys.dedup();
    let mut report = Report::pass("conjugation");
    for k in keys {
        let l = lhs.get(k).cloned().unwrap_or_else(RatFunc::zero);
        let r = rhs.get(k).cloned().unwrap_or_else(RatFunc::zero);
        if l != r {
            let mut exponent = vec![k.0];
            exponent.extend(&k.1 .0);
            report = Report::fail(
                "conjugation",
                Discrepancy::Exponent {
                    // a-power first, then the H_1 coordinates.
                    exponent,
                    lhs: render_ratfunc(&l),
                    rhs: render_ratfunc(&r),
                },
            );
            break;
        }
    }
    Ok(report
        .with_param("degree", i64::from(trunc))
        .with_param("n", i64::from(cfg.n))
        .with_runtime(started.elapsed().as_millis() as u64))
}

/// On-disk configuration: the `n = 2` intersection form, the figure's edge
/// classes, the face cycles they bound, and the bigon conjugation scenario.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LinkskeinConfig {
    pub version: u32,
    pub n: u32,
    /// Basis names, for documentation only.
    pub basis: Vec<String>,
    pub pairing: Vec<Vec<i64>>,
    /// Homology classes of the labeled edges of the figure.
    pub edge_classes: BTreeMap<String, Vec<i64>>,
    pub faces: Vec<FaceData>,
    /// The bigon operator, shared by both sides of the conjugation check.
    pub bigon_operator: Vec<FaceTerm>,
    /// The class conjugated along (the mutated edge's curve).
    pub conjugation_e: Vec<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FaceData {
    pub name: String,
    pub cycle: Vec<String>,
    pub signs: Vec<i64>,
}

impl LinkskeinConfig {
    /// # Errors
    /// [`LinkskeinError::BadConfig`] on malformed JSON or pairing data.
    pub fn from_json(text: &str) -> Result<Self, LinkskeinError> {
        let cfg: LinkskeinConfig = serde_json::from_str(text)
            .map_err(|e| LinkskeinError::BadConfig(e.to_string()))?;
        cfg.pairing_config()?;
        Ok(cfg)
    }

    pub fn pairing_config(&self) -> Result<PairingConfig, LinkskeinError> {
        PairingConfig::new(self.n, self.pairing.clone())
    }

    /// The label-consistency data test: around every face the signed edge
    /// classes sum to zero in `H_1`.
    pub fn check_face_labels(&self) -> Report {
        for face in &self.faces {
            let mut total = SurfaceClass::zero(self.n);
            if face.cycle.len() != face.signs.len() {
                return Report::fail(
                    "face_labels",
                    Discrepancy::Diff {
                        diff: format!("face {}: cycle/sign length mismatch", face.name),
                    },
                );
            }
            for (name, sign) in face.cycle.iter().zip(&face.signs) {
                let Some(class) = self.edge_classes.get(name) else {
                    return Report::fail(
                        "face_labels",
                        Discrepancy::Diff {
                            diff: format!("face {}: unknown edge {name}", face.name),
                        },
                    );
                };
                total = total.add(&SurfaceClass(class.clone()).scale(*sign));
            }
            if !total.is_zero() {
                return Report::fail(
                    "face_labels",
                    Discrepancy::Diff {
                        diff: format!("face {} does not close up: {:?}", face.name, total.0),
                    },
                );
            }
        }
        Report::pass("face_labels").with_param("faces", self.faces.len() as i64)
    }

    /// Run the bigon conjugation check with the shipped witness.
    ///
    /// # Errors
    /// Propagates configuration and dimension errors.
    pub fn check_bigon_conjugation(&self, trunc: u32) -> Result<Report, LinkskeinError> {
        let cfg = self.pairing_config()?;
        let op = face_operator(self.bigon_operator.clone())?;
        let e = SurfaceClass(self.conjugation_e.clone());
        verify_conjugation(&op, &op, &e, trunc, &cfg)
    }
}

/// The shipped `n = 2` configuration (also available at
/// `data/linkskein-n2.json`).
pub const N2_CONFIG_JSON: &str = include_str!("../../../data/linkskein-n2.json");
