//! Exact verification of q-dilogarithm identities on quantum tori attached to
//! the unidirectional `A_n` quiver, together with the planar-graph mutation
//! bookkeeping (square and canoe graphs, Dehn-twist label transport) that
//! underlies them.
//!
//! The crate is organized by subject:
//!
//! * [`qring`] — Laurent polynomials and rational functions in `t = q^{1/2}`
//!   over big integers, the coefficient field of everything else.
//! * [`quiver`] — interval representations of the `A_n` quiver, Hom-vanishing,
//!   admissible orders and their tuple-sequence encoding.
//! * [`qtorus`] — the quantum torus on `N^n`, truncated dilogarithm series,
//!   and the pentagon / product-reordering identity checks.
//! * [`curves`] — signed interval curves on the chain `L_1..L_n`, the
//!   Dehn-twist rewrite calculus, and a homology-level oracle.
//! * [`graphs`] — cubic planar graphs with labeled edges, positive mutation,
//!   the short and long mutation sequences, and mutation equivalence.
//! * [`linkskein`] — the homology-level shadow of face operators and the
//!   tangle conjugation identity.
//! * [`report`] — the JSON report type shared by all checks and the CLI.

pub mod curves;
pub mod graphs;
pub mod linkskein;
pub mod qring;
pub mod qtorus;
pub mod quiver;
pub mod report;
