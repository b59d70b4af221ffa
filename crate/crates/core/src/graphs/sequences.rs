//! The short and long mutation sequences and mutation equivalence.

use std::time::Instant;

use serde::Serialize;

use crate::curves::CurveClass;
use crate::quiver::{enumerate_admissible_orders, order_to_tuple_sequence, AdmissibleOrder};
use crate::report::{Discrepancy, Report};

use super::build::{canoe_graph, graph_for_tuple, square_graph};
use super::graph::{graph_diff, MutGraph};
use super::mutation::positive_mutation;
use super::GraphsError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub mutated: CurveClass,
    pub graph: MutGraph,
}

/// A run of positive mutations: `steps[k].graph` is the mutation of the
/// previous graph along an edge labeled `steps[k].mutated`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MutationTrace {
    pub initial: MutGraph,
    pub steps: Vec<TraceStep>,
}

impl MutationTrace {
    pub fn final_graph(&self) -> &MutGraph {
        self.steps.last().map_or(&self.initial, |s| &s.graph)
    }

    /// Graph after `k` steps; `k = 0` is the initial graph.
    pub fn graph_at(&self, k: usize) -> &MutGraph {
        if k == 0 {
            &self.initial
        } else {
            &self.steps[k - 1].graph
        }
    }

    pub fn mutated_curves(&self) -> Vec<CurveClass> {
        self.steps.iter().map(|s| s.mutated).collect()
    }
}

/// The `n` mutations along `+L_n, +L_{n-1}, ..., +L_1` from the square graph
/// to the canoe graph.
///
/// # Errors
/// Propagates mutation errors; none occur for `n >= 2`.
pub fn short_sequence(n: u32) -> Result<MutationTrace, GraphsError> {
    let initial = square_graph(n);
    let mut g = initial.clone();
    let mut steps = Vec::with_capacity(n as usize);
    for j in (1..=n).rev() {
        let curve = CurveClass::plus(j, j);
        g = positive_mutation(&g, &curve)?;
        steps.push(TraceStep {
            mutated: curve,
            graph: g.clone(),
        });
    }
    Ok(MutationTrace { initial, steps })
}

/// The `n(n+1)/2` mutations along `+L_{a_1}, ..., +L_{a_N}` prescribed by an
/// admissible order, from the square graph to the canoe graph.
///
/// # Errors
/// [`GraphsError::MissingPositiveEdge`] if some step finds no positively
/// labeled edge for its interval (that would falsify the construction), plus
/// propagated mutation errors.
pub fn long_sequence(order: &AdmissibleOrder) -> Result<MutationTrace, GraphsError> {
    let initial = square_graph(order.n());
    let mut g = initial.clone();
    let mut steps = Vec::with_capacity(order.intervals().len());
    for iv in order.intervals() {
        let curve = CurveClass::plus(iv.lo(), iv.hi());
        if !g.edges().iter().any(|e| e.label == curve) {
            return Err(GraphsError::MissingPositiveEdge(iv.to_string()));
        }
        g = positive_mutation(&g, &curve)?;
        steps.push(TraceStep {
            mutated: curve,
            graph: g.clone(),
        });
    }
    Ok(MutationTrace { initial, steps })
}

/// For every admissible order of size `n`: run the long sequence, check that
/// it mutates along exactly the order's intervals, that each visited graph
/// is the one built directly from its tuple, and that the final graph equals
/// both the short sequence's final graph and the canoe graph.
///
/// # Errors
/// [`crate::quiver::QuiverError::LimitExceeded`] above the enumeration cap;
/// mutation errors are reported as failures, not errors.
pub fn verify_mutation_equivalence(n: u32, limit: Option<u32>) -> Result<Report, GraphsError> {
    let started = Instant::now();
    let orders = enumerate_admissible_orders(n, limit)?;
    let base = Report::pass("mutation_equivalence")
        .with_param("n", i64::from(n))
        .with_param("orders", orders.len() as i64);
    let fail = |diff: String| {
        let mut r = Report::fail("mutation_equivalence", Discrepancy::Diff { diff });
        r.params = base.params.clone();
        r.with_runtime(started.elapsed().as_millis() as u64)
    };

    let short = match short_sequence(n) {
        Ok(t) => t,
        Err(e) => return Ok(fail(format!("short sequence failed: {e}"))),
    };
    let canoe = canoe_graph(n);
    if let Some(diff) = graph_diff(short.final_graph(), &canoe) {
        return Ok(fail(format!(
            "short sequence does not end at the canoe graph: {diff}"
        )));
    }

    for (oi, order) in orders.iter().enumerate() {
        let long = match long_sequence(order) {
            Ok(t) => t,
            Err(e) => return Ok(fail(format!("order #{oi}: long sequence failed: {e}"))),
        };
        let expected: Vec<CurveClass> = order
            .intervals()
            .iter()
            .map(|iv| CurveClass::plus(iv.lo(), iv.hi()))
            .collect();
        if long.mutated_curves() != expected {
            return Ok(fail(format!(
                "order #{oi}: mutated curves differ from the order's intervals"
            )));
        }
        let ts = order_to_tuple_sequence(order);
        for (k, tuple) in ts.tuples().iter().enumerate() {
            let direct = match graph_for_tuple(n, tuple) {
                Ok(g) => g,
                Err(e) => return Ok(fail(format!("order #{oi} step {k}: {e}"))),
            };
            if let Some(diff) = graph_diff(long.graph_at(k), &direct) {
                return Ok(fail(format!(
                    "order #{oi} step {k}: trace disagrees with the tuple graph: {diff}"
                )));
            }
        }
        if let Some(diff) = graph_diff(long.final_graph(), short.final_graph()) {
            return Ok(fail(format!(
                "order #{oi}: long and short sequences end differently: {diff}"
            )));
        }
    }
    Ok(base.with_runtime(started.elapsed().as_millis() as u64))
}
