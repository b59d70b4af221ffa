//! Positive mutation with label transport.
//!
//! All pinning choices here were fixed once by requiring every before/after
//! labeled-graph pair of the two mutation sequences to reproduce the graphs
//! built directly from their defining tuples; the golden tests in
//! [`sequences`](super::sequences) police them.
//!
//! * The two *designated* attachments (one per endpoint of the mutated edge)
//!   are the legs that come next counterclockwise from the mutated edge at
//!   their vertex. They swap endpoints and receive the twist.
//! * A designated edge with label `c` is rewritten by twisting along the
//!   mutated curve oriented to match `c`'s sign, so negatively-labeled legs
//!   receive the inverse twist.
//! * A designated half-edge appends the mutated curve to its twist word
//!   exactly when its boundary stub crosses the curve's column span
//!   `[lo-1, hi]`; the stub of `H_k` sits at column `k`.
//! * The mutated edge keeps its endpoints, its label is negated, and the
//!   right vertex moves to height `lo` (the label interval's left index).

use crate::curves::{dehn_twist, CurveClass};

use super::graph::MutGraph;
use super::GraphsError;

/// A leg at one endpoint of the mutated edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Leg {
    Edge(usize),
    Half(i64),
}

fn legs_at(g: &MutGraph, v: usize, skip_edge: usize) -> Vec<Leg> {
    let mut out = Vec::with_capacity(2);
    for (i, e) in g.edges().iter().enumerate() {
        if i != skip_edge && (e.a == v || e.b == v) {
            out.push(Leg::Edge(i));
        }
    }
    for (id, h) in g.half_edges() {
        if h.vertex == v {
            out.push(Leg::Half(id));
        }
    }
    out
}

/// Direction of a leg seen from vertex `v`. Half-edge stubs run to their
/// fixed boundary exit `(k, 1)` on the top edge of the subsquare.
fn leg_direction(g: &MutGraph, v: usize, leg: Leg) -> (i64, i64) {
    let (vx, vy) = g.position(v);
    match leg {
        Leg::Edge(i) => {
            let e = &g.edges()[i];
            let other = if e.a == v { e.b } else { e.a };
            let (ox, oy) = g.position(other);
            (ox - vx, oy - vy)
        }
        Leg::Half(id) => (id - vx, 1 - vy),
    }
}

/// Strictly-ordered key for the counterclockwise angle from `base` to `v`,
/// in `(0, 2pi)`: compare by half-plane class, then by cross product within
/// the class. Exact integer arithmetic throughout.
fn ccw_less(base: (i64, i64), v1: (i64, i64), v2: (i64, i64)) -> bool {
    fn class(base: (i64, i64), v: (i64, i64)) -> i8 {
        let cross = base.0 * v.1 - base.1 * v.0;
        let dot = base.0 * v.0 + base.1 * v.1;
        match (cross.signum(), dot.signum()) {
            (1, _) => 0,
            (0, -1) => 1,
            (-1, _) => 2,
            _ => 3, // collinear with the base direction
        }
    }
    let (c1, c2) = (class(base, v1), class(base, v2));
    if c1 != c2 {
        return c1 < c2;
    }
    v1.0 * v2.1 - v1.1 * v2.0 > 0
}

fn designated_leg(g: &MutGraph, v: usize, edge_idx: usize) -> Result<Leg, GraphsError> {
    let e = &g.edges()[edge_idx];
    let other = if e.a == v { e.b } else { e.a };
    let (vx, vy) = g.position(v);
    let (ox, oy) = g.position(other);
    let base = (ox - vx, oy - vy);
    let legs = legs_at(g, v, edge_idx);
    if legs.len() != 2 {
        return Err(GraphsError::Internal(format!(
            "vertex v_{v} has {} non-mutated legs, expected 2",
            legs.len()
        )));
    }
    let d0 = leg_direction(g, v, legs[0]);
    let d1 = leg_direction(g, v, legs[1]);
    Ok(if ccw_less(base, d0, d1) {
        legs[0]
    } else {
        legs[1]
    })
}

/// Apply the label transport to a designated edge leg.
fn twist_edge_label(mutated: &CurveClass, label: &CurveClass) -> Result<CurveClass, GraphsError> {
    let twister = mutated.with_sign_of(label);
    Ok(dehn_twist(&twister, label)?)
}

/// Positive mutation along the unique edge labeled `edge_curve`.
///
/// # Errors
/// [`GraphsError::NoSuchEdge`] when no edge carries the label,
/// [`GraphsError::BigonEdge`] when the edge bounds a bigon, and
/// [`GraphsError::Twist`] when the label transport falls outside the
/// rewrite calculus (which would falsify the construction; it never fires
/// along the two mutation sequences).
pub fn positive_mutation(g: &MutGraph, edge_curve: &CurveClass) -> Result<MutGraph, GraphsError> {
    let matches: Vec<usize> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.label == *edge_curve)
        .map(|(i, _)| i)
        .collect();
    let [edge_idx] = matches.as_slice() else {
        return if matches.is_empty() {
            Err(GraphsError::NoSuchEdge(edge_curve.to_string()))
        } else {
            Err(GraphsError::Internal(format!(
                "label {edge_curve} is not unique"
            )))
        };
    };
    let edge_idx = *edge_idx;
    let edge = g.edges()[edge_idx];
    if g.edges()
        .iter()
        .enumerate()
        .any(|(i, e)| i != edge_idx && (e.a, e.b) == (edge.a, edge.b))
    {
        return Err(GraphsError::BigonEdge(edge_curve.to_string()));
    }

    let left = edge.a;
    let right = edge.b;
    let des_left = designated_leg(g, left, edge_idx)?;
    let des_right = designated_leg(g, right, edge_idx)?;

    let mut out = g.clone();
    let lo = edge.label.interval().lo();
    let hi = edge.label.interval().hi();
    {
        let (ys, edges, half_edges) = out.parts_mut();
        edges[edge_idx].label = edge.label.negate();
        // The raised endpoint lands at the height named by the label's left
        // interval index.
        ys[right] = i64::from(lo) - i64::from(g.n());

        let mut apply = |leg: Leg, from: usize, to: usize| -> Result<(), GraphsError> {
            match leg {
                Leg::Edge(i) => {
                    let e = &mut edges[i];
                    if e.a == from {
                        e.a = to;
                    } else {
                        e.b = to;
                    }
                    if e.a > e.b {
                        std::mem::swap(&mut e.a, &mut e.b);
                    }
                    e.label = twist_edge_label(&edge.label, &e.label)?;
                    Ok(())
                }
                Leg::Half(id) => {
                    let h = &mut half_edges[(id + 1) as usize];
                    h.vertex = to;
                    let column_span = i64::from(lo) - 1..=i64::from(hi);
                    if column_span.contains(&id) {
                        h.word.push(edge.label);
                    }
                    Ok(())
                }
            }
        };
        apply(des_left, left, right)?;
        apply(des_right, right, left)?;
        let _ = half_edges;
    }
    out.sort_edges();
    if let Err(msg) = out.validate() {
        return Err(GraphsError::Internal(format!(
            "mutation along {edge_curve} broke an invariant: {msg}"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::build::{graph_for_tuple, square_graph};
    use crate::graphs::graph::graphs_equal;

    #[test]
    fn missing_edge_is_reported() {
        let g = square_graph(2);
        let err = positive_mutation(&g, &CurveClass::plus(1, 2)).unwrap_err();
        assert!(matches!(err, GraphsError::NoSuchEdge(_)));
    }

    #[test]
    fn ccw_ordering() {
        let east = (1, 0);
        assert!(ccw_less(east, (0, 1), (-1, 0))); // north before west
        assert!(ccw_less(east, (-1, 0), (0, -1))); // west before south
        assert!(ccw_less(east, (1, 1), (1, 2))); // shallower NE first
        let west = (-1, 0);
        assert!(ccw_less(west, (-1, -1), (1, -3))); // SW before SSE
        assert!(ccw_less(west, (0, -1), (1, 0))); // south before east
        assert!(ccw_less(west, (2, 3), (0, 1))); // wrap: ENE before N
    }

    /// The first short-sequence step in full detail: mutate the square along
    /// `+L_n`. The right neighbor half-edges swap, both twist words grow by
    /// the mutated curve, and the mutated edge flips sign.
    #[test]
    fn first_short_step_n2() {
        let g = square_graph(2);
        let out = positive_mutation(&g, &CurveClass::plus(2, 2)).unwrap();
        assert_eq!(out.position(2), (2, 0));
        let labels: Vec<String> = out.edges().iter().map(|e| e.label.to_string()).collect();
        assert_eq!(labels, vec!["+L[1,1]", "-L[2,2]"]);
        // H_1 moved from v_1 to v_2 and was twisted; H_3 moved from v_2 to
        // v_1 and records the twist word only if its stub crosses column
        // span [1, 2] -- it sits at column 3, so it does not.
        assert_eq!(out.half_edge(1).vertex, 2);
        assert_eq!(out.half_edge(1).word, vec![CurveClass::plus(2, 2)]);
        assert_eq!(out.half_edge(3).vertex, 1);
        assert!(out.half_edge(3).word.is_empty());
        // Untouched legs stay put.
        assert_eq!(out.half_edge(2).vertex, 2);
        assert_eq!(out.half_edge(-1).vertex, 0);
    }

    /// A long-sequence step whose designated legs are both edges; the labels
    /// transport by left addition and right removal.
    #[test]
    fn adjacent_edge_case_labels() {
        // (1,1,1) -> (1,2,1): mutate along +L_{[2,2]}.
        let g = graph_for_tuple(3, &[1, 1, 1]).unwrap();
        let out = positive_mutation(&g, &CurveClass::plus(2, 2)).unwrap();
        let expected = graph_for_tuple(3, &[1, 2, 1]).unwrap();
        assert!(
            graphs_equal(&out, &expected),
            "{:?}",
            crate::graphs::graph::graph_diff(&out, &expected)
        );
        // The neighbor +L_3 became +L_{[2,3]} (left addition along +L_2).
        assert!(out
            .edges()
            .iter()
            .any(|e| e.label == CurveClass::plus(2, 3)));
    }

    /// The removal-side neighbor case: a negatively-labeled leg receives the
    /// inverse twist.
    #[test]
    fn removal_case_labels() {
        // (1,1,0) -> (1,2,0): mutate along +L_{[2,2]}; the riser -L_{[1,2]}
        // at the right vertex becomes -L_1.
        let g = graph_for_tuple(3, &[1, 1, 0]).unwrap();
        let out = positive_mutation(&g, &CurveClass::plus(2, 2)).unwrap();
        let expected = graph_for_tuple(3, &[1, 2, 0]).unwrap();
        assert!(
            graphs_equal(&out, &expected),
            "{:?}",
            crate::graphs::graph::graph_diff(&out, &expected)
        );
        assert!(out
            .edges()
            .iter()
            .any(|e| e.label == CurveClass::minus(1, 1)));
    }

    /// Overspill case: the upper neighbor shares the mutated edge's left
    /// endpoint and flips orientation.
    #[test]
    fn overspill_case_labels() {
        // (1,2,1) -> (1,2,2): mutate along +L_{[2,3]}; -L_{[2,2]} at the
        // left vertex becomes +L_{[3,3]} and -L_{[1,3]} at the right vertex
        // becomes -L_1.
        let g = graph_for_tuple(3, &[1, 2, 1]).unwrap();
        let out = positive_mutation(&g, &CurveClass::plus(2, 3)).unwrap();
        let expected = graph_for_tuple(3, &[1, 2, 2]).unwrap();
        assert!(
            graphs_equal(&out, &expected),
            "{:?}",
            crate::graphs::graph::graph_diff(&out, &expected)
        );
    }

    /// Half-edge replacement case: at the right end of the bottom row the
    /// designated leg is the boundary stub `H_{n+1}` itself.
    #[test]
    fn half_edge_replacement_case() {
        // (1,2,0) -> (1,2,1): mutate along +L_{[1,3]}; H_4 swaps from v_3 to
        // v_0 without picking up a twist word.
        let g = graph_for_tuple(3, &[1, 2, 0]).unwrap();
        assert_eq!(g.half_edge(4).vertex, 3);
        let out = positive_mutation(&g, &CurveClass::plus(1, 3)).unwrap();
        let expected = graph_for_tuple(3, &[1, 2, 1]).unwrap();
        assert!(
            graphs_equal(&out, &expected),
            "{:?}",
            crate::graphs::graph::graph_diff(&out, &expected)
        );
        assert_eq!(out.half_edge(4).vertex, 0);
        assert!(out.half_edge(4).word.is_empty());
    }
}
