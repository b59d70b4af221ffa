//! The bottom-row graph model and its structural equality.

use serde::{Deserialize, Serialize};

use crate::curves::CurveClass;

/// An internal edge between `v_a` and `v_b` (`a < b`), labeled by a signed
/// interval curve. By construction the labeled interval of an edge between
/// `v_a` and `v_b` is always `[a+1, b]` up to sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub label: CurveClass,
}

/// One of the fixed boundary stubs `H_{-1} .. H_{n+1}`, attached to a vertex
/// and carrying the word of twists applied to it, in application order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfEdge {
    pub vertex: usize,
    pub word: Vec<CurveClass>,
}

/// A cubic planar graph in the bottom-row model: vertex `v_k` sits at column
/// `k`; only heights change under mutation. Every vertex has total degree 3
/// counting half-edges, and at most one edge joins any vertex pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutGraph {
    n: u32,
    /// `ys[k]` is the y-coordinate of `v_k`; the column is `k` itself.
    ys: Vec<i64>,
    /// Sorted by `(a, b)`.
    edges: Vec<Edge>,
    /// Index `i` holds `H_{i-1}`, so ids run `-1 ..= n+1`.
    half_edges: Vec<HalfEdge>,
}

impl MutGraph {
    pub(super) fn from_parts(
        n: u32,
        ys: Vec<i64>,
        mut edges: Vec<Edge>,
        half_edges: Vec<HalfEdge>,
    ) -> Self {
        assert_eq!(ys.len(), n as usize + 1);
        assert_eq!(half_edges.len(), n as usize + 3);
        edges.sort_by_key(|e| (e.a, e.b));
        MutGraph {
            n,
            ys,
            edges,
            half_edges,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn num_vertices(&self) -> usize {
        self.ys.len()
    }

    /// Position of `v_k` as `(column, y)`.
    pub fn position(&self, k: usize) -> (i64, i64) {
        (k as i64, self.ys[k])
    }

    /// Height above the bottom row: `y = -n + height`.
    pub fn height(&self, k: usize) -> i64 {
        self.ys[k] + i64::from(self.n)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Half-edge ids `-1 ..= n+1` with their data.
    pub fn half_edges(&self) -> impl Iterator<Item = (i64, &HalfEdge)> {
        self.half_edges
            .iter()
            .enumerate()
            .map(|(i, h)| (i as i64 - 1, h))
    }

    pub fn half_edge(&self, id: i64) -> &HalfEdge {
        &self.half_edges[(id + 1) as usize]
    }

    pub(super) fn parts_mut(&mut self) -> (&mut Vec<i64>, &mut Vec<Edge>, &mut Vec<HalfEdge>) {
        (&mut self.ys, &mut self.edges, &mut self.half_edges)
    }

    pub(super) fn sort_edges(&mut self) {
        self.edges.sort_by_key(|e| (e.a, e.b));
    }

    pub fn degree(&self, k: usize) -> usize {
        self.edges.iter().filter(|e| e.a == k || e.b == k).count()
            + self.half_edges.iter().filter(|h| h.vertex == k).count()
    }

    /// Check the structural invariants: cubic, one edge per vertex pair,
    /// heights within `[-n, n]`, labels matching endpoint columns.
    pub fn validate(&self) -> Result<(), String> {
        for k in 0..self.num_vertices() {
            let d = self.degree(k);
            if d != 3 {
                return Err(format!("vertex v_{k} has degree {d}"));
            }
        }
        for w in self.edges.windows(2) {
            if (w[0].a, w[0].b) == (w[1].a, w[1].b) {
                return Err(format!("two edges between v_{} and v_{}", w[0].a, w[0].b));
            }
        }
        for (k, &y) in self.ys.iter().enumerate() {
            if y < -i64::from(self.n) || y > i64::from(self.n) {
                return Err(format!("vertex v_{k} at height {y} out of range"));
            }
        }
        for e in &self.edges {
            let iv = e.label.interval();
            if (iv.lo() as usize) != e.a + 1 || (iv.hi() as usize) != e.b {
                return Err(format!(
                    "edge v_{}-v_{} labeled {} does not match its endpoints",
                    e.a, e.b, e.label
                ));
            }
        }
        Ok(())
    }
}

/// Cancel adjacent mutually-inverse twists; no other reduction.
pub fn reduce_word(word: &[CurveClass]) -> Vec<CurveClass> {
    let mut out: Vec<CurveClass> = Vec::with_capacity(word.len());
    for &c in word {
        if out.last() == Some(&c.negate()) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out
}

/// First structural difference between two graphs under the fixed vertex
/// identification, or `None` when they agree: positions, labeled edge sets,
/// and half-edge attachments with reduced twist words must all coincide.
pub fn graph_diff(a: &MutGraph, b: &MutGraph) -> Option<String> {
    if a.n != b.n {
        return Some(format!("different n: {} vs {}", a.n, b.n));
    }
    for k in 0..a.num_vertices() {
        if a.ys[k] != b.ys[k] {
            return Some(format!(
                "vertex v_{k} at height {} vs {}",
                a.ys[k], b.ys[k]
            ));
        }
    }
    for (ea, eb) in a.edges.iter().zip(&b.edges) {
        if (ea.a, ea.b) != (eb.a, eb.b) {
            return Some(format!(
                "edge sets differ: v_{}-v_{} vs v_{}-v_{}",
                ea.a, ea.b, eb.a, eb.b
            ));
        }
        if ea.label != eb.label {
            return Some(format!(
                "edge v_{}-v_{} labeled {} vs {}",
                ea.a, ea.b, ea.label, eb.label
            ));
        }
    }
    if a.edges.len() != b.edges.len() {
        return Some(format!(
            "{} edges vs {} edges",
            a.edges.len(),
            b.edges.len()
        ));
    }
    for (id, (ha, hb)) in a.half_edges.iter().zip(&b.half_edges).enumerate() {
        let id = id as i64 - 1;
        if ha.vertex != hb.vertex {
            return Some(format!(
                "half-edge H_{id} attached to v_{} vs v_{}",
                ha.vertex, hb.vertex
            ));
        }
        let wa = reduce_word(&ha.word);
        let wb = reduce_word(&hb.word);
        if wa != wb {
            let show = |w: &[CurveClass]| {
                w.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
            };
            return Some(format!(
                "half-edge H_{id} twist word [{}] vs [{}]",
                show(&wa),
                show(&wb)
            ));
        }
    }
    None
}

pub fn graphs_equal(a: &MutGraph, b: &MutGraph) -> bool {
    graph_diff(a, b).is_none()
}
