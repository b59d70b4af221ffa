//! Construction of the graph family `Gamma_A` indexed by height tuples,
//! with the square and canoe graphs as the extreme members.

use crate::curves::CurveClass;

use super::graph::{Edge, HalfEdge, MutGraph};
use super::GraphsError;

fn staircase_prefix_len(entries: &[u32]) -> usize {
    let mut m = 0;
    while m < entries.len() && entries[m] == (m + 1) as u32 {
        m += 1;
    }
    m
}

/// Build the graph for a height tuple `A = (i_1, ..., i_n)`:
///
/// * `v_0` at height 0 and `v_k` at height `i_k`, column fixed at `k`;
/// * consecutive same-height vertices joined by `+L_{[a+1,b]}`;
/// * a riser `-L_{[l+1, mu]}` from each staircase vertex `v_l` (`l < M`) to
///   the last vertex at height `l+1`;
/// * half-edges `H_k` at `v_{k+1}` for `k < M` (carrying the twist word
///   `[+L_{k+1}]` for `k >= 0`), `H_M` at `v_M`, `H_k` at `v_k` for `k > M`,
///   and `H_{n+1}` at `v_n` when `i_n = 0`, else at `v_0`;
///
/// where `M` is the length of the staircase prefix `(1, 2, ...)` of `A`.
///
/// # Errors
/// [`GraphsError::InvalidTuple`] unless `i_j <= j` and the tuple is
/// non-increasing after deleting the first `M - 1` entries.
pub fn graph_for_tuple(n: u32, entries: &[u32]) -> Result<MutGraph, GraphsError> {
    if entries.len() != n as usize {
        return Err(GraphsError::InvalidTuple(format!(
            "expected {n} entries, got {}",
            entries.len()
        )));
    }
    for (k, &v) in entries.iter().enumerate() {
        if v > (k + 1) as u32 {
            return Err(GraphsError::InvalidTuple(format!(
                "entry {} at position {} exceeds its position",
                v,
                k + 1
            )));
        }
    }
    let m = staircase_prefix_len(entries);
    let tail_from = m.saturating_sub(1);
    if entries[tail_from..].windows(2).any(|w| w[0] < w[1]) {
        return Err(GraphsError::InvalidTuple(
            "tuple rises after its staircase prefix".to_string(),
        ));
    }

    let num_v = n as usize + 1;
    let mut heights = vec![0i64; num_v];
    for (k, &v) in entries.iter().enumerate() {
        heights[k + 1] = i64::from(v);
    }
    let ys: Vec<i64> = heights.iter().map(|h| h - i64::from(n)).collect();

    let mut edges = Vec::new();
    // Horizontal runs: same height, increasing column.
    for h in 0..=i64::from(n) {
        let level: Vec<usize> = (0..num_v).filter(|&k| heights[k] == h).collect();
        for pair in level.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            edges.push(Edge {
                a,
                b,
                label: CurveClass::plus(a as u32 + 1, b as u32),
            });
        }
    }
    // Risers along the staircase.
    for l in 0..m {
        let target_h = l as i64 + 1;
        let mu = (0..num_v)
            .rev()
            .find(|&k| heights[k] == target_h)
            .expect("staircase vertex exists at every prefix height");
        edges.push(Edge {
            a: l,
            b: mu,
            label: CurveClass::minus(l as u32 + 1, mu as u32),
        });
    }

    let mut half_edges = Vec::with_capacity(n as usize + 3);
    for id in -1..=i64::from(n) + 1 {
        let vertex = if id < m as i64 {
            (id + 1) as usize
        } else if id == m as i64 {
            m
        } else if id <= i64::from(n) {
            id as usize
        } else if entries[n as usize - 1] == 0 {
            n as usize
        } else {
            0
        };
        let word = if id >= 0 && id < m as i64 {
            vec![CurveClass::plus(id as u32 + 1, id as u32 + 1)]
        } else {
            Vec::new()
        };
        half_edges.push(HalfEdge { vertex, word });
    }

    let g = MutGraph::from_parts(n, ys, edges, half_edges);
    debug_assert_eq!(g.validate(), Ok(()));
    Ok(g)
}

/// The square graph: all of `v_0 .. v_n` on the bottom row, consecutive
/// vertices joined by `+L_j`, half-edges untwisted.
pub fn square_graph(n: u32) -> MutGraph {
    assert!(n >= 2, "the square graph needs n >= 2");
    graph_for_tuple(n, &vec![0; n as usize]).expect("zero tuple is valid")
}

/// The canoe graph: `v_k` at height `k` along the diagonal, consecutive
/// vertices joined by `-L_j`, half-edge `H_k` at `v_{k+1}` twisted along
/// `L_{k+1}`.
pub fn canoe_graph(n: u32) -> MutGraph {
    assert!(n >= 2, "the canoe graph needs n >= 2");
    let staircase: Vec<u32> = (1..=n).collect();
    graph_for_tuple(n, &staircase).expect("staircase tuple is valid")
}
