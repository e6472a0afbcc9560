//! Deterministic constructors for the signed-graph families and fixtures
//! used throughout the test suites and the CLI `gen` command.
//!
//! Labeling conventions (0-based vertex ids):
//! - `cycle(n, c)`: rim `0,1,…,n-1` with edges `e_i = {i, i+1}` and
//!   `e_n = {n-1, 0}`; the first `c` edges in this walk order are negative.
//!   So `cycle(4, 1)` has exactly edge `{0,1}` negative, and `cycle(8, 7)`
//!   is the eight-cycle whose only positive edge is `{7, 0}`.
//! - `wheel_antibalanced(n)`: rim `0..n` forms an all-negative cycle, hub
//!   `n` joined to every rim vertex by a positive spoke.
//! - `complete(n, One)`: the single negative edge is `{0, n-1}`.

use crate::graph::{GraphError, Sign, SignedGraph};

/// Selector for the negative edges of a complete graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegativeEdges {
    None,
    One,
    All,
}

/// Cycle on `n ≥ 3` vertices with the first `negative_edge_count` edges of
/// the walk `0-1-…-(n-1)-0` negative.
pub fn cycle(n: usize, negative_edge_count: usize) -> Result<SignedGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    if negative_edge_count > n {
        return Err(GraphError::InvalidParameter(format!(
            "cycle on {n} vertices has only {n} edges, cannot make {negative_edge_count} negative"
        )));
    }
    let edges = (0..n).map(|i| {
        let sign = if i < negative_edge_count {
            Sign::Neg
        } else {
            Sign::Pos
        };
        (i, (i + 1) % n, sign)
    });
    SignedGraph::new(n, edges)
}

/// Path on `n ≥ 1` vertices, every edge carrying `sign`.
pub fn path(n: usize, sign: Sign) -> Result<SignedGraph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParameter(
            "path needs at least 1 vertex".into(),
        ));
    }
    SignedGraph::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1, sign)))
}

/// Complete graph on `n` vertices with the chosen negative edges.
pub fn complete(n: usize, negative: NegativeEdges) -> Result<SignedGraph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParameter(
            "complete graph needs at least 1 vertex".into(),
        ));
    }
    if negative == NegativeEdges::One && n < 2 {
        return Err(GraphError::InvalidParameter(
            "a single negative edge needs at least 2 vertices".into(),
        ));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            let sign = match negative {
                NegativeEdges::None => Sign::Pos,
                NegativeEdges::All => Sign::Neg,
                NegativeEdges::One => {
                    if (u, v) == (0, n - 1) {
                        Sign::Neg
                    } else {
                        Sign::Pos
                    }
                }
            };
            edges.push((u, v, sign));
        }
    }
    SignedGraph::new(n, edges)
}

/// Antibalanced wheel with `n ≥ 3` spokes: an all-negative rim cycle joined
/// to a hub by positive spokes.
pub fn wheel_antibalanced(n: usize) -> Result<SignedGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "wheel needs at least 3 spokes, got {n}"
        )));
    }
    let hub = n;
    let mut edges: Vec<(usize, usize, Sign)> =
        (0..n).map(|i| (i, (i + 1) % n, Sign::Neg)).collect();
    edges.extend((0..n).map(|i| (i, hub, Sign::Pos)));
    SignedGraph::new(n + 1, edges)
}

/// Four-cycle `0-1-2-3-0` whose only negative edge is `{0,1}`.
pub fn figure1() -> SignedGraph {
    cycle(4, 1).expect("fixed parameters")
}

/// Seven vertices; all-negative edges
/// `{0,2},{1,2},{2,3},{2,4},{3,5},{4,6},{5,6}`.
pub fn figure2() -> SignedGraph {
    SignedGraph::new(
        7,
        [
            (0, 2, Sign::Neg),
            (1, 2, Sign::Neg),
            (2, 3, Sign::Neg),
            (2, 4, Sign::Neg),
            (3, 5, Sign::Neg),
            (4, 6, Sign::Neg),
            (5, 6, Sign::Neg),
        ],
    )
    .expect("fixed fixture")
}

/// [`figure2`] with the edges `{0,2}` and `{1,2}` positive.
pub fn figure3() -> SignedGraph {
    SignedGraph::new(
        7,
        [
            (0, 2, Sign::Pos),
            (1, 2, Sign::Pos),
            (2, 3, Sign::Neg),
            (2, 4, Sign::Neg),
            (3, 5, Sign::Neg),
            (4, 6, Sign::Neg),
            (5, 6, Sign::Neg),
        ],
    )
    .expect("fixed fixture")
}

/// Four vertices; edges `{0,1}+, {0,2}+, {0,3}-, {1,2}-, {1,3}+`.
pub fn figure4() -> SignedGraph {
    SignedGraph::new(
        4,
        [
            (0, 1, Sign::Pos),
            (0, 2, Sign::Pos),
            (0, 3, Sign::Neg),
            (1, 2, Sign::Neg),
            (1, 3, Sign::Pos),
        ],
    )
    .expect("fixed fixture")
}

/// Disjoint union, relabeling each part by a running offset.
pub fn disjoint_union(parts: &[SignedGraph]) -> Result<SignedGraph, GraphError> {
    let n: usize = parts.iter().map(|g| g.vertex_count()).sum();
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in parts {
        edges.extend(
            g.edges()
                .iter()
                .map(|e| (e.u + offset, e.v + offset, e.sign)),
        );
        offset += g.vertex_count();
    }
    SignedGraph::new(n, edges)
}

/// Add a new vertex joined to `attach_vertex` by a single edge of the given
/// sign. The new vertex gets id `n`.
pub fn add_pendant(
    g: &SignedGraph,
    attach_vertex: usize,
    sign: Sign,
) -> Result<SignedGraph, GraphError> {
    let n = g.vertex_count();
    if attach_vertex >= n {
        return Err(GraphError::VertexOutOfRange {
            v: attach_vertex,
            n,
        });
    }
    let edges = g
        .edges()
        .iter()
        .map(|e| (e.u, e.v, e.sign))
        .chain(std::iter::once((attach_vertex, n, sign)));
    SignedGraph::new(n + 1, edges)
}
