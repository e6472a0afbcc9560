//! Incidence-based positive switching: the matrix `B` whose column for
//! edge `e_k = v_i v_j` has `b_{ik} = ±1` and `b_{jk} = b_{ik}·σ(e_k)`
//! (an incidence matrix of the sign-reversed graph), and the assignment
//! `μ(v_i) = row i of B`, which always switches the graph to all positive:
//!
//! - `⟨μ(v_i), μ(v_j)⟩ = σ(v_i v_j)` on every edge, and
//! - `‖μ(v_i)‖² = d(v_i)` on every vertex,
//!
//! so `μ` is an `m`-dimensional positive switching, bounding the balancing
//! dimension by the edge count. An injectivity repair on top of `μ` gives
//! a finite upper bound for the strong (injective) dimension on every
//! input, including the cases where `μ` itself repeats values (two or more
//! isolated vertices, or a component that is a single positive edge).

use std::fmt;
use thiserror::Error;

use crate::graph::{GraphError, Sign, SignedGraph};
use crate::switching::SwitchingAssignment;
use crate::ternary::{log3_ceil, TernaryVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IncidenceError {
    #[error("the incidence construction needs at least one edge")]
    NoEdges,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Dense `n × m` matrix over {-1, 0, +1}; column order is the canonical
/// edge order of the graph it was built from.
#[derive(Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i8>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, k: usize) -> i8 {
        self.entries[i * self.cols + k]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }
}

impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for k in 0..self.cols {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:2}", self.entry(i, k))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IncidenceMatrix({}x{}):", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

/// Build the incidence matrix. The smaller-id endpoint of each edge gets
/// `+1`; the other endpoint gets `σ(e)`. Deterministic given the canonical
/// edge order.
pub fn build_incidence(g: &SignedGraph) -> Result<IncidenceMatrix, IncidenceError> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if m == 0 {
        return Err(IncidenceError::NoEdges);
    }
    let mut entries = vec![0i8; n * m];
    for (k, e) in g.edges().iter().enumerate() {
        entries[e.u * m + k] = 1;
        entries[e.v * m + k] = e.sign.as_i8();
    }
    Ok(IncidenceMatrix {
        rows: n,
        cols: m,
        entries,
    })
}

/// The `m`-dimensional positive switching read off the rows of the
/// incidence matrix.
pub fn mu_from_incidence(g: &SignedGraph) -> Result<SwitchingAssignment, IncidenceError> {
    let b = build_incidence(g)?;
    let values = (0..b.rows())
        .map(|i| TernaryVector::new(b.row(i).to_vec()).expect("entries are trits"))
        .collect();
    Ok(SwitchingAssignment::new(b.cols(), values).expect("uniform row length"))
}

/// An injective positive switching of dimension `m + d`, where `d = 0`
/// whenever `μ` is already injective. Otherwise `d` coordinates are
/// appended: enough to give all isolated vertices pairwise distinct
/// suffixes (at most one of them all-zero), with the first appended
/// coordinate also separating the endpoints of each positive single-edge
/// component (the `u` endpoint gets `+1`, leaving the edge's inner product
/// positive). Edgeless graphs are handled directly with `⌈log₃ n⌉ ≥ 1`
/// distinct vectors.
pub fn injective_mu(g: &SignedGraph) -> Result<SwitchingAssignment, IncidenceError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(GraphError::EmptyGraph.into());
    }
    let m = g.edge_count();
    if m == 0 {
        let k = log3_ceil(n).max(1);
        let values = (0..n)
            .map(|i| TernaryVector::from_index(k, i))
            .collect();
        return Ok(SwitchingAssignment::new(k, values).expect("uniform dimension"));
    }

    let mu = mu_from_incidence(g)?;
    let isolated = g.isolated_vertices();
    let positive_k2_components: Vec<(usize, usize)> = g
        .connected_components()
        .iter()
        .filter(|c| {
            c.graph.vertex_count() == 2
                && c.graph.edge_count() == 1
                && c.graph.edges()[0].sign == Sign::Pos
        })
        .map(|c| (c.vertex_map[0], c.vertex_map[1]))
        .collect();

    if isolated.len() <= 1 && positive_k2_components.is_empty() {
        return Ok(mu);
    }

    let d = log3_ceil(isolated.len() + 1).max(1);
    let mut suffixes = vec![vec![0i8; d]; n];
    for &(u, _) in &positive_k2_components {
        suffixes[u][0] = 1;
    }
    for (i, &v) in isolated.iter().enumerate() {
        suffixes[v] = TernaryVector::from_index(d, i).trits().to_vec();
    }
    let values = mu
        .values()
        .iter()
        .enumerate()
        .map(|(v, base)| {
            let mut trits = base.trits().to_vec();
            trits.extend_from_slice(&suffixes[v]);
            TernaryVector::new(trits).expect("trits stay trits")
        })
        .collect();
    Ok(SwitchingAssignment::new(m + d, values).expect("uniform dimension"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, NegativeEdges};
    use crate::graph::{Sign, SignedGraph};
    use crate::switching::is_positive_switching;

    #[test]
    fn figure4_matrix_rows() {
        let b = build_incidence(&generators::figure4()).unwrap();
        assert_eq!(b.rows(), 4);
        assert_eq!(b.cols(), 5);
        assert_eq!(b.row(0), &[1, 1, 1, 0, 0]);
        assert_eq!(b.row(1), &[1, 0, 0, 1, 1]);
        assert_eq!(b.row(2), &[0, 1, 0, -1, 0]);
        assert_eq!(b.row(3), &[0, 0, -1, 0, 1]);
    }

    #[test]
    fn single_edge_columns() {
        let pos = generators::path(2, Sign::Pos).unwrap();
        let b = build_incidence(&pos).unwrap();
        assert_eq!((b.entry(0, 0), b.entry(1, 0)), (1, 1));
        let neg = generators::path(2, Sign::Neg).unwrap();
        let b = build_incidence(&neg).unwrap();
        assert_eq!((b.entry(0, 0), b.entry(1, 0)), (1, -1));
        assert!(matches!(
            build_incidence(&SignedGraph::edgeless(3)),
            Err(IncidenceError::NoEdges)
        ));
    }

    #[test]
    fn mu_satisfies_edge_products_and_degrees() {
        for g in [
            generators::figure4(),
            generators::cycle(3, 1).unwrap(),
            generators::wheel_antibalanced(5).unwrap(),
            generators::complete(5, NegativeEdges::All).unwrap(),
        ] {
            let mu = mu_from_incidence(&g).unwrap();
            assert_eq!(mu.dimension(), g.edge_count());
            for e in g.edges() {
                let d = mu.value(e.u).dot(mu.value(e.v)).unwrap();
                assert_eq!(d, i32::from(e.sign.as_i8()), "edge {}-{}", e.u, e.v);
            }
            for (v, &deg) in g.degrees().iter().enumerate() {
                assert_eq!(mu.value(v).support(), deg, "vertex {v}");
            }
            assert!(is_positive_switching(&g, &mu, false));
        }
    }

    #[test]
    fn figure4_mu_values() {
        let mu = mu_from_incidence(&generators::figure4()).unwrap();
        assert_eq!(mu.value(0).trits(), &[1, 1, 1, 0, 0]);
        assert_eq!(mu.value(1).trits(), &[1, 0, 0, 1, 1]);
        assert_eq!(mu.value(2).trits(), &[0, 1, 0, -1, 0]);
        assert_eq!(mu.value(3).trits(), &[0, 0, -1, 0, 1]);
        assert!(mu.is_injective());
    }

    #[test]
    fn positive_edge_makes_mu_non_injective() {
        let pos = generators::path(2, Sign::Pos).unwrap();
        let mu = mu_from_incidence(&pos).unwrap();
        assert_eq!(mu.value(0), mu.value(1));
        assert!(!mu.is_injective());
    }

    #[test]
    fn injective_repair_cases() {
        // Already injective: returned unchanged.
        let fig4 = generators::figure4();
        assert_eq!(
            injective_mu(&fig4).unwrap(),
            mu_from_incidence(&fig4).unwrap()
        );

        // Positive single edge: one coordinate appended.
        let pos = generators::path(2, Sign::Pos).unwrap();
        let rep = injective_mu(&pos).unwrap();
        assert_eq!(rep.dimension(), 2);
        assert_eq!(rep.value(0).trits(), &[1, 1]);
        assert_eq!(rep.value(1).trits(), &[1, 0]);
        assert!(is_positive_switching(&pos, &rep, true));

        // Edgeless graphs get distinct vectors, at most one zero.
        let iso3 = SignedGraph::edgeless(3);
        let rep = injective_mu(&iso3).unwrap();
        assert_eq!(rep.dimension(), 1);
        assert!(is_positive_switching(&iso3, &rep, true));
        let zeros = rep.values().iter().filter(|v| v.is_zero()).count();
        assert!(zeros <= 1);

        // Mixed failure modes together.
        let mixed = generators::disjoint_union(&[
            generators::path(2, Sign::Pos).unwrap(),
            generators::path(2, Sign::Pos).unwrap(),
            SignedGraph::edgeless(4),
            generators::cycle(3, 1).unwrap(),
        ])
        .unwrap();
        let rep = injective_mu(&mixed).unwrap();
        assert!(is_positive_switching(&mixed, &rep, true));
    }

}
