//! Signed graphs and the classical one-dimensional switching operations:
//! negation, switching, balance testing with certificates, connected
//! components, and the clique number of the underlying graph.

use std::collections::VecDeque;
use std::fmt;
use thiserror::Error;

use crate::clique::BitGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("operation requires a non-empty graph")]
    EmptyGraph,
    #[error("switching value {0} is not one of -1, +1")]
    BadSwitchingValue(i8),
    #[error("switching defined on {got} vertices, graph has {expected}")]
    SwitchingSizeMismatch { expected: usize, got: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Edge sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_i8(x: i8) -> Result<Self, GraphError> {
        match x {
            1 => Ok(Sign::Pos),
            -1 => Ok(Sign::Neg),
            other => Err(GraphError::BadSwitchingValue(other)),
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn mul(self, other: Self) -> Self {
        if self == other {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+",
            Sign::Neg => "-",
        })
    }
}

/// A signed edge in canonical orientation (`u < v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

/// A simple undirected graph with ±1 edge signs. Vertices are dense ids
/// `0..n`. The edge list is canonicalized on construction (`u < v`, sorted
/// lexicographically), so equality of graphs is structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}{}{}", e.u, e.sign, e.v)?;
        }
        write!(f, "])")
    }
}

impl SignedGraph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, Sign)>,
    ) -> Result<Self, GraphError> {
        let mut canonical: Vec<Edge> = Vec::new();
        for (a, b, sign) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            for &x in &[a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { v: x, n });
                }
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            canonical.push(Edge { u, v, sign });
        }
        canonical.sort_by_key(|e| (e.u, e.v));
        for w in canonical.windows(2) {
            if w[0].u == w[1].u && w[0].v == w[1].v {
                return Err(GraphError::DuplicateEdge(w[0].u, w[0].v));
            }
        }
        Ok(Self { n, edges: canonical })
    }

    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn sign_of(&self, a: usize, b: usize) -> Option<Sign> {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.edges
            .binary_search_by_key(&(u, v), |e| (e.u, e.v))
            .ok()
            .map(|i| self.edges[i].sign)
    }

    /// Adjacency lists `(neighbor, sign)`, neighbors ascending.
    pub fn adjacency(&self) -> Vec<Vec<(usize, Sign)>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            d[e.u] += 1;
            d[e.v] += 1;
        }
        d
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 0)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn is_all_positive(&self) -> bool {
        self.edges.iter().all(|e| e.sign == Sign::Pos)
    }

    pub fn is_all_negative(&self) -> bool {
        self.edges.iter().all(|e| e.sign == Sign::Neg)
    }

    /// The same graph with every edge sign reversed. An involution.
    pub fn negated(&self) -> Self {
        Self {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    sign: e.sign.flipped(),
                    ..*e
                })
                .collect(),
        }
    }

    /// Switch by a vertex function into {-1, +1}: edge `uv` gets sign
    /// `σ(uv)·η(u)·η(v)`. The underlying graph is unchanged.
    pub fn apply_one_switching(&self, eta: &OneSwitching) -> Result<Self, GraphError> {
        if eta.len() != self.n {
            return Err(GraphError::SwitchingSizeMismatch {
                expected: self.n,
                got: eta.len(),
            });
        }
        Ok(Self {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| {
                    let s = e.sign.as_i8() * eta.value(e.u) * eta.value(e.v);
                    Edge {
                        sign: Sign::from_i8(s).expect("product of unit signs"),
                        ..*e
                    }
                })
                .collect(),
        })
    }

    /// A switching that makes every edge of a breadth-first spanning forest
    /// positive: roots get `+1`, each tree child gets the parent value times
    /// the tree-edge sign.
    pub fn forest_positivizing_switching(&self) -> OneSwitching {
        self.bfs_forest().0
    }

    /// BFS forest data: the positivizing switching plus `parent`/`depth`
    /// arrays and the set of tree edges (as indices into `edges`).
    fn bfs_forest(&self) -> (OneSwitching, Vec<usize>, Vec<usize>, Vec<bool>) {
        const NO_PARENT: usize = usize::MAX;
        let adj = self.adjacency();
        let mut eta = vec![0i8; self.n];
        let mut parent = vec![NO_PARENT; self.n];
        let mut depth = vec![0usize; self.n];
        let mut tree_edge = vec![false; self.edges.len()];
        let mut visited = vec![false; self.n];
        for root in 0..self.n {
            if visited[root] {
                continue;
            }
            visited[root] = true;
            eta[root] = 1;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &(v, sign) in &adj[u] {
                    if visited[v] {
                        continue;
                    }
                    visited[v] = true;
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    eta[v] = eta[u] * sign.as_i8();
                    let idx = self.edge_index(u, v).expect("adjacent");
                    tree_edge[idx] = true;
                    queue.push_back(v);
                }
            }
        }
        (
            OneSwitching::new(eta).expect("all vertices visited"),
            parent,
            depth,
            tree_edge,
        )
    }

    fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.edges
            .binary_search_by_key(&(u, v), |e| (e.u, e.v))
            .ok()
    }

    /// Balance test with certificate. A balanced graph yields a switching
    /// that makes it all positive; an unbalanced one yields a cycle whose
    /// sign product is negative, built from the first violating non-tree
    /// edge in canonical edge order.
    pub fn balance(&self) -> BalanceCertificate {
        let (eta, parent, depth, tree_edge) = self.bfs_forest();
        for (idx, e) in self.edges.iter().enumerate() {
            if tree_edge[idx] {
                continue;
            }
            if e.sign.as_i8() * eta.value(e.u) * eta.value(e.v) != 1 {
                let cycle = self.tree_cycle(&parent, &depth, e.u, e.v);
                return BalanceCertificate::Unbalanced {
                    negative_cycle: cycle,
                };
            }
        }
        BalanceCertificate::Balanced { switching: eta }
    }

    /// The cycle formed by the tree path from `u` to `v` plus edge `uv`,
    /// canonicalized (smallest vertex first, smaller neighbor second).
    fn tree_cycle(&self, parent: &[usize], depth: &[usize], u: usize, v: usize) -> Vec<usize> {
        let (mut a, mut b) = (u, v);
        let mut left = vec![a];
        let mut right = vec![b];
        while depth[a] > depth[b] {
            a = parent[a];
            left.push(a);
        }
        while depth[b] > depth[a] {
            b = parent[b];
            right.push(b);
        }
        while a != b {
            a = parent[a];
            b = parent[b];
            left.push(a);
            right.push(b);
        }
        right.pop();
        right.reverse();
        left.extend(right);
        canonical_cycle(left)
    }

    pub fn is_balanced(&self) -> bool {
        self.balance().is_balanced()
    }

    /// Antibalance test: balance of the negated graph. The certificate
    /// refers to the negated graph; a balanced witness `η` satisfies
    /// `apply_one_switching(self, η).is_all_negative()`.
    pub fn antibalance(&self) -> BalanceCertificate {
        self.negated().balance()
    }

    pub fn is_antibalanced(&self) -> bool {
        self.antibalance().is_balanced()
    }

    /// Sign product along a closed vertex sequence, if every consecutive
    /// pair (including last-to-first) is an edge.
    pub fn cycle_sign(&self, cycle: &[usize]) -> Option<Sign> {
        if cycle.len() < 3 {
            return None;
        }
        let mut sign = Sign::Pos;
        for i in 0..cycle.len() {
            let s = self.sign_of(cycle[i], cycle[(i + 1) % cycle.len()])?;
            sign = sign.mul(s);
        }
        Some(sign)
    }

    /// Maximal connected induced subgraphs with consistent relabelings,
    /// ordered by smallest original vertex.
    pub fn connected_components(&self) -> Vec<Component> {
        let adj = self.adjacency();
        let mut comp_of = vec![usize::MAX; self.n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.n {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut members = vec![start];
            comp_of[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &(v, _) in &adj[u] {
                    if comp_of[v] == usize::MAX {
                        comp_of[v] = id;
                        members.push(v);
                        queue.push_back(v);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        comps
            .into_iter()
            .map(|members| {
                let graph = self.induced_subgraph(&members);
                Component {
                    graph,
                    vertex_map: members,
                }
            })
            .collect()
    }

    /// Induced subgraph on `vertices` (ascending, distinct), relabeled to
    /// `0..vertices.len()` in that order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> SignedGraph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| local[e.u] != usize::MAX && local[e.v] != usize::MAX)
            .map(|e| (local[e.u], local[e.v], e.sign));
        SignedGraph::new(vertices.len(), edges).expect("relabeling preserves validity")
    }

    /// Exact clique number of the underlying unsigned graph.
    pub fn clique_number(&self) -> Result<usize, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut bg = BitGraph::new(self.n);
        for e in &self.edges {
            bg.add_edge(e.u, e.v);
        }
        Ok(bg.max_clique().len())
    }

    /// Whether some triangle has negative sign product.
    pub fn has_negative_triangle(&self) -> bool {
        let adj = self.adjacency();
        for e in &self.edges {
            for &(w, s_uw) in &adj[e.u] {
                if w <= e.v {
                    continue;
                }
                if let Some(s_vw) = self.sign_of(e.v, w) {
                    if e.sign.mul(s_uw).mul(s_vw) == Sign::Neg {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Rotate and orient a cycle's vertex sequence so the smallest vertex comes
/// first and its smaller neighbor second.
fn canonical_cycle(cycle: Vec<usize>) -> Vec<usize> {
    let pos = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap();
    let m = cycle.len();
    let forward: Vec<usize> = (0..m).map(|i| cycle[(pos + i) % m]).collect();
    let backward: Vec<usize> = (0..m).map(|i| cycle[(pos + m - i) % m]).collect();
    if forward <= backward {
        forward
    } else {
        backward
    }
}

/// A component of a graph together with the map from local vertex ids back
/// to the ids in the original graph.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: SignedGraph,
    pub vertex_map: Vec<usize>,
}

/// A total vertex function into {-1, +1}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OneSwitching {
    values: Vec<i8>,
}

impl OneSwitching {
    pub fn new(values: Vec<i8>) -> Result<Self, GraphError> {
        for &x in &values {
            if x != 1 && x != -1 {
                return Err(GraphError::BadSwitchingValue(x));
            }
        }
        Ok(Self { values })
    }

    pub fn constant(n: usize, value: Sign) -> Self {
        Self {
            values: vec![value.as_i8(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, v: usize) -> i8 {
        self.values[v]
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }
}

impl fmt::Debug for OneSwitching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OneSwitching{:?}", self.values)
    }
}

/// Outcome of a balance test. Exactly one alternative is present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BalanceCertificate {
    /// A switching that makes the graph all positive.
    Balanced { switching: OneSwitching },
    /// A cycle whose sign product is negative.
    Unbalanced { negative_cycle: Vec<usize> },
}

impl BalanceCertificate {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceCertificate::Balanced { .. })
    }

    pub fn balanced_witness(&self) -> Option<&OneSwitching> {
        match self {
            BalanceCertificate::Balanced { switching } => Some(switching),
            BalanceCertificate::Unbalanced { .. } => None,
        }
    }

    pub fn negative_cycle(&self) -> Option<&[usize]> {
        match self {
            BalanceCertificate::Balanced { .. } => None,
            BalanceCertificate::Unbalanced { negative_cycle } => Some(negative_cycle),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn all_pos_cycle(n: usize) -> SignedGraph {
        generators::cycle(n, 0).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(matches!(
            SignedGraph::new(3, [(1, 1, Sign::Pos)]),
            Err(GraphError::LoopEdge(1))
        ));
        assert!(matches!(
            SignedGraph::new(3, [(0, 1, Sign::Pos), (1, 0, Sign::Neg)]),
            Err(GraphError::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            SignedGraph::new(2, [(0, 2, Sign::Pos)]),
            Err(GraphError::VertexOutOfRange { v: 2, n: 2 })
        ));
    }

    #[test]
    fn negate_is_involution_and_flips_uniform_cycles() {
        let c4 = all_pos_cycle(4);
        assert!(c4.negated().is_all_negative());
        let fig4 = generators::figure4();
        assert_eq!(fig4.negated().negated(), fig4);
        // One negative edge flips to one positive edge.
        let c4m = generators::figure1();
        let neg = c4m.negated();
        assert_eq!(neg.sign_of(0, 1), Some(Sign::Pos));
        assert_eq!(neg.sign_of(1, 2), Some(Sign::Neg));
        assert_eq!(neg.sign_of(2, 3), Some(Sign::Neg));
        assert_eq!(neg.sign_of(0, 3), Some(Sign::Neg));
    }

    #[test]
    fn one_switching_identity_and_involution() {
        let g = generators::figure2();
        let id = OneSwitching::constant(7, Sign::Pos);
        assert_eq!(g.apply_one_switching(&id).unwrap(), g);
        let mut vals = vec![1i8; 7];
        vals[0] = -1;
        vals[1] = -1;
        let eta = OneSwitching::new(vals).unwrap();
        let switched = g.apply_one_switching(&eta).unwrap();
        assert_eq!(switched, generators::figure3());
        assert_eq!(switched.apply_one_switching(&eta).unwrap(), g);
    }

    #[test]
    fn balance_on_paths_trees_and_cycles() {
        let p3 = generators::path(3, Sign::Pos).unwrap();
        let cert = p3.balance();
        assert!(cert.is_balanced());
        let eta = cert.balanced_witness().unwrap();
        assert!(p3.apply_one_switching(eta).unwrap().is_all_positive());

        // Any tree is balanced regardless of signs.
        let tree = SignedGraph::new(
            5,
            [
                (0, 1, Sign::Neg),
                (1, 2, Sign::Pos),
                (1, 3, Sign::Neg),
                (3, 4, Sign::Neg),
            ],
        )
        .unwrap();
        let cert = tree.balance();
        assert!(cert.is_balanced());
        let eta = cert.balanced_witness().unwrap();
        assert!(tree.apply_one_switching(eta).unwrap().is_all_positive());

        let c4m = generators::figure1();
        let cert = c4m.balance();
        assert_eq!(cert.negative_cycle(), Some(&[0usize, 1, 2, 3][..]));
        assert_eq!(c4m.cycle_sign(cert.negative_cycle().unwrap()), Some(Sign::Neg));
    }

    #[test]
    fn antibalance_cases() {
        let k4_neg = generators::complete(4, generators::NegativeEdges::All).unwrap();
        assert!(k4_neg.is_antibalanced());
        assert!(!generators::figure1().is_antibalanced());
        assert!(!all_pos_cycle(5).is_antibalanced());
        // Antibalanced witness makes the graph all negative.
        let cert = k4_neg.antibalance();
        let eta = cert.balanced_witness().unwrap();
        assert!(k4_neg.apply_one_switching(eta).unwrap().is_all_negative());
    }

    #[test]
    fn components_partition_and_relabel() {
        let g = generators::figure4();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].graph, g);

        let three = generators::disjoint_union(&[
            generators::cycle(3, 1).unwrap(),
            generators::cycle(3, 1).unwrap(),
            generators::cycle(3, 1).unwrap(),
        ])
        .unwrap();
        let comps = three.connected_components();
        assert_eq!(comps.len(), 3);
        for c in &comps {
            assert_eq!(c.graph, generators::cycle(3, 1).unwrap());
        }

        let comps = SignedGraph::edgeless(4).connected_components();
        assert_eq!(comps.len(), 4);
        for c in &comps {
            assert_eq!(c.graph.vertex_count(), 1);
            assert_eq!(c.graph.edge_count(), 0);
        }
    }

    #[test]
    fn clique_numbers() {
        let k5 = generators::complete(5, generators::NegativeEdges::All).unwrap();
        assert_eq!(k5.clique_number().unwrap(), 5);
        let c8m = generators::cycle(8, 7).unwrap();
        assert_eq!(c8m.clique_number().unwrap(), 2);
        let w4 = generators::wheel_antibalanced(3).unwrap();
        assert_eq!(w4.clique_number().unwrap(), 4);
        assert!(SignedGraph::edgeless(0).clique_number().is_err());
    }

    #[test]
    fn negative_triangle_detection() {
        assert!(generators::cycle(3, 1).unwrap().has_negative_triangle());
        assert!(!generators::cycle(3, 2).unwrap().has_negative_triangle());
        assert!(!generators::figure1().has_negative_triangle());
        assert!(generators::complete(5, generators::NegativeEdges::One)
            .unwrap()
            .has_negative_triangle());
    }
}
