//! Exact maximum-clique search: branch and bound with a greedy coloring
//! bound over bitset adjacency rows. Deterministic for a fixed input.

/// Undirected graph on `0..n` with adjacency stored as bit rows.
#[derive(Clone)]
pub(crate) struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitGraph {
    pub(crate) fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Self {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Largest clique; ties broken deterministically. Empty for `n = 0`.
    pub(crate) fn max_clique(&self) -> Vec<usize> {
        self.max_clique_above(0).unwrap_or_default()
    }

    /// Largest clique, but only if one of size strictly greater than
    /// `floor` exists. Lets callers that already hold a clique of size
    /// `floor` prune the whole search.
    pub(crate) fn max_clique_above(&self, floor: usize) -> Option<Vec<usize>> {
        if self.n == 0 {
            return None;
        }
        // Relabel by descending degree so the coloring bound tightens early.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let mut rank = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let mut relabeled = BitGraph::new(self.n);
        for u in 0..self.n {
            let mut it = BitSet::from_row(self.row(u));
            while let Some(v) = it.pop_first() {
                if u < v {
                    relabeled.add_edge(rank[u], rank[v]);
                }
            }
        }

        let mut search = Search {
            g: &relabeled,
            best: Vec::new(),
            best_len: floor,
            current: Vec::new(),
        };
        let mut all = BitSet::full(self.n);
        search.expand(&mut all);
        if search.best.is_empty() {
            return None;
        }
        let mut clique: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
        clique.sort_unstable();
        Some(clique)
    }
}

struct Search<'a> {
    g: &'a BitGraph,
    best: Vec<usize>,
    best_len: usize,
    current: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, candidates: &mut BitSet) {
        if candidates.is_empty() {
            if self.current.len() > self.best_len {
                self.best_len = self.current.len();
                self.best = self.current.clone();
            }
            return;
        }
        let (order, bounds) = self.color_sort(candidates);
        for i in (0..order.len()).rev() {
            // Bounds are non-decreasing along `order`, so the first failure
            // closes the whole subtree.
            if self.current.len() + bounds[i] <= self.best_len {
                return;
            }
            let v = order[i];
            self.current.push(v);
            let mut next = candidates.clone();
            next.intersect_row(self.g.row(v));
            self.expand(&mut next);
            self.current.pop();
            candidates.clear(v);
        }
    }

    /// Greedy coloring of the candidate set. Returns the vertices grouped
    /// by color class (ascending) together with each vertex's class number,
    /// an upper bound on any clique extending through that vertex.
    fn color_sort(&self, candidates: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = candidates.clone();
        let mut order = Vec::new();
        let mut bounds = Vec::new();
        let mut color = 0usize;
        while !uncolored.is_empty() {
            color += 1;
            let mut class = uncolored.clone();
            while let Some(v) = class.pop_first() {
                uncolored.clear(v);
                order.push(v);
                bounds.push(color);
                class.subtract_row(self.g.row(v));
            }
        }
        (order, bounds)
    }
}

#[derive(Clone)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n.div_ceil(64)];
        if n % 64 != 0 {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % 64)) - 1;
            }
        }
        Self { words }
    }

    fn from_row(row: &[u64]) -> Self {
        Self {
            words: row.to_vec(),
        }
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn clear(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    fn pop_first(&mut self) -> Option<usize> {
        for (i, w) in self.words.iter_mut().enumerate() {
            if *w != 0 {
                let b = w.trailing_zeros() as usize;
                *w &= *w - 1;
                return Some(i * 64 + b);
            }
        }
        None
    }

    fn intersect_row(&mut self, row: &[u64]) {
        for (w, r) in self.words.iter_mut().zip(row) {
            *w &= r;
        }
    }

    fn subtract_row(&mut self, row: &[u64]) {
        for (w, r) in self.words.iter_mut().zip(row) {
            *w &= !r;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> BitGraph {
        let mut g = BitGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Plain recursive maximum clique without bounds or bitsets.
    fn brute_max_clique(n: usize, edges: &[(usize, usize)]) -> usize {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        fn rec(adj: &[Vec<bool>], chosen: &mut Vec<usize>, from: usize, best: &mut usize) {
            *best = (*best).max(chosen.len());
            for v in from..adj.len() {
                if chosen.iter().all(|&u| adj[u][v]) {
                    chosen.push(v);
                    rec(adj, chosen, v + 1, best);
                    chosen.pop();
                }
            }
        }
        let mut best = 0;
        rec(&adj, &mut Vec::new(), 0, &mut best);
        best
    }

    #[test]
    fn complete_and_empty() {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in (u + 1)..5 {
                edges.push((u, v));
            }
        }
        assert_eq!(graph_from_edges(5, &edges).max_clique().len(), 5);
        assert_eq!(graph_from_edges(4, &[]).max_clique().len(), 1);
        assert!(graph_from_edges(0, &[]).max_clique().is_empty());
    }

    #[test]
    fn cycle_is_triangle_free() {
        let edges: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        assert_eq!(graph_from_edges(8, &edges).max_clique().len(), 2);
    }

    #[test]
    fn floor_prunes_to_none() {
        let edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let g = graph_from_edges(6, &edges);
        assert!(g.max_clique_above(2).is_none());
        assert_eq!(g.max_clique_above(1).unwrap().len(), 2);
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        // Simple LCG so the test needs no extra dependencies here.
        let mut state = 0x243F6A8885A308D3u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize
        };
        for trial in 0..60 {
            let n = 3 + next() % 10;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if next() % 100 < 55 {
                        edges.push((u, v));
                    }
                }
            }
            let g = graph_from_edges(n, &edges);
            let clique = g.max_clique();
            for i in 0..clique.len() {
                for j in (i + 1)..clique.len() {
                    assert!(
                        g.row(clique[i])[clique[j] / 64] & (1 << (clique[j] % 64)) != 0,
                        "trial {trial}: returned set is not a clique"
                    );
                }
            }
            assert_eq!(clique.len(), brute_max_clique(n, &edges), "trial {trial}");
        }
    }
}
