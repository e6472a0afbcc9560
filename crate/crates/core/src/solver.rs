//! Exact computation of the balancing dimension (least `k` admitting a
//! positive `k`-switching) and the strong balancing dimension (least `k`
//! admitting an injective one), by bound derivation plus complete
//! symmetry-reduced backtracking, with a plain brute-force oracle for
//! cross-validation.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::{GraphError, SignedGraph};
use crate::incidence::{self, IncidenceError};
use crate::nip;
use crate::switching::{
    compose, is_positive_switching, one_switching_as_assignment, SwitchingAssignment,
    SwitchingError,
};
use crate::ternary::{self, log3_ceil, sgn, TernaryError, TernaryVector, MAX_DIMENSION};

#[derive(Debug, Error)]
pub enum SolveError {
    #[error(
        "no result within dimension cap {max_k}; proven bracket [{proven_lower}, {proven_upper}]"
    )]
    Capacity {
        max_k: usize,
        proven_lower: usize,
        proven_upper: usize,
    },
    #[error("exhaustive enumeration needs {assignments} assignments, budget is {budget}")]
    BudgetExceeded { assignments: u128, budget: u128 },
    #[error(transparent)]
    Ternary(#[from] TernaryError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Switching(#[from] SwitchingError),
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
    #[error(transparent)]
    Nip(#[from] nip::NipError),
}

/// Which dimension is being computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimensionKind {
    Bdim,
    Sbdim,
}

impl DimensionKind {
    pub fn name(self) -> &'static str {
        match self {
            DimensionKind::Bdim => "bdim",
            DimensionKind::Sbdim => "sbdim",
        }
    }
}

/// Provenance of a single bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundName {
    /// `k ≥ 1` always; also the exact value 1 for balanced graphs (and the
    /// all-positive convention for the strong dimension).
    Definition,
    /// Unbalanced graphs need `k ≥ 2`.
    Unbalanced,
    /// A negative triangle forces `k ≥ 3`.
    NegativeTriangle,
    /// An injective positive switching restricted to a clique of order `ω`
    /// yields `⌈ω/2⌉` pairwise non-orthogonal lines (strong dimension only;
    /// without injectivity vectors may repeat on positive cliques).
    CliqueLambda,
    /// `n` distinct nonzero vectors need `3^k - 1 ≥ n` (strong dimension,
    /// no isolated vertices).
    LogCapacity,
    /// Antibalanced complete graphs have dimension exactly `ν̄(n) ≥ n - 1`.
    AntibalancedComplete,
    /// The incidence assignment gives dimension at most `m`.
    EdgeCount,
    /// The injectivity-repaired incidence assignment.
    InjectiveIncidence,
}

impl BoundName {
    pub fn name(self) -> &'static str {
        match self {
            BoundName::Definition => "definition",
            BoundName::Unbalanced => "unbalanced",
            BoundName::NegativeTriangle => "negative-triangle",
            BoundName::CliqueLambda => "clique-lambda",
            BoundName::LogCapacity => "log3-capacity",
            BoundName::AntibalancedComplete => "antibalanced-complete",
            BoundName::EdgeCount => "edge-count",
            BoundName::InjectiveIncidence => "injective-incidence",
        }
    }
}

impl std::fmt::Display for BoundName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// All lower and upper bounds derived for an instance, with their maxima
/// and minima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundTrace {
    pub lower: Vec<(BoundName, usize)>,
    pub upper: Vec<(BoundName, usize)>,
    pub effective_lower: usize,
    pub effective_upper: usize,
}

impl BoundTrace {
    fn new(lower: Vec<(BoundName, usize)>, upper: Vec<(BoundName, usize)>) -> Self {
        let effective_lower = lower.iter().map(|&(_, v)| v).max().unwrap_or(1);
        let effective_upper = upper.iter().map(|&(_, v)| v).min().unwrap_or(usize::MAX);
        Self {
            lower,
            upper,
            effective_lower,
            effective_upper,
        }
    }
}

/// Search effort counters.
#[derive(Debug, Clone, Default)]
pub struct SearchStats {
    /// Candidate vector placements tried across all searched dimensions.
    pub nodes: u64,
    pub elapsed: Duration,
}

/// A computed dimension with its witness and certification context.
#[derive(Debug, Clone)]
pub struct DimensionResult {
    pub kind: DimensionKind,
    pub value: usize,
    pub witness: SwitchingAssignment,
    pub trace: BoundTrace,
    pub stats: SearchStats,
    /// True when the value 1 comes from the all-positive convention for the
    /// strong dimension; the witness is then the constant assignment and is
    /// not injective.
    pub all_positive_convention: bool,
}

/// Knobs for the solver. `threads = 1` is the deterministic mode; with more
/// threads the computed value is unchanged but the witness may differ.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Cap on the searched dimension. Defaults to the derived upper bound.
    pub max_k: Option<usize>,
    pub threads: usize,
    /// Largest `k` the antibalanced-complete bound may spend on `nu(k)`.
    pub nu_bound_k_cap: usize,
    /// Largest `k` the clique bound may spend on `lambda(k)`.
    pub lambda_bound_k_cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            max_k: None,
            threads: 1,
            nu_bound_k_cap: 7,
            lambda_bound_k_cap: 4,
        }
    }
}

/// Derive every applicable bound for `g`.
pub fn compute_bounds(
    g: &SignedGraph,
    kind: DimensionKind,
    cfg: &SolverConfig,
) -> Result<BoundTrace, SolveError> {
    let n = g.vertex_count();
    let m = g.edge_count();

    if kind == DimensionKind::Sbdim && g.is_all_positive() {
        // Convention: all-positive graphs have strong dimension 1. The
        // capacity bounds below describe honest injective switchings and do
        // not apply.
        return Ok(BoundTrace::new(
            vec![(BoundName::Definition, 1)],
            vec![(BoundName::Definition, 1)],
        ));
    }

    let balanced = g.is_balanced();
    let mut lower = vec![(BoundName::Definition, 1)];
    if !balanced {
        lower.push((BoundName::Unbalanced, 2));
        if g.has_negative_triangle() {
            lower.push((BoundName::NegativeTriangle, 3));
        }
    }
    if kind == DimensionKind::Sbdim && n >= 1 {
        let omega = g.clique_number()?;
        if let Some(k) = nip::lambda_inverse(omega.div_ceil(2), cfg.lambda_bound_k_cap)? {
            lower.push((BoundName::CliqueLambda, k));
        }
        if g.isolated_vertices().is_empty() {
            lower.push((BoundName::LogCapacity, log3_ceil(n + 1).max(1)));
        }
    }

    let mut upper = Vec::new();
    let complete = n >= 2 && m == n * (n - 1) / 2;
    if complete && g.is_antibalanced() {
        match nip::nu_bar(n, cfg.nu_bound_k_cap) {
            Ok(nb) => {
                lower.push((BoundName::AntibalancedComplete, nb));
                let exact_upper = match kind {
                    DimensionKind::Bdim => true,
                    // Equality extends to the strong dimension only in the
                    // all-negative case, where any positive switching is
                    // automatically injective.
                    DimensionKind::Sbdim => g.is_all_negative(),
                };
                if exact_upper {
                    upper.push((BoundName::AntibalancedComplete, nb));
                }
            }
            Err(nip::NipError::Unresolved { .. }) => {
                lower.push((BoundName::AntibalancedComplete, n - 1));
            }
            Err(e) => return Err(e.into()),
        }
    }

    match kind {
        DimensionKind::Bdim => {
            if balanced || m == 0 {
                upper.push((BoundName::Definition, 1));
            }
            if m >= 1 {
                upper.push((BoundName::EdgeCount, m));
            }
        }
        DimensionKind::Sbdim => {
            if n >= 1 {
                upper.push((
                    BoundName::InjectiveIncidence,
                    incidence::injective_mu(g)?.dimension(),
                ));
            }
        }
    }
    Ok(BoundTrace::new(lower, upper))
}

struct SearchOutcome {
    assignment: Option<SwitchingAssignment>,
    nodes: u64,
}

/// Complete search for a positive `k`-switching. `None` certifies that no
/// assignment of the required kind exists at dimension `k`.
pub fn find_k_positive(
    g: &SignedGraph,
    k: usize,
    injective: bool,
    cfg: &SolverConfig,
) -> Result<Option<SwitchingAssignment>, SolveError> {
    Ok(search_dimension(g, k, injective, cfg)?.assignment)
}

fn search_dimension(
    g: &SignedGraph,
    k: usize,
    injective: bool,
    cfg: &SolverConfig,
) -> Result<SearchOutcome, SolveError> {
    let vectors = ternary::enumerate(k, true)?;
    let n = g.vertex_count();
    if injective && n > vectors.len() {
        return Ok(SearchOutcome {
            assignment: None,
            nodes: 0,
        });
    }

    // Non-isolated vertices, grouped by component, high degree first.
    let degrees = g.degrees();
    let mut order: Vec<usize> = Vec::new();
    for c in g.connected_components() {
        if c.graph.edge_count() == 0 {
            continue;
        }
        let mut members = c.vertex_map;
        members.sort_by_key(|&v| (std::cmp::Reverse(degrees[v]), v));
        order.extend(members);
    }
    let isolated = g.isolated_vertices();

    let mut pos_of = vec![usize::MAX; n];
    for (p, &v) in order.iter().enumerate() {
        pos_of[v] = p;
    }
    let adj = g.adjacency();
    // Per position: constraints to already-assigned neighbors.
    let constraints: Vec<Vec<(usize, i8)>> = order
        .iter()
        .enumerate()
        .map(|(p, &v)| {
            adj[v]
                .iter()
                .filter(|&&(u, _)| pos_of[u] < p)
                .map(|&(u, s)| (pos_of[u], s.as_i8()))
                .collect()
        })
        .collect();

    let zero_index = (vectors.len() - 1) / 2;
    let nonzero: Vec<usize> = (0..vectors.len()).filter(|&i| i != zero_index).collect();
    // The inner-product constraint system is invariant under signed
    // coordinate permutations, so the first assigned vertex may be fixed
    // to an orbit representative.
    let first: Vec<usize> = ternary::orbit_representatives(k)?
        .iter()
        .map(TernaryVector::index)
        .collect();

    let search = Search {
        vectors: &vectors,
        order: &order,
        isolated: &isolated,
        constraints: &constraints,
        nonzero: &nonzero,
        zero_index,
        injective,
        n,
        k,
    };

    let threads = cfg.threads.max(1).min(first.len().max(1));
    if threads <= 1 || order.is_empty() {
        Ok(search.run(&first, None))
    } else {
        let found = AtomicBool::new(false);
        let chunks: Vec<Vec<usize>> = (0..threads)
            .map(|w| {
                first
                    .iter()
                    .copied()
                    .enumerate()
                    .filter(|(i, _)| i % threads == w)
                    .map(|(_, c)| c)
                    .collect()
            })
            .collect();
        let mut outcomes: Vec<SearchOutcome> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .iter()
                .map(|chunk| scope.spawn(|| search.run(chunk, Some(&found))))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let nodes = outcomes.iter().map(|o| o.nodes).sum();
        let assignment = outcomes
            .iter_mut()
            .find_map(|o| o.assignment.take());
        Ok(SearchOutcome { assignment, nodes })
    }
}

struct Search<'a> {
    vectors: &'a [TernaryVector],
    order: &'a [usize],
    isolated: &'a [usize],
    constraints: &'a [Vec<(usize, i8)>],
    nonzero: &'a [usize],
    zero_index: usize,
    injective: bool,
    n: usize,
    k: usize,
}

impl Search<'_> {
    fn run(&self, first_candidates: &[usize], stop: Option<&AtomicBool>) -> SearchOutcome {
        let mut state = SearchState {
            assign: vec![usize::MAX; self.order.len()],
            used: vec![false; self.vectors.len()],
            nodes: 0,
        };
        let found = self.dfs(0, first_candidates, &mut state, stop);
        if found {
            if let Some(stop) = stop {
                stop.store(true, Ordering::Relaxed);
            }
        }
        let assignment = found.then(|| self.build_assignment(&state));
        SearchOutcome {
            assignment,
            nodes: state.nodes,
        }
    }

    fn dfs(
        &self,
        level: usize,
        first_candidates: &[usize],
        state: &mut SearchState,
        stop: Option<&AtomicBool>,
    ) -> bool {
        if let Some(stop) = stop {
            if stop.load(Ordering::Relaxed) {
                return false;
            }
        }
        if level == self.order.len() {
            return true;
        }
        let candidates = if level == 0 {
            first_candidates
        } else {
            self.nonzero
        };
        'candidates: for &c in candidates {
            if self.injective && state.used[c] {
                continue;
            }
            for &(earlier, required) in &self.constraints[level] {
                let d = self.vectors[c]
                    .dot(&self.vectors[state.assign[earlier]])
                    .expect("uniform dimension");
                if sgn(d) != required {
                    continue 'candidates;
                }
            }
            state.nodes += 1;
            state.assign[level] = c;
            state.used[c] = true;
            if self.dfs(level + 1, first_candidates, state, stop) {
                return true;
            }
            state.used[c] = false;
            state.assign[level] = usize::MAX;
        }
        false
    }

    /// Extend the search assignment over the isolated vertices: zeros when
    /// injectivity is not required, otherwise the first unused vectors in
    /// canonical order (which uses the zero vector at most once).
    fn build_assignment(&self, state: &SearchState) -> SwitchingAssignment {
        let mut values: Vec<Option<TernaryVector>> = vec![None; self.n];
        for (p, &v) in self.order.iter().enumerate() {
            values[v] = Some(self.vectors[state.assign[p]].clone());
        }
        if self.injective {
            let mut next = 0usize;
            for &v in self.isolated {
                while state.used[next] {
                    next += 1;
                }
                values[v] = Some(self.vectors[next].clone());
                next += 1;
            }
        } else {
            for &v in self.isolated {
                values[v] = Some(self.vectors[self.zero_index].clone());
            }
        }
        let values: Vec<TernaryVector> = values
            .into_iter()
            .map(|v| v.expect("order and isolated partition the vertices"))
            .collect();
        SwitchingAssignment::new(self.k, values).expect("uniform dimension")
    }
}

struct SearchState {
    assign: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
}

/// Least `k` admitting a positive `k`-switching, with witness and bound
/// trace. Disconnected graphs decompose: the answer is the maximum over
/// components, witnesses zero-padded to the common dimension.
pub fn bdim(g: &SignedGraph, cfg: &SolverConfig) -> Result<DimensionResult, SolveError> {
    let start = Instant::now();
    let trace = compute_bounds(g, DimensionKind::Bdim, cfg)?;
    let certificate = g.balance();
    if let Some(eta) = certificate.balanced_witness() {
        let witness = one_switching_as_assignment(eta);
        let result = DimensionResult {
            kind: DimensionKind::Bdim,
            value: 1,
            witness,
            trace,
            stats: SearchStats {
                nodes: 0,
                elapsed: start.elapsed(),
            },
            all_positive_convention: false,
        };
        assert!(is_positive_switching(g, &result.witness, false));
        return Ok(result);
    }

    let comps = g.connected_components();
    let (value, witness, nodes) = if comps.len() == 1 {
        bdim_connected(g, &trace, cfg)?
    } else {
        let mut value = 1;
        let mut nodes = 0;
        let mut parts = Vec::with_capacity(comps.len());
        for comp in comps {
            let sub = bdim(&comp.graph, cfg)?;
            value = value.max(sub.value);
            nodes += sub.stats.nodes;
            parts.push((comp, sub));
        }
        let mut values: Vec<Option<TernaryVector>> = vec![None; g.vertex_count()];
        for (comp, sub) in &parts {
            let padded = sub.witness.zero_pad(value)?;
            for (local, &orig) in comp.vertex_map.iter().enumerate() {
                values[orig] = Some(padded.value(local).clone());
            }
        }
        let witness = SwitchingAssignment::new(
            value,
            values.into_iter().map(|v| v.expect("components partition")).collect(),
        )?;
        (value, witness, nodes)
    };

    assert!(
        is_positive_switching(g, &witness, false),
        "witness must re-verify"
    );
    Ok(DimensionResult {
        kind: DimensionKind::Bdim,
        value,
        witness,
        trace,
        stats: SearchStats {
            nodes,
            elapsed: start.elapsed(),
        },
        all_positive_convention: false,
    })
}

fn bdim_connected(
    g: &SignedGraph,
    trace: &BoundTrace,
    cfg: &SolverConfig,
) -> Result<(usize, SwitchingAssignment, u64), SolveError> {
    // Valid because the plain dimension is invariant under one-dimensional
    // switching: search a form where every spanning-forest edge is positive
    // and translate the witness back.
    let eta = g.forest_positivizing_switching();
    let canon = g.apply_one_switching(&eta)?;
    let lo = trace.effective_lower;
    let hi = trace
        .effective_upper
        .min(cfg.max_k.unwrap_or(usize::MAX))
        .min(MAX_DIMENSION);
    let mut nodes = 0;
    for k in lo..=hi {
        let out = search_dimension(&canon, k, false, cfg)?;
        nodes += out.nodes;
        if let Some(zeta) = out.assignment {
            let witness = compose(&eta, &zeta)?;
            return Ok((k, witness, nodes));
        }
    }
    Err(SolveError::Capacity {
        max_k: hi,
        proven_lower: lo.max(hi.saturating_add(1)),
        proven_upper: trace.effective_upper,
    })
}

/// Least `k` admitting an injective positive `k`-switching; all-positive
/// graphs are 1 by convention. Not decomposable over components, so the
/// search runs on the whole graph.
pub fn sbdim(g: &SignedGraph, cfg: &SolverConfig) -> Result<DimensionResult, SolveError> {
    let start = Instant::now();
    let trace = compute_bounds(g, DimensionKind::Sbdim, cfg)?;
    if g.is_all_positive() {
        let one = TernaryVector::new(vec![1]).expect("valid trit");
        let witness = SwitchingAssignment::constant(g.vertex_count(), one);
        assert!(is_positive_switching(g, &witness, false));
        return Ok(DimensionResult {
            kind: DimensionKind::Sbdim,
            value: 1,
            witness,
            trace,
            stats: SearchStats {
                nodes: 0,
                elapsed: start.elapsed(),
            },
            all_positive_convention: true,
        });
    }

    let lo = trace.effective_lower;
    let hi = trace
        .effective_upper
        .min(cfg.max_k.unwrap_or(usize::MAX))
        .min(MAX_DIMENSION);
    let mut nodes = 0;
    for k in lo..=hi {
        let out = search_dimension(g, k, true, cfg)?;
        nodes += out.nodes;
        if let Some(witness) = out.assignment {
            assert!(
                is_positive_switching(g, &witness, true),
                "witness must re-verify"
            );
            return Ok(DimensionResult {
                kind: DimensionKind::Sbdim,
                value: k,
                witness,
                trace,
                stats: SearchStats {
                    nodes,
                    elapsed: start.elapsed(),
                },
                all_positive_convention: false,
            });
        }
    }
    Err(SolveError::Capacity {
        max_k: hi,
        proven_lower: lo.max(hi.saturating_add(1)),
        proven_upper: trace.effective_upper,
    })
}

/// Plain exhaustive enumeration over all `(3^k)^n` assignments in canonical
/// order, with no pruning beyond checking each full assignment. Exists to
/// cross-validate [`find_k_positive`] on small instances.
pub fn brute_force_oracle(
    g: &SignedGraph,
    k: usize,
    injective: bool,
    budget: u128,
) -> Result<Option<SwitchingAssignment>, SolveError> {
    let vectors = ternary::enumerate(k, true)?;
    let n = g.vertex_count();
    let base = vectors.len() as u128;
    let total = base
        .checked_pow(n as u32)
        .ok_or(SolveError::BudgetExceeded {
            assignments: u128::MAX,
            budget,
        })?;
    if total > budget {
        return Err(SolveError::BudgetExceeded {
            assignments: total,
            budget,
        });
    }

    let zero_index = (vectors.len() - 1) / 2;
    let degrees = g.degrees();
    let edges = g.edges();
    let mut digits = vec![0usize; n];
    loop {
        let ok = digits
            .iter()
            .enumerate()
            .all(|(v, &d)| d != zero_index || degrees[v] == 0)
            && edges.iter().all(|e| {
                let d = vectors[digits[e.u]]
                    .dot(&vectors[digits[e.v]])
                    .expect("uniform dimension");
                sgn(d) == e.sign.as_i8()
            })
            && (!injective || {
                let mut seen = vec![false; vectors.len()];
                digits.iter().all(|&d| !std::mem::replace(&mut seen[d], true))
            });
        if ok {
            let values = digits.iter().map(|&d| vectors[d].clone()).collect();
            return Ok(Some(SwitchingAssignment::new(k, values)?));
        }
        // Increment the odometer; the last vertex is the least significant
        // digit, so assignments ascend lexicographically.
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < vectors.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, NegativeEdges};
    use crate::graph::Sign;

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn bounds_for_negative_triangle() {
        let c3m = generators::cycle(3, 1).unwrap();
        let t = compute_bounds(&c3m, DimensionKind::Bdim, &cfg()).unwrap();
        assert_eq!(t.effective_lower, 3);
        assert_eq!(t.effective_upper, 3);
    }

    #[test]
    fn bounds_for_c8_strong() {
        let c8m = generators::cycle(8, 7).unwrap();
        let t = compute_bounds(&c8m, DimensionKind::Sbdim, &cfg()).unwrap();
        assert!(t
            .lower
            .contains(&(BoundName::LogCapacity, 2)));
        assert_eq!(t.effective_lower, 2);
    }

    #[test]
    fn bounds_for_all_negative_k5() {
        let k5 = generators::complete(5, NegativeEdges::All).unwrap();
        let t = compute_bounds(&k5, DimensionKind::Bdim, &cfg()).unwrap();
        assert!(t.lower.contains(&(BoundName::AntibalancedComplete, 5)));
        assert_eq!(t.effective_lower, 5);
        assert_eq!(t.effective_upper, 5);
    }

    #[test]
    fn find_k_positive_examples() {
        let c4m = generators::figure1();
        let found = find_k_positive(&c4m, 2, false, &cfg()).unwrap();
        let zeta = found.expect("a 2-dimensional positive switching exists");
        assert!(is_positive_switching(&c4m, &zeta, false));

        let c3m = generators::cycle(3, 1).unwrap();
        assert!(find_k_positive(&c3m, 2, false, &cfg()).unwrap().is_none());

        let fig2 = generators::figure2();
        assert!(find_k_positive(&fig2, 2, true, &cfg()).unwrap().is_none());
        assert!(find_k_positive(&fig2, 3, true, &cfg()).unwrap().is_some());
    }

    #[test]
    fn oracle_examples() {
        let c4m = generators::figure1();
        assert!(brute_force_oracle(&c4m, 2, false, 10_000)
            .unwrap()
            .is_some());
        let c3m = generators::cycle(3, 1).unwrap();
        assert!(brute_force_oracle(&c3m, 2, false, 1_000).unwrap().is_none());
        let pos_k2 = generators::path(2, Sign::Pos).unwrap();
        assert!(brute_force_oracle(&pos_k2, 1, true, 10).unwrap().is_none());
        assert!(matches!(
            brute_force_oracle(&c4m, 3, false, 10),
            Err(SolveError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn bdim_of_cycles() {
        assert_eq!(bdim(&generators::cycle(3, 1).unwrap(), &cfg()).unwrap().value, 3);
        for n in 4..=8 {
            let r = bdim(&generators::cycle(n, 1).unwrap(), &cfg()).unwrap();
            assert_eq!(r.value, 2, "C_{n} with one negative edge");
        }
        // Balanced cycles are dimension 1.
        let r = bdim(&generators::cycle(6, 2).unwrap(), &cfg()).unwrap();
        assert_eq!(r.value, 1);
    }

    #[test]
    fn sbdim_small_cases() {
        // All-positive convention, including several isolated vertices.
        let p3 = generators::path(3, Sign::Pos).unwrap();
        let r = sbdim(&p3, &cfg()).unwrap();
        assert_eq!(r.value, 1);
        assert!(r.all_positive_convention);

        let neg_p3 = generators::path(3, Sign::Neg).unwrap();
        let r = sbdim(&neg_p3, &cfg()).unwrap();
        assert_eq!(r.value, 2);
        assert!(!r.all_positive_convention);

        // The strong-dimension-1 family beyond the all-positive convention.
        let neg_k2 = generators::path(2, Sign::Neg).unwrap();
        assert_eq!(sbdim(&neg_k2, &cfg()).unwrap().value, 1);
        let with_iso = generators::disjoint_union(&[
            neg_k2.clone(),
            SignedGraph::edgeless(1),
        ])
        .unwrap();
        assert_eq!(sbdim(&with_iso, &cfg()).unwrap().value, 1);
        let two_iso = generators::disjoint_union(&[
            neg_k2,
            SignedGraph::edgeless(2),
        ])
        .unwrap();
        assert_eq!(sbdim(&two_iso, &cfg()).unwrap().value, 2);
    }

    #[test]
    fn disconnected_bdim_takes_component_maximum() {
        let g = generators::disjoint_union(&[
            generators::cycle(3, 1).unwrap(),
            generators::cycle(5, 1).unwrap(),
            generators::path(4, Sign::Neg).unwrap(),
        ])
        .unwrap();
        let r = bdim(&g, &cfg()).unwrap();
        assert_eq!(r.value, 3);
        assert!(is_positive_switching(&g, &r.witness, false));
    }

    #[test]
    fn capacity_error_carries_bracket() {
        let k5 = generators::complete(5, NegativeEdges::All).unwrap();
        let tight = SolverConfig {
            max_k: Some(3),
            ..cfg()
        };
        match bdim(&k5, &tight) {
            Err(SolveError::Capacity {
                max_k: 3,
                proven_lower,
                proven_upper,
            }) => {
                assert_eq!(proven_lower, 5);
                assert_eq!(proven_upper, 5);
            }
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn threads_do_not_change_values() {
        let fig2 = generators::figure2();
        let parallel = SolverConfig {
            threads: 4,
            ..cfg()
        };
        for g in [
            fig2,
            generators::cycle(7, 1).unwrap(),
            generators::complete(4, NegativeEdges::All).unwrap(),
        ] {
            let single = sbdim(&g, &cfg()).unwrap();
            let multi = sbdim(&g, &parallel).unwrap();
            assert_eq!(single.value, multi.value);
            assert!(is_positive_switching(&g, &multi.witness, true));
        }
    }

    #[test]
    fn empty_and_trivial_graphs() {
        let empty = SignedGraph::edgeless(0);
        assert_eq!(bdim(&empty, &cfg()).unwrap().value, 1);
        assert_eq!(sbdim(&empty, &cfg()).unwrap().value, 1);
        let k1 = SignedGraph::edgeless(1);
        assert_eq!(bdim(&k1, &cfg()).unwrap().value, 1);
        assert_eq!(sbdim(&k1, &cfg()).unwrap().value, 1);
    }
}
