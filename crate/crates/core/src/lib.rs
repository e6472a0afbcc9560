//! Exact computation with vector-valued switching in signed graphs.
//!
//! A signed graph carries a `+1`/`-1` label on each edge. Classical
//! switching multiplies edge signs by a vertex function into `{-1, +1}`;
//! here the values generalize to ternary vectors `ζ(v) ∈ {-1,0,1}^k`, an
//! edge `uv` picking up the sign of the inner product `⟨ζ(u), ζ(v)⟩`.
//! The crate computes, exactly and with verified witnesses:
//!
//! - balance and antibalance certificates ([`graph`]),
//! - the balancing dimension `bdim` (least `k` such that some `ζ` makes
//!   every edge positive) and its injective variant `sbdim` ([`solver`]),
//! - the incidence-based positive switching that bounds both ([`incidence`]),
//! - the largest negative-inner-product set `ν(k)` in `{-1,0,1}^k`, the
//!   inverse `ν̄(n)`, and the non-orthogonal line number `λ(k)` ([`nip`]),
//! - generators for the graph families used in the test suites
//!   ([`generators`]) and plain-text file formats ([`io`]).

pub mod generators;
pub mod graph;
pub mod incidence;
pub mod io;
pub mod nip;
pub mod solver;
pub mod switching;
pub mod ternary;

mod clique;

pub use graph::{BalanceCertificate, Component, Edge, OneSwitching, Sign, SignedGraph};
pub use incidence::{build_incidence, injective_mu, mu_from_incidence, IncidenceMatrix};
pub use nip::{lambda_inverse, lambda_lines, nu, nu_bar, NipKind, NipReport};
pub use solver::{
    bdim, brute_force_oracle, compute_bounds, find_k_positive, sbdim, BoundName, BoundTrace,
    DimensionKind, DimensionResult, SearchStats, SolveError, SolverConfig,
};
pub use switching::{
    apply_k_switching, check_positive_switching, compose, is_positive_switching,
    one_switching_as_assignment, validate, SwitchingAssignment, ValidityReport, Violation,
};
pub use ternary::{enumerate, orbit_representatives, sgn, TernaryVector, MAX_DIMENSION};
