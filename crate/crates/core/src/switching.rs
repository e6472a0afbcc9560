//! Vector-valued switching: validating assignments `ζ: V → Ω^k`, applying
//! them to signed graphs, composing with one-dimensional switchings, and
//! checking for (injective) positive switchings.
//!
//! One-dimensional switching is deliberately *not* modeled as the `k = 1`
//! case: the two notions differ at isolated vertices (a one-dimensional
//! assignment may give an isolated vertex the value 0 only in the vector
//! model). [`crate::graph::OneSwitching`] stays a separate type.

use std::fmt;
use thiserror::Error;

use crate::graph::{OneSwitching, SignedGraph};
use crate::ternary::{sgn, TernaryError, TernaryVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SwitchingError {
    #[error("assignment covers {got} vertices, graph has {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("vertex {v} has a vector of dimension {found}, expected {expected}")]
    MixedDimensions {
        v: usize,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Ternary(#[from] TernaryError),
    #[error("assignment is not a valid switching function: {0}")]
    Invalid(ValidityReport),
}

/// A total map from vertex ids to vectors of a fixed dimension.
#[derive(Clone, PartialEq, Eq)]
pub struct SwitchingAssignment {
    dimension: usize,
    values: Vec<TernaryVector>,
}

impl SwitchingAssignment {
    pub fn new(
        dimension: usize,
        values: Vec<TernaryVector>,
    ) -> Result<Self, SwitchingError> {
        if dimension == 0 {
            return Err(TernaryError::ZeroDimension.into());
        }
        for (v, vec) in values.iter().enumerate() {
            if vec.dimension() != dimension {
                return Err(SwitchingError::MixedDimensions {
                    v,
                    expected: dimension,
                    found: vec.dimension(),
                });
            }
        }
        Ok(Self { dimension, values })
    }

    /// Every vertex mapped to the same vector.
    pub fn constant(n: usize, value: TernaryVector) -> Self {
        Self {
            dimension: value.dimension(),
            values: vec![value; n],
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, v: usize) -> &TernaryVector {
        &self.values[v]
    }

    pub fn values(&self) -> &[TernaryVector] {
        &self.values
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.values.iter().all(|v| seen.insert(v.clone()))
    }

    /// Pointwise negation. Applying `-ζ` switches identically to `ζ`.
    pub fn negated(&self) -> Self {
        Self {
            dimension: self.dimension,
            values: self.values.iter().map(TernaryVector::negated).collect(),
        }
    }

    /// Extend every vector with trailing zeros to dimension `k2`.
    pub fn zero_pad(&self, k2: usize) -> Result<Self, SwitchingError> {
        let values = self
            .values
            .iter()
            .map(|v| v.zero_pad(k2))
            .collect::<Result<_, _>>()?;
        Ok(Self {
            dimension: k2,
            values,
        })
    }
}

impl fmt::Debug for SwitchingAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SwitchingAssignment(k={}, [", self.dimension)?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}↦{v}")?;
        }
        write!(f, "])")
    }
}

/// A reason an assignment fails to be a (positive, injective) switching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Endpoint vectors of an edge are orthogonal, so the switched sign
    /// would be undefined.
    OrthogonalEdge { u: usize, v: usize },
    /// A vertex with incident edges carries the zero vector.
    ZeroOnNonIsolated { v: usize },
    /// The assignment does not cover the vertex set, or dimensions vary.
    Structural(String),
    /// An edge remains negative after switching.
    EdgeNotPositive { u: usize, v: usize },
    /// Two vertices share a vector although injectivity was required.
    DuplicateValue { u: usize, v: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OrthogonalEdge { u, v } => {
                write!(f, "edge {u}-{v} has orthogonal endpoint vectors")
            }
            Violation::ZeroOnNonIsolated { v } => {
                write!(f, "non-isolated vertex {v} is assigned the zero vector")
            }
            Violation::Structural(msg) => f.write_str(msg),
            Violation::EdgeNotPositive { u, v } => {
                write!(f, "edge {u}-{v} is negative after switching")
            }
            Violation::DuplicateValue { u, v } => {
                write!(f, "vertices {u} and {v} share the same vector")
            }
        }
    }
}

/// Violations found by [`validate`] or [`check_positive_switching`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Check that `zeta` is a switching function for `g`: endpoint vectors of
/// every edge have nonzero inner product, and the zero vector appears only
/// on isolated vertices. Structural problems (wrong vertex count, mixed
/// dimensions) are input errors rather than report entries.
pub fn validate(g: &SignedGraph, zeta: &SwitchingAssignment) -> Result<ValidityReport, SwitchingError> {
    if zeta.len() != g.vertex_count() {
        return Err(SwitchingError::SizeMismatch {
            expected: g.vertex_count(),
            got: zeta.len(),
        });
    }
    let mut report = ValidityReport::default();
    let degrees = g.degrees();
    for (v, &d) in degrees.iter().enumerate() {
        if d > 0 && zeta.value(v).is_zero() {
            report.violations.push(Violation::ZeroOnNonIsolated { v });
        }
    }
    for e in g.edges() {
        if zeta.value(e.u).dot(zeta.value(e.v))? == 0 {
            report
                .violations
                .push(Violation::OrthogonalEdge { u: e.u, v: e.v });
        }
    }
    Ok(report)
}

/// Switch `g` by `zeta`: edge `uv` gets sign `σ(uv)·sgn⟨ζ(u), ζ(v)⟩`.
pub fn apply_k_switching(
    g: &SignedGraph,
    zeta: &SwitchingAssignment,
) -> Result<SignedGraph, SwitchingError> {
    let report = validate(g, zeta)?;
    if !report.is_valid() {
        return Err(SwitchingError::Invalid(report));
    }
    let edges = g
        .edges()
        .iter()
        .map(|e| {
            let d = zeta
                .value(e.u)
                .dot(zeta.value(e.v))
                .expect("validated dimensions");
            let sign = if sgn(d) == 1 { e.sign } else { e.sign.flipped() };
            (e.u, e.v, sign)
        })
        .collect::<Vec<_>>();
    Ok(SignedGraph::new(g.vertex_count(), edges).expect("underlying graph unchanged"))
}

/// Pointwise product `(ηζ)(v) = η(v)·ζ(v)`.
pub fn compose(
    eta: &OneSwitching,
    zeta: &SwitchingAssignment,
) -> Result<SwitchingAssignment, SwitchingError> {
    if eta.len() != zeta.len() {
        return Err(SwitchingError::SizeMismatch {
            expected: eta.len(),
            got: zeta.len(),
        });
    }
    let values = zeta
        .values()
        .iter()
        .enumerate()
        .map(|(v, vec)| {
            if eta.value(v) == 1 {
                vec.clone()
            } else {
                vec.negated()
            }
        })
        .collect();
    SwitchingAssignment::new(zeta.dimension(), values)
}

/// Full report for "does `zeta` switch `g` to all positive?". Never fails:
/// structural problems are reported as violations, because callers probe
/// many candidate assignments.
pub fn check_positive_switching(
    g: &SignedGraph,
    zeta: &SwitchingAssignment,
    require_injective: bool,
) -> ValidityReport {
    let mut report = match validate(g, zeta) {
        Ok(r) => r,
        Err(e) => {
            return ValidityReport {
                violations: vec![Violation::Structural(e.to_string())],
            }
        }
    };
    for e in g.edges() {
        let d = zeta
            .value(e.u)
            .dot(zeta.value(e.v))
            .expect("validated dimensions");
        if sgn(d) != e.sign.as_i8() {
            // σ(uv)·sgn⟨ζ(u),ζ(v)⟩ = +1 requires the factors to agree.
            if d != 0 {
                report
                    .violations
                    .push(Violation::EdgeNotPositive { u: e.u, v: e.v });
            }
        }
    }
    if require_injective {
        let mut seen: std::collections::HashMap<&TernaryVector, usize> = Default::default();
        for (v, vec) in zeta.values().iter().enumerate() {
            if let Some(&u) = seen.get(vec) {
                report.violations.push(Violation::DuplicateValue { u, v });
            } else {
                seen.insert(vec, v);
            }
        }
    }
    report
}

/// Whether `zeta` is a valid switching that makes every edge of `g`
/// positive (and is injective, when required).
pub fn is_positive_switching(
    g: &SignedGraph,
    zeta: &SwitchingAssignment,
    require_injective: bool,
) -> bool {
    check_positive_switching(g, zeta, require_injective).is_valid()
}

/// View a ±1 switching as a one-dimensional vector assignment.
pub fn one_switching_as_assignment(eta: &OneSwitching) -> SwitchingAssignment {
    let values = eta
        .values()
        .iter()
        .map(|&x| TernaryVector::new(vec![x]).expect("±1 is a trit"))
        .collect();
    SwitchingAssignment::new(1, values).expect("uniform dimension 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::Sign;

    pub(crate) fn assignment(k: usize, rows: &[&[i8]]) -> SwitchingAssignment {
        let values = rows
            .iter()
            .map(|r| TernaryVector::new(r.to_vec()).unwrap())
            .collect();
        SwitchingAssignment::new(k, values).unwrap()
    }

    #[test]
    fn validate_examples() {
        let c4m = generators::figure1();
        let zeta = assignment(2, &[&[-1, 0], &[1, -1], &[0, -1], &[-1, -1]]);
        assert!(validate(&c4m, &zeta).unwrap().is_valid());

        let k2 = generators::path(2, Sign::Pos).unwrap();
        let ortho = assignment(2, &[&[1, 0], &[0, 1]]);
        let report = validate(&k2, &ortho).unwrap();
        assert_eq!(
            report.violations,
            vec![Violation::OrthogonalEdge { u: 0, v: 1 }]
        );

        let k1 = SignedGraph::edgeless(1);
        let zero = assignment(2, &[&[0, 0]]);
        assert!(validate(&k1, &zero).unwrap().is_valid());

        let wrong_len = assignment(2, &[&[1, 0]]);
        assert!(matches!(
            validate(&c4m, &wrong_len),
            Err(SwitchingError::SizeMismatch { expected: 4, got: 1 })
        ));
    }

    #[test]
    fn apply_examples() {
        let c4m = generators::figure1();
        let zeta = assignment(2, &[&[-1, 0], &[1, -1], &[0, -1], &[-1, -1]]);
        let switched = apply_k_switching(&c4m, &zeta).unwrap();
        assert!(switched.is_all_positive());

        let c3_all_neg = generators::cycle(3, 3).unwrap();
        let zeta = assignment(3, &[&[-1, 1, 1], &[1, -1, 1], &[1, 1, -1]]);
        assert!(apply_k_switching(&c3_all_neg, &zeta)
            .unwrap()
            .is_all_positive());

        let ones = SwitchingAssignment::constant(4, TernaryVector::new(vec![1, 1]).unwrap());
        assert_eq!(apply_k_switching(&c4m, &ones).unwrap(), c4m);

        // Zero on a non-isolated vertex is rejected.
        let bad = assignment(2, &[&[0, 0], &[1, -1], &[0, -1], &[-1, -1]]);
        assert!(matches!(
            apply_k_switching(&c4m, &bad),
            Err(SwitchingError::Invalid(_))
        ));
    }

    #[test]
    fn compose_examples() {
        let zeta = assignment(2, &[&[-1, 0], &[1, -1], &[0, -1], &[-1, -1]]);
        let id = OneSwitching::constant(4, Sign::Pos);
        assert_eq!(compose(&id, &zeta).unwrap(), zeta);

        let neg = OneSwitching::constant(4, Sign::Neg);
        assert_eq!(compose(&neg, &zeta).unwrap(), zeta.negated());
        let c4m = generators::figure1();
        assert_eq!(
            apply_k_switching(&c4m, &zeta.negated()).unwrap(),
            apply_k_switching(&c4m, &zeta).unwrap()
        );

        let eta = OneSwitching::new(vec![-1, 1, 1, 1]).unwrap();
        let composed = compose(&eta, &zeta).unwrap();
        assert_eq!(composed.value(0).trits(), &[1, 0]);
        assert_eq!(composed.value(1), zeta.value(1));
    }

    #[test]
    fn positivity_checks() {
        // Eight-cycle whose only positive edge is {7,0}.
        let c8m = generators::cycle(8, 7).unwrap();
        let zeta = assignment(
            2,
            &[
                &[1, 0],
                &[-1, 0],
                &[1, -1],
                &[-1, 1],
                &[0, -1],
                &[0, 1],
                &[-1, -1],
                &[1, 1],
            ],
        );
        assert!(is_positive_switching(&c8m, &zeta, true));

        let fig2 = generators::figure2();
        let zeta = assignment(
            3,
            &[
                &[1, 0, 0],
                &[0, 0, 1],
                &[-1, -1, -1],
                &[0, 1, 0],
                &[-1, 1, 1],
                &[1, -1, 1],
                &[1, 1, -1],
            ],
        );
        assert!(is_positive_switching(&fig2, &zeta, true));

        let c4m = generators::figure1();
        let constant = SwitchingAssignment::constant(4, TernaryVector::new(vec![1, 1]).unwrap());
        let report = check_positive_switching(&c4m, &constant, true);
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::EdgeNotPositive { u: 0, v: 1 })));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::DuplicateValue { .. })));

        // Wrong vertex count is reported, not thrown.
        let short = assignment(2, &[&[1, 0]]);
        let report = check_positive_switching(&c4m, &short, false);
        assert!(matches!(report.violations[0], Violation::Structural(_)));
    }
}
