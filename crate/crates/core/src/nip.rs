//! Negative-inner-product (NIP) quantities over `Ω^k`, computed by exact
//! maximum-clique search on compatibility graphs:
//!
//! - `nu(k)`: the largest set of distinct nonzero vectors with pairwise
//!   strictly negative inner products. At most `k + 1` vectors fit in any
//!   such set in `k` dimensions.
//! - `nu_bar(n)`: the least `k` with `nu(k) ≥ n`.
//! - `lambda_lines(k)`: the largest family of pairwise non-orthogonal
//!   lines `{v, -v}` spanned by nonzero vectors, and `lambda_inverse(p)`.
//!
//! The `nu` search exploits the signed-permutation symmetry of the inner
//! product: a maximum NIP set can always be mapped so that it contains one
//! of the `k` orbit representatives, so the search decomposes into one
//! neighborhood clique problem per representative.
//!
//! Values are memoized in-process and can be spilled to / reloaded from a
//! plain-text cache file; loaded witnesses are re-verified.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::clique::BitGraph;
use crate::ternary::{enumerate, orbit_representatives, TernaryError, TernaryVector};

#[derive(Debug, Error)]
pub enum NipError {
    #[error(transparent)]
    Ternary(#[from] TernaryError),
    #[error("nu_bar is defined for n >= 2, got {0}")]
    BadN(usize),
    #[error("nu_bar({n}) unresolved within k <= {k_cap}: nu({k_cap}) = {best_value}")]
    Unresolved {
        n: usize,
        k_cap: usize,
        best_value: usize,
    },
    #[error("cache i/o: {0}")]
    CacheIo(String),
    #[error("cache line {line}: {msg}")]
    CacheParse { line: usize, msg: String },
    #[error("cache line {line}: stored witness fails verification: {msg}")]
    CacheVerify { line: usize, msg: String },
}

/// Which quantity a report describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum NipKind {
    Nu,
    Lambda,
}

impl NipKind {
    fn name(self) -> &'static str {
        match self {
            NipKind::Nu => "nu",
            NipKind::Lambda => "lambda",
        }
    }
}

/// Result of one exact computation, with the witness set and the size of
/// the compatibility graph that was searched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NipReport {
    pub kind: NipKind,
    pub k: usize,
    pub value: usize,
    pub witness: Vec<TernaryVector>,
    pub graph_vertices: usize,
    pub graph_edges: usize,
    pub elapsed: Duration,
}

fn memo() -> &'static Mutex<BTreeMap<(NipKind, usize), NipReport>> {
    static MEMO: OnceLock<Mutex<BTreeMap<(NipKind, usize), NipReport>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn memo_get(kind: NipKind, k: usize) -> Option<NipReport> {
    memo().lock().unwrap().get(&(kind, k)).cloned()
}

fn memo_put(report: NipReport) {
    memo()
        .lock()
        .unwrap()
        .insert((report.kind, report.k), report);
}

/// Pairwise checks a witness must satisfy, independent of the search that
/// produced it.
fn verify_witness(kind: NipKind, k: usize, witness: &[TernaryVector]) -> Result<(), String> {
    for (i, a) in witness.iter().enumerate() {
        if a.dimension() != k {
            return Err(format!("vector {i} has dimension {}", a.dimension()));
        }
        if a.is_zero() {
            return Err(format!("vector {i} is zero"));
        }
        if kind == NipKind::Lambda {
            let first = a.trits().iter().find(|&&t| t != 0);
            if first != Some(&1) {
                return Err(format!("vector {i} is not a canonical line representative"));
            }
        }
        for (j, b) in witness.iter().enumerate().skip(i + 1) {
            if a == b {
                return Err(format!("vectors {i} and {j} coincide"));
            }
            let d = a.dot(b).map_err(|e| e.to_string())?;
            match kind {
                NipKind::Nu if d >= 0 => {
                    return Err(format!("vectors {i} and {j} have product {d} >= 0"));
                }
                NipKind::Lambda if d == 0 => {
                    return Err(format!("lines {i} and {j} are orthogonal"));
                }
                _ => {}
            }
        }
    }
    if kind == NipKind::Nu && witness.len() > k + 1 {
        return Err(format!(
            "{} vectors exceed the dimension bound {}",
            witness.len(),
            k + 1
        ));
    }
    Ok(())
}

fn count_pairs(vectors: &[TernaryVector], pred: impl Fn(i32) -> bool) -> usize {
    let mut count = 0;
    for (i, a) in vectors.iter().enumerate() {
        for b in &vectors[i + 1..] {
            if pred(a.dot(b).expect("uniform dimension")) {
                count += 1;
            }
        }
    }
    count
}

/// Largest NIP set size in `Ω^k`, with a verified witness.
pub fn nu(k: usize) -> Result<NipReport, NipError> {
    if let Some(r) = memo_get(NipKind::Nu, k) {
        return Ok(r);
    }
    let start = Instant::now();
    let vectors = enumerate(k, false)?;
    let mut best: Vec<TernaryVector> = vec![vectors[0].clone()];
    for rep in orbit_representatives(k)? {
        let neighborhood: Vec<&TernaryVector> = vectors
            .iter()
            .filter(|v| rep.dot(v).expect("uniform dimension") < 0)
            .collect();
        if 1 + neighborhood.len() <= best.len() {
            continue;
        }
        let mut bg = BitGraph::new(neighborhood.len());
        for i in 0..neighborhood.len() {
            for j in (i + 1)..neighborhood.len() {
                if neighborhood[i].dot(neighborhood[j]).expect("uniform") < 0 {
                    bg.add_edge(i, j);
                }
            }
        }
        if let Some(sub) = bg.max_clique_above(best.len().saturating_sub(1)) {
            let mut candidate = vec![rep.clone()];
            candidate.extend(sub.into_iter().map(|i| neighborhood[i].clone()));
            if candidate.len() > best.len() {
                best = candidate;
            }
        }
    }
    best.sort();
    verify_witness(NipKind::Nu, k, &best).expect("search returned an invalid NIP set");
    let report = NipReport {
        kind: NipKind::Nu,
        k,
        value: best.len(),
        witness: best,
        graph_vertices: vectors.len(),
        graph_edges: count_pairs(&vectors, |d| d < 0),
        elapsed: start.elapsed(),
    };
    memo_put(report.clone());
    Ok(report)
}

/// Least `k` with `nu(k) ≥ n`, searching upward from `k = 1`.
pub fn nu_bar(n: usize, k_cap: usize) -> Result<usize, NipError> {
    if n < 2 {
        return Err(NipError::BadN(n));
    }
    let mut best_value = 0;
    for k in 1..=k_cap {
        best_value = nu(k)?.value;
        if best_value >= n {
            return Ok(k);
        }
    }
    Err(NipError::Unresolved {
        n,
        k_cap,
        best_value,
    })
}

/// Canonical line representatives: nonzero vectors whose first nonzero
/// trit is `+1`. One per line `{v, -v}`.
pub fn line_representatives(k: usize) -> Result<Vec<TernaryVector>, TernaryError> {
    Ok(enumerate(k, false)?
        .into_iter()
        .filter(|v| v.trits().iter().find(|&&t| t != 0) == Some(&1))
        .collect())
}

/// Largest family of pairwise non-orthogonal lines spanned by `Ω^k`
/// vectors, with a verified witness of canonical representatives.
pub fn lambda_lines(k: usize) -> Result<NipReport, NipError> {
    if let Some(r) = memo_get(NipKind::Lambda, k) {
        return Ok(r);
    }
    let start = Instant::now();
    let lines = line_representatives(k)?;
    let mut bg = BitGraph::new(lines.len());
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            if lines[i].dot(&lines[j]).expect("uniform dimension") != 0 {
                bg.add_edge(i, j);
            }
        }
    }
    let mut witness: Vec<TernaryVector> = bg
        .max_clique()
        .into_iter()
        .map(|i| lines[i].clone())
        .collect();
    witness.sort();
    verify_witness(NipKind::Lambda, k, &witness).expect("search returned orthogonal lines");
    let report = NipReport {
        kind: NipKind::Lambda,
        k,
        value: witness.len(),
        witness,
        graph_vertices: lines.len(),
        graph_edges: count_pairs(&lines, |d| d != 0),
        elapsed: start.elapsed(),
    };
    memo_put(report.clone());
    Ok(report)
}

/// Least `k ≤ k_cap` with `lambda_lines(k) ≥ p`, or `None` when the cap is
/// reached first.
pub fn lambda_inverse(p: usize, k_cap: usize) -> Result<Option<usize>, NipError> {
    for k in 1..=k_cap {
        if lambda_lines(k)?.value >= p {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Load cache records, re-verify every witness, and merge them into the
/// in-process memo. Returns the number of records loaded.
pub fn load_cache_file(path: &std::path::Path) -> Result<usize, NipError> {
    let text = std::fs::read_to_string(path).map_err(|e| NipError::CacheIo(e.to_string()))?;
    let mut loaded = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let parse_err = |msg: &str| NipError::CacheParse {
            line,
            msg: msg.to_string(),
        };
        let kind = match fields.next() {
            Some("nu") => NipKind::Nu,
            Some("lambda") => NipKind::Lambda,
            _ => return Err(parse_err("expected record kind 'nu' or 'lambda'")),
        };
        let next_usize = |name: &str, fields: &mut dyn Iterator<Item = &str>| {
            fields
                .next()
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or_else(|| parse_err(&format!("missing or invalid {name}")))
        };
        let k = next_usize("dimension", &mut fields)?;
        let value = next_usize("value", &mut fields)?;
        let graph_vertices = next_usize("vertex count", &mut fields)?;
        let graph_edges = next_usize("edge count", &mut fields)?;
        let mut witness = Vec::with_capacity(value);
        for field in fields {
            let trits = field
                .split(',')
                .map(|t| t.parse::<i8>())
                .collect::<Result<Vec<i8>, _>>()
                .map_err(|_| parse_err(&format!("invalid vector '{field}'")))?;
            witness.push(TernaryVector::new(trits).map_err(|e| NipError::CacheParse {
                line,
                msg: e.to_string(),
            })?);
        }
        if witness.len() != value {
            return Err(parse_err(&format!(
                "value {value} does not match witness size {}",
                witness.len()
            )));
        }
        verify_witness(kind, k, &witness)
            .map_err(|msg| NipError::CacheVerify { line, msg })?;
        memo_put(NipReport {
            kind,
            k,
            value,
            witness,
            graph_vertices,
            graph_edges,
            elapsed: Duration::ZERO,
        });
        loaded += 1;
    }
    Ok(loaded)
}

/// Write every memoized record to the cache file, overwriting it.
pub fn save_cache_file(path: &std::path::Path) -> Result<(), NipError> {
    let memo = memo().lock().unwrap();
    let mut out = String::new();
    for report in memo.values() {
        out.push_str(report.kind.name());
        out.push_str(&format!(
            " {} {} {} {}",
            report.k, report.value, report.graph_vertices, report.graph_edges
        ));
        for v in &report.witness {
            out.push(' ');
            let trits: Vec<String> = v.trits().iter().map(|t| t.to_string()).collect();
            out.push_str(&trits.join(","));
        }
        out.push('\n');
    }
    std::fs::write(path, out).map_err(|e| NipError::CacheIo(e.to_string()))
}
