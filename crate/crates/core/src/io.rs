//! Plain-text exchange formats.
//!
//! Graph files: a header line `n m`, then `m` lines `u v s` with 0-based
//! vertex ids and `s` one of `+`/`-`. Switching files: a header line
//! `n k`, then `n` lines `v t1 … tk` with trits in `{-1, 0, 1}`. Blank
//! lines and lines starting with `#` are ignored in both formats.
//! Serialization emits canonical order, so `serialize(parse(s)) == s` for
//! canonical input and `parse(serialize(x)) == x` always.

use std::fmt;
use thiserror::Error;

use crate::graph::{Sign, SignedGraph};
use crate::switching::SwitchingAssignment;
use crate::ternary::TernaryVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Malformed(String),
    LoopEdge { u: usize },
    DuplicateEdge { u: usize, v: usize },
    IdOutOfRange { id: usize, n: usize },
    BadSign(String),
    BadTrit(String),
    WrongTritCount { expected: usize, found: usize },
    DuplicateRow { v: usize },
    MissingRow { v: usize },
    WrongEdgeCount { expected: usize, found: usize },
    MissingHeader,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Malformed(msg) => write!(f, "malformed line: {msg}"),
            ParseErrorKind::LoopEdge { u } => write!(f, "loop edge at vertex {u}"),
            ParseErrorKind::DuplicateEdge { u, v } => write!(f, "duplicate edge {u}-{v}"),
            ParseErrorKind::IdOutOfRange { id, n } => {
                write!(f, "vertex id {id} out of range for {n} vertices")
            }
            ParseErrorKind::BadSign(s) => write!(f, "invalid sign '{s}' (expected + or -)"),
            ParseErrorKind::BadTrit(s) => write!(f, "invalid trit '{s}' (expected -1, 0 or 1)"),
            ParseErrorKind::WrongTritCount { expected, found } => {
                write!(f, "expected {expected} trits, found {found}")
            }
            ParseErrorKind::DuplicateRow { v } => write!(f, "vertex {v} appears twice"),
            ParseErrorKind::MissingRow { v } => write!(f, "no row for vertex {v}"),
            ParseErrorKind::WrongEdgeCount { expected, found } => {
                write!(f, "header announces {expected} edges, found {found}")
            }
            ParseErrorKind::MissingHeader => f.write_str("missing header line"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn new(line: usize, kind: ParseErrorKind) -> Self {
        Self { line, kind }
    }
}

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(line: usize, field: &str) -> Result<usize, ParseError> {
    field.parse().map_err(|_| {
        ParseError::new(
            line,
            ParseErrorKind::Malformed(format!("'{field}' is not a non-negative integer")),
        )
    })
}

pub fn parse_graph(text: &str) -> Result<SignedGraph, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, ParseErrorKind::MissingHeader))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(ParseError::new(
            header_line,
            ParseErrorKind::Malformed("header must be 'n m'".into()),
        ));
    }
    let n = parse_usize(header_line, fields[0])?;
    let m = parse_usize(header_line, fields[1])?;

    let mut edges: Vec<(usize, usize, Sign)> = Vec::with_capacity(m);
    let mut seen: std::collections::HashSet<(usize, usize)> = Default::default();
    for (line, raw) in lines {
        let fields: Vec<&str> = raw.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(ParseError::new(
                line,
                ParseErrorKind::Malformed("edge line must be 'u v s'".into()),
            ));
        }
        let u = parse_usize(line, fields[0])?;
        let v = parse_usize(line, fields[1])?;
        let sign = match fields[2] {
            "+" => Sign::Pos,
            "-" => Sign::Neg,
            other => return Err(ParseError::new(line, ParseErrorKind::BadSign(other.into()))),
        };
        if u == v {
            return Err(ParseError::new(line, ParseErrorKind::LoopEdge { u }));
        }
        for id in [u, v] {
            if id >= n {
                return Err(ParseError::new(line, ParseErrorKind::IdOutOfRange { id, n }));
            }
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(ParseError::new(
                line,
                ParseErrorKind::DuplicateEdge { u: key.0, v: key.1 },
            ));
        }
        edges.push((u, v, sign));
    }
    if edges.len() != m {
        return Err(ParseError::new(
            header_line,
            ParseErrorKind::WrongEdgeCount {
                expected: m,
                found: edges.len(),
            },
        ));
    }
    Ok(SignedGraph::new(n, edges).expect("validated above"))
}

pub fn serialize_graph(g: &SignedGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.u, e.v, e.sign));
    }
    out
}

pub fn parse_switching(text: &str) -> Result<SwitchingAssignment, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, ParseErrorKind::MissingHeader))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(ParseError::new(
            header_line,
            ParseErrorKind::Malformed("header must be 'n k'".into()),
        ));
    }
    let n = parse_usize(header_line, fields[0])?;
    let k = parse_usize(header_line, fields[1])?;
    if k == 0 {
        return Err(ParseError::new(
            header_line,
            ParseErrorKind::Malformed("dimension must be at least 1".into()),
        ));
    }

    let mut rows: Vec<Option<TernaryVector>> = vec![None; n];
    let mut last_line = header_line;
    for (line, raw) in lines {
        last_line = line;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        let v = parse_usize(line, fields[0])?;
        if v >= n {
            return Err(ParseError::new(
                line,
                ParseErrorKind::IdOutOfRange { id: v, n },
            ));
        }
        if fields.len() - 1 != k {
            return Err(ParseError::new(
                line,
                ParseErrorKind::WrongTritCount {
                    expected: k,
                    found: fields.len() - 1,
                },
            ));
        }
        let mut trits = Vec::with_capacity(k);
        for field in &fields[1..] {
            match field.parse::<i8>() {
                Ok(t) if (-1..=1).contains(&t) => trits.push(t),
                _ => {
                    return Err(ParseError::new(
                        line,
                        ParseErrorKind::BadTrit((*field).into()),
                    ))
                }
            }
        }
        if rows[v].is_some() {
            return Err(ParseError::new(line, ParseErrorKind::DuplicateRow { v }));
        }
        rows[v] = Some(TernaryVector::new(trits).expect("validated trits"));
    }
    let mut values = Vec::with_capacity(n);
    for (v, row) in rows.into_iter().enumerate() {
        match row {
            Some(vec) => values.push(vec),
            None => return Err(ParseError::new(last_line, ParseErrorKind::MissingRow { v })),
        }
    }
    Ok(SwitchingAssignment::new(k, values).expect("uniform dimension"))
}

pub fn serialize_switching(zeta: &SwitchingAssignment) -> String {
    let mut out = format!("{} {}\n", zeta.len(), zeta.dimension());
    for (v, vec) in zeta.values().iter().enumerate() {
        out.push_str(&v.to_string());
        for t in vec.trits() {
            out.push_str(&format!(" {t}"));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::Sign;

    #[test]
    fn parse_simple_graphs() {
        let g = parse_graph("2 1\n0 1 -\n").unwrap();
        assert_eq!(g, generators::path(2, Sign::Neg).unwrap());

        let fig4 = parse_graph("4 5\n0 1 +\n0 2 +\n0 3 -\n1 2 -\n1 3 +\n").unwrap();
        assert_eq!(fig4, generators::figure4());
        assert_eq!(
            serialize_graph(&fig4),
            "4 5\n0 1 +\n0 2 +\n0 3 -\n1 2 -\n1 3 +\n"
        );
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let g = parse_graph("# a comment\n\n3 2\n0 1 +\n# middle\n1 2 -\n\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn graph_error_kinds_carry_lines() {
        let err = parse_graph("2 1\n0 0 +\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, ParseErrorKind::LoopEdge { u: 0 });

        let err = parse_graph("3 2\n0 1 +\n1 0 -\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.kind, ParseErrorKind::DuplicateEdge { u: 0, v: 1 });

        let err = parse_graph("2 1\n0 5 +\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::IdOutOfRange { id: 5, n: 2 });

        let err = parse_graph("2 1\n0 1 *\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::BadSign("*".into()));

        let err = parse_graph("2 2\n0 1 +\n").unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::WrongEdgeCount {
                expected: 2,
                found: 1
            }
        );

        assert!(parse_graph("").is_err());
        assert!(parse_graph("junk\n").is_err());
    }

    #[test]
    fn switching_round_trip() {
        let text = "4 2\n0 -1 0\n1 1 -1\n2 0 -1\n3 -1 -1\n";
        let zeta = parse_switching(text).unwrap();
        assert_eq!(zeta.dimension(), 2);
        assert_eq!(zeta.value(0).trits(), &[-1, 0]);
        assert_eq!(serialize_switching(&zeta), text);

        // Rows in any order still parse to the same assignment.
        let shuffled = "4 2\n3 -1 -1\n0 -1 0\n2 0 -1\n1 1 -1\n";
        assert_eq!(parse_switching(shuffled).unwrap(), zeta);
    }

    #[test]
    fn switching_error_kinds() {
        let err = parse_switching("2 2\n0 1 1\n0 1 0\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DuplicateRow { v: 0 });

        let err = parse_switching("2 2\n0 1 1\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MissingRow { v: 1 });

        let err = parse_switching("1 2\n0 1\n").unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::WrongTritCount {
                expected: 2,
                found: 1
            }
        );

        let err = parse_switching("1 2\n0 2 0\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::BadTrit("2".into()));
    }
}
