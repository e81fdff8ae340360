//! DIMACS `col` and plain edge-list text formats. Both use 1-based vertex
//! numbers; the parsed graph has ids `0..n`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    DimacsCol,
    EdgeList,
}

impl GraphFormat {
    /// DIMACS if any line starts with `p`, otherwise an edge list.
    pub fn detect(text: &str) -> GraphFormat {
        if text.lines().any(|l| l.trim_start().starts_with('p')) {
            GraphFormat::DimacsCol
        } else {
            GraphFormat::EdgeList
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("missing header")]
    MissingHeader,
    #[error("line {line}: vertex {v} out of range 1..={n}")]
    OutOfRange { line: usize, v: u64, n: usize },
    #[error("line {line}: self-loop on vertex {v}")]
    SelfLoop { line: usize, v: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn malformed(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Malformed { line, msg: msg.into() }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<u64, ParseError> {
    let tok = tok.ok_or_else(|| malformed(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| malformed(line, format!("bad {what} {tok:?}")))
}

fn edge(line: usize, n: usize, u: u64, v: u64) -> Result<(u32, u32), ParseError> {
    for x in [u, v] {
        if x == 0 || x > n as u64 {
            return Err(ParseError::OutOfRange { line, v: x, n });
        }
    }
    if u == v {
        return Err(ParseError::SelfLoop { line, v: u });
    }
    Ok((u as u32 - 1, v as u32 - 1))
}

/// Header `p edge <n> <m>` (or `p col`), edges `e <u> <v>`, comments `c`.
/// Duplicate edges collapse; the declared `m` is not enforced.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(malformed(line, "second header"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => return Err(malformed(line, format!("unsupported problem type {other:?}"))),
                }
                let nv = number(toks.next(), line, "vertex count")?;
                number(toks.next(), line, "edge count")?;
                if toks.next().is_some() {
                    return Err(malformed(line, "trailing tokens in header"));
                }
                n = Some(usize::try_from(nv).map_err(|_| malformed(line, "vertex count too large"))?);
            }
            Some("e") => {
                let n = n.ok_or_else(|| malformed(line, "edge before header"))?;
                let u = number(toks.next(), line, "vertex")?;
                let v = number(toks.next(), line, "vertex")?;
                if toks.next().is_some() {
                    return Err(malformed(line, "trailing tokens in edge"));
                }
                edges.push(edge(line, n, u, v)?);
            }
            Some(tok) => return Err(malformed(line, format!("unknown line type {tok:?}"))),
        }
    }
    let n = n.ok_or(ParseError::MissingHeader)?;
    Ok(Graph::from_edges(n, &edges)?)
}

/// Canonical form: header, then edges with `u < v` in ascending order.
/// Ids are written by position, so non-contiguous ids are renumbered.
pub fn write_dimacs(g: &Graph) -> String {
    let edges = position_edges(g);
    let mut out = format!("p edge {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// First line the vertex count, then one `u v` pair per line; `#` starts a
/// comment.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut toks = body.split_whitespace();
        let Some(first) = toks.next() else { continue };
        match n {
            None => {
                let nv = number(Some(first), line, "vertex count")?;
                if toks.next().is_some() {
                    return Err(malformed(line, "expected the vertex count alone"));
                }
                n = Some(usize::try_from(nv).map_err(|_| malformed(line, "vertex count too large"))?);
            }
            Some(n) => {
                let u = number(Some(first), line, "vertex")?;
                let v = number(toks.next(), line, "vertex")?;
                if toks.next().is_some() {
                    return Err(malformed(line, "trailing tokens in edge"));
                }
                edges.push(edge(line, n, u, v)?);
            }
        }
    }
    let n = n.ok_or(ParseError::MissingHeader)?;
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in position_edges(g) {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::DimacsCol => parse_dimacs(text),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

fn position_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(g.edge_count());
    for i in 0..g.n() {
        for j in g.row(i).ones().filter(|&j| j > i) {
            out.push((i, j));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{named_instance, random_gnp};

    #[test]
    fn dimacs_examples() {
        let g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, named_instance("p3").unwrap());
        assert_eq!(parse_dimacs("p edge 2 1\ne 1 1\n"), Err(ParseError::SelfLoop { line: 2, v: 1 }));

        let mut text = String::from("c complement of C6\np edge 6 9\n");
        for (u, v) in [(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6), (4, 6)] {
            text += &format!("e {u} {v}\n");
        }
        assert_eq!(parse_dimacs(&text).unwrap(), named_instance("odd-prism-c6bar").unwrap());
    }

    #[test]
    fn dimacs_errors() {
        assert!(matches!(parse_dimacs("p edge 3 1\ne 1 4\n"), Err(ParseError::OutOfRange { v: 4, .. })));
        assert!(matches!(parse_dimacs("p edge 3 1\ne 0 1\n"), Err(ParseError::OutOfRange { v: 0, .. })));
        assert!(matches!(parse_dimacs("p edge x 1\n"), Err(ParseError::Malformed { line: 1, .. })));
        assert!(matches!(parse_dimacs("p foo 3 1\n"), Err(ParseError::Malformed { .. })));
        assert!(matches!(parse_dimacs("e 1 2\n"), Err(ParseError::Malformed { .. })));
        assert_eq!(parse_dimacs("c nothing\n"), Err(ParseError::MissingHeader));
        assert!(matches!(parse_dimacs("p edge 3 1\nx 1 2\n"), Err(ParseError::Malformed { line: 2, .. })));
    }

    #[test]
    fn duplicates_collapse() {
        let g = parse_dimacs("p edge 2 3\ne 1 2\ne 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn round_trips() {
        let graphs = [named_instance("p3").unwrap(), named_instance("c6").unwrap(), random_gnp(15, 0.3, 5).unwrap()];
        for g in graphs {
            assert_eq!(parse_dimacs(&write_dimacs(&g)).unwrap(), g);
            assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }

    #[test]
    fn canonical_output() {
        let g = parse_dimacs("p edge 3 2\nc x\ne 3 2\ne 2 1\n").unwrap();
        assert_eq!(write_dimacs(&g), "p edge 3 2\ne 1 2\ne 2 3\n");
        assert_eq!(write_edge_list(&g), "3\n1 2\n2 3\n");
    }

    #[test]
    fn edge_list_format() {
        let g = parse_edge_list("# p3\n3\n1 2 # first\n2 3\n").unwrap();
        assert_eq!(g, named_instance("p3").unwrap());
        assert_eq!(GraphFormat::detect("3\n1 2\n"), GraphFormat::EdgeList);
        assert_eq!(GraphFormat::detect("c hi\np edge 1 0\n"), GraphFormat::DimacsCol);
        assert!(parse_edge_list("3 4\n").is_err());
    }
}
