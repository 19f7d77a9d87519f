//! DIMACS-style edge lists: optional `c` comment lines, one `p edge <n> <m>`
//! header and `m` lines `e <u> <v>` with 1-based vertex ids.

use std::collections::HashSet;
use std::fmt::Write as _;

use avoid_core::Graph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimacsError {
    #[error("input is not valid UTF-8")]
    Encoding,
    #[error("missing `p edge <n> <m>` header")]
    MissingHeader,
    #[error("line {line}: malformed header `{text}`")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: second header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: edge before the header")]
    EdgeBeforeHeader { line: usize },
    #[error("line {line}: malformed edge `{text}`")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: vertex {id} is outside 1..={n}")]
    VertexOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: self-loop at vertex {id}")]
    SelfLoop { line: usize, id: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: unrecognized line `{text}`")]
    UnknownLine { line: usize, text: String },
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
}

pub fn parse_graph_bytes(bytes: &[u8]) -> Result<Graph, DimacsError> {
    parse_graph(std::str::from_utf8(bytes).map_err(|_| DimacsError::Encoding)?)
}

pub fn parse_graph(text: &str) -> Result<Graph, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        let mut fields = trimmed.split_whitespace();
        match fields.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(DimacsError::DuplicateHeader { line });
                }
                let rest: Vec<&str> = fields.collect();
                let parsed = match rest[..] {
                    ["edge", n, m] => n.parse().ok().zip(m.parse().ok()),
                    _ => None,
                };
                header = Some(parsed.ok_or_else(|| DimacsError::MalformedHeader {
                    line,
                    text: trimmed.to_string(),
                })?);
            }
            Some("e") => {
                let (n, _) = header.ok_or(DimacsError::EdgeBeforeHeader { line })?;
                let rest: Vec<&str> = fields.collect();
                let ids = match rest[..] {
                    [u, v] => u.parse::<usize>().ok().zip(v.parse::<usize>().ok()),
                    _ => None,
                };
                let (u, v) = ids.ok_or_else(|| DimacsError::MalformedEdge {
                    line,
                    text: trimmed.to_string(),
                })?;
                for id in [u, v] {
                    if id == 0 || id > n {
                        return Err(DimacsError::VertexOutOfRange { line, id, n });
                    }
                }
                if u == v {
                    return Err(DimacsError::SelfLoop { line, id: u });
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(DimacsError::DuplicateEdge { line, u, v });
                }
                edges.push((u - 1, v - 1));
            }
            Some(_) => {
                return Err(DimacsError::UnknownLine {
                    line,
                    text: trimmed.to_string(),
                })
            }
        }
    }
    let (n, m) = header.ok_or(DimacsError::MissingHeader)?;
    if edges.len() != m {
        return Err(DimacsError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated above"))
}

/// Canonical text: header, then edges with the smaller id first, sorted.
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
