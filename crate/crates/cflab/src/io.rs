//! Text formats for graphs, hypergraphs, and colorings.
//!
//! All three follow the DIMACS convention: `c` lines are comments, a single
//! `p` header precedes the data lines, and vertex ids are 1-based in files
//! (0-based in memory).
//!
//! ```text
//! p edge <n> <m>      followed by m lines    e <u> <v>
//! p hedge <n> <m>     followed by m lines    h <v1> <v2> ...
//! p col <n>           followed by lines      v <id> <color>   (blanks omitted)
//! ```

use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header: {reason}")]
    BadHeader { line: usize, reason: String },
    #[error("missing 'p' header line")]
    MissingHeader,
    #[error("line {line}: expected a '{expected}' record, found '{found}'")]
    UnknownRecord { line: usize, expected: &'static str, found: String },
    #[error("line {line}: bad integer '{token}'")]
    BadInt { line: usize, token: String },
    #[error("line {line}: vertex {id} out of range 1..={n}")]
    VertexOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: self-loop at vertex {id}")]
    SelfLoop { line: usize, id: usize },
    #[error("line {line}: record has wrong number of fields")]
    WrongArity { line: usize },
    #[error("line {line}: empty hyperedge")]
    EmptyEdge { line: usize },
    #[error("line {line}: vertex {id} assigned a color twice")]
    DuplicateAssignment { line: usize, id: usize },
    #[error("line {line}: color must be a positive integer")]
    BadColor { line: usize },
}

/// The three file kinds, distinguished by the `p` header tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    Graph,
    Hypergraph,
    Coloring,
}

/// Peeks at the header to classify a file, without a full parse.
pub fn sniff_kind(text: &str) -> Option<FileKind> {
    for line in text.lines() {
        let mut it = line.split_whitespace();
        match it.next() {
            None | Some("c") => continue,
            Some("p") => {
                return match it.next() {
                    Some("edge") => Some(FileKind::Graph),
                    Some("hedge") => Some(FileKind::Hypergraph),
                    Some("col") => Some(FileKind::Coloring),
                    _ => None,
                }
            }
            _ => return None,
        }
    }
    None
}

fn parse_usize(token: &str, line: usize) -> Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError::BadInt { line, token: token.to_string() })
}

fn check_vertex(id: usize, n: usize, line: usize) -> Result<usize, ParseError> {
    if id == 0 || id > n {
        Err(ParseError::VertexOutOfRange { line, id, n })
    } else {
        Ok(id - 1)
    }
}

/// Lines that carry content: skips blanks and comments, keeps numbering.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        if t.is_empty() || t.starts_with('c') {
            None
        } else {
            Some((i + 1, t))
        }
    })
}

fn parse_header(
    line_no: usize,
    line: &str,
    tag: &'static str,
    fields: usize,
) -> Result<Vec<usize>, ParseError> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.first() != Some(&"p") {
        return Err(ParseError::BadHeader {
            line: line_no,
            reason: format!("expected 'p {tag} ...', found '{line}'"),
        });
    }
    if tokens.get(1) != Some(&tag) {
        return Err(ParseError::BadHeader {
            line: line_no,
            reason: format!("expected format tag '{tag}'"),
        });
    }
    if tokens.len() != 2 + fields {
        return Err(ParseError::BadHeader {
            line: line_no,
            reason: format!("expected {} numeric fields", fields),
        });
    }
    tokens[2..].iter().map(|t| parse_usize(t, line_no)).collect()
}

/// Parses a `p edge` file. Duplicate edges collapse; the declared edge
/// count is advisory.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let dims = parse_header(line_no, header, "edge", 2)?;
    let n = dims[0];
    let mut g = Graph::empty(n);
    for (line, l) in lines {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        if tokens[0] != "e" {
            return Err(ParseError::UnknownRecord {
                line,
                expected: "e",
                found: tokens[0].to_string(),
            });
        }
        if tokens.len() != 3 {
            return Err(ParseError::WrongArity { line });
        }
        let u = check_vertex(parse_usize(tokens[1], line)?, n, line)?;
        let v = check_vertex(parse_usize(tokens[2], line)?, n, line)?;
        if u == v {
            return Err(ParseError::SelfLoop { line, id: u + 1 });
        }
        g.add_edge(u, v).expect("validated above");
    }
    Ok(g)
}

/// Serializes a graph in canonical form: header, then edges sorted
/// lexicographically, 1-based.
pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Parses a `p hedge` file.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let dims = parse_header(line_no, header, "hedge", 2)?;
    let n = dims[0];
    let mut edges = Vec::new();
    for (line, l) in lines {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        if tokens[0] != "h" {
            return Err(ParseError::UnknownRecord {
                line,
                expected: "h",
                found: tokens[0].to_string(),
            });
        }
        if tokens.len() < 2 {
            return Err(ParseError::EmptyEdge { line });
        }
        let mut edge = Vec::with_capacity(tokens.len() - 1);
        for t in &tokens[1..] {
            edge.push(check_vertex(parse_usize(t, line)?, n, line)?);
        }
        edges.push(edge);
    }
    Ok(Hypergraph::new(n, edges).expect("members validated above"))
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p hedge {} {}", h.universe(), h.edge_count());
    for e in h.edges() {
        let _ = write!(out, "h");
        for &v in e {
            let _ = write!(out, " {}", v + 1);
        }
        let _ = writeln!(out);
    }
    out
}

/// Parses a `p col` file; vertices without a `v` record stay blank.
pub fn parse_coloring(text: &str) -> Result<Coloring, ParseError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let dims = parse_header(line_no, header, "col", 1)?;
    let n = dims[0];
    let mut f = Coloring::blank(n);
    for (line, l) in lines {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        if tokens[0] != "v" {
            return Err(ParseError::UnknownRecord {
                line,
                expected: "v",
                found: tokens[0].to_string(),
            });
        }
        if tokens.len() != 3 {
            return Err(ParseError::WrongArity { line });
        }
        let v = check_vertex(parse_usize(tokens[1], line)?, n, line)?;
        let c = parse_usize(tokens[2], line)?;
        if c == 0 {
            return Err(ParseError::BadColor { line });
        }
        if f.get(v).is_some() {
            return Err(ParseError::DuplicateAssignment { line, id: v + 1 });
        }
        f.set(v, c);
    }
    Ok(f)
}

pub fn write_coloring(f: &Coloring) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p col {}", f.len());
    for (v, c) in f.iter() {
        if let Some(c) = c {
            let _ = writeln!(out, "v {} {}", v + 1, c);
        }
    }
    out
}
