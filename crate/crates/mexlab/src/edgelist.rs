//! Edge-list text format.
//!
//! ```text
//! n m
//! u v      (m lines, 0 <= u < v < n)
//! ```
//!
//! Writers emit edges in lexicographic order with a trailing newline, so a
//! parse of any written graph gives back the same labeled graph.

use std::fmt::Write as _;
use std::path::Path;

use mexlab_core::Graph;

use crate::error::CliError;

/// Largest vertex count the parser accepts.
pub const MAX_VERTICES: usize = 50_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("input is not ASCII")]
    NotAscii,
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("line {line}: expected two non-negative integers, got {text:?}")]
    BadLine { line: usize, text: String },
    #[error("header declares {n} vertices, above the cap of {MAX_VERTICES}")]
    TooLarge { n: usize },
    #[error("line {line}: loop at vertex {v}")]
    Loop { line: usize, v: usize },
    #[error("line {line}: vertex {v} out of range for n = {n}")]
    OutOfRange { line: usize, v: usize, n: usize },
    #[error("line {line}: edge {u} {v} is not written as u < v")]
    Unordered { line: usize, u: usize, v: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    Duplicate { line: usize, u: usize, v: usize },
    #[error("header declares {declared} edges, found {found}")]
    CountMismatch { declared: usize, found: usize },
}

fn pair(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let bad = || ParseError::BadLine {
        line,
        text: text.to_string(),
    };
    let mut it = text.split_ascii_whitespace();
    let a = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
    let b = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
    if it.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn parse(text: &str) -> Result<Graph, ParseError> {
    if !text.is_ascii() {
        return Err(ParseError::NotAscii);
    }
    let body = text.trim_end();
    let mut lines = body.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (no, header) = lines.next().filter(|(_, l)| !l.trim().is_empty()).ok_or(ParseError::MissingHeader)?;
    let (n, declared) = pair(no, header)?;
    if n > MAX_VERTICES {
        return Err(ParseError::TooLarge { n });
    }
    let mut g = Graph::empty(n);
    let mut found = 0;
    for (line, text) in lines {
        let (u, v) = pair(line, text)?;
        if u == v {
            return Err(ParseError::Loop { line, v });
        }
        if let Some(&w) = [u, v].iter().find(|&&w| w >= n) {
            return Err(ParseError::OutOfRange { line, v: w, n });
        }
        if u > v {
            return Err(ParseError::Unordered { line, u, v });
        }
        if !g.add_edge(u, v) {
            return Err(ParseError::Duplicate { line, u, v });
        }
        found += 1;
    }
    if found != declared {
        return Err(ParseError::CountMismatch { declared, found });
    }
    Ok(g)
}

pub fn write(g: &Graph) -> String {
    let mut s = String::with_capacity(16 + 12 * g.m());
    let _ = writeln!(s, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn read_file(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse(&text).map_err(|e| CliError::Validation {
        code: "parse_error",
        message: format!("{}: {e}", path.display()),
        failed_condition: None,
    })
}

pub fn write_file(path: &Path, g: &Graph) -> Result<(), CliError> {
    std::fs::write(path, write(g)).map_err(|e| CliError::io(path, e))
}
