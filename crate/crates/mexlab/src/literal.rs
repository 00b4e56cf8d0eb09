//! Shorthand graph literals, accepted wherever an edge-list path is.
//!
//! | literal          | graph                                   |
//! |------------------|-----------------------------------------|
//! | `K<r>`           | complete graph on `r` vertices          |
//! | `K<s>_<t>[_...]` | complete multipartite graph, parts in order |
//! | `C<l>`           | cycle on `l >= 3` vertices              |
//! | `S<m>`           | star with `m` leaves, centre at vertex 0 |
//!
//! Vertex layout follows `mexlab_core::generate`. A literal wins over a file
//! of the same name; write `./K4` to read such a file.

use std::path::Path;

use mexlab_core::generate::{complete, complete_multipartite, cycle, star};
use mexlab_core::{Graph, Pattern};

use crate::edgelist;
use crate::error::CliError;

/// `None` if `s` is not shaped like a literal.
pub fn parse_literal(s: &str) -> Option<Result<Graph, CliError>> {
    let (head, rest) = s.split_at(s.find(|c: char| !c.is_ascii_uppercase()).unwrap_or(s.len()));
    if !matches!(head, "K" | "C" | "S") || rest.is_empty() {
        return None;
    }
    let nums: Option<Vec<usize>> = rest.split('_').map(|t| t.parse().ok()).collect();
    let nums = nums?;
    let bad = || Err(CliError::invalid(format!("bad graph literal {s:?}")));
    Some(match (head, nums.as_slice()) {
        ("K", [r]) => Ok(complete(*r)),
        ("K", parts) => complete_multipartite(parts).map_err(CliError::from),
        ("C", [l]) => cycle(*l).map_err(CliError::from),
        ("S", [m]) if *m >= 1 => Ok(star(*m)),
        _ => bad(),
    })
}

pub fn load_graph(arg: &str) -> Result<Graph, CliError> {
    parse_literal(arg).unwrap_or_else(|| edgelist::read_file(Path::new(arg)))
}

/// Like [`load_graph`], but a relative path is taken relative to `base`.
pub fn load_graph_in(arg: &str, base: &Path) -> Result<Graph, CliError> {
    parse_literal(arg).unwrap_or_else(|| edgelist::read_file(&base.join(arg)))
}

pub fn load_pattern(arg: &str) -> Result<Pattern, CliError> {
    Ok(Pattern::new(load_graph(arg)?)?)
}
