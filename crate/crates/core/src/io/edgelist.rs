use std::collections::HashSet;
use std::fmt::Write;

use thiserror::Error;

use crate::trigraph::{Trigraph, TrigraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: expected header \"n <count>\"")]
    MissingHeader { line: usize },
    #[error("line {line}: malformed line {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: vertex {index} out of range for {order} vertices")]
    OutOfRange { line: usize, index: usize, order: usize },
    #[error("line {line}: self-loop at vertex {index}")]
    SelfLoop { line: usize, index: usize },
    #[error("line {line}: duplicate edge {i} {j}")]
    Duplicate { line: usize, i: usize, j: usize },
    #[error("invalid graph: {0}")]
    Graph(#[from] TrigraphError),
}

/// Parses the `n <count>` header followed by one `i j` pair per line. Blank
/// lines and lines starting with `#` are skipped.
pub fn parse_edge_list(doc: &str) -> Result<Trigraph, EdgeListError> {
    let mut lines = doc
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(EdgeListError::MissingHeader { line: 1 })?;
    let order = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| EdgeListError::Malformed { line, text: header.to_string() })?,
        _ => return Err(EdgeListError::MissingHeader { line }),
    };

    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for (line, text) in lines {
        let malformed = || EdgeListError::Malformed { line, text: text.to_string() };
        let (i, j) = match text.split_whitespace().collect::<Vec<_>>()[..] {
            [a, b] => (a.parse::<usize>().map_err(|_| malformed())?, b.parse::<usize>().map_err(|_| malformed())?),
            _ => return Err(malformed()),
        };
        for index in [i, j] {
            if index >= order {
                return Err(EdgeListError::OutOfRange { line, index, order });
            }
        }
        if i == j {
            return Err(EdgeListError::SelfLoop { line, index: i });
        }
        if !seen.insert((i.min(j), i.max(j))) {
            return Err(EdgeListError::Duplicate { line, i, j });
        }
        edges.push((i, j));
    }
    Ok(Trigraph::from_graph(order, &edges)?)
}

/// Writes live vertices renumbered in slot order. Red edges are rejected.
pub fn emit_edge_list(g: &Trigraph) -> Result<String, TrigraphError> {
    if !g.is_plain() {
        return Err(TrigraphError::RedEdgesPresent);
    }
    let g = g.compacted();
    let mut out = format!("n {}\n", g.order());
    for (u, v, _) in g.edges() {
        writeln!(out, "{} {}", u.smallest(), v.smallest()).unwrap();
    }
    Ok(out)
}
