//! Contraction-sequence certificates: a graph, a claimed width and the merge
//! steps, in a line-oriented text format:
//!
//! ```text
//! tww-cert v1
//! # optional comment lines
//! graph E?Bw
//! width 1
//! step 0 3
//! step 0+3 5
//! ```
//!
//! Labels are `+`-joined original indices in ascending order. Verification
//! replays the steps and recomputes every edge color; nothing but the graph
//! and the step list is taken from the certificate.

use std::fmt::Write;

use thiserror::Error;

use crate::io::{emit_graph6, parse_graph6, Graph6Error};
use crate::trigraph::{ContractionStep, Trigraph, TrigraphError, VertexLabel};

pub const HEADER: &str = "tww-cert v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionCertificate {
    pub graph: Trigraph,
    pub width: u32,
    pub steps: Vec<ContractionStep>,
    pub comment: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: bad graph6: {source}")]
    Graph { line: usize, source: Graph6Error },
    #[error("step {step}: {label} is not a live vertex")]
    DeadLabel { step: usize, label: VertexLabel },
    #[error("step {step}: both sides name vertex {label}")]
    SameVertex { step: usize, label: VertexLabel },
    #[error("certificate graph has red edges and cannot be written as graph6")]
    RedGraph,
}

/// Why a well-formed certificate does not prove its claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Failure {
    /// After this step (1-based) some vertex has red degree above the width.
    WidthExceeded { step: usize, red_degree: u32 },
    /// The steps stop before a single vertex remains.
    Incomplete { remaining: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verification {
    pub ok: bool,
    /// Largest red degree over the input and every trigraph after a step,
    /// reported whether or not the certificate holds.
    pub observed_width: u32,
    /// 1-based step at which the width was first exceeded.
    pub failing_step: Option<usize>,
    pub failure: Option<Failure>,
}

/// Applies `steps` in order, returning the trigraph after each one.
pub fn replay(graph: &Trigraph, steps: &[ContractionStep]) -> Result<Vec<Trigraph>, CertificateError> {
    let mut out = Vec::with_capacity(steps.len());
    let mut state = graph.clone();
    for (i, s) in steps.iter().enumerate() {
        let step = i + 1;
        state = state.contract(s.left, s.right).map_err(|e| match e {
            TrigraphError::SameVertex(label) => CertificateError::SameVertex { step, label },
            TrigraphError::UnknownVertex(label) => CertificateError::DeadLabel { step, label },
            other => unreachable!("contract only fails on labels: {other}"),
        })?;
        out.push(state.clone());
    }
    Ok(out)
}

pub fn verify_certificate(c: &ContractionCertificate) -> Result<Verification, CertificateError> {
    let states = replay(&c.graph, &c.steps)?;
    let mut observed = c.graph.max_red_degree() as u32;
    let mut failure = (observed > c.width).then_some(Failure::WidthExceeded { step: 0, red_degree: observed });
    for (i, state) in states.iter().enumerate() {
        let d = state.max_red_degree() as u32;
        observed = observed.max(d);
        if d > c.width && failure.is_none() {
            failure = Some(Failure::WidthExceeded { step: i + 1, red_degree: d });
        }
    }
    let remaining = states.last().unwrap_or(&c.graph).vertex_count();
    if failure.is_none() && remaining != 1 {
        failure = Some(Failure::Incomplete { remaining });
    }
    let failing_step = match failure {
        Some(Failure::WidthExceeded { step, .. }) => Some(step),
        _ => None,
    };
    Ok(Verification { ok: failure.is_none(), observed_width: observed, failing_step, failure })
}

/// Packages a sequence with its observed width as the claimed width.
pub fn record_certificate(
    g: &Trigraph,
    steps: &[ContractionStep],
    comment: String,
) -> Result<ContractionCertificate, CertificateError> {
    let states = replay(g, steps)?;
    let width = states.iter().map(|s| s.max_red_degree()).chain([g.max_red_degree()]).max().unwrap() as u32;
    Ok(ContractionCertificate { graph: g.clone(), width, steps: steps.to_vec(), comment })
}

pub fn write_certificate(c: &ContractionCertificate) -> Result<String, CertificateError> {
    let graph = emit_graph6(&c.graph).map_err(|_| CertificateError::RedGraph)?;
    let mut out = String::new();
    writeln!(out, "{HEADER}").unwrap();
    if !c.comment.is_empty() {
        for line in c.comment.split('\n') {
            if line.is_empty() {
                out.push_str("#\n");
            } else {
                writeln!(out, "# {line}").unwrap();
            }
        }
    }
    writeln!(out, "graph {graph}").unwrap();
    writeln!(out, "width {}", c.width).unwrap();
    for s in &c.steps {
        writeln!(out, "step {} {}", s.left, s.right).unwrap();
    }
    Ok(out)
}

pub fn read_certificate(text: &str) -> Result<ContractionCertificate, CertificateError> {
    let mut comments = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if let Some(c) = line.strip_prefix('#') {
            comments.push(c.strip_prefix(' ').unwrap_or(c).to_string());
        } else if !line.trim().is_empty() {
            lines.push((i + 1, line));
        }
    }
    let end = text.lines().count() + 1;
    let syntax = |line: usize, message: &str| CertificateError::Syntax { line, message: message.to_string() };
    let mut it = lines.into_iter();

    match it.next() {
        Some((_, HEADER)) => {}
        Some((line, _)) => return Err(syntax(line, "expected header \"tww-cert v1\"")),
        None => return Err(syntax(end, "missing header")),
    }
    let graph = match it.next() {
        Some((line, l)) => match l.strip_prefix("graph ") {
            Some(g6) => parse_graph6(g6).map_err(|source| CertificateError::Graph { line, source })?,
            None => return Err(syntax(line, "expected \"graph <graph6>\"")),
        },
        None => return Err(syntax(end, "missing graph line")),
    };
    let width = match it.next() {
        Some((line, l)) => l
            .strip_prefix("width ")
            .filter(|w| !w.is_empty() && w.bytes().all(|b| b.is_ascii_digit()))
            .and_then(|w| w.parse::<u32>().ok())
            .ok_or_else(|| syntax(line, "expected \"width <non-negative integer>\""))?,
        None => return Err(syntax(end, "missing width line")),
    };
    let mut steps = Vec::new();
    for (line, l) in it {
        let parts: Vec<&str> = l.split(' ').collect();
        let ["step", left, right] = parts[..] else {
            return Err(syntax(line, "expected \"step <label> <label>\""));
        };
        let label = |s: &str| s.parse::<VertexLabel>().map_err(|e| syntax(line, &e.to_string()));
        steps.push(ContractionStep::new(label(left)?, label(right)?));
    }
    Ok(ContractionCertificate { graph, width, steps, comment: comments.join("\n") })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cert(text: &str) -> ContractionCertificate {
        read_certificate(text).unwrap()
    }

    const P3: &str = "tww-cert v1\ngraph Bg\nwidth 0\nstep 0 2\nstep 0+2 1\n";

    #[test]
    fn p3_twins() {
        let c = cert(P3);
        assert_eq!(c.graph.edge_count(), 2);
        let v = verify_certificate(&c).unwrap();
        assert!(v.ok);
        assert_eq!(v.observed_width, 0);
        assert_eq!(write_certificate(&c).unwrap(), P3);
    }

    #[test]
    fn width_violation() {
        // contracting 0 and 1 first leaves a red edge
        let c = cert("tww-cert v1\ngraph Bg\nwidth 0\nstep 0 1\nstep 0+1 2\n");
        let v = verify_certificate(&c).unwrap();
        assert!(!v.ok);
        assert_eq!(v.observed_width, 1);
        assert_eq!(v.failing_step, Some(1));
        assert_eq!(v.failure, Some(Failure::WidthExceeded { step: 1, red_degree: 1 }));
    }

    #[test]
    fn incomplete_sequence() {
        let c = cert("tww-cert v1\ngraph Bg\nwidth 0\nstep 0 2\n");
        let v = verify_certificate(&c).unwrap();
        assert!(!v.ok);
        assert_eq!(v.failing_step, None);
        assert_eq!(v.failure, Some(Failure::Incomplete { remaining: 2 }));
    }

    #[test]
    fn dead_and_same_labels() {
        let c = cert("tww-cert v1\ngraph Bg\nwidth 0\nstep 0 2\nstep 0 1\n");
        assert_eq!(
            verify_certificate(&c),
            Err(CertificateError::DeadLabel { step: 2, label: VertexLabel::singleton(0) })
        );
        let c = cert("tww-cert v1\ngraph Bg\nwidth 0\nstep 1 1\n");
        assert_eq!(verify_certificate(&c), Err(CertificateError::SameVertex { step: 1, label: VertexLabel::singleton(1) }));
    }

    #[test]
    fn syntax_errors_have_lines() {
        let err = |t: &str| match read_certificate(t) {
            Err(CertificateError::Syntax { line, .. }) | Err(CertificateError::Graph { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(err(""), 1);
        assert_eq!(err("tww-cert v2\n"), 1);
        assert_eq!(err("tww-cert v1\n"), 2);
        assert_eq!(err("tww-cert v1\ngraph\n"), 2);
        assert_eq!(err("tww-cert v1\ngraph B\n"), 2);
        assert_eq!(err("tww-cert v1\ngraph Bg\nwidth -1\n"), 3);
        assert_eq!(err("tww-cert v1\ngraph Bg\nwidth 1\nstep 0\n"), 4);
        assert_eq!(err("tww-cert v1\ngraph Bg\nwidth 1\n# note\nstep 0 2+1\n"), 5);
    }

    #[test]
    fn comments_round_trip() {
        let mut c = cert(P3);
        c.comment = "first\n\nthird".to_string();
        let text = write_certificate(&c).unwrap();
        assert!(text.contains("# first\n#\n# third\n"));
        assert_eq!(read_certificate(&text).unwrap(), c);
    }

    #[test]
    fn record_uses_observed_width() {
        let g = crate::io::parse_graph6("Bg").unwrap();
        let s = VertexLabel::singleton;
        let c = record_certificate(&g, &[ContractionStep::new(s(0), s(1))], String::new()).unwrap();
        assert_eq!(c.width, 1);
    }
}
