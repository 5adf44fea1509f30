//! Plain-text graph files.
//!
//! ```text
//! # comment
//! vertices: s t u
//! edge: s t inf
//! edge: s u 3
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. `vertices:` appears
//! exactly once, before any `edge:` line. Labels are integers `≥ 2` or `inf`;
//! pairs without an edge line get label 2.

use artin_core::{CoxeterGraph, GraphBuilder, Label};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: {source}")]
    Graph {
        line: usize,
        column: usize,
        source: artin_core::Error,
    },
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line
        .char_indices()
        .chain(std::iter::once((line.len(), ' ')))
    {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn parse_label(text: &str) -> Option<Label> {
    if text == "inf" {
        return Some(Label::Infinity);
    }
    text.parse::<u32>().ok().map(Label::Finite)
}

pub fn parse_graph(text: &str) -> Result<CoxeterGraph, FormatError> {
    let mut builder: Option<GraphBuilder> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks = tokens(raw);
        let syntax = |column: usize, message: &str| FormatError::Syntax {
            line,
            column,
            message: message.to_string(),
        };
        let graph_err = |column: usize, source| FormatError::Graph {
            line,
            column,
            source,
        };
        let (keyword, rest) = (&toks[0], &toks[1..]);
        match keyword.text {
            "vertices:" => {
                if builder.is_some() {
                    return Err(syntax(keyword.column, "second `vertices:` line"));
                }
                let mut b = CoxeterGraph::builder();
                for t in rest {
                    b.vertex(t.text).map_err(|e| graph_err(t.column, e))?;
                }
                builder = Some(b);
            }
            "edge:" => {
                let Some(b) = builder.as_mut() else {
                    return Err(syntax(keyword.column, "`edge:` before `vertices:`"));
                };
                let [s, t, l] = rest else {
                    let column = rest.get(3).map_or(raw.chars().count() + 1, |t| t.column);
                    return Err(syntax(column, "expected `edge: <vertex> <vertex> <label>`"));
                };
                let label = parse_label(l.text)
                    .ok_or_else(|| syntax(l.column, "label must be an integer or `inf`"))?;
                b.edge(s.text, t.text, label).map_err(|e| {
                    let column = match &e {
                        artin_core::Error::UnknownVertex(v) if v == t.text => t.column,
                        artin_core::Error::InvalidLabel(_) => l.column,
                        _ => s.column,
                    };
                    graph_err(column, e)
                })?;
            }
            _ => {
                return Err(syntax(
                    keyword.column,
                    "expected `vertices:`, `edge:` or a `#` comment",
                ))
            }
        }
    }
    builder.map(GraphBuilder::build).ok_or(FormatError::Syntax {
        line: text.lines().count().max(1),
        column: 1,
        message: "missing `vertices:` line".into(),
    })
}

/// Vertices in declaration order, edges with label ≠ 2 in index order.
pub fn serialize_graph(g: &CoxeterGraph) -> String {
    let mut out = String::from("vertices:");
    for name in g.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for (s, t, l) in g.edges() {
        out.push_str(&format!("edge: {} {} {}\n", g.name(s), g.name(t), l));
    }
    out
}
