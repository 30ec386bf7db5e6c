//! Edge-list text format and DOT export.
//!
//! ```text
//! # comments run to end of line; blank lines are ignored
//! u 3        <- header: `u` (undirected) or `d` (directed), then the order
//! 0 1        <- one edge/arc per line
//! 1 2
//! ```
//!
//! Serialization is canonical: symmetric digraphs are written as `u` with
//! each edge once (`u <= v`), everything else as `d`, lines sorted.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Digraph;

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Byte column (1-based) of `token`, a subslice of `raw`.
fn token_column(raw: &str, token: &str) -> usize {
    token.as_ptr() as usize - raw.as_ptr() as usize + 1
}

pub fn parse_graph(text: &str) -> Result<Digraph> {
    let mut header: Option<(bool, usize)> = None;
    let mut arcs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match header {
            None => {
                let directed = match tokens[0] {
                    "d" => true,
                    "u" => false,
                    other => {
                        return Err(parse_err(
                            line_no,
                            token_column(raw, tokens[0]),
                            format!("expected header `d N` or `u N`, found {other:?}"),
                        ))
                    }
                };
                if tokens.len() != 2 {
                    return Err(parse_err(line_no, 1, "header must be `d N` or `u N`"));
                }
                let order = tokens[1].parse::<usize>().map_err(|_| {
                    parse_err(
                        line_no,
                        token_column(raw, tokens[1]),
                        "order must be a non-negative integer",
                    )
                })?;
                header = Some((directed, order));
            }
            Some((directed, order)) => {
                if tokens.len() != 2 {
                    return Err(parse_err(line_no, 1, "expected exactly two vertex indices"));
                }
                let mut ends = [0usize; 2];
                for (slot, tok) in ends.iter_mut().zip(&tokens) {
                    let col = token_column(raw, tok);
                    *slot = tok.parse().map_err(|_| {
                        parse_err(line_no, col, format!("{tok:?} is not a vertex index"))
                    })?;
                    if *slot >= order {
                        return Err(parse_err(
                            line_no,
                            col,
                            format!("vertex {slot} is outside 0..{order}"),
                        ));
                    }
                }
                arcs.push((ends[0], ends[1]));
                if !directed {
                    arcs.push((ends[1], ends[0]));
                }
            }
        }
    }
    let (_, order) = header.ok_or_else(|| parse_err(1, 1, "missing header line"))?;
    Digraph::from_arcs(order, arcs)
}

pub fn serialize_graph(d: &Digraph) -> String {
    let mut out = String::new();
    if d.is_symmetric() {
        let _ = writeln!(out, "u {}", d.order());
        for (u, v) in d.arcs().filter(|(u, v)| u <= v) {
            let _ = writeln!(out, "{u} {v}");
        }
    } else {
        let _ = writeln!(out, "d {}", d.order());
        for (u, v) in d.arcs() {
            let _ = writeln!(out, "{u} {v}");
        }
    }
    out
}

/// Graphviz rendering; symmetric digraphs become `graph` with `--` edges.
pub fn to_dot(d: &Digraph) -> String {
    let mut out = String::new();
    let symmetric = d.is_symmetric();
    let (kind, sep) = if symmetric {
        ("graph", "--")
    } else {
        ("digraph", "->")
    };
    let _ = writeln!(out, "{kind} G {{");
    for u in 0..d.order() {
        let _ = writeln!(out, "  {u};");
    }
    for (u, v) in d.arcs() {
        if symmetric && u > v {
            continue;
        }
        let _ = writeln!(out, "  {u} {sep} {v};");
    }
    out.push_str("}\n");
    out
}
