//! Text format for Pultr templates.
//!
//! ```text
//! pultr-template t3
//! mode undirected
//! [P]
//! u 1
//! [Q]
//! u 4
//! 0 1
//! 1 2
//! 2 3
//! [maps]
//! eps1: 0 -> 0
//! eps2: 0 -> 3
//! sym: 0 -> 3, 1 -> 2, 2 -> 1, 3 -> 0
//! ```

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{parse_graph, serialize_graph};
use crate::pultr::{PultrTemplate, TemplateMode};

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    Header,
    P,
    Q,
    Maps,
}

/// Partial map collected from `name: a -> b` lines.
struct MapLines {
    first_line: Option<usize>,
    pairs: Vec<(usize, usize, usize)>,
}

impl MapLines {
    fn new() -> Self {
        MapLines {
            first_line: None,
            pairs: Vec::new(),
        }
    }

    fn build(&self, name: &str, domain: usize) -> Result<Option<Vec<usize>>> {
        let Some(first) = self.first_line else {
            return Ok(None);
        };
        let mut map = vec![None; domain];
        for &(line, a, b) in &self.pairs {
            if a >= domain {
                return Err(err(
                    line,
                    1,
                    format!("{name}: vertex {a} is outside 0..{domain}"),
                ));
            }
            if map[a].is_some_and(|x| x != b) {
                return Err(err(line, 1, format!("{name}: vertex {a} is mapped twice")));
            }
            map[a] = Some(b);
        }
        map.into_iter()
            .enumerate()
            .map(|(a, b)| {
                b.ok_or_else(|| err(first, 1, format!("{name}: vertex {a} is not mapped")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }
}

pub fn parse_template(text: &str) -> Result<PultrTemplate> {
    let mut name: Option<String> = None;
    let mut mode: Option<TemplateMode> = None;
    let mut section = Section::Header;
    let mut bodies = [(0usize, String::new()), (0usize, String::new())];
    let mut maps = [MapLines::new(), MapLines::new(), MapLines::new()];

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        match content {
            "[P]" => {
                section = Section::P;
                bodies[0].0 = line_no;
                continue;
            }
            "[Q]" => {
                section = Section::Q;
                bodies[1].0 = line_no;
                continue;
            }
            "[maps]" => {
                section = Section::Maps;
                continue;
            }
            _ => {}
        }
        match section {
            Section::P | Section::Q => {
                let body = &mut bodies[(section == Section::Q) as usize].1;
                body.push_str(raw);
                body.push('\n');
            }
            _ if content.is_empty() => {}
            Section::Header => {
                let (key, value) = content
                    .split_once(char::is_whitespace)
                    .unwrap_or((content, ""));
                match key {
                    "pultr-template" if !value.trim().is_empty() => {
                        name = Some(value.trim().to_string())
                    }
                    "mode" => {
                        mode = Some(match value.trim() {
                            "undirected" => TemplateMode::Undirected,
                            "directed" => TemplateMode::Directed,
                            other => {
                                return Err(err(line_no, 6, format!("unknown mode {other:?}")))
                            }
                        })
                    }
                    _ => return Err(err(
                        line_no,
                        1,
                        "expected `pultr-template NAME`, `mode undirected|directed` or a section",
                    )),
                }
            }
            Section::Maps => {
                let (key, rest) = content
                    .split_once(':')
                    .ok_or_else(|| err(line_no, 1, "expected `eps1:`, `eps2:` or `sym:`"))?;
                let slot = match key.trim() {
                    "eps1" => 0,
                    "eps2" => 1,
                    "sym" => 2,
                    other => return Err(err(line_no, 1, format!("unknown map {other:?}"))),
                };
                maps[slot].first_line.get_or_insert(line_no);
                for pair in rest.split(',').filter(|p| !p.trim().is_empty()) {
                    let (a, b) = pair.split_once("->").ok_or_else(|| {
                        err(
                            line_no,
                            1,
                            format!("expected `a -> b`, found {:?}", pair.trim()),
                        )
                    })?;
                    let parse = |s: &str| {
                        s.trim().parse::<usize>().map_err(|_| {
                            err(line_no, 1, format!("{:?} is not a vertex index", s.trim()))
                        })
                    };
                    maps[slot].pairs.push((line_no, parse(a)?, parse(b)?));
                }
            }
        }
    }

    let name = name.ok_or_else(|| err(1, 1, "missing `pultr-template NAME` line"))?;
    let mode = mode.ok_or_else(|| err(1, 1, "missing `mode` line"))?;
    let mut graphs = Vec::new();
    for (label, (start, body)) in ["[P]", "[Q]"].iter().zip(&bodies) {
        if *start == 0 {
            return Err(err(1, 1, format!("missing {label} section")));
        }
        graphs.push(parse_graph(body).map_err(|e| match e {
            Error::Parse {
                line,
                column,
                message,
            } => err(start + line, column, message),
            other => other,
        })?);
    }
    let q = graphs.pop().expect("two sections");
    let p = graphs.pop().expect("two sections");
    let eps1 = maps[0]
        .build("eps1", p.order())?
        .ok_or_else(|| err(1, 1, "missing eps1"))?;
    let eps2 = maps[1]
        .build("eps2", p.order())?
        .ok_or_else(|| err(1, 1, "missing eps2"))?;
    let sym = maps[2].build("sym", q.order())?;
    PultrTemplate::new(name, p, q, eps1, eps2, sym, mode)
}

fn write_map(out: &mut String, key: &str, map: &[usize]) {
    let pairs: Vec<String> = map
        .iter()
        .enumerate()
        .map(|(a, b)| format!("{a} -> {b}"))
        .collect();
    if !pairs.is_empty() {
        let _ = writeln!(out, "{key}: {}", pairs.join(", "));
    }
}

pub fn serialize_template(t: &PultrTemplate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "pultr-template {}", t.name());
    let _ = writeln!(out, "mode {}", t.mode());
    out.push_str("[P]\n");
    out.push_str(&serialize_graph(t.p()));
    out.push_str("[Q]\n");
    out.push_str(&serialize_graph(t.q()));
    out.push_str("[maps]\n");
    write_map(&mut out, "eps1", t.eps1());
    write_map(&mut out, "eps2", t.eps2());
    if let Some(sym) = t.symmetry() {
        write_map(&mut out, "sym", sym);
    }
    out
}
