//! Text formats: edge lists, colored graphs, terminal sidecars, DOT export.
//!
//! Edge-list format: a header line `n m` followed by `m` lines `u v` with
//! 0-based vertex ids; emitted edges are canonical (`u < v`, lexicographic).
//! The colored format appends a line `colors` and then `n` lines `v c`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::coloring::{Color, Coloring};
use crate::graph::{Graph, Vertex, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}:{line}: {msg}")]
    Parse { path: String, line: usize, msg: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl FormatError {
    fn at(path: &str, line: usize, msg: impl Into<String>) -> Self {
        FormatError::Parse { path: path.to_string(), line, msg: msg.into() }
    }
}

/// Serializes a graph in edge-list format.
pub fn emit_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Serializes a graph plus coloring in the colored-graph format.
pub fn emit_colored_graph(g: &Graph, c: &Coloring) -> String {
    let mut out = emit_graph(g);
    out.push_str("colors\n");
    for v in g.vertices() {
        let _ = writeln!(out, "{} {}", v, c.color(v));
    }
    out
}

/// Parses either format; the coloring is present iff the file has a
/// `colors` block. The palette is the smallest one covering the colors used.
pub fn parse_graph_str(input: &str, path: &str) -> Result<(Graph, Option<Coloring>), FormatError> {
    let mut lines = input.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (lno, header) = lines
        .next()
        .ok_or_else(|| FormatError::at(path, 0, "empty input, expected header `n m`"))?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(parts.next(), path, lno + 1, "vertex count")?;
    let m: usize = parse_field(parts.next(), path, lno + 1, "edge count")?;
    if parts.next().is_some() {
        return Err(FormatError::at(path, lno + 1, format!("trailing tokens in header {header:?}")));
    }
    if n > MAX_VERTICES {
        return Err(FormatError::at(path, lno + 1, format!("vertex count {n} exceeds 2^31 - 1")));
    }

    let mut g = Graph::new(n);
    for _ in 0..m {
        let (lno, line) = lines
            .next()
            .ok_or_else(|| FormatError::at(path, 0, format!("expected {m} edges, input ended early")))?;
        let mut parts = line.split_whitespace();
        let u: Vertex = parse_field(parts.next(), path, lno + 1, "edge endpoint")?;
        let v: Vertex = parse_field(parts.next(), path, lno + 1, "edge endpoint")?;
        if parts.next().is_some() {
            return Err(FormatError::at(path, lno + 1, format!("trailing tokens in edge line {line:?}")));
        }
        if u == v {
            return Err(FormatError::at(path, lno + 1, format!("self-loop at vertex {u}")));
        }
        if u as usize >= n || v as usize >= n {
            return Err(FormatError::at(path, lno + 1, format!("edge ({u},{v}) out of range for n={n}")));
        }
        if !g.add_edge(u, v) {
            return Err(FormatError::at(path, lno + 1, format!("duplicate edge ({u},{v})")));
        }
    }

    match lines.next() {
        None => Ok((g, None)),
        Some((lno, tag)) if tag.trim() == "colors" => {
            let mut assign = vec![None; n];
            for _ in 0..n {
                let (lno, line) = lines.next().ok_or_else(|| {
                    FormatError::at(path, lno + 1, format!("colors block needs {n} lines, input ended early"))
                })?;
                let mut parts = line.split_whitespace();
                let v: Vertex = parse_field(parts.next(), path, lno + 1, "vertex id")?;
                let c: Color = parse_field(parts.next(), path, lno + 1, "color id")?;
                if v as usize >= n {
                    return Err(FormatError::at(path, lno + 1, format!("vertex {v} out of range")));
                }
                if assign[v as usize].replace(c).is_some() {
                    return Err(FormatError::at(path, lno + 1, format!("vertex {v} colored twice")));
                }
            }
            if let Some((lno, line)) = lines.next() {
                return Err(FormatError::at(path, lno + 1, format!("unexpected trailing line {line:?}")));
            }
            let assign: Vec<Color> = assign.into_iter().map(Option::unwrap).collect();
            let palette = assign.iter().map(|&c| c as usize + 1).max().unwrap_or(1);
            let coloring = Coloring::new(palette, assign).expect("palette covers all colors");
            Ok((g, Some(coloring)))
        }
        Some((lno, line)) => {
            Err(FormatError::at(path, lno + 1, format!("expected `colors` or end of input, got {line:?}")))
        }
    }
}

fn parse_field<T: std::str::FromStr>(
    field: Option<&str>,
    path: &str,
    line: usize,
    what: &str,
) -> Result<T, FormatError> {
    let field = field.ok_or_else(|| FormatError::at(path, line, format!("missing {what}")))?;
    field
        .parse()
        .map_err(|_| FormatError::at(path, line, format!("invalid {what} {field:?}")))
}

pub fn read_graph(path: &Path) -> Result<(Graph, Option<Coloring>), FormatError> {
    let display = path.display().to_string();
    let input = fs::read_to_string(path).map_err(|source| FormatError::Io { path: display.clone(), source })?;
    parse_graph_str(&input, &display)
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), FormatError> {
    fs::write(path, contents)
        .map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

/// Terminal sidecar: one `name vertex_id` line per terminal.
pub fn emit_terminals(terminals: &BTreeMap<String, Vertex>) -> String {
    let mut out = String::new();
    for (name, v) in terminals {
        let _ = writeln!(out, "{name} {v}");
    }
    out
}

pub fn parse_terminals_str(input: &str, path: &str) -> Result<BTreeMap<String, Vertex>, FormatError> {
    let mut out = BTreeMap::new();
    for (lno, line) in input.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let name = parts.next().unwrap().to_string();
        let v: Vertex = parse_field(parts.next(), path, lno + 1, "terminal vertex id")?;
        if out.insert(name.clone(), v).is_some() {
            return Err(FormatError::at(path, lno + 1, format!("terminal {name:?} defined twice")));
        }
    }
    Ok(out)
}

pub fn read_terminals(path: &Path) -> Result<BTreeMap<String, Vertex>, FormatError> {
    let display = path.display().to_string();
    let input = fs::read_to_string(path).map_err(|source| FormatError::Io { path: display.clone(), source })?;
    parse_terminals_str(&input, &display)
}

const DOT_COLORS: [&str; 8] =
    ["firebrick1", "dodgerblue", "forestgreen", "gold", "orchid", "turquoise", "gray", "black"];

/// DOT export for visualization. Vertices get a fill color when a coloring
/// is attached and a label when they are named terminals.
pub fn emit_dot(g: &Graph, coloring: Option<&Coloring>, terminals: Option<&BTreeMap<String, Vertex>>) -> String {
    let mut names: Vec<Option<&str>> = vec![None; g.n()];
    if let Some(terms) = terminals {
        for (name, &v) in terms {
            names[v as usize] = Some(name);
        }
    }
    let mut out = String::from("graph g {\n  node [shape=circle];\n");
    for v in g.vertices() {
        let mut attrs = Vec::new();
        if let Some(name) = names[v as usize] {
            attrs.push(format!("label=\"{name}\""));
        }
        if let Some(c) = coloring {
            let color = DOT_COLORS[c.color(v) as usize % DOT_COLORS.len()];
            attrs.push(format!("style=filled, fillcolor={color}"));
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {v};");
        } else {
            let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trip_plain() {
        let g = fixtures::cycle(5);
        let (parsed, c) = parse_graph_str(&emit_graph(&g), "mem").unwrap();
        assert_eq!(parsed, g);
        assert!(c.is_none());
    }

    #[test]
    fn round_trip_colored() {
        let (g, c) = fixtures::complete_tripartite(2);
        let (parsed, pc) = parse_graph_str(&emit_colored_graph(&g, &c), "mem").unwrap();
        assert_eq!(parsed, g);
        assert_eq!(pc.unwrap(), c);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(parse_graph_str("", "mem").is_err());
        assert!(parse_graph_str("2 1\n0 0\n", "mem").is_err(), "self-loop");
        assert!(parse_graph_str("2 1\n0 5\n", "mem").is_err(), "out of range");
        assert!(parse_graph_str("2 2\n0 1\n1 0\n", "mem").is_err(), "duplicate edge");
        assert!(parse_graph_str("2 2\n0 1\n", "mem").is_err(), "missing edge");
        assert!(parse_graph_str("3 1\n0 1\nnoise\n", "mem").is_err(), "trailing garbage");
    }

    #[test]
    fn error_names_the_offending_input() {
        let err = parse_graph_str("2 1\n0 0\n", "some/file.el").unwrap_err();
        let text = err.to_string();
        assert!(text.contains("some/file.el"), "{text}");
        assert!(text.contains("self-loop"), "{text}");
    }

    #[test]
    fn terminal_sidecar_round_trip() {
        let mut t = BTreeMap::new();
        t.insert("u".to_string(), 0);
        t.insert("v".to_string(), 7);
        let parsed = parse_terminals_str(&emit_terminals(&t), "mem").unwrap();
        assert_eq!(parsed, t);
    }

    #[test]
    fn dot_contains_edges_and_colors() {
        let (g, c) = fixtures::complete_tripartite(1);
        let dot = emit_dot(&g, Some(&c), None);
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.contains("fillcolor="));
    }
}
