//! Instance-file parsing and graph output formats.
//!
//! Two instance encodings are accepted, auto-detected by the first
//! non-whitespace byte (`{` selects JSON):
//!
//! Plain text, line oriented; blank lines and `#` comments are allowed:
//!
//! ```text
//! n1 3
//! n2 5
//! r_low: 4 1 0
//! r_up: 4 2 3
//! c_low: 2 2 0 0 0
//! c_up: 2 3 1 2 2
//! ```
//!
//! JSON, with the same field names:
//!
//! ```text
//! {"n1": 3, "n2": 5, "r_low": [4,1,0], "r_up": [4,2,3],
//!  "c_low": [2,2,0,0,0], "c_up": [2,3,1,2,2]}
//! ```
//!
//! Graphs are emitted as a plain edge list (one `u v` pair per line,
//! 1-based, lexicographic), as JSON, or as DOT.

use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use bigraph_realize::{BipartiteGraph, IntervalInstance};

/// Parse failure with the offending line when known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {}: {}", line, self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line: Some(line),
        message: message.into(),
    }
}

#[derive(Deserialize)]
struct InstanceDocument {
    n1: usize,
    n2: usize,
    r_low: Vec<i64>,
    r_up: Vec<i64>,
    c_low: Vec<i64>,
    c_up: Vec<i64>,
}

/// Parses either instance encoding.
pub fn parse_instance(text: &str) -> Result<IntervalInstance, ParseError> {
    match text.trim_start().as_bytes().first() {
        Some(b'{') => {
            let doc: InstanceDocument =
                serde_json::from_str(text).map_err(|e| ParseError {
                    line: Some(e.line()),
                    message: e.to_string(),
                })?;
            Ok(IntervalInstance::new(
                doc.n1, doc.n2, doc.r_low, doc.r_up, doc.c_low, doc.c_up,
            ))
        }
        Some(_) => parse_plain(text),
        None => Err(ParseError {
            line: None,
            message: "empty instance file".to_string(),
        }),
    }
}

fn parse_plain(text: &str) -> Result<IntervalInstance, ParseError> {
    // meaningful lines in required order: n1, n2, r_low, r_up, c_low, c_up
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let mut next_line = |field: &str| {
        lines
            .next()
            .ok_or_else(|| ParseError {
                line: None,
                message: format!("missing `{}` line", field),
            })
    };

    let scalar = |field: &str, (line, content): (usize, &str)| -> Result<usize, ParseError> {
        let mut tokens = content.split_whitespace();
        if tokens.next() != Some(field) {
            return Err(err(line, format!("expected `{} <int>`, got `{}`", field, content)));
        }
        let value = tokens
            .next()
            .ok_or_else(|| err(line, format!("`{}` is missing its value", field)))?;
        if tokens.next().is_some() {
            return Err(err(line, format!("trailing tokens after `{}`", field)));
        }
        value
            .parse()
            .map_err(|_| err(line, format!("`{}` is not a nonnegative integer", value)))
    };

    let vector = |field: &str,
                  expected: usize,
                  (line, content): (usize, &str)|
     -> Result<Vec<i64>, ParseError> {
        let label = format!("{}:", field);
        let rest = content
            .strip_prefix(label.as_str())
            .ok_or_else(|| err(line, format!("expected `{} ...`, got `{}`", label, content)))?;
        let mut entries = Vec::with_capacity(expected);
        for token in rest.split_whitespace() {
            let value = token
                .parse()
                .map_err(|_| err(line, format!("`{}` in `{}` is not an integer", token, field)))?;
            entries.push(value);
        }
        if entries.len() != expected {
            return Err(err(
                line,
                format!(
                    "`{}` has {} entries, expected {}",
                    field,
                    entries.len(),
                    expected
                ),
            ));
        }
        Ok(entries)
    };

    let n1 = scalar("n1", next_line("n1")?)?;
    let n2 = scalar("n2", next_line("n2")?)?;
    let r_low = vector("r_low", n1, next_line("r_low")?)?;
    let r_up = vector("r_up", n1, next_line("r_up")?)?;
    let c_low = vector("c_low", n2, next_line("c_low")?)?;
    let c_up = vector("c_up", n2, next_line("c_up")?)?;
    if let Some((line, content)) = lines.next() {
        return Err(err(line, format!("unexpected trailing line `{}`", content)));
    }
    Ok(IntervalInstance::new(n1, n2, r_low, r_up, c_low, c_up))
}

/// JSON document for an emitted graph; edges are 1-based `[u, v]` pairs.
#[derive(Debug, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n1: usize,
    pub n2: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphDocument {
    pub fn from_graph(graph: &BipartiteGraph) -> Self {
        GraphDocument {
            n1: graph.n1(),
            n2: graph.n2(),
            edges: graph.edges().map(|(u, v)| (u + 1, v + 1)).collect(),
        }
    }

    #[cfg(test)]
    pub fn to_graph(&self) -> Result<BipartiteGraph, ParseError> {
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| {
                if u == 0 || v == 0 {
                    Err(ParseError {
                        line: None,
                        message: format!("edge ({}, {}) is not 1-based", u, v),
                    })
                } else {
                    Ok((u - 1, v - 1))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        BipartiteGraph::from_edge_list(self.n1, self.n2, edges).map_err(|e| ParseError {
            line: None,
            message: e.to_string(),
        })
    }
}

/// One `u v` pair per line, 1-based, lexicographic.
pub fn edges_text(graph: &BipartiteGraph) -> String {
    let mut out = String::new();
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

pub fn graph_json(graph: &BipartiteGraph) -> String {
    let mut out = serde_json::to_string(&GraphDocument::from_graph(graph)).expect("serializable");
    out.push('\n');
    out
}

/// Undirected DOT with `u<i>` / `v<j>` vertex names.
pub fn graph_dot(graph: &BipartiteGraph) -> String {
    let mut out = String::from("graph realization {\n");
    for u in 0..graph.n1() {
        let _ = writeln!(out, "  u{};", u + 1);
    }
    for v in 0..graph.n2() {
        let _ = writeln!(out, "  v{};", v + 1);
    }
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "  u{} -- v{};", u + 1, v + 1);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const PLAIN: &str = "n1 3\nn2 5\nr_low: 4 1 0\nr_up: 4 2 3\nc_low: 2 2 0 0 0\nc_up: 2 3 1 2 2\n";

    #[test]
    fn parses_plain_text() {
        let inst = parse_instance(PLAIN).unwrap();
        assert_eq!(inst.n1, 3);
        assert_eq!(inst.n2, 5);
        assert_eq!(inst.r_low, vec![4, 1, 0]);
        assert_eq!(inst.c_up, vec![2, 3, 1, 2, 2]);
    }

    #[test]
    fn parses_json() {
        let json = r#"{"n1":3,"n2":5,"r_low":[4,1,0],"r_up":[4,2,3],"c_low":[2,2,0,0,0],"c_up":[2,3,1,2,2]}"#;
        assert_eq!(parse_instance(json).unwrap(), parse_instance(PLAIN).unwrap());
    }

    #[test]
    fn accepts_comments_and_blank_lines() {
        let text = format!("# reference instance\n\n{}", PLAIN);
        assert!(parse_instance(&text).is_ok());
    }

    #[test]
    fn reports_line_numbers() {
        let bad = "n1 3\nn2 5\nr_low: 4 x 0\nr_up: 4 2 3\nc_low: 2 2 0 0 0\nc_up: 2 3 1 2 2\n";
        let error = parse_instance(bad).unwrap_err();
        assert_eq!(error.line, Some(3));
        assert!(error.to_string().contains("line 3"));
    }

    #[test]
    fn rejects_wrong_entry_count() {
        let bad = "n1 3\nn2 5\nr_low: 4 1\nr_up: 4 2 3\nc_low: 2 2 0 0 0\nc_up: 2 3 1 2 2\n";
        let error = parse_instance(bad).unwrap_err();
        assert!(error.message.contains("expected 3"));
    }

    #[test]
    fn negative_entries_survive_parsing_for_validation() {
        let text = "n1 1\nn2 1\nr_low: -1\nr_up: 1\nc_low: 0\nc_up: 1\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.r_low, vec![-1]);
    }

    #[test]
    fn empty_vectors_parse_for_empty_parts() {
        let text = "n1 0\nn2 2\nr_low:\nr_up:\nc_low: 0 0\nc_up: 1 1\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.n1, 0);
        assert!(inst.r_low.is_empty());
    }

    #[test]
    fn graph_json_round_trips() {
        let graph =
            BipartiteGraph::from_edge_list(2, 3, vec![(0, 0), (0, 2), (1, 1)]).unwrap();
        let doc: GraphDocument = serde_json::from_str(&graph_json(&graph)).unwrap();
        assert_eq!(doc.to_graph().unwrap(), graph);
    }

    #[test]
    fn edge_and_dot_outputs_are_one_based() {
        let graph = BipartiteGraph::from_edge_list(1, 2, vec![(0, 1)]).unwrap();
        assert_eq!(edges_text(&graph), "1 2\n");
        let dot = graph_dot(&graph);
        assert!(dot.contains("u1 -- v2;"));
        assert!(dot.starts_with("graph realization {"));
    }
}
