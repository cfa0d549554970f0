//! Line-oriented graph files.
//!
//! ```text
//! # comment
//! n 5        vertex count, must come first
//! e 0 1      undirected edge
//! a 1 2      directed arc 1 -> 2
//! l 3        loop at 3
//! ```

use std::fmt;
use std::str::FromStr;

use super::{ArcKind, Graph};
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn vertex(tok: Option<&str>, n: usize, line: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, "missing vertex index"))?;
    let v: usize = tok
        .parse()
        .map_err(|_| parse_err(line, format!("invalid vertex index {tok:?}")))?;
    if v >= n {
        return Err(parse_err(line, format!("vertex {v} out of range for n = {n}")));
    }
    Ok(v)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        let kind = toks.next().expect("non-empty line has a token");
        if kind == "n" {
            if graph.is_some() {
                return Err(parse_err(line, "vertex count given twice"));
            }
            let tok = toks.next().ok_or_else(|| parse_err(line, "missing vertex count"))?;
            let n: usize = tok
                .parse()
                .map_err(|_| parse_err(line, format!("invalid vertex count {tok:?}")))?;
            if toks.next().is_some() {
                return Err(parse_err(line, "trailing tokens"));
            }
            graph = Some(Graph::new(n));
            continue;
        }
        let g = graph
            .as_mut()
            .ok_or_else(|| parse_err(line, "`n <count>` must precede edges"))?;
        let n = g.n();
        match kind {
            "l" => {
                let v = vertex(toks.next(), n, line)?;
                if !g.add_loop(v) {
                    return Err(parse_err(line, format!("duplicate loop at {v}")));
                }
            }
            "e" | "a" => {
                let u = vertex(toks.next(), n, line)?;
                let v = vertex(toks.next(), n, line)?;
                if u == v {
                    return Err(parse_err(line, format!("self-edge at {u}; use `l {u}`")));
                }
                let duplicate = if kind == "e" {
                    g.has_arc(u, v) || g.has_arc(v, u)
                } else {
                    g.has_arc(u, v)
                };
                if duplicate {
                    return Err(parse_err(line, format!("duplicate edge {u} {v}")));
                }
                if kind == "e" {
                    g.add_edge(u, v);
                } else {
                    g.add_arc(u, v);
                }
            }
            other => return Err(parse_err(line, format!("unknown record type {other:?}"))),
        }
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
    }
    graph.ok_or_else(|| parse_err(0, "missing `n <count>` line"))
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_graph(s)
    }
}

/// Writes the graph in file format: `n`, then loops, undirected edges and
/// unpaired arcs, each in ascending order.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n())?;
        for v in self.loops().ones_iter() {
            writeln!(f, "l {v}")?;
        }
        for (u, v) in self.edges() {
            writeln!(f, "e {u} {v}")?;
        }
        for (u, v, kind) in self.arcs() {
            if kind == ArcKind::Unpaired {
                writeln!(f, "a {u} {v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph {{ {} }}", self.to_string().trim_end().replace('\n', "; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let g = parse_graph("n 1\nl 0").unwrap();
        assert_eq!((g.n(), g.has_loop(0)), (1, true));

        let k2 = parse_graph("n 2\ne 0 1\nl 0\nl 1").unwrap();
        assert_eq!(k2.edges(), vec![(0, 1)]);
        assert!(k2.all_loops());

        let g = parse_graph("n 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 1 3").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (1, 3), (2, 3), (3, 4)]);
        assert!(g.loops().is_zero());
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# header\n\nn 3   # three\na 0 2\n  l 1\n").unwrap();
        assert_eq!(g.unpaired_arcs(), vec![(0, 2)]);
        assert!(g.has_loop(1));
    }

    #[test]
    fn reports_line_numbers() {
        let cases = [
            ("e 0 1", 1),
            ("n 2\ne 0 2", 2),
            ("n 2\ne 0 1\ne 1 0", 3),
            ("n 2\na 0 1\na 0 1", 3),
            ("n 2\nl 1\nl 1", 3),
            ("n 2\nx 0", 2),
            ("n 2\ne 1 1", 2),
            ("n 2\nn 3", 2),
            ("n 2\ne 0 1 1", 2),
            ("n two", 1),
        ];
        for (text, line) in cases {
            match parse_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
        assert!(parse_graph("# nothing").is_err());
    }

    #[test]
    fn opposite_arcs_become_an_edge() {
        let g = parse_graph("n 2\na 0 1\na 1 0").unwrap();
        assert!(g.is_undirected());
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn display_round_trips() {
        let text = "n 4\nl 0\nl 3\ne 0 1\ne 2 3\na 1 2\na 3 0\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.to_string(), text);
        assert_eq!(parse_graph(&g.to_string()).unwrap(), g);
    }
}
