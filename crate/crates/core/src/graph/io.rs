//! Edge-list text format: a header line `n m`, then `m` lines `u v` with
//! `0 <= u < v < n`. The writer emits edges in canonical order. The reader
//! also accepts `u > v` and ignores blank lines.

use std::fmt::Write as _;
use std::path::Path;

use super::{Builder, Graph, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(GraphError::MalformedHeader { line: 1 })?;
    let (n, m) = parse_pair(header).ok_or(GraphError::MalformedHeader { line: hline })?;
    let mut builder = Builder::new(n)?;
    let mut found = 0;
    for (line, l) in lines {
        let (u, v) = parse_pair(l).ok_or(GraphError::MalformedEdge { line })?;
        builder.add(u, v, line)?;
        found += 1;
    }
    if found != m {
        return Err(GraphError::EdgeCountMismatch { declared: m, found });
    }
    Ok(builder.finish())
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_ascii_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(8 * (g.edge_count() + 1));
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph, GraphError> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

pub fn write_graph(path: impl AsRef<Path>, g: &Graph) -> Result<(), GraphError> {
    std::fs::write(path, to_edge_list(g))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::complete;
    use crate::graph::{sample_gnp, GnpSpec};

    #[test]
    fn parses_examples() {
        assert_eq!(parse_edge_list("3 3\n0 1\n1 2\n0 2\n").unwrap(), complete(3));
        let g = parse_edge_list("2 0\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 0));
    }

    #[test]
    fn distinct_parse_errors() {
        assert_eq!(
            parse_edge_list("three 3\n"),
            Err(GraphError::MalformedHeader { line: 1 })
        );
        assert_eq!(parse_edge_list(""), Err(GraphError::MalformedHeader { line: 1 }));
        assert_eq!(
            parse_edge_list("3 1\n0 x\n"),
            Err(GraphError::MalformedEdge { line: 2 })
        );
        assert_eq!(
            parse_edge_list("3 1\n0 3\n"),
            Err(GraphError::VertexOutOfRange { line: 2, vertex: 3, n: 3 })
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1\n0 1\n"),
            Err(GraphError::DuplicateEdge { line: 3, u: 0, v: 1 })
        );
        assert_eq!(
            parse_edge_list("3 1\n2 2\n"),
            Err(GraphError::Loop { line: 2, vertex: 2 })
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1\n"),
            Err(GraphError::EdgeCountMismatch { declared: 2, found: 1 })
        );
    }

    #[test]
    fn file_round_trip() {
        let g = sample_gnp(GnpSpec::new(50, 0.2, 9).unwrap()).unwrap();
        let dir = std::env::temp_dir().join(format!("trifree-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("g.el");
        write_graph(&path, &g).unwrap();
        let back = read_graph(&path).unwrap();
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back, g);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
