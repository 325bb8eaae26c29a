//! Plain-text edge-list graph format.
//!
//! Layout: optional `#` comment lines, a header line `n m`, then exactly `m`
//! lines `u v` with `0 <= u < v < n`, whitespace separated. Generators write
//! one leading comment recording family, parameters and seed. The reader
//! reports the offending line number for every rejected input.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Reads a graph from edge-list text.
pub fn read<R: BufRead>(reader: R) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let a: usize = fields
            .next()
            .unwrap()
            .parse()
            .map_err(|_| parse_err(line_no, format!("expected an integer in `{trimmed}`")))?;
        let b: usize = fields
            .next()
            .ok_or_else(|| parse_err(line_no, format!("expected two integers in `{trimmed}`")))?
            .parse()
            .map_err(|_| parse_err(line_no, format!("expected an integer in `{trimmed}`")))?;
        if let Some(extra) = fields.next() {
            return Err(parse_err(line_no, format!("trailing field `{extra}`")));
        }

        match header {
            None => header = Some((a, b)),
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(parse_err(
                        line_no,
                        format!("more than the declared {m} edges"),
                    ));
                }
                if a == b {
                    return Err(parse_err(line_no, format!("self-loop at vertex {a}")));
                }
                if a > b {
                    return Err(parse_err(
                        line_no,
                        format!("edge endpoints must satisfy u < v, got {a} {b}"),
                    ));
                }
                if b >= n {
                    return Err(parse_err(
                        line_no,
                        format!("vertex {b} out of range for n = {n}"),
                    ));
                }
                if !seen.insert((a, b)) {
                    return Err(parse_err(line_no, format!("duplicate edge {a} {b}")));
                }
                edges.push((a, b));
            }
        }
    }

    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `n m` header line"))?;
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("declared {m} edges but found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

/// Writes a graph as edge-list text, preceded by the given comment lines.
pub fn write<W: Write>(mut w: W, graph: &Graph, comments: &[&str]) -> Result<()> {
    for c in comments {
        writeln!(w, "# {c}")?;
    }
    writeln!(w, "{} {}", graph.n(), graph.edge_count())?;
    for (u, v) in graph.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}

pub fn read_path(path: impl AsRef<Path>) -> Result<Graph> {
    read(BufReader::new(File::open(path)?))
}

pub fn write_path(path: impl AsRef<Path>, graph: &Graph, comments: &[&str]) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write(&mut w, graph, comments)?;
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(g: &Graph) -> Graph {
        let mut buf = Vec::new();
        write(&mut buf, g, &["test header"]).unwrap();
        read(buf.as_slice()).unwrap()
    }

    #[test]
    fn roundtrips_with_comments() {
        let g = Graph::cycle(7);
        let back = roundtrip(&g);
        assert_eq!(back.n(), 7);
        assert_eq!(
            back.edges().collect::<Vec<_>>(),
            g.edges().collect::<Vec<_>>()
        );
    }

    #[test]
    fn rejects_malformed_inputs() {
        let err = read("3 1\n1 1\n".as_bytes()).unwrap_err();
        assert!(
            matches!(&err, Error::Parse { line: 2, msg } if msg.contains("self-loop")),
            "{err}"
        );

        let err = read("3 2\n0 1\n0 1\n".as_bytes()).unwrap_err();
        assert!(
            matches!(&err, Error::Parse { line: 3, msg } if msg.contains("duplicate")),
            "{err}"
        );

        let err = read("3 1\n1 0\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");

        let err = read("3 1\n0 4\n".as_bytes()).unwrap_err();
        assert!(
            matches!(&err, Error::Parse { line: 2, msg } if msg.contains("out of range")),
            "{err}"
        );

        let err = read("3 2\n0 1\n".as_bytes()).unwrap_err();
        assert!(
            matches!(&err, Error::Parse { msg, .. } if msg.contains("declared 2")),
            "{err}"
        );

        let err = read("".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err}");
    }
}
