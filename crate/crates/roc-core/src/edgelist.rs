//! Canonical edge-list text format.
//!
//! First line `n m` (decimal, space-separated, newline-terminated), then
//! exactly `m` lines `u v` with `u < v`, zero-indexed, sorted
//! lexicographically on output. Lines starting with `#` are ignored on
//! input. LF line endings throughout.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Serializes a graph to the canonical byte form.
pub fn write_edge_list(g: &Graph) -> Vec<u8> {
    let mut out = String::with_capacity(16 + 12 * g.m());
    out.push_str(&format!("{} {}\n", g.n(), g.m()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out.into_bytes()
}

/// Parses the canonical edge-list format.
///
/// Reports the 1-based line number of the first offending line. The header
/// edge count must match the number of distinct edges that follow.
pub fn read_edge_list(bytes: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse {
        line: 0,
        message: format!("input is not UTF-8: {e}"),
    })?;

    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header line \"n m\"".into(),
    })?;
    let (n, m) = parse_header(header_line, header)?;

    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or(Error::Parse {
            line: text.lines().count(),
            message: format!("expected {m} edge lines, input ended early"),
        })?;
        edges.push(parse_edge(line_no, line, n)?);
    }
    if let Some((line_no, line)) = lines.next() {
        return Err(Error::Parse {
            line: line_no,
            message: format!("unexpected content after {m} edges: {line:?}"),
        });
    }

    let g = Graph::from_normalized(n, {
        let mut e = edges;
        e.sort_unstable();
        e.dedup();
        e
    });
    if g.m() != m {
        return Err(Error::Parse {
            line: header_line,
            message: format!("header declares {m} edges but {} are distinct", g.m()),
        });
    }
    Ok(g)
}

fn parse_header(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut fields = line.split_ascii_whitespace();
    let n = fields
        .next()
        .and_then(|t| t.parse::<usize>().ok())
        .ok_or_else(|| Error::Parse {
            line: line_no,
            message: format!("malformed header {line:?}, expected \"n m\""),
        })?;
    let m = fields
        .next()
        .and_then(|t| t.parse::<usize>().ok())
        .ok_or_else(|| Error::Parse {
            line: line_no,
            message: format!("malformed header {line:?}, expected \"n m\""),
        })?;
    if fields.next().is_some() {
        return Err(Error::Parse {
            line: line_no,
            message: format!("malformed header {line:?}, expected exactly two fields"),
        });
    }
    Ok((n, m))
}

fn parse_edge(line_no: usize, line: &str, n: usize) -> Result<(u32, u32)> {
    let mut fields = line.split_ascii_whitespace();
    let parse = |tok: Option<&str>| -> Result<u64> {
        tok.and_then(|t| t.parse::<u64>().ok())
            .ok_or_else(|| Error::Parse {
                line: line_no,
                message: format!("malformed edge line {line:?}, expected \"u v\""),
            })
    };
    let u = parse(fields.next())?;
    let v = parse(fields.next())?;
    if fields.next().is_some() {
        return Err(Error::Parse {
            line: line_no,
            message: format!("malformed edge line {line:?}, expected exactly two fields"),
        });
    }
    if u as usize >= n || v as usize >= n {
        return Err(Error::Parse {
            line: line_no,
            message: format!("vertex index {} out of range (n={n})", u.max(v)),
        });
    }
    if u == v {
        return Err(Error::Parse {
            line: line_no,
            message: format!("self-loop at vertex {u}"),
        });
    }
    let (u, v) = (u as u32, v as u32);
    Ok(if u < v { (u, v) } else { (v, u) })
}
