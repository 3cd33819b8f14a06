//! Text formats: the line-oriented edge list and graph6.

use std::fmt::Write as _;

use super::{EdgeId, Graph, GraphError};

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    let tok = tok.ok_or_else(|| GraphError::Parse {
        line,
        msg: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| GraphError::Parse {
        line,
        msg: format!("invalid {what} `{tok}`"),
    })
}

/// Strips a `#` comment and surrounding whitespace.
pub(crate) fn content(line: &str) -> &str {
    match line.find('#') {
        Some(i) => line[..i].trim(),
        None => line.trim(),
    }
}

/// Parses the edge-list format:
///
/// ```text
/// # comment
/// n 3
/// e 0 1
/// e 1 2
/// ```
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let (n, edges) = parse_edge_list_with(text, |_, _| Ok(false))?;
    Graph::from_edges(n, edges)
}

/// Shared edge-list reader. `extra` receives the line number and tokens of each
/// record other than `n`/`e` and returns whether it consumed the record.
pub(crate) fn parse_edge_list_with<F>(
    text: &str,
    mut extra: F,
) -> Result<(usize, Vec<(usize, usize)>), GraphError>
where
    F: FnMut(usize, &[&str]) -> Result<bool, GraphError>,
{
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = content(raw);
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match (n, toks[0]) {
            (None, "n") => {
                if toks.len() != 2 {
                    return Err(GraphError::Parse {
                        line,
                        msg: "expected `n <count>`".into(),
                    });
                }
                n = Some(parse_usize(toks.get(1).copied(), line, "vertex count")?);
            }
            (None, _) => {
                return Err(GraphError::Parse {
                    line,
                    msg: "first line must be `n <count>`".into(),
                })
            }
            (Some(count), "e") => {
                if toks.len() != 3 {
                    return Err(GraphError::Parse {
                        line,
                        msg: "expected `e <u> <v>`".into(),
                    });
                }
                let u = parse_usize(toks.get(1).copied(), line, "endpoint")?;
                let v = parse_usize(toks.get(2).copied(), line, "endpoint")?;
                if u == v {
                    return Err(GraphError::SelfLoop(u));
                }
                if u >= count || v >= count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: u.max(v),
                        n: count,
                    });
                }
                if !seen.insert(EdgeId::new(u, v)) {
                    return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
                }
                edges.push((u, v));
            }
            (Some(count), _) => {
                if !extra(line, &toks)? {
                    return Err(GraphError::Parse {
                        line,
                        msg: format!("unknown record `{}` (n = {count})", toks[0]),
                    });
                }
            }
        }
    }
    let n = n.ok_or(GraphError::Parse {
        line: 0,
        msg: "missing `n <count>` header".into(),
    })?;
    Ok((n, edges))
}

/// Canonical edge-list emission: header then edges in sorted order.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for e in g.edges() {
        writeln!(out, "e {} {}", e.a, e.b).unwrap();
    }
    out
}

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// graph6 encoding: the vertex count followed by the upper triangle of the
/// adjacency matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...),
/// packed six bits per byte, big-endian within each byte, offset by 63.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses a graph6 string (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&c) = bytes.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(GraphError::Graph6(format!("invalid character 0x{c:02x}")));
    }
    let truncated = || GraphError::Graph6("truncated size field".into());
    let (n, mut pos) = match bytes {
        [] => return Err(truncated()),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(truncated());
            }
            (
                rest[..6]
                    .iter()
                    .fold(0usize, |a, &c| (a << 6) | (c - 63) as usize),
                8,
            )
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(truncated());
            }
            (
                rest[..3]
                    .iter()
                    .fold(0usize, |a, &c| (a << 6) | (c - 63) as usize),
                4,
            )
        }
        [c, ..] => ((c - 63) as usize, 1),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let data = &bytes[pos..];
    if data.len() < need {
        return Err(GraphError::Graph6(format!(
            "truncated bit vector: need {need} bytes, found {}",
            data.len()
        )));
    }
    if data.len() > need {
        return Err(GraphError::Graph6(format!(
            "trailing data: expected {need} bytes, found {}",
            data.len()
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::families;

    #[test]
    fn path_on_three_vertices() {
        let g = parse_edge_list("n 3\ne 0 1\ne 1 2").unwrap();
        assert_eq!(g, families::path(3));
    }

    #[test]
    fn prism_from_text() {
        let text = "n 6\ne 0 1\ne 1 2\ne 2 0\ne 3 4\ne 4 5\ne 5 3\ne 0 3\ne 1 4\ne 2 5";
        assert_eq!(parse_edge_list(text).unwrap(), families::prism());
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# header\n\nn 2 # two\ne 0 1 # one edge\n").unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(parse_edge_list("n 2\ne 0 0"), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            parse_edge_list("n 2\ne 0 1\ne 1 0"),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            parse_edge_list("n 2\ne 0 2"),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(matches!(
            parse_edge_list("n 2\ne 0"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("e 0 1"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("n x"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("n 3\nq 1"),
            Err(GraphError::Parse { .. })
        ));
    }

    #[test]
    fn emission_is_sorted() {
        let g = Graph::from_edges(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(emit_edge_list(&g), "n 3\ne 0 1\ne 1 2\n");
    }

    #[test]
    fn graph6_small_cases() {
        assert_eq!(parse_graph6("A_").unwrap(), families::complete(2));
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2));
        assert_eq!(emit_graph6(&parse_graph6("A_").unwrap()), "A_");
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6("A"), Err(GraphError::Graph6(_))));
        assert!(matches!(
            parse_graph6("A\u{7f}"),
            Err(GraphError::Graph6(_))
        ));
        assert!(matches!(parse_graph6("A _"), Err(GraphError::Graph6(_))));
        assert!(matches!(parse_graph6(""), Err(GraphError::Graph6(_))));
    }

    #[test]
    fn graph6_long_size_field() {
        let g = families::cycle(70);
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
