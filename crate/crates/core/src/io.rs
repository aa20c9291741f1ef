//! graph6 and plain edge-list text formats.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with the single-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Encodes `g` as a graph6 string (no header, no newline).
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::OverCap {
            what: "graph6",
            order: n,
            cap: GRAPH6_MAX_ORDER,
        });
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let malformed = |why: &str| Error::MalformedGraph6(format!("{why}: {text:?}"));
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| malformed("empty input"))?;
    if !(63..=126).contains(&head) {
        return Err(malformed("invalid header byte"));
    }
    if head == 126 {
        return Err(Error::OverCap {
            what: "graph6",
            order: 63,
            cap: GRAPH6_MAX_ORDER,
        });
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(malformed("wrong length"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for (pos, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(malformed("byte outside printable range"));
        }
        let six = b - 63;
        for bit in 0..6 {
            let set = six >> (5 - bit) & 1 == 1;
            let idx = pos * 6 + bit;
            if idx >= nbits {
                if set {
                    return Err(malformed("nonzero padding bits"));
                }
                continue;
            }
            if set {
                edges.push(pair_at(idx));
            }
            k += 1;
        }
    }
    debug_assert!(k == nbits);
    Graph::from_edge_list(n, &edges)
}

/// Upper-triangle column-major position to `(i, j)` with `i < j`.
fn pair_at(idx: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= idx {
        start += j;
        j += 1;
    }
    (idx - start, j)
}

/// Writes `"n m"` followed by one `"u v"` line per edge.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads every graph from edge-list text. Several graphs may follow each
/// other; blank lines and `#` comments are skipped.
pub fn decode_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let mut graphs = Vec::new();
    let pair = |line: &str| -> Result<(usize, usize)> {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(Error::MalformedEdgeList(format!(
                "expected two integers, got {line:?}"
            ))),
        }
    };
    while let Some(head) = lines.next() {
        let (n, m) = pair(head)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::MalformedEdgeList(format!("expected {m} edges")))?;
            edges.push(pair(line)?);
        }
        graphs.push(Graph::from_edge_list(n, &edges)?);
    }
    Ok(graphs)
}
