//! graph6 and plain edge-list serialization.

use super::{Graph, GraphError, MAX_VERTICES};

const GRAPH6_HEADER: &str = ">>graph6<<";

fn g6_err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

/// Parses one graph6 line. The `>>graph6<<` header and a trailing newline are
/// accepted; anything else outside the encoding is an error.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err("empty input"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(g6_err(format!(
            "byte {:#04x} at offset {pos} is outside the printable range 63..=126",
            bytes[pos]
        )));
    }

    let (n, payload) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(g6_err("orders above 258047 are not supported"));
        }
        if bytes.len() < 4 {
            return Err(g6_err("truncated length prefix"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n < 63 {
            return Err(g6_err(format!("non-canonical long length prefix for n = {n}")));
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if payload.len() < expected {
        return Err(g6_err(format!(
            "length prefix says n = {n} ({expected} data bytes) but only {} present",
            payload.len()
        )));
    }
    if payload.len() > expected {
        return Err(g6_err(format!(
            "{} trailing bytes after the encoding",
            payload.len() - expected
        )));
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = payload[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Encodes `g` in graph6, without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses the plain edge-list format: a header line `n m` followed by `m`
/// lines `u v`, 0-indexed. Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let err = |line: usize, msg: &str| GraphError::EdgeList {
        line,
        msg: msg.to_string(),
    };
    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize), GraphError> {
        let mut it = l.split_whitespace();
        let a = it.next().and_then(|t| t.parse().ok());
        let b = it.next().and_then(|t| t.parse().ok());
        match (a, b, it.next()) {
            (Some(a), Some(b), None) => Ok((a, b)),
            _ => Err(err(line, "expected two non-negative integers")),
        }
    };

    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing `n m` header"))?;
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines.by_ref() {
        let (u, v) = parse_pair(line, l)?;
        if u >= n || v >= n {
            return Err(err(line, &format!("endpoint out of range for n = {n}")));
        }
        if u == v {
            return Err(err(line, "loop edge"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(
            hline,
            &format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges)
}

/// Writes the edge-list format, edges sorted with `u < v`.
pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads every graph6 line of `text` (blank lines skipped). Errors carry the
/// 1-based line number.
pub fn read_graphs(text: &str) -> Result<Vec<Graph>, (usize, GraphError)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim()).map_err(|e| (i + 1, e)))
        .collect()
}
