//! graph6 encoding: one graph per line, printable ASCII.
//!
//! Layout: a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix read column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed big-endian into 6-bit groups, each stored as the byte `63 + group`.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;
const OPTIONAL_HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

/// Parses a single graph6 line. A trailing newline (`\n` or `\r\n`) and the
/// optional `>>graph6<<` prefix are accepted; anything else must be exact.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (start, body) = match line.strip_prefix(OPTIONAL_HEADER) {
        Some(rest) => (OPTIONAL_HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(err(start + i, format!("byte 0x{b:02x} is outside the graph6 range 63..=126")));
        }
    }
    if body.is_empty() {
        return Err(err(start, "missing size header"));
    }

    let (n, header_len) = decode_size(body, start)?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    let payload = &body[header_len..];
    if payload.len() < byte_count {
        return Err(err(
            start + body.len(),
            format!("expected {byte_count} adjacency bytes for n={n}, found {}", payload.len()),
        ));
    }
    if payload.len() > byte_count {
        return Err(err(start + header_len + byte_count, "trailing bytes after adjacency data"));
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = payload[k / 6] - OFFSET;
            if group >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if bit_count % 6 != 0 {
        let last = payload[byte_count - 1] - OFFSET;
        let pad = 6 - bit_count % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(start + header_len + byte_count - 1, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_adjacency(adj))
}

fn decode_size(body: &[u8], start: usize) -> Result<(usize, usize)> {
    let group = |bytes: &[u8]| bytes.iter().fold(0usize, |acc, &b| acc << 6 | (b - OFFSET) as usize);
    if body[0] != 126 {
        return Ok(((body[0] - OFFSET) as usize, 1));
    }
    if body.len() >= 2 && body[1] == 126 {
        if body.len() < 8 {
            return Err(err(start + body.len(), "truncated 8-byte size header"));
        }
        return Ok((group(&body[2..8]), 8));
    }
    if body.len() < 4 {
        return Err(err(start + body.len(), "truncated 4-byte size header"));
    }
    Ok((group(&body[1..4]), 4))
}

/// Encodes `g` as a graph6 line (without newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses every non-empty line of `text`.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l.trim_end()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_has_header_only() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(to_graph6(&k1), "@");
        let back = parse_graph6("@").unwrap();
        assert_eq!((back.n(), back.m()), (1, 0));
    }

    #[test]
    fn k4_is_c_tilde() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
    }

    #[test]
    fn accepts_optional_prefix_and_newline() {
        let g = parse_graph6(">>graph6<<C~\r\n").unwrap();
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn error_offsets() {
        match parse_graph6("C~~") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6("D?") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6("C\x07") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6("") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 0),
            other => panic!("unexpected {other:?}"),
        }
        // K_3 is "Bw": bits 111 then three zero padding bits; "Bx" sets one.
        assert!(parse_graph6("Bw").is_ok());
        assert!(matches!(parse_graph6("Bx"), Err(Error::Graph6 { offset: 1, .. })));
    }

    #[test]
    fn long_header_round_trip() {
        let n = 64;
        let g = Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap();
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63][..]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
