//! The graph6 text format: one printable-ASCII token per graph.
//!
//! Layout for order `n <= 62`: a single header byte `n + 63`, then the
//! upper-triangle adjacency bits in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed big-endian six bits per
//! byte, each byte offset by 63, with zero padding in the final byte.

use crate::graph::Graph;
use crate::{Error, Result};

/// Largest order representable with a single-byte header.
pub const MAX_GRAPH6_ORDER: usize = 62;

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Encodes a graph as a graph6 token.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(err(format!("order {n} exceeds single-byte graph6 range")));
    }
    let mut out = vec![(n + 63) as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses a single graph6 token.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(err("empty input"));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(err(format!("byte {b} outside graph6 range 63..=126")));
        }
    }
    if bytes[0] == 126 {
        return Err(err("multi-byte order encoding not supported"));
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(err("order 0 not supported"));
    }
    let nbits = n * (n - 1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() < expected {
        return Err(err(format!(
            "truncated: expected {expected} bytes for order {n}, got {}",
            bytes.len()
        )));
    }
    if bytes.len() > expected {
        return Err(err(format!(
            "trailing garbage: expected {expected} bytes for order {n}, got {}",
            bytes.len()
        )));
    }
    let bit = |i: usize| (bytes[1 + i / 6] - 63) >> (5 - i % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut i = 0;
    for col in 1..n {
        for row in 0..col {
            if bit(i) {
                edges.push((row, col));
            }
            i += 1;
        }
    }
    for pad in nbits..(expected - 1) * 6 {
        if bit(pad) {
            return Err(err("nonzero padding bits"));
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, path};

    #[test]
    fn triangle_token() {
        // K_3 bits 111 -> padded 111000 -> 56 + 63 = 119 = 'w'
        let g = parse_graph6("Bw").unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 2));
        assert_eq!(to_graph6(&complete(3).unwrap()).unwrap(), "Bw");
    }

    #[test]
    fn path_token() {
        // bits 101 (edges 01 and 12) -> 101000 -> 40 + 63 = 103 = 'g'
        let g = parse_graph6("Bg").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(to_graph6(&path(3).unwrap()).unwrap(), "Bg");
    }

    #[test]
    fn single_vertex_token() {
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(parse_graph6("@").unwrap().order(), 1);
    }

    #[test]
    fn five_vertex_token() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        let back = parse_graph6("DQc").unwrap();
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        // two headers / trailing garbage
        assert!(matches!(parse_graph6("@@"), Err(Error::Graph6(_))));
        // truncated body for order 5
        assert!(matches!(parse_graph6("D"), Err(Error::Graph6(_))));
        // byte below 63
        assert!(matches!(parse_graph6("B!"), Err(Error::Graph6(_))));
        // order-0 token
        assert!(matches!(parse_graph6("?"), Err(Error::Graph6(_))));
        // multi-byte order marker
        assert!(matches!(parse_graph6("~??"), Err(Error::Graph6(_))));
        // nonzero padding: K_2 is "A_" (bit 1 -> 100000); "A" + '~' has junk padding
        assert!(matches!(parse_graph6("A~"), Err(Error::Graph6(_))));
        assert_eq!(parse_graph6("A_").unwrap().edges(), vec![(0, 1)]);
    }

    #[test]
    fn round_trip_small_orders() {
        for n in 1..=8usize {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if (u * 7 + v * 3) % 4 == 0 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let token = to_graph6(&g).unwrap();
            let back = parse_graph6(&token).unwrap();
            assert_eq!(back.edges(), g.edges());
            assert_eq!(back.order(), g.order());
        }
    }
}
