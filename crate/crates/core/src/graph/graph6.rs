//! graph6 encoding, as written by nauty's `geng`.
//!
//! Header: one byte `63 + n` for `n <= 62`, otherwise `126` followed by
//! `n` as 18 bits in three 6-bit bytes. Body: the upper triangle in
//! column order (`(0,1), (0,2), (1,2), (0,3), ..`), six bits per byte
//! offset by 63, zero-padded.

use thiserror::Error;

use super::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("malformed length header")]
    BadHeader,
    #[error("expected {expected} body bytes for {n} vertices, found {found}")]
    BadLength { n: usize, expected: usize, found: usize },
    #[error("padding bits after the adjacency data are not zero")]
    NonzeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const HEADER_PREFIX: &str = ">>graph6<<";

/// Parses one graph6 line. Surrounding whitespace and the optional `>>graph6<<` prefix are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER_PREFIX).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let mut values = Vec::with_capacity(bytes.len());
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { offset, byte });
        }
        values.push(byte - 63);
    }

    let (n, body) = if values[0] < 63 {
        (values[0] as usize, &values[1..])
    } else {
        if values.len() < 4 || values[1] == 63 {
            // 126 126 introduces the 36-bit form, far beyond what we store
            return Err(Graph6Error::BadHeader);
        }
        let n = values[1..4].iter().fold(0usize, |acc, &v| acc << 6 | v as usize);
        if n < 63 {
            return Err(Graph6Error::BadHeader);
        }
        (n, &values[4..])
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge(n).into());
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::BadLength { n, expected, found: body.len() });
    }
    let bit = |k: usize| body[k / 6] >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Graph6Error::NonzeroPadding);
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|v| v as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn hand_decoded_examples() {
        // 'A' = 2 vertices; '_' = 95 - 63 = 0b100000, bit (0,1) set
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2, Family::Complete(2).build().unwrap());
        // 'W' = 24 = 0b011000: (0,1)=0, (0,2)=1, (1,2)=1, a path centred on vertex 2
        let p3 = parse_graph6("BW").unwrap();
        assert_eq!(p3, Graph::from_edge_list(3, &[(0, 2), (1, 2)]).unwrap());
        assert_eq!(to_graph6(&p3), "BW");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), k2);
    }

    #[test]
    fn matches_petgraph_reference_string() {
        // edges a-c, a-e, b-d, d-e on five vertices encode to "DQc"
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("B"), Err(Graph6Error::BadLength { n: 3, expected: 1, found: 0 }));
        assert_eq!(parse_graph6("BWW"), Err(Graph6Error::BadLength { n: 3, expected: 1, found: 2 }));
        // 'X' = 25 sets a padding bit for n = 3
        assert_eq!(parse_graph6("BX"), Err(Graph6Error::NonzeroPadding));
        assert!(matches!(parse_graph6("B W"), Err(Graph6Error::BadByte { .. })));
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::BadHeader));
        assert_eq!(parse_graph6("~???"), Err(Graph6Error::BadHeader));
    }

    #[test]
    fn long_header_round_trip() {
        let g = Family::Cycle(63).build().unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
