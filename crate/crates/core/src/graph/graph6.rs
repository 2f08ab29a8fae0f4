//! graph6 text encoding: order prefix followed by the upper triangle packed
//! six bits per printable byte (column-major: `(0,1), (0,2), (1,2), (0,3), …`).

use super::{SmallGraph, MAX_ORDER};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Encodes `g` without header or trailing newline.
pub fn encode(g: &SmallGraph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
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

/// Decodes one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn decode(line: &str) -> Result<SmallGraph> {
    let trimmed = line.trim();
    let (offset, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    if let Some(p) = body.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(offset + p, format!("byte {:#04x} outside graph6 range", body[p])));
    }
    let (n, start) = match body.first() {
        None => return Err(Error::parse(offset, "empty graph6 string")),
        Some(&126) => {
            if body.get(1) == Some(&126) {
                return Err(Error::capacity("8-byte graph6 orders exceed the 64-vertex limit"));
            }
            if body.len() < 4 {
                return Err(Error::parse(offset + body.len(), "truncated order prefix"));
            }
            let n = body[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > MAX_ORDER {
        return Err(Error::capacity(format!("graph6 order {n} exceeds the {MAX_ORDER}-vertex limit")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = start + bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::parse(
            offset + body.len().min(expected),
            format!("expected {expected} bytes for order {n}, found {}", body.len()),
        ));
    }
    let mut g = SmallGraph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[start + k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_encoding() {
        let g = SmallGraph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
        assert_eq!(decode(">>graph6<<DQc\n").unwrap(), g);
    }

    #[test]
    fn small_orders() {
        assert_eq!(encode(&SmallGraph::empty(0).unwrap()), "?");
        assert_eq!(encode(&SmallGraph::empty(1).unwrap()), "@");
        assert_eq!(encode(&SmallGraph::complete(2).unwrap()), "A_");
        assert_eq!(decode("?").unwrap().order(), 0);
    }

    #[test]
    fn large_order_prefix() {
        let g = SmallGraph::from_edges(64, &[(0, 63), (5, 40)]).unwrap();
        let s = encode(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(decode(""), Err(Error::Parse { .. })));
        assert!(matches!(decode("DQ"), Err(Error::Parse { .. })));
        assert!(matches!(decode("DQcc"), Err(Error::Parse { .. })));
        assert!(matches!(decode("D Qc"), Err(Error::Parse { position: 1, .. })));
        assert!(matches!(decode("~?A?"), Err(Error::Capacity(_))));
    }

    proptest! {
        #[test]
        fn roundtrip(n in 0usize..=64, seed in any::<u64>()) {
            let mut g = SmallGraph::empty(n).unwrap();
            let mut s = seed | 1;
            for i in 0..n {
                for j in i + 1..n {
                    s ^= s << 13; s ^= s >> 7; s ^= s << 17;
                    if s & 3 == 0 { g.add_edge(i, j).unwrap(); }
                }
            }
            prop_assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }
}
