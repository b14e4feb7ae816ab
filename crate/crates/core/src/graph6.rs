//! graph6 encoding, byte-compatible with nauty's `geng`/`showg`.
//!
//! Layout: `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six bits per byte
//! (big-endian within each group), each group offset by 63, and the final group
//! zero-padded.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Parses one graph6 line. Trailing line terminators and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(skip + i, format!("byte {b} outside 63..126")));
        }
    }
    let (n, mut pos) = decode_order(body).map_err(|(o, m)| err(skip + o, m))?;
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() != pos + need {
        return Err(err(
            skip + body.len().min(pos + need),
            format!(
                "expected {} bytes for order {n}, found {}",
                pos + need,
                body.len()
            ),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    if nbits % 6 != 0 {
        pos += need - 1;
        let pad = 6 - nbits % 6;
        if (body[pos] - 63) & ((1 << pad) - 1) != 0 {
            return Err(err(skip + pos, "nonzero padding bits"));
        }
    }
    Ok(g)
}

fn decode_order(body: &[u8]) -> std::result::Result<(usize, usize), (usize, String)> {
    let val = |i: usize| -> std::result::Result<usize, (usize, String)> {
        body.get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or((i, "truncated order field".to_string()))
    };
    match body.first() {
        None => Err((0, "empty graph6 string".to_string())),
        Some(&126) => {
            if body.get(1) == Some(&126) {
                let mut n = 0;
                for i in 2..8 {
                    n = n << 6 | val(i)?;
                }
                Ok((n, 8))
            } else {
                let mut n = 0;
                for i in 1..4 {
                    n = n << 6 | val(i)?;
                }
                Ok((n, 4))
            }
        }
        Some(&b) => Ok(((b - 63) as usize, 1)),
    }
}

/// Canonical graph6 encoding (no header, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + (n >> shift & 63) as u8);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + (n >> shift & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(63 + acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(63 + (acc << (6 - k)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Reads one graph per line, skipping blank lines. Errors carry the 1-based line number.
pub fn read_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader
        .lines()
        .enumerate()
        .filter(|(_, l)| !matches!(l, Ok(s) if s.trim().is_empty()))
        .map(|(i, l)| {
            let wrap = |e: Error| Error::Stream {
                line: i + 1,
                source: Box::new(e),
            };
            let line = l.map_err(|e| wrap(e.into()))?;
            parse_graph6(line.trim()).map_err(wrap)
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference bit packing written out by hand for tiny orders: the
    // column-order bit string, padded to a multiple of six, each sextet + 63.
    fn hand_encode(n: usize, edges: &[(usize, usize)]) -> String {
        let mut bitstr = String::new();
        for j in 1..n {
            for i in 0..j {
                let e = edges.contains(&(i, j)) || edges.contains(&(j, i));
                bitstr.push(if e { '1' } else { '0' });
            }
        }
        while !bitstr.len().is_multiple_of(6) {
            bitstr.push('0');
        }
        let mut s = String::new();
        s.push((63 + n as u8) as char);
        for chunk in bitstr.as_bytes().chunks(6) {
            let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
            s.push((63 + v) as char);
        }
        s
    }

    #[test]
    fn small_examples() {
        assert_eq!(hand_encode(2, &[(0, 1)]), "A_");
        assert_eq!(hand_encode(2, &[]), "A?");
        assert_eq!(hand_encode(3, &[(0, 1), (0, 2), (1, 2)]), "Bw");
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2));
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(write_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
        let p3 = Graph::path(3);
        assert_eq!(write_graph6(&p3), hand_encode(3, &[(0, 1), (1, 2)]));
        assert_eq!(parse_graph6(&write_graph6(&p3)).unwrap(), p3);
    }

    #[test]
    fn header_and_newline() {
        assert_eq!(
            parse_graph6(">>graph6<<Bw\n").unwrap(),
            Graph::complete(3)
        );
    }

    #[test]
    fn malformed() {
        // wrong length
        assert!(matches!(parse_graph6("Bww"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6("B"), Err(Error::Graph6 { .. })));
        // byte outside range, offset reported
        match parse_graph6("B w") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        // 'x' = 57 = 111001: the last three bits are padding for n = 3
        match parse_graph6("Bx") {
            Err(Error::Graph6 { offset, message }) => {
                assert_eq!(offset, 1);
                assert!(message.contains("padding"));
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_graph6("").is_err());
    }

    #[test]
    fn stream_reports_line_numbers() {
        let text = "Bw\n\nA_\nB!\n";
        let items: Vec<Result<Graph>> = read_graph6(text.as_bytes()).collect();
        assert_eq!(items.len(), 3);
        assert_eq!(items[0].as_ref().unwrap(), &Graph::complete(3));
        assert_eq!(items[1].as_ref().unwrap(), &Graph::complete(2));
        match &items[2] {
            Err(Error::Stream { line, .. }) => assert_eq!(*line, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn long_order_forms() {
        let g = Graph::cycle(70);
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        assert_eq!(parse_graph6(&write_graph6(&Graph::empty(0))).unwrap().order(), 0);
    }
}
