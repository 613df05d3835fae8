//! graph6 records, short form only (`n <= 62`).
//!
//! A record is one size byte `n + 63` followed by the upper triangle of the
//! adjacency matrix in column-major order, `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed six bits per byte (most significant first) and offset by 63.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count expressible with a single size byte.
pub const MAX_SHORT_VERTICES: usize = 62;

/// Header some dataset files put in front of each record.
pub const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: &'static str) -> Error {
    Error::Graph6 { offset, reason }
}

/// Decodes one graph6 record. Surrounding whitespace and a leading
/// `>>graph6<<` header are ignored; offsets in errors are relative to the
/// record proper.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let record = text.trim();
    let record = record.strip_prefix(HEADER).unwrap_or(record).as_bytes();

    let (&size_byte, body) = record.split_first().ok_or(err(0, "empty record"))?;
    if !(63..=126).contains(&size_byte) {
        return Err(err(0, "size byte outside 63..=126"));
    }
    if size_byte == 126 {
        return Err(err(0, "multi-byte size encodings are not supported"));
    }
    let n = usize::from(size_byte - 63);
    if n == 0 {
        return Err(err(0, "graph has no vertices"));
    }

    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(err(
            1 + body.len().min(expected),
            if body.len() < expected {
                "record too short for its vertex count"
            } else {
                "trailing bytes after adjacency data"
            },
        ));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i + 1, "byte outside 63..=126"));
        }
    }

    let bit = |idx: usize| (body[idx / 6] - 63) >> (5 - idx % 6) & 1 == 1;
    for idx in bits..expected * 6 {
        if bit(idx) {
            return Err(err(1 + idx / 6, "padding bits are not zero"));
        }
    }

    let mut edges = Vec::new();
    let mut idx = 0;
    for k in 1..n {
        for j in 0..k {
            if bit(idx) {
                edges.push((j, k));
            }
            idx += 1;
        }
    }
    Graph::new(n, edges)
}

/// Encodes `g` as a graph6 record (no header, no newline).
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > MAX_SHORT_VERTICES {
        return Err(Error::Capacity {
            what: "graph6 short form",
            size: n,
            limit: MAX_SHORT_VERTICES,
        });
    }
    let bits = n * (n - 1) / 2;
    let mut body = alloc::vec![0u8; bits.div_ceil(6)];
    let mut idx = 0;
    for k in 1..n {
        for j in 0..k {
            if g.has_edge(j, k) {
                body[idx / 6] |= 1 << (5 - idx % 6);
            }
            idx += 1;
        }
    }
    let mut out = String::with_capacity(1 + body.len());
    out.push(char::from(n as u8 + 63));
    out.extend(body.into_iter().map(|b| char::from(b + 63)));
    Ok(out)
}
