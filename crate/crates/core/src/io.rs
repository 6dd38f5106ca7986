//! graph6 and edge-list parsing/writing.
//!
//! graph6 layout (single-byte size field, `n <= 62`): size byte `n + 63`,
//! then the upper-triangle adjacency bits in column-major pair order
//! `(0,1),(0,2),(1,2),(0,3),...`, zero-padded to 6-bit groups, each group
//! `+63`. An optional `>>graph6<<` header is tolerated and skipped.

use crate::graph::{Graph, MAX_VERTICES};
use thiserror::Error;

const G6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("graph6: empty input")]
    Empty,
    #[error("graph6: size byte {byte} at offset {offset} outside 63..=126")]
    SizeByteOutOfRange { offset: usize, byte: u8 },
    #[error("graph6: multi-byte size field at offset {offset}; only n <= 62 is supported")]
    UnsupportedSize { offset: usize },
    #[error("graph6: byte {byte} at offset {offset} outside 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("graph6: input ends at offset {offset}; expected {expected} adjacency bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("graph6: trailing garbage at offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("edge list: missing vertex-count header line")]
    MissingHeader,
    #[error("edge list: line {line}: expected two endpoints, got {tokens}")]
    TokenCount { line: usize, tokens: usize },
    #[error("edge list: line {line}: non-integer token {token:?}")]
    BadToken { line: usize, token: String },
    #[error("edge list: line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("edge list: line {line}: vertex {vertex} out of range for n={n}")]
    OutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("edge list: line {line}: {n} vertices exceeds the {max} supported", max = MAX_VERTICES)]
    TooManyVertices { line: usize, n: usize },
}

/// Error from [`write_graph6`] when the graph is too large for the
/// single-byte size field.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("graph on {n} vertices: graph6 single-byte format supports at most 62")]
pub struct UnsupportedOrder {
    pub n: usize,
}

/// Parses one graph6 line. Offsets in errors refer to the input as given,
/// including any `>>graph6<<` header.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.trim_end_matches(['\r', '\n']);
    let (bytes, base) = match text.strip_prefix(G6_HEADER) {
        Some(rest) => (rest.as_bytes(), G6_HEADER.len()),
        None => (text.as_bytes(), 0),
    };
    let size = *bytes.first().ok_or(ParseError::Empty)?;
    if !(63..=126).contains(&size) {
        return Err(ParseError::SizeByteOutOfRange {
            offset: base,
            byte: size,
        });
    }
    if size == 126 {
        return Err(ParseError::UnsupportedSize { offset: base });
    }
    let n = (size - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < 1 + nbytes {
        return Err(ParseError::Truncated {
            offset: base + bytes.len(),
            expected: nbytes,
        });
    }
    if bytes.len() > 1 + nbytes {
        return Err(ParseError::TrailingGarbage {
            offset: base + 1 + nbytes,
        });
    }
    let mut g = Graph::empty(n);
    let mut k = 0usize; // bit cursor
    let mut pairs = upper_triangle_pairs(n);
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::ByteOutOfRange {
                offset: base + 1 + i,
                byte: b,
            });
        }
        let group = b - 63;
        for bit in (0..6).rev() {
            if k < nbits {
                if group & (1 << bit) != 0 {
                    let (u, v) = pairs.next().expect("pair cursor in bounds");
                    g.add_edge(u, v);
                } else {
                    pairs.next();
                }
            } else if group & (1 << bit) != 0 {
                // Nonzero padding means the line was not produced by a
                // conforming encoder; flag the offending byte.
                return Err(ParseError::TrailingGarbage {
                    offset: base + 1 + i,
                });
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Column-major upper-triangle order: (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
fn upper_triangle_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |v| (0..v).map(move |u| (u, v)))
}

pub fn write_graph6(g: &Graph) -> Result<String, UnsupportedOrder> {
    let n = g.n();
    if n > 62 {
        return Err(UnsupportedOrder { n });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0usize;
    for (u, v) in upper_triangle_pairs(n) {
        group = (group << 1) | u8::from(g.has_edge(u, v));
        filled += 1;
        if filled == 6 {
            out.push(group + 63);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses the edge-list format: first line `n`, then `u v` lines with
/// `0 <= u,v < n`, `u != v`. Duplicate edges are collapsed. Blank lines and
/// lines starting with `#` are skipped. Line numbers are 1-based.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut g: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match g {
            None => {
                let n: usize = trimmed.parse().map_err(|_| ParseError::BadToken {
                    line,
                    token: trimmed.to_string(),
                })?;
                if n > MAX_VERTICES {
                    return Err(ParseError::TooManyVertices { line, n });
                }
                g = Some(Graph::empty(n));
            }
            Some(ref mut g) => {
                let tokens: Vec<&str> = trimmed.split_whitespace().collect();
                if tokens.len() != 2 {
                    return Err(ParseError::TokenCount {
                        line,
                        tokens: tokens.len(),
                    });
                }
                let mut ends = [0usize; 2];
                for (slot, tok) in ends.iter_mut().zip(&tokens) {
                    *slot = tok.parse().map_err(|_| ParseError::BadToken {
                        line,
                        token: tok.to_string(),
                    })?;
                }
                let (u, v) = (ends[0], ends[1]);
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                let n = g.n();
                for w in [u, v] {
                    if w >= n {
                        return Err(ParseError::OutOfRange { line, vertex: w, n });
                    }
                }
                g.add_edge(u, v);
            }
        }
    }
    g.ok_or(ParseError::MissingHeader)
}
