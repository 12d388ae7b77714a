//! graph6 codec, short form only (order at most 62).
//!
//! Byte `n + 63`, then the upper-triangle bits in column order
//! (0,1),(0,2),(1,2),(0,3),… packed big-endian into 6-bit groups, each group
//! offset by 63, with zero padding in the final group.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub const MAX_GRAPH6_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("long-form graph6 (order > {MAX_GRAPH6_ORDER}) is not supported")]
    LongForm,
    #[error("order 0 is not a graph")]
    ZeroOrder,
    #[error("malformed length: expected {expected} data bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("invalid character 0x{byte:02x} at byte {pos}")]
    InvalidChar { pos: usize, byte: u8 },
    #[error("nonzero padding bits")]
    TrailingBits,
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn decode(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&head, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if head == 126 {
        return Err(Graph6Error::LongForm.into());
    }
    if !(63..=126).contains(&head) {
        return Err(Graph6Error::InvalidChar { pos: 0, byte: head }.into());
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::ZeroOrder.into());
    }
    let expected = data_len(n);
    if data.len() != expected {
        return Err(Graph6Error::Length {
            expected,
            found: data.len(),
        }
        .into());
    }
    if let Some((i, &b)) = data.iter().enumerate().find(|(_, b)| !(63..=126).contains(*b)) {
        return Err(Graph6Error::InvalidChar { pos: i + 1, byte: b }.into());
    }

    let total = n * (n - 1) / 2;
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (total..expected * 6).any(bit) {
        return Err(Graph6Error::TrailingBits.into());
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges)
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::LongForm);
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

impl Graph {
    pub fn from_graph6(text: &str) -> Result<Self, GraphError> {
        decode(text)
    }

    pub fn to_graph6(&self) -> Result<String, Graph6Error> {
        encode(self)
    }
}
