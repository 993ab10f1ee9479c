use thiserror::Error;

use crate::canon::canonical_labeling;
use crate::trigraph::{Trigraph, TrigraphError};

/// Only the one-byte size header is supported.
pub const GRAPH6_MAX_ORDER: usize = 62;

const OFFSET: u8 = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {position} is outside the graph6 range 63..=126")]
    InvalidByte { position: usize, byte: u8 },
    #[error("graph6 strings with more than {GRAPH6_MAX_ORDER} vertices are not supported")]
    TooLarge,
    #[error("graph6 header encodes zero vertices")]
    ZeroVertices,
    #[error("expected {expected} payload bytes for {order} vertices, found {found}")]
    PayloadLength { order: usize, expected: usize, found: usize },
    #[error("non-zero padding bits in the last payload byte")]
    NonZeroPadding,
    #[error("graph has red edges and cannot be written as graph6")]
    RedEdges,
}

fn payload_len(order: usize) -> usize {
    (order * order.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes a graph6 string into a plain trigraph.
///
/// Adjacency bits run over the upper triangle column by column:
/// (0,1), (0,2), (1,2), (0,3), ... and each payload byte carries six of them,
/// most significant first.
pub fn parse_graph6(s: &str) -> Result<Trigraph, Graph6Error> {
    let bytes = s.as_bytes();
    let (&head, payload) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (position, &byte) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { position, byte });
        }
    }
    if head == 126 {
        return Err(Graph6Error::TooLarge);
    }
    let order = (head - OFFSET) as usize;
    if order == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    let expected = payload_len(order);
    if payload.len() != expected {
        return Err(Graph6Error::PayloadLength { order, expected, found: payload.len() });
    }
    let total_bits = order * (order - 1) / 2;
    let bit = |k: usize| (payload[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    if (total_bits..expected * 6).any(bit) {
        return Err(Graph6Error::NonZeroPadding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..order {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Trigraph::from_graph(order, &edges).expect("indices are in range by construction"))
}

/// Encodes a plain trigraph as graph6, numbering live vertices in slot order.
pub fn emit_graph6(g: &Trigraph) -> Result<String, Graph6Error> {
    if !g.is_plain() {
        return Err(Graph6Error::RedEdges);
    }
    let g = g.compacted();
    let order = g.order();
    if order > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::TooLarge);
    }
    let mut out = Vec::with_capacity(1 + payload_len(order));
    out.push(OFFSET + order as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..order {
        let col = g.black_row(j);
        for i in 0..j {
            acc = acc << 1 | (col >> i & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// graph6 of the canonical relabeling; equal for isomorphic graphs.
pub fn emit_graph6_canonical(g: &Trigraph) -> Result<String, Graph6Error> {
    if !g.is_plain() {
        return Err(Graph6Error::RedEdges);
    }
    let g = g.compacted();
    let (_, order) = canonical_labeling(&g);
    let mut perm = vec![0; order.len()];
    for (pos, &slot) in order.iter().enumerate() {
        perm[slot] = pos;
    }
    emit_graph6(&g.permuted(&perm))
}

impl From<TrigraphError> for Graph6Error {
    fn from(e: TrigraphError) -> Self {
        match e {
            TrigraphError::RedEdgesPresent => Graph6Error::RedEdges,
            _ => Graph6Error::TooLarge,
        }
    }
}
