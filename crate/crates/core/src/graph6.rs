//! graph6 encoding, restricted to the single-byte size prefix (`n <= 62`).
//!
//! Upper-triangle bits are visited column by column, `(i, j)` for
//! `j = 1..n` and `i = 0..j`, packed big-endian into 6-bit groups, each
//! offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_GRAPH6_ORDER: usize = 62;

const OFFSET: u8 = 63;

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::Graph6(format!(
            "{n} vertices exceeds the single-byte limit of {MAX_GRAPH6_ORDER}"
        )));
    }
    let mut bytes = Vec::with_capacity(1 + data_len(n));
    bytes.push(OFFSET + n as u8);

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(OFFSET + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(OFFSET + (group << (6 - filled)));
    }
    Ok(String::from_utf8(bytes).expect("graph6 bytes are ASCII"))
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end().as_bytes();
    let (&head, data) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(OFFSET..=126).contains(&head) {
        return Err(Error::Graph6(format!("invalid size byte {head}")));
    }
    if head == 126 {
        return Err(Error::Graph6(format!(
            "multi-byte sizes are not supported (n > {MAX_GRAPH6_ORDER})"
        )));
    }
    let n = usize::from(head - OFFSET);
    if data.len() != data_len(n) {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for {n} vertices, found {}",
            data_len(n),
            data.len()
        )));
    }
    if let Some((pos, &b)) = data
        .iter()
        .enumerate()
        .find(|(_, b)| !(OFFSET..=126).contains(*b))
    {
        return Err(Error::Graph6(format!(
            "invalid byte {b} at offset {}",
            pos + 1
        )));
    }

    let bit = |k: usize| (data[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
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
    let total_bits = data.len() * 6;
    if (k..total_bits).any(bit) {
        return Err(Error::Graph6("non-zero padding bits".into()));
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_unchecked(n, edges))
}
