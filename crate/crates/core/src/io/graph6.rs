//! graph6 for small dense graphs, accepted as an input convenience.

use super::sparse6::{read_size, write_size};
use crate::error::{Error, Result};
use crate::graph::{Tree, Vertex};

const PREFIX: &str = ">>graph6<<";

pub fn encode_graph6(t: &Tree) -> String {
    let n = t.order();
    let mut out = Vec::new();
    write_size(&mut out, n);
    let (mut acc, mut used) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | t.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                (acc, used) = (0, 0);
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn decode_graph6_edges(line: &str) -> Result<(usize, Vec<(Vertex, Vertex)>)> {
    let bad = |m: String| Error::MalformedGraph6(m);
    let line = line.trim_end_matches(['\n', '\r']);
    let body = line.strip_prefix(PREFIX).unwrap_or(line).as_bytes();
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(bad(format!("byte {} at offset {pos} is outside 63..=126", body[pos])));
    }
    let (n, used) = read_size(body).ok_or_else(|| bad("truncated header".into()))?;
    let data = &body[used..];
    let bits = n * n.saturating_sub(1) / 2;
    if data.len() != bits.div_ceil(6) {
        return Err(bad(format!("expected {} data bytes for order {n}, found {}", bits.div_ceil(6), data.len())));
    }
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if (data[pos / 6] - 63) >> (5 - pos % 6) & 1 == 1 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    Ok((n, edges))
}

pub fn decode_graph6(line: &str) -> Result<Tree> {
    let (n, edges) = decode_graph6_edges(line)?;
    Tree::new(n, edges)
}
