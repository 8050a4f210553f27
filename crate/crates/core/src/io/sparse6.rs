//! sparse6, as written and read by nauty.

use crate::error::{Error, Result};
use crate::graph::{Tree, Vertex};

const PREFIX: &str = ">>sparse6<<";

fn bad(msg: impl Into<String>) -> Error {
    Error::MalformedSparse6(msg.into())
}

/// Bits needed to write `n - 1`.
fn width(n: usize) -> u32 {
    let mut nb = 0;
    while (1usize << nb) < n {
        nb += 1;
    }
    nb
}

pub(crate) fn write_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Parses the order at the start of `body`; returns it and the number of
/// bytes consumed.
pub(crate) fn read_size(body: &[u8]) -> Option<(usize, usize)> {
    let six = |b: u8| (63..=126).contains(&b).then(|| (b - 63) as usize);
    match body {
        [b'~', b'~', rest @ ..] if rest.len() >= 6 => {
            let n = rest[..6].iter().try_fold(0usize, |acc, &b| Some((acc << 6) | six(b)?))?;
            Some((n, 8))
        }
        [b'~', rest @ ..] if rest.len() >= 3 => {
            let n = rest[..3].iter().try_fold(0usize, |acc, &b| Some((acc << 6) | six(b)?))?;
            Some((n, 4))
        }
        [b, ..] if *b != b'~' => Some((six(*b)?, 1)),
        _ => None,
    }
}

struct BitWriter {
    out: Vec<u8>,
    acc: u8,
    free: u32,
}

impl BitWriter {
    fn push(&mut self, bit: bool) {
        self.acc = (self.acc << 1) | bit as u8;
        self.free -= 1;
        if self.free == 0 {
            self.out.push(self.acc + 63);
            self.acc = 0;
            self.free = 6;
        }
    }

    fn push_value(&mut self, value: usize, nb: u32) {
        for shift in (0..nb).rev() {
            self.push((value >> shift) & 1 == 1);
        }
    }
}

/// Encodes a tree, without a trailing newline.
pub fn encode_sparse6(t: &Tree) -> String {
    let mut edges: Vec<(Vertex, Vertex)> = t.edges().to_vec();
    edges.sort_unstable_by_key(|&(i, j)| (j, i));
    encode_edges(t.order(), &edges)
}

/// Encodes `(i, j)` pairs with `i <= j`, sorted by `j` then `i`.
pub fn encode_edges(n: usize, edges: &[(Vertex, Vertex)]) -> String {
    let nb = width(n);
    let mut w = BitWriter { out: vec![b':'], acc: 0, free: 6 };
    write_size(&mut w.out, n);
    let mut last = 0usize;
    for &(i, j) in edges {
        if j == last {
            w.push(false);
        } else {
            w.push(true);
            if j > last + 1 {
                w.push_value(j, nb);
                w.push(false);
            }
            last = j;
        }
        w.push_value(i, nb);
    }
    if w.free != 6 {
        let k = w.free;
        let pad = if k > nb && n >= 2 && last == n - 2 && n == (1 << nb) {
            // a lone 0 keeps the padding from reading as a loop at n - 1
            (1u8 << (k - 1)) - 1
        } else {
            (1u8 << k) - 1
        };
        w.out.push(((w.acc << k) | pad) + 63);
    }
    String::from_utf8(w.out).expect("sparse6 is ASCII")
}

/// Decodes one sparse6 line into its order and edge list. Loops and
/// repeated edges are returned as they appear.
pub fn decode_sparse6_edges(line: &str) -> Result<(usize, Vec<(Vertex, Vertex)>)> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(PREFIX).unwrap_or(line);
    let body = line.strip_prefix(':').ok_or_else(|| bad("line does not start with ':'"))?.as_bytes();
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(bad(format!("byte {} at offset {} is outside 63..=126", body[pos], pos + 1)));
    }
    let (n, used) = read_size(body).ok_or_else(|| bad("truncated header"))?;
    let data = &body[used..];
    let nb = width(n);
    let total_bits = data.len() * 6;
    let bit = |pos: usize| (data[pos / 6] - 63) >> (5 - pos % 6) & 1 == 1;
    let mut pos = 0usize;
    let mut v = 0usize;
    let mut edges = Vec::new();
    while pos < total_bits {
        let b = bit(pos);
        pos += 1;
        if pos + nb as usize > total_bits {
            break;
        }
        let mut x = 0usize;
        for _ in 0..nb {
            x = (x << 1) | bit(pos) as usize;
            pos += 1;
        }
        if b {
            v += 1;
        }
        if x > v {
            if x >= n && total_bits - pos >= 6 {
                return Err(bad(format!("vertex {x} out of range for order {n}")));
            }
            v = x;
        } else if v < n {
            edges.push((x, v));
        }
    }
    Ok((n, edges))
}

pub fn decode_sparse6(line: &str) -> Result<Tree> {
    let (n, edges) = decode_sparse6_edges(line)?;
    Tree::new(n, edges)
}
