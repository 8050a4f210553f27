//! Reading and writing trees.

mod graph6;
mod sparse6;
mod text;

pub use graph6::{decode_graph6, decode_graph6_edges, encode_graph6};
pub use sparse6::{decode_sparse6, decode_sparse6_edges, encode_edges, encode_sparse6};
pub use text::{parse_edge_list, to_edge_list};

use crate::error::{Error, Result};
use crate::graph::Tree;

/// Decodes a line in either sparse6 (leading `:`) or graph6.
pub fn decode_line(line: &str) -> Result<Tree> {
    let body = line.trim_start_matches(">>sparse6<<");
    if body.starts_with(':') {
        decode_sparse6(line)
    } else {
        decode_graph6(line)
    }
}

/// Decodes every non-empty line of a `.s6` or `.g6` file.
pub fn read_trees(text: &str) -> Result<Vec<Tree>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| decode_line(l.trim()).map_err(|e| Error::Parse { position: i + 1, message: e.to_string() }))
        .collect()
}

/// One sparse6 line per tree, each newline-terminated.
pub fn write_sparse6_lines<'a>(trees: impl IntoIterator<Item = &'a Tree>) -> String {
    let mut out = String::new();
    for t in trees {
        out.push_str(&encode_sparse6(t));
        out.push('\n');
    }
    out
}
