//! Plain edge lists: the order on the first line, then one `u v` pair per
//! line. Blank lines and `#` comments are ignored.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Tree;

pub fn to_edge_list(t: &Tree) -> String {
    let mut out = format!("{}\n", t.order());
    for &(u, v) in t.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Tree> {
    let mut order = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |m: &str| Error::Parse { position: lineno + 1, message: format!("{m}: '{raw}'") };
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err("expected integers"))?;
        match (order, nums.as_slice()) {
            (None, [n]) => order = Some(*n),
            (None, _) => return Err(err("first line must hold the order")),
            (Some(_), [u, v]) => edges.push((*u, *v)),
            (Some(_), _) => return Err(err("expected an edge 'u v'")),
        }
    }
    let n = order.ok_or(Error::Parse { position: 0, message: "empty edge list".into() })?;
    Tree::new(n, edges)
}
