//! Isomorphism-invariant encoding of free trees.
//!
//! The tree is rooted at its center and encoded bottom-up: a vertex is
//! `(` followed by its children's codes in sorted order, then `)`. A
//! bicentral tree is encoded from both centers and the smaller string kept.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Tree, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn of(tree: &Tree) -> Self {
        let centers = centers(tree);
        let best = centers.iter().map(|&c| rooted_code(tree, c)).min().expect("a tree has a center");
        Self(best)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("codes are ASCII")
    }

    /// Number of vertices encoded.
    pub fn order(&self) -> usize {
        self.0.len() / 2
    }

    /// Accepts any balanced parenthesis string describing a rooted tree and
    /// re-canonicalizes it.
    pub fn parse(text: &str) -> Result<Self> {
        let tree = decode(text.as_bytes())?;
        Ok(Self::of(&tree))
    }

    /// Rebuilds a tree; vertices are numbered in preorder from the root.
    pub fn to_tree(&self) -> Tree {
        decode(&self.0).expect("canonical codes are well formed")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Self::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// One or two central vertices, found by peeling leaves.
pub fn centers(tree: &Tree) -> Vec<Vertex> {
    let n = tree.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree = tree.degrees();
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for w in tree.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(tree: &Tree, root: Vertex) -> Vec<u8> {
    let n = tree.order();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    parent[root] = root;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for w in tree.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
    }
    let mut children: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let mut kids = std::mem::take(&mut children[u]);
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for k in kids {
            code.extend_from_slice(&k);
        }
        code.push(b')');
        if u == root {
            return code;
        }
        children[parent[u]].push(code);
    }
    unreachable!("the root is visited last")
}

fn decode(bytes: &[u8]) -> Result<Tree> {
    let bad = |position: usize, message: &str| Error::Parse { position, message: message.to_string() };
    if bytes.first() != Some(&b'(') {
        return Err(bad(0, "code must start with '('"));
    }
    let mut parents = Vec::with_capacity(bytes.len() / 2);
    let mut stack: Vec<usize> = Vec::new();
    let mut closed = false;
    for (i, &b) in bytes.iter().enumerate() {
        if closed {
            return Err(bad(i, "trailing characters after the root closes"));
        }
        match b {
            b'(' => {
                let v = parents.len();
                parents.push(stack.last().copied().unwrap_or(0));
                stack.push(v);
            }
            b')' => {
                stack.pop().ok_or_else(|| bad(i, "unbalanced ')'"))?;
                closed = stack.is_empty();
            }
            _ => return Err(bad(i, "expected '(' or ')'")),
        }
    }
    if !closed {
        return Err(bad(bytes.len(), "unbalanced '('"));
    }
    Ok(Tree::from_parents(&parents))
}
