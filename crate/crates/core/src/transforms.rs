//! Tree rewrites that strictly increase the Wiener index.

use crate::error::{Error, Result};
use crate::graph::{Tree, Vertex};

/// Identifies `v1` in `t1` with `v2` in `t2`.
///
/// Labels of `t1` are kept. The vertices of `t2` other than `v2` follow in
/// their original order, starting at `t1.order()`.
pub fn fuse(t1: &Tree, v1: Vertex, t2: &Tree, v2: Vertex) -> Result<Tree> {
    t1.check(v1)?;
    t2.check(v2)?;
    let n1 = t1.order();
    let map = |u: Vertex| -> Vertex {
        match u.cmp(&v2) {
            std::cmp::Ordering::Equal => v1,
            std::cmp::Ordering::Less => n1 + u,
            std::cmp::Ordering::Greater => n1 + u - 1,
        }
    };
    let edges = t1.edges().iter().copied().chain(t2.edges().iter().map(|&(a, b)| (map(a), map(b))));
    Tree::new(n1 + t2.order() - 1, edges)
}

/// Result of replacing branches by pendent paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Straightened {
    pub tree: Tree,
    /// `relabel[old]` is the new label of a surviving vertex, `None` for
    /// vertices of a replaced branch.
    pub relabel: Vec<Option<Vertex>>,
    /// The fresh path vertices, one list per replaced branch, outward from
    /// the attachment vertex.
    pub paths: Vec<Vec<Vertex>>,
}

/// Whether the component of `t - v` through `root` is a path starting at
/// `root`, i.e. `v` carries it as a pendent path.
fn hangs_as_path(t: &Tree, v: Vertex, root: Vertex) -> bool {
    let (mut prev, mut cur) = (v, root);
    loop {
        let mut next = None;
        for w in t.neighbors(cur) {
            if w == prev {
                continue;
            }
            if next.is_some() {
                return false;
            }
            next = Some(w);
        }
        match next {
            None => return true,
            Some(w) => {
                prev = cur;
                cur = w;
            }
        }
    }
}

/// Replaces the branch of `t - v` containing `branch_root` with a pendent
/// path of the same order hanging at `v`.
pub fn arm_straighten(t: &Tree, v: Vertex, branch_root: Vertex) -> Result<Straightened> {
    straighten_branches(t, v, &[branch_root])
}

/// Replaces every listed branch at `v` with a pendent path of the same
/// order. At least one branch must not already be a pendent path.
pub fn straighten_branches(t: &Tree, v: Vertex, roots: &[Vertex]) -> Result<Straightened> {
    t.check(v)?;
    let n = t.order();
    let mut removed = vec![false; n];
    let mut sizes = Vec::with_capacity(roots.len());
    let mut any_change = false;
    for &r in roots {
        t.check(r)?;
        if !t.has_edge(v, r) {
            return Err(Error::NotAnEdge(v, r));
        }
        if removed[r] {
            return Err(Error::PreconditionFailed(format!("branch root {r} is listed twice")));
        }
        let branch = t.component(r, v)?;
        for &u in &branch {
            removed[u] = true;
        }
        sizes.push(branch.len());
        any_change |= !hangs_as_path(t, v, r);
    }
    if !any_change {
        return Err(Error::BranchIsAlreadyPath { root: roots.first().copied().unwrap_or(v) });
    }
    let mut relabel = vec![None; n];
    let mut next = 0;
    for u in 0..n {
        if !removed[u] {
            relabel[u] = Some(next);
            next += 1;
        }
    }
    let mut edges: Vec<(Vertex, Vertex)> =
        t.edges().iter().filter_map(|&(a, b)| Some((relabel[a]?, relabel[b]?))).collect();
    let anchor = relabel[v].expect("v is never removed");
    let mut paths = Vec::with_capacity(sizes.len());
    for size in sizes {
        let path: Vec<Vertex> = (next..next + size).collect();
        let mut prev = anchor;
        for &p in &path {
            edges.push((prev, p));
            prev = p;
        }
        next += size;
        paths.push(path);
    }
    Ok(Straightened { tree: Tree::new(n, edges)?, relabel, paths })
}

/// Walks the pendent path that starts at `start` next to `v`; returns its
/// vertices outward, or `None` if it branches.
fn pendent_path(t: &Tree, v: Vertex, start: Vertex) -> Option<Vec<Vertex>> {
    let mut out = vec![start];
    let (mut prev, mut cur) = (v, start);
    loop {
        let mut onward = t.neighbors(cur).filter(|&w| w != prev);
        match (onward.next(), onward.next()) {
            (None, _) => return Some(out),
            (Some(w), None) => {
                out.push(w);
                prev = cur;
                cur = w;
            }
            _ => return None,
        }
    }
}

/// Moves the leaf of the shorter pendent path at `v` to the end of the
/// longer one. Labels are preserved.
pub fn majorize(t: &Tree, v: Vertex, long_arm: Vertex, short_arm: Vertex) -> Result<Tree> {
    t.check(v)?;
    t.check(long_arm)?;
    t.check(short_arm)?;
    if t.degree(v)? < 3 {
        return Err(Error::NotPendentPaths(format!("vertex {v} has degree {}, need at least 3", t.degree(v)?)));
    }
    if long_arm == short_arm {
        return Err(Error::NotPendentPaths("the two arms must be distinct".into()));
    }
    for arm in [long_arm, short_arm] {
        if !t.has_edge(v, arm) {
            return Err(Error::NotPendentPaths(format!("{arm} is not adjacent to {v}")));
        }
    }
    let long = pendent_path(t, v, long_arm)
        .ok_or_else(|| Error::NotPendentPaths(format!("the branch at {long_arm} is not a pendent path")))?;
    let short = pendent_path(t, v, short_arm)
        .ok_or_else(|| Error::NotPendentPaths(format!("the branch at {short_arm} is not a pendent path")))?;
    if short.len() > long.len() {
        return Err(Error::LengthOrderViolated { long: long.len(), short: short.len() });
    }
    let leaf = *short.last().expect("non-empty");
    let leaf_parent = if short.len() >= 2 { short[short.len() - 2] } else { v };
    let long_end = *long.last().expect("non-empty");
    let edges = t
        .edges()
        .iter()
        .copied()
        .filter(|&e| e != (leaf.min(leaf_parent), leaf.max(leaf_parent)))
        .chain(std::iter::once((long_end, leaf)));
    Tree::new(t.order(), edges)
}
