//! Free trees of a fixed order, one per isomorphism class.
//!
//! Trees are produced as level sequences of a canonical rooting, using the
//! successor rule for rooted trees and a validity test that keeps only
//! sequences rooted at a center with the tallest subtree last. Invalid
//! sequences are skipped by jumping straight to the next candidate.

use crate::error::{Error, Result};
use crate::graph::Tree;

/// Environment variable that overrides [`DEFAULT_MAX_ORDER`].
pub const MAX_ORDER_ENV: &str = "TIWIENER_MAX_ORDER";
pub const DEFAULT_MAX_ORDER: usize = 32;
/// Level sequences are stored as bytes.
const HARD_LIMIT: usize = 255;

/// The largest order the enumerator accepts.
pub fn max_order() -> usize {
    std::env::var(MAX_ORDER_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .map(|n| n.min(HARD_LIMIT))
        .unwrap_or(DEFAULT_MAX_ORDER)
}

pub(crate) fn check_order(n: usize) -> Result<()> {
    let cap = max_order();
    if n > cap {
        return Err(Error::CapExceeded { order: n, cap });
    }
    if n == 0 {
        return Err(Error::PreconditionFailed("order must be at least 1".into()));
    }
    Ok(())
}

/// Streams level sequences; `levels[i]` is the depth of vertex `i` in a
/// preorder walk from the root.
#[derive(Clone, Debug)]
pub struct LevelSequences {
    levels: Vec<u8>,
    started: bool,
    done: bool,
}

impl LevelSequences {
    pub fn new(n: usize) -> Result<Self> {
        check_order(n)?;
        let levels = if n == 1 { vec![0] } else { (0..=n / 2).chain(1..n.div_ceil(2)).map(|x| x as u8).collect() };
        Ok(Self { levels, started: false, done: false })
    }

    pub fn order(&self) -> usize {
        self.levels.len()
    }

    /// The next level sequence, or `None` once exhausted.
    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Option<&[u8]> {
        if self.done {
            return None;
        }
        if self.started && (self.levels.len() == 1 || !next_rooted(&mut self.levels, None)) {
            self.done = true;
            return None;
        }
        self.started = true;
        if self.levels.len() > 1 {
            next_free(&mut self.levels);
        }
        Some(&self.levels)
    }
}

/// Successor in the rooted-tree order. Returns `false` past the last tree.
fn next_rooted(levels: &mut [u8], p: Option<usize>) -> bool {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = levels.len() - 1;
            while levels[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return false;
    }
    let mut q = p - 1;
    while levels[q] != levels[p] - 1 {
        q -= 1;
    }
    for i in p..levels.len() {
        levels[i] = levels[i - p + q];
    }
    true
}

/// Splits at the second child of the root; returns that child's index `m`
/// (or `n`). The left subtree is `levels[1..m]`, the rest is the root plus
/// `levels[m..]`.
fn split(levels: &[u8]) -> usize {
    levels[2..].iter().position(|&l| l == 1).map_or(levels.len(), |i| i + 2)
}

/// Leaves a valid sequence alone, otherwise jumps to the next candidate.
fn next_free(levels: &mut [u8]) {
    let n = levels.len();
    let m = split(levels);
    let left_height = levels[1..m].iter().max().copied().unwrap_or(1) - 1;
    let rest_height = levels[m..].iter().max().copied().unwrap_or(0);
    let (left_len, rest_len) = (m - 1, n - m + 1);
    let mut valid = rest_height >= left_height;
    if valid && rest_height == left_height {
        if left_len > rest_len {
            valid = false;
        } else if left_len == rest_len {
            // rest is [0] followed by levels[m..]
            let left = levels[1..m].iter().map(|&l| l - 1);
            let rest = std::iter::once(0).chain(levels[m..].iter().copied());
            valid = left.le(rest);
        }
    }
    if valid {
        return;
    }
    let p = left_len;
    let old = levels[p];
    next_rooted(levels, Some(p));
    if old > 2 {
        let m = split(levels);
        let new_left_height = (levels[1..m].iter().max().copied().unwrap_or(1) - 1) as usize;
        let len = new_left_height + 1;
        for (slot, value) in levels[n - len..].iter_mut().zip(1u8..) {
            *slot = value;
        }
    }
}

/// Parent of each vertex of a level sequence; `parents[0] = 0`.
pub fn parents_of(levels: &[u8], parents: &mut Vec<usize>) {
    parents.clear();
    let mut last_at = [0usize; HARD_LIMIT + 1];
    for (i, &l) in levels.iter().enumerate() {
        parents.push(if l == 0 { 0 } else { last_at[l as usize - 1] });
        last_at[l as usize] = i;
    }
}

pub fn tree_from_levels(levels: &[u8]) -> Tree {
    let mut parents = Vec::with_capacity(levels.len());
    parents_of(levels, &mut parents);
    Tree::from_parents(&parents)
}

/// Every free tree of order `n`, in generation order.
pub struct FreeTrees {
    seq: LevelSequences,
    index: u64,
    shard: u64,
    shard_count: u64,
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        loop {
            let levels = self.seq.next()?;
            let i = self.index;
            self.index += 1;
            if i % self.shard_count == self.shard {
                return Some(tree_from_levels(levels));
            }
        }
    }
}

pub fn enumerate_trees(n: usize) -> Result<FreeTrees> {
    Ok(FreeTrees { seq: LevelSequences::new(n)?, index: 0, shard: 0, shard_count: 1 })
}

/// Splits the stream into `shard_count` interleaved parts: shard `s` takes
/// the trees whose position in the full stream is `s` modulo the count.
pub fn enumerate_shards(n: usize, shard_count: usize) -> Result<Vec<FreeTrees>> {
    if shard_count == 0 {
        return Err(Error::PreconditionFailed("shard count must be at least 1".into()));
    }
    (0..shard_count)
        .map(|s| {
            Ok(FreeTrees { seq: LevelSequences::new(n)?, index: 0, shard: s as u64, shard_count: shard_count as u64 })
        })
        .collect()
}

/// Number of free trees of order `n`, by enumeration.
pub fn count_trees(n: usize) -> Result<u64> {
    let mut seq = LevelSequences::new(n)?;
    let mut count = 0;
    while seq.next().is_some() {
        count += 1;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_counts() {
        let counts: Vec<u64> = (1..=12).map(|n| count_trees(n).unwrap()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
    }

    #[test]
    fn trees_are_pairwise_non_isomorphic() {
        for n in 1..=11 {
            let codes: HashSet<_> = enumerate_trees(n).unwrap().map(|t| t.canonical_code()).collect();
            assert_eq!(codes.len() as u64, count_trees(n).unwrap());
        }
    }

    #[test]
    fn shards_partition() {
        let shards = enumerate_shards(10, 4).unwrap();
        let mut codes = HashSet::new();
        let mut total = 0;
        for shard in shards {
            for t in shard {
                total += 1;
                codes.insert(t.canonical_code());
            }
        }
        assert_eq!((total, codes.len()), (106, 106));
        let sizes: Vec<usize> = enumerate_shards(2, 8).unwrap().into_iter().map(Iterator::count).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 1);
        assert!(sizes.contains(&0));
    }

    #[test]
    fn cap() {
        assert_eq!(LevelSequences::new(33).err(), Some(Error::CapExceeded { order: 33, cap: 32 }));
    }
}
