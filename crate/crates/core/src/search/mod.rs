//! Exhaustive search over free trees for TI trees of maximum Wiener index.

mod enumerate;

pub use enumerate::{
    count_trees, enumerate_shards, enumerate_trees, max_order, parents_of, tree_from_levels, FreeTrees, LevelSequences,
    DEFAULT_MAX_ORDER, MAX_ORDER_ENV,
};

use std::fmt;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::canon::CanonicalCode;
use crate::error::{Error, Result};
use crate::extremal::{extremal, Verdict};
use crate::graph::Tree;
use crate::io::encode_sparse6;

/// Transmissions of a level-sequence tree by rerooting, stopping at the
/// first repeated value.
struct Scanner {
    parents: Vec<usize>,
    size: Vec<i64>,
    tr: Vec<i64>,
    stamp: Vec<u32>,
    generation: u32,
}

impl Scanner {
    fn new(n: usize) -> Self {
        Self {
            parents: Vec::with_capacity(n),
            size: vec![0; n],
            tr: vec![0; n],
            stamp: vec![0; n * n / 2 + 2],
            generation: 0,
        }
    }

    /// The Wiener index if the tree is TI.
    fn ti_wiener(&mut self, levels: &[u8]) -> Option<i64> {
        let n = levels.len();
        if n < 2 {
            return None;
        }
        parents_of(levels, &mut self.parents);
        self.size.fill(1);
        for i in (1..n).rev() {
            self.size[self.parents[i]] += self.size[i];
        }
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.fill(0);
            self.generation = 1;
        }
        let g = self.generation;
        let root: i64 = levels.iter().map(|&l| l as i64).sum();
        self.tr[0] = root;
        self.stamp[root as usize] = g;
        let mut total = root;
        for i in 1..n {
            let t = self.tr[self.parents[i]] + n as i64 - 2 * self.size[i];
            let slot = &mut self.stamp[t as usize];
            if *slot == g {
                return None;
            }
            *slot = g;
            self.tr[i] = t;
            total += t;
        }
        Some(total / 2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Maximizer {
    pub code: CanonicalCode,
    pub sparse6: String,
}

impl Maximizer {
    fn new(code: CanonicalCode) -> Self {
        let sparse6 = encode_sparse6(&code.to_tree());
        Self { code, sparse6 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub order: usize,
    pub total_trees: u64,
    pub ti_trees: u64,
    pub max_wiener: Option<i64>,
    /// Sorted by canonical code.
    pub maximizers: Vec<Maximizer>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SearchReport {
    fn empty(order: usize) -> Self {
        Self { order, total_trees: 0, ti_trees: 0, max_wiener: None, maximizers: Vec::new(), elapsed: Duration::ZERO }
    }

    /// Combines reports from disjoint parts of the same enumeration.
    pub fn merge(mut self, other: SearchReport) -> Result<SearchReport> {
        if self.order != other.order {
            return Err(Error::PreconditionFailed(format!(
                "cannot merge reports for orders {} and {}",
                self.order, other.order
            )));
        }
        self.total_trees += other.total_trees;
        self.ti_trees += other.ti_trees;
        self.elapsed = self.elapsed.max(other.elapsed);
        match self.max_wiener.cmp(&other.max_wiener) {
            std::cmp::Ordering::Less => {
                self.max_wiener = other.max_wiener;
                self.maximizers = other.maximizers;
            }
            std::cmp::Ordering::Equal => {
                self.maximizers.extend(other.maximizers);
                self.maximizers.sort_unstable();
                self.maximizers.dedup();
            }
            std::cmp::Ordering::Greater => {}
        }
        Ok(self)
    }

    /// The unique maximizer, if there is exactly one.
    pub fn unique_maximizer(&self) -> Option<&Maximizer> {
        match self.maximizers.as_slice() {
            [m] => Some(m),
            _ => None,
        }
    }
}

/// Searches shard `shard` of `shard_count` at order `n`.
pub fn search_shard(n: usize, shard: usize, shard_count: usize) -> Result<SearchReport> {
    if shard_count == 0 || shard >= shard_count {
        return Err(Error::PreconditionFailed(format!("shard {shard} of {shard_count} does not exist")));
    }
    let start = Instant::now();
    let mut seq = LevelSequences::new(n)?;
    let mut scanner = Scanner::new(n);
    let mut report = SearchReport::empty(n);
    let mut codes: Vec<CanonicalCode> = Vec::new();
    let (shard, shard_count) = (shard as u64, shard_count as u64);
    let mut index = 0u64;
    while let Some(levels) = seq.next() {
        let mine = index % shard_count == shard;
        index += 1;
        if !mine {
            continue;
        }
        report.total_trees += 1;
        let Some(w) = scanner.ti_wiener(levels) else { continue };
        report.ti_trees += 1;
        if report.max_wiener.is_none_or(|m| w > m) {
            report.max_wiener = Some(w);
            codes.clear();
        }
        if report.max_wiener == Some(w) {
            codes.push(tree_from_levels(levels).canonical_code());
        }
    }
    codes.sort_unstable();
    codes.dedup();
    report.maximizers = codes.into_iter().map(Maximizer::new).collect();
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Full search at order `n`.
pub fn search_max_ti(n: usize) -> Result<SearchReport> {
    search_shard(n, 0, 1)
}

/// Runs every shard on its own thread and merges the results. The report
/// does not depend on `shards`.
pub fn search_max_ti_sharded(n: usize, shards: usize) -> Result<SearchReport> {
    if shards <= 1 {
        return search_max_ti(n);
    }
    enumerate::check_order(n)?;
    let start = Instant::now();
    let parts: Vec<Result<SearchReport>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..shards).map(|s| scope.spawn(move || search_shard(n, s, shards))).collect();
        handles.into_iter().map(|h| h.join().expect("search shard panicked")).collect()
    });
    let mut merged = SearchReport::empty(n);
    for part in parts {
        merged = merged.merge(part?)?;
    }
    merged.elapsed = start.elapsed();
    Ok(merged)
}

/// Calls `f` on every TI tree of order `n`, in enumeration order.
pub fn for_each_ti_tree(n: usize, mut f: impl FnMut(Tree)) -> Result<()> {
    let mut seq = LevelSequences::new(n)?;
    let mut scanner = Scanner::new(n);
    while let Some(levels) = seq.next() {
        if scanner.ti_wiener(levels).is_some() {
            f(tree_from_levels(levels));
        }
    }
    Ok(())
}

pub fn collect_ti_trees(n: usize) -> Result<Vec<Tree>> {
    let mut out = Vec::new();
    for_each_ti_tree(n, |t| out.push(t))?;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub order: usize,
    pub verdict: Verdict,
    /// The dispatcher's tree, if any.
    pub expected: Option<String>,
    pub expected_wiener: Option<i64>,
    pub total_trees: u64,
    pub ti_trees: u64,
    pub max_wiener: Option<i64>,
    pub maximizers: usize,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyTable {
    pub rows: Vec<VerifyRow>,
    pub all_passed: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerifyTable {
    /// Turns the first failing row into an error.
    pub fn ensure_passed(&self) -> Result<()> {
        match self.rows.iter().find(|r| !r.passed) {
            Some(r) => Err(Error::VerificationFailed { order: r.order, detail: r.detail.clone() }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for VerifyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>3}  {:>10}  {:>5}  {:>8}  {:<24}  result", "n", "trees", "TI", "max W", "expected")?;
        for r in &self.rows {
            let w = r.max_wiener.map(|w| w.to_string()).unwrap_or_else(|| "-".into());
            let expected = r.expected.clone().unwrap_or_else(|| "none".into());
            let result = if r.passed { "ok".to_string() } else { format!("FAIL: {}", r.detail) };
            writeln!(
                f,
                "{:>3}  {:>10}  {:>5}  {:>8}  {:<24}  {result}",
                r.order, r.total_trees, r.ti_trees, w, expected
            )?;
        }
        write!(f, "{}", if self.all_passed { "all orders passed" } else { "verification FAILED" })
    }
}

fn verify_order(n: usize, shards: usize) -> Result<VerifyRow> {
    let report = search_max_ti_sharded(n, shards)?;
    let outcome = extremal(n)?;
    let expected_code = outcome.tree().map(|t| t.canonical_code());
    let (passed, detail) = match outcome.verdict {
        Verdict::NoTiTree if report.ti_trees == 0 => (true, "no TI tree".to_string()),
        Verdict::NoTiTree => (false, format!("expected no TI tree, found {}", report.ti_trees)),
        Verdict::Solved => match report.unique_maximizer() {
            None => (false, format!("expected a unique maximizer, found {}", report.maximizers.len())),
            Some(m) if Some(&m.code) != expected_code.as_ref() => {
                (false, format!("maximizer {} is not isomorphic to the predicted tree", m.sparse6))
            }
            Some(_) if report.max_wiener != outcome.predicted_wiener => {
                (false, format!("max W {:?} differs from predicted {:?}", report.max_wiener, outcome.predicted_wiener))
            }
            Some(_) => (true, "unique maximizer matches".to_string()),
        },
        Verdict::Unresolved => (true, format!("open order; {} maximizer(s) found", report.maximizers.len())),
    };
    Ok(VerifyRow {
        order: n,
        verdict: outcome.verdict,
        expected: outcome.spec.as_ref().map(ToString::to_string),
        expected_wiener: outcome.predicted_wiener,
        total_trees: report.total_trees,
        ti_trees: report.ti_trees,
        max_wiener: report.max_wiener,
        maximizers: report.maximizers.len(),
        passed,
        detail,
    })
}

/// Exhaustive check of the dispatcher against brute force on every order
/// in `orders`.
pub fn verify_range(orders: RangeInclusive<usize>, shards: usize) -> Result<VerifyTable> {
    let start = Instant::now();
    let rows = orders.map(|n| verify_order(n, shards)).collect::<Result<Vec<_>>>()?;
    let all_passed = rows.iter().all(|r| r.passed);
    Ok(VerifyTable { rows, all_passed, elapsed: start.elapsed() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    #[test]
    fn order_7() {
        let r = search_max_ti(7).unwrap();
        assert_eq!((r.total_trees, r.ti_trees, r.max_wiener), (11, 1, Some(50)));
        let expected = FamilySpec::starlike([3, 2, 1]).build().unwrap().tree.canonical_code();
        assert_eq!(r.unique_maximizer().unwrap().code, expected);
    }

    #[test]
    fn order_10_has_none() {
        let r = search_max_ti(10).unwrap();
        assert_eq!((r.total_trees, r.ti_trees, r.max_wiener), (106, 0, None));
        assert!(r.maximizers.is_empty());
    }

    #[test]
    fn order_11() {
        let r = search_max_ti(11).unwrap();
        let expected = FamilySpec::caterpillar(9, [5, 7]).build().unwrap().tree.canonical_code();
        assert_eq!(r.unique_maximizer().unwrap().code, expected);
        assert_eq!(r.max_wiener, Some(186));
    }

    #[test]
    fn sharding_is_invisible() {
        for n in [9, 13, 14] {
            let mut whole = search_max_ti(n).unwrap();
            let mut split = search_max_ti_sharded(n, 3).unwrap();
            whole.elapsed = Duration::ZERO;
            split.elapsed = Duration::ZERO;
            assert_eq!(whole, split);
        }
    }

    #[test]
    fn scanner_agrees_with_profile() {
        let mut seq = LevelSequences::new(9).unwrap();
        let mut scanner = Scanner::new(9);
        while let Some(levels) = seq.next() {
            let p = tree_from_levels(levels).transmission_profile();
            assert_eq!(scanner.ti_wiener(levels), p.is_ti.then_some(p.wiener));
        }
    }

    #[test]
    fn small_table() {
        let table = verify_range(1..=14, 1).unwrap();
        assert!(table.all_passed, "{table}");
        table.ensure_passed().unwrap();
    }
}
