//! Labeled trees and the distance invariants built on them.
//!
//! A [`Tree`] is an immutable, validated tree on the vertex labels
//! `0..order`. Adjacency is kept in compressed rows so that breadth-first
//! passes touch contiguous memory.

use serde::Serialize;

use crate::canon::CanonicalCode;
use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree {
    order: usize,
    /// Normalized `(min, max)` pairs, sorted.
    edges: Vec<(Vertex, Vertex)>,
    offsets: Vec<u32>,
    adjacency: Vec<u32>,
}

impl Tree {
    /// Validates `edges` as a tree on `order` vertices.
    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if order == 0 {
            return Err(Error::NotATree("a tree has at least one vertex".into()));
        }
        if order > u32::MAX as usize {
            return Err(Error::NotATree(format!("order {order} is too large")));
        }
        let mut normalized = Vec::with_capacity(order - 1);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::BadLabel { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::NotATree(format!("self-loop at {u}")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        if normalized.len() != order - 1 {
            return Err(Error::NotATree(format!(
                "{} edges on {} vertices, expected {}",
                normalized.len(),
                order,
                order - 1
            )));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotATree(format!("duplicate edge {}-{}", w[0].0, w[0].1)));
        }
        let mut components = DisjointSets::new(order);
        for &(u, v) in &normalized {
            if !components.union(u, v) {
                return Err(Error::NotATree(format!("edge {u}-{v} closes a cycle")));
            }
        }
        Ok(Self::from_sorted_edges(order, normalized))
    }

    /// Builds a tree from a parent array where `parents[0]` is ignored and
    /// every other vertex `i` has `parents[i] < i`.
    pub(crate) fn from_parents(parents: &[usize]) -> Self {
        let order = parents.len().max(1);
        let mut edges: Vec<_> = (1..parents.len()).map(|i| (parents[i].min(i), parents[i].max(i))).collect();
        edges.sort_unstable();
        Self::from_sorted_edges(order, edges)
    }

    fn from_sorted_edges(order: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut degree = vec![0u32; order + 1];
        for &(u, v) in &edges {
            degree[u + 1] += 1;
            degree[v + 1] += 1;
        }
        for i in 1..=order {
            degree[i] += degree[i - 1];
        }
        let offsets = degree;
        let mut fill = offsets.clone();
        let mut adjacency = vec![0u32; 2 * edges.len()];
        for &(u, v) in &edges {
            adjacency[fill[u] as usize] = v as u32;
            fill[u] += 1;
            adjacency[fill[v] as usize] = u as u32;
            fill[v] += 1;
        }
        // Edges are sorted, so rows come out sorted except for the
        // interleaving of smaller and larger neighbours.
        for v in 0..order {
            adjacency[offsets[v] as usize..offsets[v + 1] as usize].sort_unstable();
        }
        Self { order, edges, offsets, adjacency }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> impl ExactSizeIterator<Item = Vertex> + '_ {
        self.row(v).iter().map(|&w| w as Vertex)
    }

    pub(crate) fn row(&self, v: Vertex) -> &[u32] {
        &self.adjacency[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    pub(crate) fn check(&self, v: Vertex) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::BadLabel { vertex: v, order: self.order })
        }
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order && v < self.order && self.row(u).binary_search(&(v as u32)).is_ok()
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check(v)?;
        Ok(self.row(v).len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.row(v).len()).collect()
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        (0..self.order).filter(|&v| self.row(v).len() == 1).collect()
    }

    /// Vertices of degree at least three.
    pub fn branching_vertices(&self) -> Vec<Vertex> {
        (0..self.order).filter(|&v| self.row(v).len() >= 3).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.row(v).len()).max().unwrap_or(0)
    }

    /// Breadth-first distances from `source`; entry `source` is zero.
    pub fn distances_from(&self, source: Vertex) -> Result<Vec<u64>> {
        self.check(source)?;
        let mut dist = vec![u64::MAX; self.order];
        let mut queue = Vec::with_capacity(self.order);
        self.bfs_into(source, &mut dist, &mut queue);
        Ok(dist)
    }

    fn bfs_into(&self, source: Vertex, dist: &mut [u64], queue: &mut Vec<u32>) {
        dist.fill(u64::MAX);
        dist[source] = 0;
        queue.clear();
        queue.push(source as u32);
        let mut head = 0;
        while let Some(&u) = queue.get(head) {
            head += 1;
            let du = dist[u as usize];
            for &w in self.row(u as usize) {
                if dist[w as usize] == u64::MAX {
                    dist[w as usize] = du + 1;
                    queue.push(w);
                }
            }
        }
    }

    /// Number of vertices closer to `u` than to `v`, for an edge `uv`: the
    /// order of the component of `T - uv` that contains `u`.
    pub fn split_count(&self, u: Vertex, v: Vertex) -> Result<usize> {
        self.check(u)?;
        self.check(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        Ok(self.component_size(u, v))
    }

    /// Size of the component containing `start` once `blocked` is removed.
    fn component_size(&self, start: Vertex, blocked: Vertex) -> usize {
        let mut seen = vec![false; self.order];
        seen[blocked] = true;
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 0;
        while let Some(u) = stack.pop() {
            count += 1;
            for &w in self.row(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w as usize);
                }
            }
        }
        count
    }

    /// Orders of the components of `T - v`, largest first.
    pub fn decompose_at(&self, v: Vertex) -> Result<Vec<usize>> {
        self.check(v)?;
        let mut sizes: Vec<usize> = self.row(v).iter().map(|&w| self.component_size(w as usize, v)).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(sizes)
    }

    /// Vertices of the component of `T - blocked` containing `start`, in
    /// breadth-first order from `start`.
    pub fn component(&self, start: Vertex, blocked: Vertex) -> Result<Vec<Vertex>> {
        self.check(start)?;
        self.check(blocked)?;
        let mut seen = vec![false; self.order];
        seen[blocked] = true;
        seen[start] = true;
        let mut out = vec![start];
        let mut head = 0;
        while head < out.len() {
            let u = out[head];
            head += 1;
            for &w in self.row(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    out.push(w as usize);
                }
            }
        }
        Ok(out)
    }

    /// Transmissions of every vertex in linear time.
    ///
    /// Roots the tree at 0, sums depths for the root, then walks every edge
    /// with `Tr(child) = Tr(parent) + n - 2 * |subtree(child)|`.
    pub fn transmissions(&self) -> Vec<i64> {
        let n = self.order;
        let mut order = Vec::with_capacity(n);
        let mut parent = vec![u32::MAX; n];
        let mut depth = vec![0i64; n];
        order.push(0u32);
        parent[0] = 0;
        let mut head = 0;
        while head < order.len() {
            let u = order[head] as usize;
            head += 1;
            for &w in self.row(u) {
                if parent[w as usize] == u32::MAX {
                    parent[w as usize] = u as u32;
                    depth[w as usize] = depth[u] + 1;
                    order.push(w);
                }
            }
        }
        let mut size = vec![1i64; n];
        for &u in order.iter().skip(1).rev() {
            size[parent[u as usize] as usize] += size[u as usize];
        }
        let mut tr = vec![0i64; n];
        tr[0] = depth.iter().sum();
        for &u in order.iter().skip(1) {
            let u = u as usize;
            tr[u] = tr[parent[u] as usize] + n as i64 - 2 * size[u];
        }
        tr
    }

    /// Transmissions by one breadth-first search per vertex.
    pub fn transmissions_bfs(&self) -> Vec<i64> {
        let mut dist = vec![0u64; self.order];
        let mut queue = Vec::with_capacity(self.order);
        (0..self.order)
            .map(|v| {
                self.bfs_into(v, &mut dist, &mut queue);
                dist.iter().sum::<u64>() as i64
            })
            .collect()
    }

    /// Sum of distances over unordered pairs, one BFS per vertex.
    pub fn wiener_pairwise(&self) -> i64 {
        let mut dist = vec![0u64; self.order];
        let mut queue = Vec::with_capacity(self.order);
        let mut total = 0u64;
        for u in 0..self.order {
            self.bfs_into(u, &mut dist, &mut queue);
            total += dist[u + 1..].iter().sum::<u64>();
        }
        total as i64
    }

    pub fn transmission_profile(&self) -> TransmissionProfile {
        TransmissionProfile::from_transmissions(self.transmissions())
    }

    pub fn wiener(&self) -> i64 {
        self.transmission_profile().wiener
    }

    pub fn is_ti(&self) -> bool {
        self.transmission_profile().is_ti
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        CanonicalCode::of(self)
    }

    pub fn is_isomorphic(&self, other: &Tree) -> bool {
        self.order == other.order && self.canonical_code() == other.canonical_code()
    }

    /// Applies `labels[old] = new` to every vertex.
    pub fn relabeled(&self, labels: &[Vertex]) -> Result<Tree> {
        if labels.len() != self.order {
            return Err(Error::PreconditionFailed(format!(
                "relabeling has {} entries for order {}",
                labels.len(),
                self.order
            )));
        }
        Tree::new(self.order, self.edges.iter().map(|&(u, v)| (labels[u], labels[v])))
    }
}

/// Per-vertex transmissions and their aggregates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransmissionProfile {
    pub tr: Vec<i64>,
    pub wiener: i64,
    pub is_ti: bool,
    pub min_vertex: Vertex,
}

impl TransmissionProfile {
    pub fn from_transmissions(tr: Vec<i64>) -> Self {
        let total: i64 = tr.iter().sum();
        debug_assert!(total % 2 == 0, "transmission sum must be even");
        let min_vertex = tr.iter().enumerate().min_by_key(|&(v, &t)| (t, v)).map(|(v, _)| v).unwrap_or(0);
        let is_ti = tr.len() > 1 && {
            let mut sorted = tr.clone();
            sorted.sort_unstable();
            sorted.windows(2).all(|w| w[0] != w[1])
        };
        Self { wiener: total / 2, tr, is_ti, min_vertex }
    }

    /// Profile from one BFS per vertex; the pairwise Wiener sum is computed
    /// separately and must equal half the transmission sum.
    pub fn by_bfs(tree: &Tree) -> Result<Self> {
        let profile = Self::from_transmissions(tree.transmissions_bfs());
        let pairwise = tree.wiener_pairwise();
        if pairwise != profile.wiener {
            return Err(Error::CertificateMismatch(format!(
                "pairwise Wiener {pairwise} differs from half the transmission sum {}",
                profile.wiener
            )));
        }
        Ok(profile)
    }

    /// Transmissions minus the transmission of `base`, sorted.
    pub fn offsets_from(&self, base: Vertex) -> Vec<i64> {
        let beta = self.tr[base];
        let mut out: Vec<i64> = self.tr.iter().map(|t| t - beta).collect();
        out.sort_unstable();
        out
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// The path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Tree> {
    Tree::new(n, (1..n).map(|i| (i - 1, i)))
}

/// The star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Result<Tree> {
    Tree::new(leaves + 1, (1..=leaves).map(|i| (0, i)))
}
