#![allow(dead_code)]

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use tiwiener::formulas::wiener_path;
use tiwiener::transforms::arm_straighten;
use tiwiener::{Error, Tree};

/// Tree with the given Prüfer sequence on `seq.len() + 2` vertices.
pub fn prufer_edges(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let Reverse(leaf) = leaves.pop().unwrap();
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    edges
}

pub fn prufer_tree(n: usize, seq: &[usize]) -> Tree {
    match n {
        1 => Tree::new(1, []).unwrap(),
        2 => Tree::new(2, [(0, 1)]).unwrap(),
        _ => Tree::new(n, prufer_edges(seq)).unwrap(),
    }
}

/// Uniform labeled tree on `n` vertices.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Tree {
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    prufer_tree(n, &seq)
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// All-pairs distances by one BFS per source over a plain adjacency list.
pub fn distance_matrix(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u64>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    (0..n)
        .map(|s| {
            let mut dist = vec![u64::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if dist[w] == u64::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            dist
        })
        .collect()
}

pub fn oracle_transmissions(t: &Tree) -> Vec<i64> {
    distance_matrix(t.order(), t.edges()).iter().map(|row| row.iter().sum::<u64>() as i64).collect()
}

pub fn oracle_wiener(t: &Tree) -> i64 {
    let d = distance_matrix(t.order(), t.edges());
    d.iter().enumerate().map(|(i, row)| row[i + 1..].iter().sum::<u64>() as i64).sum()
}

pub fn binom3(n: usize) -> i64 {
    let n = n as i64;
    n * (n - 1) * (n - 2) / 6
}

/// Attaches a path of `len` new vertices at `v`.
pub fn hang_path(t: &Tree, v: usize, len: usize) -> Tree {
    let n = t.order();
    let mut edges = t.edges().to_vec();
    let mut prev = v;
    for i in 0..len {
        edges.push((prev, n + i));
        prev = n + i;
    }
    Tree::new(n + len, edges).unwrap()
}

pub fn check_identity(t: &Tree) {
    let tr = t.transmissions();
    assert_eq!(tr, oracle_transmissions(t));
    assert_eq!(tr, t.transmissions_bfs());
    let w = oracle_wiener(t);
    assert_eq!(tr.iter().sum::<i64>(), 2 * w);
    assert_eq!(t.wiener(), w);
}

pub fn check_edge_law(t: &Tree) {
    let tr = t.transmissions();
    let n = t.order() as i64;
    let mut split_sum = 0;
    for &(u, v) in t.edges() {
        let nu = t.split_count(u, v).unwrap() as i64;
        let nv = t.split_count(v, u).unwrap() as i64;
        assert_eq!(nu + nv, n);
        assert_eq!(tr[u] - tr[v], nv - nu);
        split_sum += nu * nv;
    }
    assert_eq!(split_sum, t.wiener());
}

pub fn check_path_bound(t: &Tree) {
    let n = t.order();
    let bound = binom3(n + 1);
    let w = t.wiener();
    assert!(w <= bound);
    assert_eq!(w == bound, t.max_degree() <= 2);
    assert_eq!(wiener_path(n).unwrap(), bound);
}

pub fn check_straighten(t: &Tree, v: usize, r: usize) {
    match arm_straighten(t, v, r) {
        Ok(s) => {
            assert!(s.tree.wiener() > t.wiener());
            assert_eq!(s.tree.order(), t.order());
            assert_eq!(s.tree.decompose_at(s.relabel[v].unwrap()).unwrap(), t.decompose_at(v).unwrap());
        }
        Err(Error::BranchIsAlreadyPath { root }) => {
            assert_eq!(root, r);
            let branch = t.component(r, v).unwrap();
            let sub_degrees = branch.iter().map(|&u| t.neighbors(u).filter(|&w| w != v).count());
            assert!(sub_degrees.clone().all(|d| d <= 2));
            assert!(t.neighbors(r).filter(|&w| w != v).count() <= 1);
        }
        Err(e) => panic!("unexpected error {e}"),
    }
}

pub fn check_ti_structure(t: &Tree) {
    let p = t.transmission_profile();
    if !p.is_ti {
        return;
    }
    assert!(t.degree(p.min_vertex).unwrap() >= 3, "min vertex of a TI tree has degree < 3");
    for v in 0..t.order() {
        let sizes = t.decompose_at(v).unwrap();
        assert!(sizes.windows(2).all(|w| w[0] != w[1]), "repeated component size at {v}");
    }
}
