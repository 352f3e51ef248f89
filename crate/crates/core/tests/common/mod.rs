//! Brute-force reference computations. They share no search code with the
//! library: every one enumerates its whole space from a rank table.

#![allow(dead_code)]

use fanforge::{Matroid, MultiGraph, Subset};

pub fn rank_table(m: &Matroid) -> Vec<usize> {
    (0..1u32 << m.len()).map(|x| m.r(Subset(x))).collect()
}

pub fn lambda_table(m: &Matroid) -> Vec<usize> {
    let t = rank_table(m);
    let full = (1usize << m.len()) - 1;
    (0..=full).map(|x| t[x] + t[full ^ x] - t[full]).collect()
}

/// Adjacency lists of the tree with the given Prüfer sequence on `n` nodes.
fn prufer_tree(seq: &[usize], n: usize) -> Vec<Vec<usize>> {
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut adj = vec![Vec::new(); n];
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        adj[leaf].push(s);
        adj[s].push(leaf);
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    adj[rest[0]].push(rest[1]);
    adj[rest[1]].push(rest[0]);
    adj
}

/// Elements (leaf labels `0..n`) on the far side of each neighbour of `v`.
fn parts_at(adj: &[Vec<usize>], n: usize, v: usize) -> Vec<u32> {
    adj[v]
        .iter()
        .map(|&start| {
            let mut seen = vec![false; adj.len()];
            seen[v] = true;
            seen[start] = true;
            let mut stack = vec![start];
            let mut mask = 0u32;
            while let Some(u) = stack.pop() {
                if u < n {
                    mask |= 1 << u;
                }
                for &x in &adj[u] {
                    if !seen[x] {
                        seen[x] = true;
                        stack.push(x);
                    }
                }
            }
            mask
        })
        .collect()
}

fn radius(adj: &[Vec<usize>]) -> usize {
    (0..adj.len())
        .map(|s| {
            let mut dist = vec![usize::MAX; adj.len()];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &x in &adj[u] {
                    if dist[x] == usize::MAX {
                        dist[x] = dist[u] + 1;
                        queue.push_back(x);
                    }
                }
            }
            dist.into_iter().max().unwrap_or(0)
        })
        .min()
        .unwrap_or(0)
}

/// Branch-depth by trying every tree whose leaves are the elements and
/// whose internal nodes are labelled `n..`, via Prüfer sequences over the
/// internal labels. Suppressing a degree-2 node changes no width and no
/// radius upward, so `n - 2` internal nodes suffice (one when `n = 2`);
/// degree-2 nodes are still generated.
pub fn branch_depth_oracle(m: &Matroid) -> usize {
    let n = m.len();
    if n <= 1 {
        return 0;
    }
    let lam = lambda_table(m);
    let mut best = usize::MAX;
    for internal in 1..=(n.max(3) - 2) {
        let total = n + internal;
        let len = total - 2;
        let mut seq = vec![0usize; len];
        loop {
            let labels: Vec<usize> = seq.iter().map(|&s| s + n).collect();
            let every_internal_used = (0..internal).all(|i| seq.contains(&i));
            if every_internal_used {
                let adj = prufer_tree(&labels, total);
                let mut width = 0;
                for v in n..total {
                    let parts = parts_at(&adj, n, v);
                    for pick in 1u32..(1 << parts.len()) {
                        let mut u = 0u32;
                        for (i, p) in parts.iter().enumerate() {
                            if pick >> i & 1 == 1 {
                                u |= p;
                            }
                        }
                        width = width.max(lam[u as usize]);
                    }
                }
                best = best.min(width.max(radius(&adj)));
            }
            // next sequence in base `internal`
            let mut i = 0;
            loop {
                if i == len {
                    break;
                }
                seq[i] += 1;
                if seq[i] < internal {
                    break;
                }
                seq[i] = 0;
                i += 1;
            }
            if i == len {
                break;
            }
        }
    }
    best
}

/// Every unrooted cubic tree with leaves `0..n`, as edge lists, built by
/// inserting each new leaf into every edge of every smaller tree.
pub fn cubic_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    assert!(n >= 2);
    let mut trees = vec![vec![(0usize, 1usize)]];
    let mut next_internal = 1000;
    for leaf in 2..n {
        let mut grown = Vec::new();
        for t in &trees {
            for i in 0..t.len() {
                let (a, b) = t[i];
                let mid = next_internal;
                next_internal += 1;
                let mut e = t.clone();
                e[i] = (a, mid);
                e.push((mid, b));
                e.push((mid, leaf));
                grown.push(e);
            }
        }
        trees = grown;
    }
    trees
}

/// Leaves `0..n` on one side of every edge.
fn edge_sides(edges: &[(usize, usize)], n: usize) -> Vec<u32> {
    edges
        .iter()
        .enumerate()
        .map(|(skip, &(_, b))| {
            let mut seen = std::collections::HashSet::from([b]);
            let mut stack = vec![b];
            let mut mask = 0u32;
            while let Some(u) = stack.pop() {
                if u < n {
                    mask |= 1 << u;
                }
                for (j, &(x, y)) in edges.iter().enumerate() {
                    if j == skip {
                        continue;
                    }
                    let other = if x == u { y } else if y == u { x } else { continue };
                    if seen.insert(other) {
                        stack.push(other);
                    }
                }
            }
            mask
        })
        .collect()
}

fn min_over_trees(n: usize, edge_width: impl Fn(u32) -> usize) -> usize {
    cubic_trees(n)
        .iter()
        .map(|t| edge_sides(t, n).into_iter().map(&edge_width).max().unwrap_or(0))
        .min()
        .expect("at least one tree")
}

/// Matroid branch-width over every cubic tree.
pub fn branch_width_oracle(m: &Matroid) -> usize {
    let n = m.len();
    if n <= 1 {
        return 1;
    }
    let lam = lambda_table(m);
    min_over_trees(n, |a| lam[a as usize] + 1)
}

/// Graph branch-width over every cubic tree.
pub fn graph_branch_width_oracle(g: &MultiGraph) -> usize {
    let n = g.edge_count();
    if n <= 1 {
        return 0;
    }
    let full = (1u32 << n) - 1;
    let verts = |x: u32| {
        let mut v = 0u64;
        for e in 0..n {
            if x >> e & 1 == 1 {
                let (a, b) = g.edge(e);
                v |= 1 << a | 1 << b;
            }
        }
        v
    };
    min_over_trees(n, |a| (verts(a) & verts(full ^ a)).count_ones() as usize)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn apply(perm: &[usize], x: u32) -> u32 {
    perm.iter().enumerate().filter(|(i, _)| x >> i & 1 == 1).fold(0, |acc, (_, &p)| acc | 1 << p)
}

/// Whether `M` has a minor isomorphic to `target`: every delete/contract/keep
/// assignment with the right number of kept elements, compared against every
/// relabelling of `target`'s rank table.
pub fn has_minor_isomorphic_to(m: &Matroid, target: &Matroid) -> bool {
    let n = m.len();
    let k = target.len();
    if k > n {
        return false;
    }
    let t = rank_table(m);
    let want = rank_table(target);
    let perms = permutations(k);
    let relabelled: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            let mut r = vec![0; want.len()];
            for (x, &v) in want.iter().enumerate() {
                r[apply(p, x as u32) as usize] = v;
            }
            r
        })
        .collect();
    for kept in 0u32..1 << n {
        if kept.count_ones() as usize != k {
            continue;
        }
        let rest = (1u32 << n) - 1 - kept;
        let mut contracted = rest;
        loop {
            let rc = t[contracted as usize];
            let positions: Vec<usize> = (0..n).filter(|&e| kept >> e & 1 == 1).collect();
            let minor: Vec<usize> = (0u32..1 << k)
                .map(|y| {
                    let lifted = positions.iter().enumerate().filter(|(i, _)| y >> i & 1 == 1).fold(0u32, |acc, (_, &e)| acc | 1 << e);
                    t[(lifted | contracted) as usize] - rc
                })
                .collect();
            if relabelled.iter().any(|r| *r == minor) {
                return true;
            }
            if contracted == 0 {
                break;
            }
            contracted = (contracted - 1) & rest;
        }
    }
    false
}
