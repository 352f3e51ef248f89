//! Multigraphs with loops and parallel edges. Edge `i` is element `i` of any
//! matroid built on the graph.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<MultiGraph> {
        if vertices > 64 {
            return Err(Error::Capacity {
                what: "graph vertex set",
                size: vertices,
                limit: 64,
            });
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= vertices || v >= vertices {
                return Err(Error::domain(format!(
                    "edge {i} = ({u},{v}) uses a vertex outside 0..{vertices}"
                )));
            }
        }
        Ok(MultiGraph { vertices, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn all_edges(&self) -> Subset {
        Subset::full(self.edges.len())
    }

    pub fn is_loop(&self, i: usize) -> bool {
        let (u, v) = self.edges[i];
        u == v
    }

    /// Vertices incident with an edge of `x`, as a bitmask over vertices.
    pub fn vertices_of(&self, x: Subset) -> u64 {
        x.iter().fold(0u64, |m, i| {
            let (u, v) = self.edges[i];
            m | (1 << u) | (1 << v)
        })
    }

    /// Degree of each vertex in the subgraph with edge set `x` (loops count 2).
    pub fn degrees(&self, x: Subset) -> Vec<usize> {
        let mut d = vec![0; self.vertices];
        for i in x {
            let (u, v) = self.edges[i];
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Connected components of the subgraph `(V(x), x)`, each as an edge set.
    pub fn edge_components(&self, x: Subset) -> Vec<Subset> {
        let mut uf = UnionFind::new(self.vertices);
        for i in x {
            let (u, v) = self.edges[i];
            uf.union(u, v);
        }
        let mut comps: Vec<(usize, Subset)> = Vec::new();
        for i in x {
            let root = uf.find(self.edges[i].0);
            match comps.iter_mut().find(|(r, _)| *r == root) {
                Some((_, s)) => *s = s.with(i),
                None => comps.push((root, Subset::singleton(i))),
            }
        }
        comps.into_iter().map(|(_, s)| s).collect()
    }

    /// Number of connected components of `(V(x), x)`.
    pub fn component_count(&self, x: Subset) -> usize {
        self.edge_components(x).len()
    }

    /// Cycle-matroid rank: |V(x)| minus the number of components of `(V(x), x)`.
    pub fn forest_rank(&self, x: Subset) -> usize {
        let mut uf = UnionFind::new(self.vertices);
        x.iter()
            .filter(|&i| {
                let (u, v) = self.edges[i];
                uf.union(u, v)
            })
            .count()
    }

    /// Whether the whole graph (including isolated vertices) is connected.
    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return true;
        }
        let mut uf = UnionFind::new(self.vertices);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        let r = uf.find(0);
        (0..self.vertices).all(|v| uf.find(v) == r)
    }

    /// Whether some cycle of the graph has at least two edges.
    pub fn has_cycle_of_length_at_least_two(&self) -> bool {
        let non_loops: Subset = (0..self.edges.len()).filter(|&i| !self.is_loop(i)).collect();
        self.forest_rank(non_loops) < non_loops.len()
    }

    /// The fan: hub `0`, rim path `1..=n`. Edges are the spokes
    /// `s_1..s_n` followed by the rim edges `p_1..p_{n-1}` (`p_i` joins
    /// rim vertices `i` and `i+1`).
    pub fn fan(n: usize) -> MultiGraph {
        let mut edges: Vec<(usize, usize)> = (1..=n).map(|i| (0, i)).collect();
        edges.extend((1..n).map(|i| (i, i + 1)));
        MultiGraph {
            vertices: n + 1,
            edges,
        }
    }

    /// The path `0..n-1` with a loop at every vertex. Edge order interleaves
    /// loops and path edges: `l_0, e_0, l_1, e_1, .., l_{n-1}`.
    pub fn looped_path(n: usize) -> MultiGraph {
        let mut edges = Vec::with_capacity(2 * n);
        for v in 0..n {
            edges.push((v, v));
            if v + 1 < n {
                edges.push((v, v + 1));
            }
        }
        MultiGraph { vertices: n, edges }
    }

    pub fn complete(n: usize) -> MultiGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        MultiGraph { vertices: n, edges }
    }

    pub fn path(n: usize) -> MultiGraph {
        MultiGraph {
            vertices: n,
            edges: (1..n).map(|i| (i - 1, i)).collect(),
        }
    }

    pub fn cycle(n: usize) -> MultiGraph {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        MultiGraph { vertices: n, edges }
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when `a` and `b` were in different classes.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fan_has_2n_minus_1_edges() {
        let g = MultiGraph::fan(7);
        assert_eq!(g.edge_count(), 13);
        assert_eq!(g.forest_rank(g.all_edges()), 7);
    }

    #[test]
    fn loops_have_rank_zero() {
        let g = MultiGraph::new(2, vec![(0, 0), (0, 1), (0, 1)]).unwrap();
        assert_eq!(g.forest_rank(g.all_edges()), 1);
        assert!(g.has_cycle_of_length_at_least_two());
        assert_eq!(g.degrees(Subset::singleton(0)), vec![2, 0]);
    }

    #[test]
    fn bad_endpoint_rejected() {
        assert!(MultiGraph::new(2, vec![(0, 2)]).is_err());
    }
}
