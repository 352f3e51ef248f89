use std::fmt::Write as _;

use crate::matroid::FundamentalGraphView;
use crate::subset::{GroundSet, Subset};

/// The fundamental graph of a twisted matroid, on universe indices with
/// vertex set `E(W)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistGraph {
    adj: Vec<Subset>,
    vertices: Subset,
}

impl TwistGraph {
    pub(crate) fn new(adj: Vec<Subset>, vertices: Subset) -> TwistGraph {
        TwistGraph { adj, vertices }
    }

    pub fn vertices(&self) -> Subset {
        self.vertices
    }

    pub fn neighbours(&self, v: usize) -> Subset {
        self.adj[v] & self.vertices
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbours(u).contains(v)
    }

    /// Neighbours of any vertex of `x`.
    pub fn neighbourhood(&self, x: Subset) -> Subset {
        x.iter().fold(Subset::EMPTY, |acc, v| acc | self.neighbours(v))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in self.vertices {
            for v in self.neighbours(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn reach(&self, v: usize, within: Subset) -> Subset {
        let within = within & self.vertices;
        let mut seen = Subset::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighbourhood(frontier) & within;
            frontier = next - seen;
            seen = seen | next;
        }
        seen
    }

    pub fn components_within(&self, x: Subset) -> Vec<Subset> {
        let mut out = Vec::new();
        let mut left = x & self.vertices;
        while let Some(v) = left.first() {
            let c = self.reach(v, x);
            out.push(c);
            left = left - c;
        }
        out
    }

    pub fn is_connected_within(&self, x: Subset) -> bool {
        match x.first() {
            None => true,
            Some(v) => self.reach(v, x) == x,
        }
    }

    /// BFS distance from `v` to every vertex inside `within`.
    pub fn distances(&self, v: usize, within: Subset) -> Vec<Option<usize>> {
        let mut d = vec![None; self.adj.len()];
        d[v] = Some(0);
        let mut seen = Subset::singleton(v);
        let mut frontier = seen;
        let mut k = 0;
        while !frontier.is_empty() {
            k += 1;
            let next = (self.neighbourhood(frontier) & within) - seen;
            for u in next {
                d[u] = Some(k);
            }
            seen = seen | next;
            frontier = next;
        }
        d
    }

    /// Shortest path from `from` to a vertex of `targets`, staying inside
    /// `within`; ties go to the lowest-index predecessor.
    pub fn shortest_path(&self, from: usize, targets: Subset, within: Subset) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.adj.len()];
        let mut seen = Subset::singleton(from);
        let mut frontier = seen;
        if targets.contains(from) {
            return Some(vec![from]);
        }
        while !frontier.is_empty() {
            let mut next = Subset::EMPTY;
            for u in frontier {
                for v in (self.neighbours(u) & within) - seen - next {
                    parent[v] = u;
                    next = next.with(v);
                }
            }
            if let Some(t) = (next & targets).first() {
                let mut path = vec![t];
                let mut x = t;
                while x != from {
                    x = parent[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            seen = seen | next;
            frontier = next;
        }
        None
    }

    /// Per component, its two colour classes; the first holds the least
    /// element. `None` if some component is not bipartite.
    pub fn colour_classes(&self) -> Option<Vec<(Subset, Subset)>> {
        let mut out = Vec::new();
        for comp in self.components_within(self.vertices) {
            let root = comp.first().unwrap();
            let d = self.distances(root, comp);
            let even: Subset = comp.iter().filter(|&v| d[v].unwrap() % 2 == 0).collect();
            let odd = comp - even;
            if self.edges().iter().any(|&(u, v)| comp.contains(u) && (even.contains(u) == even.contains(v))) {
                return None;
            }
            out.push((even, odd));
        }
        Some(out)
    }

    /// Whether `path` lists distinct vertices inducing exactly a path, in
    /// that order.
    pub fn is_induced_path(&self, path: &[usize]) -> bool {
        let set: Subset = path.iter().copied().collect();
        if set.len() != path.len() || !set.is_subset_of(self.vertices) {
            return false;
        }
        path.iter().enumerate().all(|(i, &v)| {
            let mut want = Subset::EMPTY;
            if i > 0 {
                want = want.with(path[i - 1]);
            }
            if i + 1 < path.len() {
                want = want.with(path[i + 1]);
            }
            self.neighbours(v) & set == want
        })
    }

    /// The graph as a fundamental-graph view over `E(W)` in local indices.
    pub fn view(&self, universe: &GroundSet, base: Subset) -> FundamentalGraphView {
        let v = self.vertices;
        let adjacency = v.iter().map(|x| self.neighbours(x).compress(v)).collect();
        FundamentalGraphView::from_parts(universe.restrict(v), adjacency, (base & v).compress(v))
    }

    pub fn to_dot(&self, universe: &GroundSet, base: Subset) -> String {
        let mut s = String::from("graph twisted {\n");
        for v in self.vertices {
            let shape = if base.contains(v) { "box" } else { "ellipse" };
            let _ = writeln!(s, "  \"{}\" [shape={shape}];", universe.label(v));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  \"{}\" -- \"{}\";", universe.label(u), universe.label(v));
        }
        s.push_str("}\n");
        s
    }
}
