use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::subset::{GroundSet, Subset};

use super::Matroid;

impl Matroid {
    fn require_base(&self, b: Subset) -> Result<()> {
        self.ground.check(b)?;
        if !self.is_base(b) {
            return Err(Error::pre(format!("{b:?} is not a base")));
        }
        Ok(())
    }

    /// `C(e, B)`, the circuit inside `B ∪ {e}`.
    pub fn fundamental_circuit(&self, e: usize, b: Subset) -> Result<Subset> {
        if e >= self.len() {
            return Err(Error::domain(format!("element {e} is not in the ground set")));
        }
        self.require_base(b)?;
        if b.contains(e) {
            return Err(Error::pre(format!("element {} lies in the base", self.ground.label(e))));
        }
        Ok(self.fcirc(e, b))
    }

    pub(crate) fn fcirc(&self, e: usize, b: Subset) -> Subset {
        let r = b.len();
        let mut c = Subset::singleton(e);
        for x in b {
            if self.r(b.without(x).with(e)) == r {
                c = c.with(x);
            }
        }
        c
    }

    /// `G(M, B)`.
    pub fn fundamental_graph(&self, b: Subset) -> Result<FundamentalGraphView> {
        self.require_base(b)?;
        Ok(self.fgraph(b))
    }

    pub(crate) fn fgraph(&self, b: Subset) -> FundamentalGraphView {
        let mut adj = vec![Subset::EMPTY; self.len()];
        for e in self.full() - b {
            let c = self.fcirc(e, b).without(e);
            adj[e] = c;
            for x in c {
                adj[x] = adj[x].with(e);
            }
        }
        FundamentalGraphView {
            ground: self.ground.clone(),
            adjacency: adj,
            base: b,
        }
    }

    /// The components, ordered by least element. The empty matroid has the
    /// single component `∅`.
    pub fn components(&self) -> Vec<Subset> {
        if self.is_empty() {
            return vec![Subset::EMPTY];
        }
        self.fgraph(self.some_base()).components_within(self.full())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }
}

/// Bipartite fundamental graph of a matroid with respect to a base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalGraphView {
    ground: GroundSet,
    adjacency: Vec<Subset>,
    base: Subset,
}

impl FundamentalGraphView {
    /// Build from an adjacency list; symmetry and bipartiteness with respect
    /// to `base` are checked.
    pub fn new(ground: GroundSet, adjacency: Vec<Subset>, base: Subset) -> Result<FundamentalGraphView> {
        if adjacency.len() != ground.len() {
            return Err(Error::domain("adjacency length differs from ground set size"));
        }
        ground.check(base)?;
        for (v, &nv) in adjacency.iter().enumerate() {
            ground.check(nv)?;
            if nv.contains(v) {
                return Err(Error::domain(format!("self-loop at {}", ground.label(v))));
            }
            for u in nv {
                if !adjacency[u].contains(v) {
                    return Err(Error::domain("adjacency is not symmetric"));
                }
                if base.contains(u) == base.contains(v) {
                    return Err(Error::domain(format!(
                        "edge {}-{} joins two vertices of the same class",
                        ground.label(u),
                        ground.label(v)
                    )));
                }
            }
        }
        Ok(FundamentalGraphView {
            ground,
            adjacency,
            base,
        })
    }

    /// Trusted constructor; no symmetry or bipartiteness check.
    pub(crate) fn from_parts(ground: GroundSet, adjacency: Vec<Subset>, base: Subset) -> Self {
        FundamentalGraphView {
            ground,
            adjacency,
            base,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn vertices(&self) -> Subset {
        Subset::full(self.len())
    }

    /// The colour class `B`.
    pub fn base(&self) -> Subset {
        self.base
    }

    pub fn adjacency(&self) -> &[Subset] {
        &self.adjacency
    }

    pub fn neighbours(&self, v: usize) -> Subset {
        self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.len() {
            for v in self.adjacency[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    /// Connected components of the induced subgraph on `x`, by least element.
    pub fn components_within(&self, x: Subset) -> Vec<Subset> {
        let mut out = Vec::new();
        let mut left = x;
        while let Some(v) = left.first() {
            let c = self.reach(v, x);
            out.push(c);
            left = left - c;
        }
        out
    }

    /// Vertices reachable from `v` inside `x` (including `v`).
    pub fn reach(&self, v: usize, x: Subset) -> Subset {
        let mut seen = Subset::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = Subset::EMPTY;
            for u in frontier {
                next = next | (self.adjacency[u] & x);
            }
            frontier = next - seen;
            seen = seen | next;
        }
        seen
    }

    pub fn is_connected_within(&self, x: Subset) -> bool {
        x.is_empty() || self.reach(x.first().unwrap(), x) == x
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    pub fn is_forest(&self) -> bool {
        let comps = self.components_within(self.vertices()).len();
        self.edge_count() + comps == self.len()
    }

    /// BFS distances from `v` within `x`; `usize::MAX` if unreachable.
    pub fn distances(&self, v: usize, x: Subset) -> Vec<usize> {
        let mut d = vec![usize::MAX; self.len()];
        d[v] = 0;
        let mut frontier = Subset::singleton(v);
        let mut seen = frontier;
        let mut k = 0;
        while !frontier.is_empty() {
            k += 1;
            let mut next = Subset::EMPTY;
            for u in frontier {
                next = next | (self.adjacency[u] & x);
            }
            next = next - seen;
            for u in next {
                d[u] = k;
            }
            seen = seen | next;
            frontier = next;
        }
        d
    }

    /// Induced subgraph on `x`, renumbered in increasing index order.
    pub fn induced(&self, x: Subset) -> FundamentalGraphView {
        let adjacency = x
            .iter()
            .map(|v| (self.adjacency[v] & x).compress(x))
            .collect();
        FundamentalGraphView {
            ground: self.ground.restrict(x),
            adjacency,
            base: (self.base & x).compress(x),
        }
    }

    /// The same edges with the other colour class marked as the base.
    pub fn swap_classes(&self) -> FundamentalGraphView {
        FundamentalGraphView {
            ground: self.ground.clone(),
            adjacency: self.adjacency.clone(),
            base: self.vertices() - self.base,
        }
    }

    /// DOT source; base vertices are boxes in one rank, the rest ellipses.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph fundamental {\n");
        s.push_str("  { rank=same;");
        for v in self.base {
            let _ = write!(s, " \"{}\";", self.ground.label(v));
        }
        s.push_str(" }\n");
        for v in 0..self.len() {
            let shape = if self.base.contains(v) { "box" } else { "ellipse" };
            let _ = writeln!(s, "  \"{}\" [shape={shape}];", self.ground.label(v));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  \"{}\" -- \"{}\";", self.ground.label(u), self.ground.label(v));
        }
        s.push_str("}\n");
        s
    }
}

/// Both sides of the two connectivity bounds for a minor `N` of `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorBounds {
    /// `λ_M(X ∩ E(N))`.
    pub first_lhs: usize,
    /// `λ_M(E(N)) + λ_N(X ∩ E(N))`.
    pub first_rhs: usize,
    /// `λ_M(X)`.
    pub second_lhs: usize,
    /// `λ_N(X ∩ E(N)) + |E(M) \ E(N)|`.
    pub second_rhs: usize,
}

impl MinorBounds {
    pub fn holds(&self) -> (bool, bool) {
        (self.first_lhs <= self.first_rhs, self.second_lhs <= self.second_rhs)
    }
}

/// Evaluate `λ_M(X) ≤ λ_M(E(N)) + λ_N(X)` (on `X ∩ E(N)`) and
/// `λ_M(X) ≤ λ_N(X ∩ E(N)) + |E(M) \ E(N)|`.
///
/// `n` must be a minor view whose flattened parent has the rank function of
/// `m`; `x` is given in the indices of `m`.
pub fn connfunction_minor_bounds(m: &Matroid, n: &Matroid, x: Subset) -> Result<MinorBounds> {
    m.ground.check(x)?;
    if n.as_minor().is_none() {
        return Err(Error::pre("N is not a minor view"));
    }
    let of_m = |v: &Matroid| v.as_minor().is_some_and(|view| view.parent().same_rank_function(m));
    let flat = if of_m(n) { n.clone() } else { n.flatten() };
    let view = flat.as_minor().expect("checked above");
    if !of_m(&flat) {
        return Err(Error::pre("N is not a minor of M"));
    }
    let kept = view.kept();
    let y = x & kept;
    let ny = y.compress(kept);
    let lam_n = flat.lam(ny);
    Ok(MinorBounds {
        first_lhs: m.lam(y),
        first_rhs: m.lam(kept) + lam_n,
        second_lhs: m.lam(x),
        second_rhs: lam_n + (m.len() - kept.len()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MultiGraph;

    fn s(v: &[usize]) -> Subset {
        Subset::from_indices(v.iter().copied())
    }

    #[test]
    fn fundamental_circuits() {
        let k3 = Matroid::triangle();
        assert_eq!(k3.fundamental_circuit(2, s(&[0, 1])).unwrap(), s(&[0, 1, 2]));
        assert!(k3.fundamental_circuit(0, s(&[0, 1])).is_err());
        assert!(k3.fundamental_circuit(2, s(&[0])).is_err());
        let u = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u.fundamental_circuit(2, s(&[0, 1])).unwrap(), s(&[0, 1, 2]));
        let f3 = Matroid::fan(3).unwrap();
        // p1 is index 3
        assert_eq!(f3.fundamental_circuit(3, s(&[0, 1, 2])).unwrap(), s(&[0, 1, 3]));
    }

    #[test]
    fn fan_fundamental_graph_is_a_path() {
        for n in 1..=6 {
            let f = Matroid::fan(n).unwrap();
            let spokes = Subset::full(n);
            let g = f.fundamental_graph(spokes).unwrap();
            assert_eq!(g.edge_count(), 2 * n - 2);
            for i in 0..n - 1 {
                let p = n + i;
                assert_eq!(g.neighbours(p), s(&[i, i + 1]));
            }
        }
    }

    #[test]
    fn uniform_fundamental_graph_complete_bipartite() {
        let u = Matroid::uniform(2, 4).unwrap();
        let g = u.fundamental_graph(s(&[0, 1])).unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        let d = u.dual().fundamental_graph(s(&[2, 3])).unwrap();
        assert_eq!(d.edges(), g.edges());
    }

    #[test]
    fn components_examples() {
        let k3 = Matroid::triangle();
        assert_eq!(k3.components(), vec![s(&[0, 1, 2])]);
        let free = Matroid::free(["a", "b"]).unwrap();
        assert_eq!(free.components(), vec![s(&[0]), s(&[1])]);
        let two = MultiGraph::new(6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let m = Matroid::graphic_numbered(two);
        assert_eq!(m.components(), vec![s(&[0, 1, 2]), s(&[3, 4, 5])]);
        let empty = Matroid::free(Vec::<String>::new()).unwrap();
        assert_eq!(empty.components(), vec![Subset::EMPTY]);
    }

    #[test]
    fn minor_bounds_examples() {
        let k3 = Matroid::triangle();
        let n = k3.delete(s(&[2])).unwrap();
        assert_eq!(connfunction_minor_bounds(&k3, &n, s(&[0])).unwrap().holds(), (true, true));
        let same = k3.minor(Subset::EMPTY, Subset::EMPTY).unwrap();
        let b = connfunction_minor_bounds(&k3, &same, s(&[1])).unwrap();
        assert_eq!(b.first_lhs, b.second_lhs);
        let u = Matroid::uniform(2, 4).unwrap();
        let c = u.contract(s(&[0])).unwrap();
        assert_eq!(connfunction_minor_bounds(&u, &c, s(&[1])).unwrap().holds(), (true, true));
        assert!(connfunction_minor_bounds(&u, &u, s(&[1])).is_err());
    }
}
