use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::{GroundSet, Subset};

/// An unrooted tree on nodes `0..len` given by adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

impl Tree {
    pub fn from_edges(nodes: usize, edges: &[(usize, usize)]) -> Result<Tree> {
        let mut adj = vec![Vec::new(); nodes];
        for &(u, v) in edges {
            if u >= nodes || v >= nodes || u == v {
                return Err(Error::Validation(format!("bad tree edge ({u},{v})")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let t = Tree { adj };
        if nodes == 0 || edges.len() + 1 != nodes || !t.connected() {
            return Err(Error::Validation("edge list is not a tree".into()));
        }
        Ok(t)
    }

    fn connected(&self) -> bool {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, a) in self.adj.iter().enumerate() {
            for &v in a {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut d = vec![usize::MAX; self.len()];
        d[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if d[v] == usize::MAX {
                    d[v] = d[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        d
    }

    pub fn eccentricity(&self, v: usize) -> usize {
        self.distances_from(v).into_iter().max().unwrap_or(0)
    }

    /// Radius and the least node attaining it.
    pub fn center(&self) -> (usize, usize) {
        (0..self.len())
            .map(|v| (self.eccentricity(v), v))
            .min()
            .map(|(r, v)| (v, r))
            .unwrap_or((0, 0))
    }

    pub fn radius(&self) -> usize {
        self.center().1
    }

    /// Nodes in the component of `T - (u,v)` containing `v`.
    pub fn side(&self, u: usize, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut stack = vec![(v, u)];
        while let Some((x, from)) = stack.pop() {
            for &y in &self.adj[x] {
                if y != from {
                    out.push(y);
                    stack.push((y, x));
                }
            }
        }
        out
    }
}

fn leaf_map_checks(tree: &Tree, leaf_of: &[usize], n: usize) -> Result<()> {
    if leaf_of.len() != n {
        return Err(Error::Validation(format!(
            "leaf map covers {} elements, matroid has {n}",
            leaf_of.len()
        )));
    }
    let mut owner = vec![None; tree.len()];
    for (e, &v) in leaf_of.iter().enumerate() {
        if v >= tree.len() {
            return Err(Error::Validation(format!("element {e} maps to missing node {v}")));
        }
        if tree.degree(v) != 1 {
            return Err(Error::Validation(format!("element {e} maps to non-leaf node {v}")));
        }
        if let Some(f) = owner[v].replace(e) {
            return Err(Error::Validation(format!("elements {f} and {e} share leaf {v}")));
        }
    }
    for v in 0..tree.len() {
        if tree.degree(v) == 1 && owner[v].is_none() {
            return Err(Error::Validation(format!("leaf {v} carries no element")));
        }
    }
    Ok(())
}

/// Elements whose leaves lie in each component of `T - v`, ordered like
/// `tree.neighbours(v)`.
fn parts_at(tree: &Tree, leaf_of: &[usize], v: usize) -> Vec<Subset> {
    let mut elem_at = vec![None; tree.len()];
    for (e, &l) in leaf_of.iter().enumerate() {
        elem_at[l] = Some(e);
    }
    tree.neighbours(v)
        .iter()
        .map(|&u| {
            tree.side(v, u)
                .into_iter()
                .filter_map(|x| elem_at[x])
                .collect()
        })
        .collect()
}

/// A tree with at least one internal node whose leaves are the elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    tree: Tree,
    leaf_of: Vec<usize>,
}

impl Decomposition {
    /// Validates the tree, the leaf map, and that every internal node has
    /// degree at least 2.
    pub fn new(tree: Tree, leaf_of: Vec<usize>) -> Result<Decomposition> {
        if (0..tree.len()).all(|v| tree.degree(v) <= 1) {
            return Err(Error::Validation("a decomposition needs an internal node".into()));
        }
        leaf_map_checks(&tree, &leaf_of, leaf_of.len())?;
        Ok(Decomposition { tree, leaf_of })
    }

    /// Star: node 0 is the centre, element `e` sits at node `e + 1`.
    pub fn star(n: usize) -> Result<Decomposition> {
        let edges: Vec<(usize, usize)> = (1..=n).map(|i| (0, i)).collect();
        Decomposition::new(Tree::from_edges(n + 1, &edges)?, (1..=n).collect())
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn leaf_of(&self) -> &[usize] {
        &self.leaf_of
    }

    pub fn element_count(&self) -> usize {
        self.leaf_of.len()
    }

    pub fn is_internal(&self, v: usize) -> bool {
        v < self.tree.len() && self.tree.degree(v) >= 2
    }

    pub fn internal_nodes(&self) -> Vec<usize> {
        (0..self.tree.len()).filter(|&v| self.is_internal(v)).collect()
    }

    /// `P_v`: the partition of the elements induced by the components of `T - v`.
    pub fn partition_at(&self, v: usize) -> Vec<Subset> {
        parts_at(&self.tree, &self.leaf_of, v)
    }

    pub fn radius(&self) -> usize {
        self.tree.radius()
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.leaf_of.len() != n {
            return Err(Error::Validation(format!(
                "decomposition has {} leaves, matroid has {n} elements",
                self.leaf_of.len()
            )));
        }
        Ok(())
    }

    /// DOT source: leaves by element label, internal nodes annotated with
    /// `width`.
    pub fn to_dot(&self, ground: &GroundSet, width: impl Fn(usize) -> usize) -> String {
        let mut elem_at = vec![None; self.tree.len()];
        for (e, &l) in self.leaf_of.iter().enumerate() {
            elem_at[l] = Some(e);
        }
        let mut s = String::from("graph decomposition {\n");
        for (v, elem) in elem_at.iter().enumerate() {
            match elem {
                Some(e) => {
                    let _ = writeln!(s, "  n{v} [label=\"{}\", shape=plaintext];", ground.label(*e));
                }
                None => {
                    let _ = writeln!(s, "  n{v} [label=\"w={}\", shape=circle];", width(v));
                }
            }
        }
        for (u, v) in self.tree.edges() {
            let _ = writeln!(s, "  n{u} -- n{v};");
        }
        s.push_str("}\n");
        s
    }
}

/// A subcubic tree whose leaves are the elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchDecomposition {
    tree: Tree,
    leaf_of: Vec<usize>,
}

impl BranchDecomposition {
    /// Needs at least two elements; every node has degree 1 or 3.
    pub fn new(tree: Tree, leaf_of: Vec<usize>) -> Result<BranchDecomposition> {
        if leaf_of.len() < 2 {
            return Err(Error::Validation("branch-decompositions need two elements".into()));
        }
        if let Some(v) = (0..tree.len()).find(|&v| tree.degree(v) != 1 && tree.degree(v) != 3) {
            return Err(Error::Validation(format!(
                "node {v} has degree {}; subcubic trees need 1 or 3",
                tree.degree(v)
            )));
        }
        leaf_map_checks(&tree, &leaf_of, leaf_of.len())?;
        Ok(BranchDecomposition { tree, leaf_of })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn leaf_of(&self) -> &[usize] {
        &self.leaf_of
    }

    pub fn element_count(&self) -> usize {
        self.leaf_of.len()
    }

    /// For each tree edge `(u, v)`, the elements on the `v` side.
    pub fn edge_sides(&self) -> Vec<((usize, usize), Subset)> {
        let mut elem_at = vec![None; self.tree.len()];
        for (e, &l) in self.leaf_of.iter().enumerate() {
            elem_at[l] = Some(e);
        }
        self.tree
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let side = self
                    .tree
                    .side(u, v)
                    .into_iter()
                    .filter_map(|x| elem_at[x])
                    .collect();
                ((u, v), side)
            })
            .collect()
    }

    /// Maximum of `edge_width` over the tree edges.
    pub fn width_by(&self, edge_width: impl Fn(Subset) -> usize) -> usize {
        self.edge_sides()
            .into_iter()
            .map(|(_, s)| edge_width(s))
            .max()
            .unwrap_or(0)
    }

    pub fn to_dot(&self, ground: &GroundSet, edge_width: impl Fn(Subset) -> usize) -> String {
        let mut elem_at = vec![None; self.tree.len()];
        for (e, &l) in self.leaf_of.iter().enumerate() {
            elem_at[l] = Some(e);
        }
        let mut s = String::from("graph branch_decomposition {\n");
        for (v, elem) in elem_at.iter().enumerate() {
            match elem {
                Some(e) => {
                    let _ = writeln!(s, "  n{v} [label=\"{}\", shape=plaintext];", ground.label(*e));
                }
                None => {
                    let _ = writeln!(s, "  n{v} [label=\"\", shape=point];");
                }
            }
        }
        for ((u, v), side) in self.edge_sides() {
            let _ = writeln!(s, "  n{u} -- n{v} [label=\"{}\"];", edge_width(side));
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_shape() {
        let d = Decomposition::star(3).unwrap();
        assert_eq!(d.radius(), 1);
        assert_eq!(d.internal_nodes(), vec![0]);
        assert_eq!(d.partition_at(0).len(), 3);
    }

    #[test]
    fn path_with_two_internal_nodes() {
        // leaves 2,3 on node 0; leaves 4,5 on node 1
        let t = Tree::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let d = Decomposition::new(t, vec![2, 3, 4, 5]).unwrap();
        assert_eq!(d.radius(), 2);
    }

    #[test]
    fn malformed_rejected() {
        assert!(Tree::from_edges(3, &[(0, 1)]).is_err());
        let t = Tree::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(Decomposition::new(t.clone(), vec![0]).is_err());
        assert!(Decomposition::new(t.clone(), vec![0, 0]).is_err());
        assert!(Decomposition::new(t.clone(), vec![0, 1]).is_err());
        assert!(Decomposition::new(t.clone(), vec![0, 2]).is_ok());
        assert!(BranchDecomposition::new(t, vec![0, 2]).is_err());
    }
}
