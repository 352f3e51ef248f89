use crate::error::Result;
use crate::graph::MultiGraph;
use crate::limits::{self, Limits};
use crate::subset::Subset;

/// An edge set forming a cycle, with its vertex trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    pub edges: Subset,
    pub vertices: u64,
}

/// Connected, every vertex of degree exactly two (a loop contributes two).
pub fn is_cycle(g: &MultiGraph, x: Subset) -> bool {
    if x.is_empty() {
        return false;
    }
    g.degrees(x).iter().all(|&d| d == 0 || d == 2) && g.component_count(x) == 1
}

/// All cycles of `g`, ordered by edge bitmask.
pub fn all_cycles(g: &MultiGraph) -> Result<Vec<Cycle>> {
    limits::check("cycle enumeration edge set", g.edge_count(), Limits::get().subset_scan)?;
    Ok(g.all_edges()
        .submasks()
        .filter(|&x| is_cycle(g, x))
        .map(|x| Cycle {
            edges: x,
            vertices: g.vertices_of(x),
        })
        .collect())
}

pub(crate) fn share_vertex(a: &Cycle, b: &Cycle) -> bool {
    a.vertices & b.vertices != 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(all_cycles(&MultiGraph::complete(4)).unwrap().len(), 7);
        assert_eq!(all_cycles(&MultiGraph::looped_path(3)).unwrap().len(), 3);
        let parallel = MultiGraph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(all_cycles(&parallel).unwrap().len(), 3);
        assert!(all_cycles(&MultiGraph::path(5)).unwrap().is_empty());
    }
}
